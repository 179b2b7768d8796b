#pragma once

#include <mclift/affine.hpp>
#include <mclift/error.hpp>
#include <mclift/framework.hpp>
#include <mclift/rational.hpp>
#include <mclift/surface.hpp>

#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace mclift::io {

// Text surface format, one record per line, `#` starts a comment:
//
//   surface <name>
//   vertex <id> <x> <y>
//   face <id> : <v1> <v2> ... <vk>
//   stress <vi> <vj> <w>
//
// Rationals are `[-]digits` or `[-]digits/digits`.

struct VertexRecord {
  std::string id;
  Rational x;
  Rational y;
};

struct StressRecord {
  std::string first;
  std::string second;
  Rational weight;
};

struct SurfaceFile {
  std::string name;
  std::vector<VertexRecord> vertices;
  std::vector<RawFace> faces;
  std::vector<StressRecord> stresses;
};

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline Rational rational_field(std::string_view token, std::size_t line) {
  auto q = parse_rational(token);
  if (!q) throw ParseError(ErrorCode::ParseError, line, "bad rational '" + std::string(token) + "'");
  return *q;
}

inline bool valid_id(std::string_view token) { return token != ":" && token.find(':') == std::string_view::npos; }

template <typename OnRecord>
void for_each_record(std::string_view text, OnRecord&& on_record) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) on_record(tokens, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

inline StressRecord stress_record(const std::vector<std::string_view>& t, std::size_t line) {
  if (t.size() != 4) throw ParseError(ErrorCode::ParseError, line, "expected: stress <vi> <vj> <w>");
  if (t[1] == t[2]) throw ParseError(ErrorCode::ParseError, line, "stress on a loop");
  return {std::string(t[1]), std::string(t[2]), rational_field(t[3], line)};
}

inline void check_duplicate_stress(std::set<std::pair<std::string, std::string>>& seen,
                                   const StressRecord& r, std::size_t line) {
  auto key = std::minmax(r.first, r.second);
  if (!seen.emplace(key.first, key.second).second)
    throw ParseError(ErrorCode::DuplicateId, line, "stress on " + r.first + " " + r.second + " given twice");
}

}  // namespace detail

/// Syntax and reference checks only; surface validation happens in to_framework().
inline SurfaceFile parse_surface_file(std::string_view text) {
  SurfaceFile file;
  bool have_header = false;
  std::set<std::string> vertex_ids;
  std::set<std::string> face_ids;
  std::set<std::pair<std::string, std::string>> stressed;

  detail::for_each_record(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    const std::string_view kind = t[0];
    if (kind == "surface") {
      if (have_header) throw ParseError(ErrorCode::ParseError, line, "second surface header");
      if (t.size() != 2) throw ParseError(ErrorCode::ParseError, line, "expected: surface <name>");
      if (!file.vertices.empty() || !file.faces.empty() || !file.stresses.empty())
        throw ParseError(ErrorCode::ParseError, line, "surface header must come first");
      file.name = std::string(t[1]);
      have_header = true;
      return;
    }
    if (!have_header) throw ParseError(ErrorCode::ParseError, line, "missing surface header");
    if (kind == "vertex") {
      if (t.size() != 4) throw ParseError(ErrorCode::ParseError, line, "expected: vertex <id> <x> <y>");
      if (!detail::valid_id(t[1])) throw ParseError(ErrorCode::ParseError, line, "bad vertex id");
      if (!file.faces.empty() || !file.stresses.empty())
        throw ParseError(ErrorCode::ParseError, line, "vertices must precede faces and stresses");
      std::string id(t[1]);
      if (!vertex_ids.insert(id).second)
        throw ParseError(ErrorCode::DuplicateId, line, "vertex '" + id + "' declared twice");
      file.vertices.push_back({id, detail::rational_field(t[2], line), detail::rational_field(t[3], line)});
    } else if (kind == "face") {
      if (t.size() < 3 || t[2] != ":" || !detail::valid_id(t[1]))
        throw ParseError(ErrorCode::ParseError, line, "expected: face <id> : <v1> ... <vk>");
      if (t.size() < 6) throw ParseError(ErrorCode::ParseError, line, "a face needs at least 3 vertices");
      if (!file.stresses.empty())
        throw ParseError(ErrorCode::ParseError, line, "faces must precede stresses");
      std::string id(t[1]);
      if (!face_ids.insert(id).second)
        throw ParseError(ErrorCode::DuplicateId, line, "face '" + id + "' declared twice");
      RawFace face{id, {}};
      for (std::size_t k = 3; k < t.size(); ++k) {
        std::string v(t[k]);
        if (!vertex_ids.count(v))
          throw ParseError(ErrorCode::UnknownVertexRef, line, "face '" + id + "' uses undeclared '" + v + "'");
        face.vertices.push_back(std::move(v));
      }
      file.faces.push_back(std::move(face));
    } else if (kind == "stress") {
      StressRecord r = detail::stress_record(t, line);
      for (const auto* v : {&r.first, &r.second})
        if (!vertex_ids.count(*v))
          throw ParseError(ErrorCode::UnknownVertexRef, line, "stress uses undeclared '" + *v + "'");
      detail::check_duplicate_stress(stressed, r, line);
      file.stresses.push_back(std::move(r));
    } else {
      throw ParseError(ErrorCode::ParseError, line, "unknown directive '" + std::string(kind) + "'");
    }
  });
  if (!have_header) throw ParseError(ErrorCode::ParseError, 1, "missing surface header");
  return file;
}

/// A stress file holds `stress` records only.
inline std::vector<StressRecord> parse_stress_file(std::string_view text) {
  std::vector<StressRecord> out;
  std::set<std::pair<std::string, std::string>> stressed;
  detail::for_each_record(text, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t[0] != "stress")
      throw ParseError(ErrorCode::ParseError, line, "unknown directive '" + std::string(t[0]) + "'");
    StressRecord r = detail::stress_record(t, line);
    detail::check_duplicate_stress(stressed, r, line);
    out.push_back(std::move(r));
  });
  return out;
}

inline std::string serialize_stress(std::span<const StressRecord> records) {
  std::string out;
  for (const auto& r : records)
    out += "stress " + r.first + " " + r.second + " " + to_string(r.weight) + "\n";
  return out;
}

inline std::string serialize(const SurfaceFile& file) {
  std::string out = "surface " + file.name + "\n";
  for (const auto& v : file.vertices)
    out += "vertex " + v.id + " " + to_string(v.x) + " " + to_string(v.y) + "\n";
  for (const auto& f : file.faces) {
    out += "face " + f.id + " :";
    for (const auto& v : f.vertices) out += " " + v;
    out += "\n";
  }
  out += serialize_stress(file.stresses);
  return out;
}

inline Framework to_framework(const SurfaceFile& file) {
  std::vector<std::string> ids;
  std::vector<Point> positions;
  for (const auto& v : file.vertices) {
    ids.push_back(v.id);
    positions.push_back({v.x, v.y});
  }
  return Framework(validate_surface(ids, file.faces), std::move(positions));
}

inline StressVector to_stress(const Framework& fw, std::span<const StressRecord> records) {
  std::vector<std::tuple<std::string, std::string, Rational>> triples;
  for (const auto& r : records) triples.emplace_back(r.first, r.second, r.weight);
  return make_stress(fw, triples);
}

/// Nonzero weights in edge order, endpoints in vertex order.
inline std::vector<StressRecord> stress_records(const Framework& fw, const StressVector& w) {
  std::vector<StressRecord> out;
  const auto& s = fw.complex();
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    if (w.weights[e] == 0) continue;
    const Edge& ed = s.edge(make_index<EdgeIndex>(e));
    out.push_back({s.vertex_id(ed.first), s.vertex_id(ed.second), w.weights[e]});
  }
  return out;
}

inline SurfaceFile to_surface_file(const Framework& fw, const std::string& name,
                                   const std::optional<StressVector>& stress = std::nullopt) {
  SurfaceFile file;
  file.name = name;
  const auto& s = fw.complex();
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    const auto vi = make_index<VertexIndex>(v);
    file.vertices.push_back({s.vertex_id(vi), fw.position(vi).x, fw.position(vi).y});
  }
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    const auto fi = make_index<FaceIndex>(f);
    RawFace face{s.face_id(fi), {}};
    for (VertexIndex v : s.face_vertices(fi)) face.vertices.push_back(s.vertex_id(v));
    file.faces.push_back(std::move(face));
  }
  if (stress) file.stresses = stress_records(fw, *stress);
  return file;
}

/// Decimal rendering of an exact rational rounded (half away from zero) to
/// `precision` significant digits, trailing zeros removed. Exponent notation
/// is used outside [1e-5, 10^precision), like printf's %g.
inline std::string format_decimal(const Rational& value, int precision = 12) {
  if (precision < 1) precision = 1;
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational mag = negative ? Rational(-value) : value;

  auto pow10 = [](long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
  };
  long exponent = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
  while (pow10(exponent) > mag) --exponent;
  while (pow10(exponent + 1) <= mag) ++exponent;

  auto digits_for = [&](long e) {
    Rational scaled = mag * pow10(precision - 1 - e);
    Integer floor_part = scaled.get_num() / scaled.get_den();
    Rational frac = scaled - Rational(floor_part);
    if (frac * 2 >= 1) floor_part += 1;
    return floor_part;
  };
  Integer digits = digits_for(exponent);
  if (digits >= pow10(precision).get_num()) {
    ++exponent;
    digits = digits_for(exponent);
  }
  std::string ds = digits.get_str();
  while (ds.size() < static_cast<std::size_t>(precision)) ds.insert(ds.begin(), '0');

  std::string out = negative ? "-" : "";
  if (exponent < -5 || exponent >= precision) {
    std::string mant = ds.substr(0, 1);
    std::string rest = ds.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    std::string e = std::to_string(exponent < 0 ? -exponent : exponent);
    if (e.size() < 2) e.insert(e.begin(), '0');
    return out + mant + "e" + (exponent < 0 ? "-" : "+") + e;
  }
  std::string intpart;
  std::string fracpart;
  if (exponent >= 0) {
    intpart = ds.substr(0, static_cast<std::size_t>(exponent) + 1);
    fracpart = ds.substr(static_cast<std::size_t>(exponent) + 1);
  } else {
    intpart = "0";
    fracpart = std::string(static_cast<std::size_t>(-exponent - 1), '0') + ds;
  }
  while (!fracpart.empty() && fracpart.back() == '0') fracpart.pop_back();
  return out + intpart + (fracpart.empty() ? "" : "." + fracpart);
}

/// Wavefront OBJ with one vertex per face corner, lifted to
/// z = heights[face](x, y). Corners are not shared between faces.
inline std::string export_obj(const Framework& fw, std::span<const AffineFunction> heights,
                              int precision = 12) {
  const auto& s = fw.complex();
  if (heights.size() != s.face_count())
    throw Error(ErrorCode::MissingFaceHeight,
                "have " + std::to_string(heights.size()) + " heights for " +
                    std::to_string(s.face_count()) + " faces");
  std::ostringstream obj;
  obj << "# mclift lifting: " << s.face_count() << " faces\n";
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    const auto fi = make_index<FaceIndex>(f);
    obj << "# face " << s.face_id(fi) << "\n";
    for (VertexIndex v : s.face_vertices(fi)) {
      const Point& p = fw.position(v);
      obj << "v " << format_decimal(p.x, precision) << " " << format_decimal(p.y, precision) << " "
          << format_decimal(heights[f](p), precision) << "\n";
    }
  }
  std::size_t next = 1;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    obj << "f";
    for (std::size_t k = 0; k < s.face_degree(make_index<FaceIndex>(f)); ++k) obj << " " << next++;
    obj << "\n";
  }
  return obj.str();
}

}  // namespace mclift::io
