#pragma once

#include <mclift/mclift.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mclift::cli {

enum ExitCode : int { ok = 0, invalid = 1, not_monodromy_free = 2, usage = 3 };

// Thrown for unreadable inputs and inconsistent flag combinations.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct Loaded {
  io::SurfaceFile file;
  Framework framework;
};

inline Loaded load(const std::string& path) {
  io::SurfaceFile file = io::parse_surface_file(read_file(path));
  Framework fw = io::to_framework(file);
  return {std::move(file), std::move(fw)};
}

struct StressSource {
  std::string stress_file;
  std::optional<std::size_t> basis_index;
};

inline StressVector select_stress(const Loaded& in, const StressSource& src) {
  if (!src.stress_file.empty() && src.basis_index)
    throw UsageError("give either --stress-file or --basis-index, not both");
  if (!src.stress_file.empty())
    return io::to_stress(in.framework, io::parse_stress_file(read_file(src.stress_file)));
  if (src.basis_index) {
    const StressBasis b = self_stress_basis(in.framework);
    if (*src.basis_index >= b.dimension())
      throw UsageError("basis index " + std::to_string(*src.basis_index) + " out of range (d=" +
                       std::to_string(b.dimension()) + ")");
    return b.basis[*src.basis_index];
  }
  if (!in.file.stresses.empty()) return io::to_stress(in.framework, in.file.stresses);
  throw UsageError("no stress: use --stress-file, --basis-index or stress records in the surface file");
}

inline FaceIndex select_face(const Framework& fw, const std::string& id) {
  if (id.empty()) return FaceIndex{0};
  auto f = fw.complex().find_face(id);
  if (!f) throw Error(ErrorCode::UnknownFace, "no face '" + id + "'");
  return *f;
}

inline void print_basis(std::ostream& out, const Framework& fw, const StressBasis& b) {
  for (std::size_t k = 0; k < b.dimension(); ++k) {
    out << "# basis " << k << "\n";
    out << io::serialize_stress(io::stress_records(fw, b.basis[k]));
  }
}

inline void print_heights(std::ostream& out, const Framework& fw, const LiftingResult& r) {
  const auto& s = fw.complex();
  for (std::size_t f = 0; f < s.face_count(); ++f)
    out << "height " << s.face_id(make_index<FaceIndex>(f)) << " " << to_string(r.heights[f]) << "\n";
}

inline void require_self_stress(const Framework& fw, const StressVector& w) {
  if (!is_self_stress(fw, w)) throw Error(ErrorCode::NotSelfStress, "stress is not in equilibrium");
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }
inline const char* true_false(bool b) { return b ? "true" : "false"; }

inline std::string fixture_text(const std::string& name, const std::vector<long>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw UsageError("fixture " + name + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto positive = [&](long v) {
    if (v < 0) throw UsageError("fixture parameters must be non-negative");
    return static_cast<std::size_t>(v);
  };
  if (name == "paper-example") {
    need(0);
    return io::serialize(io::to_surface_file(fixtures::paper_example().framework, name));
  }
  if (name == "paper-example-stress") {
    need(0);
    const auto ex = fixtures::paper_example();
    return io::serialize_stress(io::stress_records(ex.framework, fixtures::paper_example_stress(ex)));
  }
  if (name == "fan-disk") {
    need(0);
    return io::serialize(io::to_surface_file(fixtures::fan_disk(), name));
  }
  if (name == "single-triangle") {
    need(0);
    return io::serialize(io::to_surface_file(fixtures::single_triangle(), name));
  }
  if (name == "tetrahedron") {
    need(0);
    return io::serialize(io::to_surface_file(fixtures::tetrahedron(), name));
  }
  if (name == "prism") {
    need(0);
    return io::serialize(io::to_surface_file(fixtures::prism(), name));
  }
  if (name == "grid-torus" || name == "grid-klein") {
    need(2);
    const std::size_t m = positive(params[0]);
    const std::size_t n = positive(params[1]);
    Framework fw = name == "grid-torus" ? fixtures::grid_torus(m, n) : fixtures::grid_klein(m, n);
    return io::serialize(io::to_surface_file(fw, name + "-" + std::to_string(m) + "x" + std::to_string(n)));
  }
  if (name == "triangulated-disk") {
    need(2);
    const auto seed = static_cast<std::uint32_t>(positive(params[0]));
    const std::size_t n = positive(params[1]);
    return io::serialize(io::to_surface_file(fixtures::triangulated_disk(seed, n),
                                             name + "-" + std::to_string(seed) + "-" + std::to_string(n)));
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateId:
    case ErrorCode::UnknownVertexRef:
    case ErrorCode::UnknownFixture:
    case ErrorCode::ParameterTooSmall:
      return usage;
    case ErrorCode::NotMonodromyFree:
      return not_monodromy_free;
    default:
      return invalid;
  }
}

}  // namespace detail

/// Runs one CLI invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maxwell-Cremona liftings of planar polygonal surfaces", "mclift"};
  app.require_subcommand(1);

  std::string file;
  std::string base_face;
  std::string obj_path;
  std::string out_path;
  detail::StressSource source;
  std::string fixture_name;
  std::vector<long> fixture_params;

  auto add_stress_options = [&](CLI::App* sub) {
    sub->add_option("--stress-file", source.stress_file, "file of `stress i j w` records");
    sub->add_option("--basis-index", source.basis_index, "use element K of the self-stress basis");
  };

  auto* validate = app.add_subcommand("validate", "check a surface file");
  validate->add_option("file", file)->required();

  auto* topology = app.add_subcommand("topology", "Euler characteristic, orientability, b1");
  topology->add_option("file", file)->required();

  auto* stress_basis = app.add_subcommand("stress-basis", "exact basis of self-stresses");
  stress_basis->add_option("file", file)->required();

  auto* monodromy = app.add_subcommand("monodromy", "lift of every cotree loop");
  monodromy->add_option("file", file)->required();
  monodromy->add_option("--base-face", base_face, "root of the dual spanning tree");
  add_stress_options(monodromy);

  auto* mono_free = app.add_subcommand("monodromy-free", "basis of monodromy-free self-stresses");
  mono_free->add_option("file", file)->required();
  mono_free->add_option("--base-face", base_face, "root of the dual spanning tree");

  auto* lift = app.add_subcommand("lift", "single-valued lifting of a monodromy-free stress");
  lift->add_option("file", file)->required();
  lift->add_option("--base-face", base_face, "face kept at height zero")->required();
  lift->add_option("--obj", obj_path, "write the lifted surface as OBJ");
  add_stress_options(lift);

  auto* domain = app.add_subcommand("fundamental-domain", "lifting over the cut surface plus generators");
  domain->add_option("file", file)->required();
  domain->add_option("--base-face", base_face, "face kept at height zero")->required();
  domain->add_option("--obj", obj_path, "write the lifted surface as OBJ");
  add_stress_options(domain);

  auto* fixture = app.add_subcommand("fixture", "write a built-in fixture");
  fixture->add_option("name", fixture_name)->required();
  fixture->add_option("params", fixture_params, "integer parameters, e.g. M N");
  fixture->add_option("--out", out_path, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*fixture) {
      const std::string text = detail::fixture_text(fixture_name, fixture_params);
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      return ok;
    }

    const detail::Loaded in = detail::load(file);
    const Framework& fw = in.framework;
    const auto& s = fw.complex();

    if (*validate) {
      out << "ok: " << s.vertex_count() << " vertices, " << s.edge_count() << " edges, "
          << s.face_count() << " faces\n";
      if (!in.file.stresses.empty()) {
        const StressVector w = io::to_stress(fw, in.file.stresses);
        out << "self-stress: " << detail::yes_no(is_self_stress(fw, w)) << "\n";
      }
      return ok;
    }

    if (*topology) {
      const TopologyReport r = topology_report(s);
      out << "chi=" << r.euler_characteristic << " closed=" << detail::true_false(r.is_closed)
          << " orientable=" << detail::true_false(r.is_orientable) << " b1=" << r.betti1_rank
          << " boundary_components=" << r.boundary_component_count << "\n";
      return ok;
    }

    if (*stress_basis) {
      const StressBasis b = self_stress_basis(fw);
      out << "d=" << b.dimension() << "\n";
      detail::print_basis(out, fw, b);
      return ok;
    }

    if (*monodromy) {
      const StressVector w = detail::select_stress(in, source);
      detail::require_self_stress(fw, w);
      const CotreeLoopBasis basis = cotree_loop_basis(s, detail::select_face(fw, base_face));
      bool free = true;
      for (std::size_t k = 0; k < basis.loops.size(); ++k) {
        const AffineFunction lift_k = path_lift(fw, w, orient_face_path(s, basis.loops[k]));
        free = free && lift_k.is_zero();
        out << "loop " << k << " " << s.edge_label(basis.cotree_edges[k]) << ": " << to_string(lift_k) << "\n";
      }
      out << "monodromy-free: " << detail::yes_no(free) << "\n";
      return ok;
    }

    if (*mono_free) {
      const TopologyReport r = topology_report(s);
      const std::size_t d = self_stress_basis(fw).dimension();
      const StressBasis b =
          monodromy_free_basis(fw, cotree_loop_basis(s, detail::select_face(fw, base_face)));
      const long long bound = static_cast<long long>(d) - 3 * static_cast<long long>(r.betti1_rank);
      out << "d=" << d << " b1=" << r.betti1_rank << " dim=" << b.dimension() << "\n";
      out << "dim >= d - 3*b1: " << b.dimension() << " >= " << bound << " "
          << (static_cast<long long>(b.dimension()) >= bound ? "holds" : "fails") << "\n";
      detail::print_basis(out, fw, b);
      return ok;
    }

    if (*lift) {
      const StressVector w = detail::select_stress(in, source);
      const LiftingResult r = lift_all_faces(fw, w, detail::select_face(fw, base_face));
      detail::print_heights(out, fw, r);
      if (!obj_path.empty()) detail::write_file(obj_path, io::export_obj(fw, r.heights));
      return ok;
    }

    if (*domain) {
      const StressVector w = detail::select_stress(in, source);
      const FundamentalDomainLifting fd = fundamental_domain_lifting(fw, w, detail::select_face(fw, base_face));
      detail::print_heights(out, fw, fd.lifting);
      for (std::size_t k = 0; k < fd.cut_edges.size(); ++k)
        out << "cut " << s.edge_label(fd.cut_edges[k]) << " " << to_string(fd.monodromy_generators[k]) << "\n";
      out << "single-valued: " << detail::yes_no(fd.is_single_valued()) << "\n";
      if (!obj_path.empty()) detail::write_file(obj_path, io::export_obj(fw, fd.lifting.heights));
      return ok;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << file << ": " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e.code());
  }
  return usage;
}

}  // namespace mclift::cli
