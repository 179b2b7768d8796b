#pragma once

#include <mclift/mclift.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testing_helpers {

using namespace mclift;

/// Face-path through the named faces, crossing the first shared edge of each
/// consecutive pair.
inline FacePath path_through(const SurfaceComplex& s, const std::vector<std::string>& ids) {
  FacePath p;
  for (const auto& id : ids) p.faces.push_back(s.face(id));
  for (std::size_t k = 0; k + 1 < p.faces.size(); ++k) {
    bool found = false;
    for (EdgeIndex e : s.face_edges(p.faces[k]))
      if (s.face_has_edge(p.faces[k + 1], e)) {
        p.crossings.push_back(e);
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::NotAdjacent, ids[k] + " and " + ids[k + 1]);
  }
  return p;
}

/// Straight loop along column i of a grid fixture (j wraps without a flip).
inline FacePath grid_column_loop(const SurfaceComplex& s, std::size_t i, std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t j = 0; j <= n; ++j) ids.push_back(fixtures::grid_face(i, j % n));
  return path_through(s, ids);
}

/// Loop along row j of a grid fixture; on the Klein pattern the seam sends
/// row j to row n-1-j, so the loop closes after two passes unless j is the
/// middle row.
inline FacePath grid_row_loop(const SurfaceComplex& s, std::size_t j, std::size_t m, std::size_t n,
                              bool flip) {
  std::vector<std::string> ids;
  std::size_t row = j;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < m; ++i) ids.push_back(fixtures::grid_face(i, row));
    if (flip) row = n - 1 - row;
    if (row == j) break;
  }
  ids.push_back(fixtures::grid_face(0, j));
  return path_through(s, ids);
}

/// Random walk in the dual graph, occasionally staying on a face.
inline FacePath random_walk(const SurfaceComplex& s, std::mt19937& rng, std::size_t steps) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  FacePath p;
  p.faces.push_back(make_index<FaceIndex>(pick(s.face_count())));
  for (std::size_t k = 0; k < steps; ++k) {
    const FaceIndex f = p.faces.back();
    const auto edges = s.face_edges(f);
    const EdgeIndex e = edges[pick(edges.size())];
    FaceIndex g = f;
    if (auto other = s.across(f, e); other && pick(5) != 0) g = *other;
    p.faces.push_back(g);
    p.crossings.push_back(e);
  }
  return p;
}


enum class MoveKind { move1, move1_inverse, move2, move2_inverse };

struct AppliedMove {
  MoveKind kind;
  OrientedFacePath path;
};

/// One random homotopy move on `path`, or nothing when the drawn move does
/// not apply. Long paths favour the inverse moves.
inline std::optional<AppliedMove> random_move(const SurfaceComplex& s, const OrientedFacePath& path,
                                              std::mt19937& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  if (path.length() == 0) return std::nullopt;
  const bool long_path = path.length() > 40;
  const std::size_t roll = pick(long_path ? 6 : 4);
  const MoveKind kind = roll >= 4 ? (roll == 4 ? MoveKind::move1_inverse : MoveKind::move2_inverse)
                                  : static_cast<MoveKind>(roll);
  switch (kind) {
    case MoveKind::move1: {
      const std::size_t pos = pick(path.length());
      const auto incident = s.edge_faces(path.edges[pos]);
      const FaceIndex g = incident[pick(incident.size())];
      const auto edges = s.face_edges(g);
      return AppliedMove{kind, move1(s, path, pos, g, edges[pick(edges.size())])};
    }
    case MoveKind::move2: {
      const std::size_t pos = pick(path.length());
      const Edge& e = s.edge(path.edges[pos]);
      const VertexIndex pivot = pick(2) == 0 ? e.first : e.second;
      if (!s.is_interior_vertex(pivot)) return std::nullopt;
      const auto dir = pick(2) == 0 ? StarDirection::away_from_crossing : StarDirection::through_crossing;
      return AppliedMove{kind, move2(s, path, pos, pivot, dir)};
    }
    case MoveKind::move1_inverse: {
      std::vector<std::size_t> spots;
      for (std::size_t pos = 0; pos + 2 < path.length(); ++pos)
        if (path.faces[pos + 1] == path.faces[pos + 2] && path.edges[pos] == path.edges[pos + 2]) spots.push_back(pos);
      if (spots.empty()) return std::nullopt;
      return AppliedMove{kind, move1_inverse(s, path, spots[pick(spots.size())])};
    }
    case MoveKind::move2_inverse: {
      std::vector<std::pair<std::size_t, VertexIndex>> spots;
      for (std::size_t pos = 0; pos < path.length(); ++pos) {
        const Edge& e = s.edge(path.edges[pos]);
        for (VertexIndex v : {e.first, e.second}) {
          if (!s.is_interior_vertex(v)) continue;
          try {
            move2_inverse(s, path, pos, v);
            spots.emplace_back(pos, v);
          } catch (const Error&) {
          }
        }
      }
      if (spots.empty()) return std::nullopt;
      const auto [pos, v] = spots[pick(spots.size())];
      return AppliedMove{kind, move2_inverse(s, path, pos, v)};
    }
  }
  return std::nullopt;
}

}  // namespace testing_helpers
