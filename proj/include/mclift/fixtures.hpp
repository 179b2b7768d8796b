#pragma once

#include <mclift/affine.hpp>
#include <mclift/error.hpp>
#include <mclift/framework.hpp>
#include <mclift/lifting.hpp>
#include <mclift/surface.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mclift::fixtures {

namespace detail {

inline Framework assemble(const std::vector<std::pair<std::string, Point>>& vertices,
                          const std::vector<RawFace>& faces) {
  std::vector<std::string> ids;
  std::vector<Point> positions;
  for (const auto& [id, p] : vertices) {
    ids.push_back(id);
    positions.push_back(p);
  }
  return Framework(validate_surface(ids, faces), std::move(positions));
}

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace detail

/// Nine-vertex quadrangulated torus with the known lifting classes
/// {h + 32n}: zero on f0..f5, 8x-8y on f6, -4x-8y+12 on f7, -16x-8y on f8.
struct PaperExample {
  Framework framework;
  std::vector<AffineFunction> reference_heights;  // per face, base f0
  Rational lattice = 32;                           // heights are defined modulo this constant
  std::vector<std::pair<std::string, std::string>> jump_edges;  // where adjacent classes differ by the lattice
};

inline PaperExample paper_example() {
  using detail::q;
  std::vector<std::pair<std::string, Point>> vertices = {
      {"p1", {q(0), q(0)}}, {"p2", {q(4), q(0)}},  {"p3", {q(5), q(1)}},
      {"p4", {q(1), q(1)}}, {"p5", {q(0), q(4)}},  {"p6", {q(1), q(5)}},
      {"p7", {q(-1), q(2)}}, {"p8", {q(3), q(2)}}, {"p9", {q(-1), q(6)}},
  };
  std::vector<RawFace> faces = {
      {"f0", {"p1", "p2", "p3", "p4"}}, {"f1", {"p4", "p7", "p8", "p3"}},
      {"f2", {"p1", "p7", "p8", "p2"}}, {"f3", {"p2", "p5", "p6", "p3"}},
      {"f4", {"p3", "p8", "p9", "p6"}}, {"f5", {"p2", "p8", "p9", "p5"}},
      {"f6", {"p1", "p4", "p6", "p5"}}, {"f7", {"p4", "p7", "p9", "p6"}},
      {"f8", {"p1", "p5", "p9", "p7"}},
  };
  PaperExample ex{detail::assemble(vertices, faces), {}, 32, {}};
  ex.reference_heights.assign(9, AffineFunction{});
  ex.reference_heights[6] = {q(8), q(-8), q(0)};
  ex.reference_heights[7] = {q(-4), q(-8), q(12)};
  ex.reference_heights[8] = {q(-16), q(-8), q(0)};
  ex.jump_edges = {{"p5", "p6"}, {"p9", "p6"}, {"p9", "p5"}};
  return ex;
}

/// Dual tree from f0 that keeps the lattice jumps on cut edges.
inline CotreeLoopBasis paper_example_tree(const PaperExample& ex) {
  const auto& s = ex.framework.complex();
  std::vector<EdgeIndex> forbidden;
  for (const auto& [a, b] : ex.jump_edges) forbidden.push_back(s.edge_between(s.vertex(a), s.vertex(b)));
  return cotree_loop_basis(s, s.face("f0"), forbidden);
}

/// The stress whose lifting is the reference family, read back from the
/// reference heights.
inline StressVector paper_example_stress(const PaperExample& ex) {
  const CotreeLoopBasis tree = paper_example_tree(ex);
  const auto offsets = constant_cut_offsets(ex.framework, tree, ex.reference_heights);
  return recover_stress(ex.framework, tree, ex.reference_heights, offsets);
}

inline StressVector paper_example_stress() { return paper_example_stress(paper_example()); }

/// Triangle A=(0,0), B=(3,0), C=(0,3) coned from O=(1,1).
inline Framework fan_disk() {
  using detail::q;
  return detail::assemble(
      {{"O", {q(1), q(1)}}, {"A", {q(0), q(0)}}, {"B", {q(3), q(0)}}, {"C", {q(0), q(3)}}},
      {{"OAB", {"O", "A", "B"}}, {"OBC", {"O", "B", "C"}}, {"OCA", {"O", "C", "A"}}});
}

/// Single triangle; no self-stress.
inline Framework single_triangle() {
  using detail::q;
  return detail::assemble({{"a", {q(0), q(0)}}, {"b", {q(5), q(1)}}, {"c", {q(2), q(4)}}},
                          {{"t", {"a", "b", "c"}}});
}

/// Boundary of a tetrahedron drawn in the plane with d inside abc.
inline Framework tetrahedron() {
  using detail::q;
  return detail::assemble(
      {{"a", {q(0), q(0)}}, {"b", {q(6), q(0)}}, {"c", {q(2), q(5)}}, {"d", {q(5, 2), q(2)}}},
      {{"abc", {"a", "b", "c"}}, {"adb", {"a", "d", "b"}}, {"bdc", {"b", "d", "c"}},
       {"cda", {"c", "d", "a"}}});
}

/// Closed triangular prism whose lateral edges meet at (4,4), so it carries a
/// self-stress.
inline Framework prism() {
  using detail::q;
  return detail::assemble({{"a", {q(0), q(0)}},
                           {"b", {q(12), q(0)}},
                           {"c", {q(0), q(12)}},
                           {"d", {q(2), q(2)}},
                           {"e", {q(8), q(2)}},
                           {"f", {q(2), q(8)}}},
                          {{"top", {"a", "b", "c"}},
                           {"bottom", {"d", "f", "e"}},
                           {"ab", {"a", "d", "e", "b"}},
                           {"bc", {"b", "e", "f", "c"}},
                           {"ca", {"c", "f", "d", "a"}}});
}

namespace detail {

inline std::string grid_vertex(std::size_t i, std::size_t j) {
  return "v" + std::to_string(i) + "_" + std::to_string(j);
}

// Sheared lattice point (i + j/3, j) shifted by counter-driven offsets below 1/4.
inline Point grid_position(std::size_t i, std::size_t j, std::size_t counter) {
  const long k = static_cast<long>(counter);
  Rational x = make_rational(static_cast<long>(i)) + make_rational(static_cast<long>(j), 3) +
               make_rational((37 * k + 11) % 101, 4 * 101);
  Rational y = make_rational(static_cast<long>(j)) + make_rational((53 * k + 29) % 103, 4 * 103);
  return {x, y};
}

// Quad (i,j) has corners (i,j), (i+1,j), (i+1,j+1), (i,j+1). Rows wrap
// straight in j. Columns wrap in i either straight or, when `flip` is set,
// with the seam row order reversed: (m, j) is glued to (0, (n - j) mod n).
inline Framework grid(std::size_t m, std::size_t n, bool flip, const std::string& prefix) {
  if (m < 3 || n < 3)
    throw Error(ErrorCode::ParameterTooSmall, "grid fixtures need m, n >= 3");
  std::vector<std::pair<std::string, Point>> vertices;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      vertices.emplace_back(grid_vertex(i, j), grid_position(i, j, j * m + i));

  auto corner = [&](std::size_t i, std::size_t j) {
    j %= n;
    if (i == m) return grid_vertex(0, flip ? (n - j) % n : j);
    return grid_vertex(i, j);
  };
  std::vector<RawFace> faces;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i)
      faces.push_back({prefix + std::to_string(i) + "_" + std::to_string(j),
                       {corner(i, j), corner(i + 1, j), corner(i + 1, j + 1), corner(i, j + 1)}});
  return assemble(vertices, faces);
}

}  // namespace detail

inline Framework grid_torus(std::size_t m, std::size_t n) { return detail::grid(m, n, false, "q"); }

/// Klein-bottle quadrangulation: j wraps straight (orientation preserving),
/// i wraps with the seam reversed (orientation reversing).
inline Framework grid_klein(std::size_t m, std::size_t n) { return detail::grid(m, n, true, "q"); }

/// Face id of quad (i, j) in the grid fixtures.
inline std::string grid_face(std::size_t i, std::size_t j) {
  return "q" + std::to_string(i) + "_" + std::to_string(j);
}

/// Random triangulated disk with `vertex_count` vertices (3..64) grown by
/// attaching ears to boundary edges and filling boundary corners. Points are
/// small integers in general position.
inline Framework triangulated_disk(std::uint32_t seed, std::size_t vertex_count) {
  if (vertex_count < 3) throw Error(ErrorCode::ParameterTooSmall, "disk needs 3 vertices");
  std::mt19937 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<std::vector<std::size_t>> tris{{0, 1, 2}};
  std::vector<std::size_t> boundary{0, 1, 2};
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}, {0, 2}};
  auto has_edge = [&](std::size_t a, std::size_t b) {
    return std::find(edges.begin(), edges.end(), std::pair{std::min(a, b), std::max(a, b)}) != edges.end();
  };
  std::size_t vertices = 3;

  auto try_fill = [&]() {
    const std::size_t nb = boundary.size();
    if (nb < 4) return false;
    const std::size_t start = pick(nb);
    for (std::size_t t = 0; t < nb; ++t) {
      const std::size_t i = (start + t) % nb;
      const std::size_t a = boundary[i], b = boundary[(i + 1) % nb], c = boundary[(i + 2) % nb];
      if (has_edge(a, c)) continue;
      tris.push_back({c, b, a});
      edges.emplace_back(std::min(a, c), std::max(a, c));
      boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>((i + 1) % nb));
      return true;
    }
    return false;
  };

  while (vertices < vertex_count) {
    if (pick(5) < 2 && try_fill()) continue;
    const std::size_t nb = boundary.size();
    const std::size_t i = pick(nb);
    const std::size_t a = boundary[i], b = boundary[(i + 1) % nb];
    const std::size_t v = vertices++;
    tris.push_back({b, a, v});
    edges.emplace_back(std::min(a, v), std::max(a, v));
    edges.emplace_back(std::min(b, v), std::max(b, v));
    boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i + 1), v);
  }
  const std::size_t boundary_target = std::max<std::size_t>(3, vertex_count / 2);
  while (boundary.size() > boundary_target && try_fill()) {
  }

  std::vector<std::pair<Rational, Rational>> pts;
  auto collinear = [&](const std::pair<Rational, Rational>& p) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
      if (pts[a] == p) return true;
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (det2(pts[a].first - p.first, pts[a].second - p.second, pts[b].first - p.first,
                 pts[b].second - p.second) == 0)
          return true;
    }
    return false;
  };
  std::vector<std::pair<std::string, Point>> named;
  for (std::size_t k = 0; k < vertices; ++k) {
    std::pair<Rational, Rational> p;
    do {
      p = {Rational(static_cast<long>(pick(31))), Rational(static_cast<long>(pick(31)))};
    } while (collinear(p));
    pts.push_back(p);
    named.emplace_back("d" + std::to_string(k), Point{p.first, p.second});
  }
  std::vector<RawFace> faces;
  for (std::size_t t = 0; t < tris.size(); ++t)
    faces.push_back({"t" + std::to_string(t),
                     {"d" + std::to_string(tris[t][0]), "d" + std::to_string(tris[t][1]),
                      "d" + std::to_string(tris[t][2])}});
  return detail::assemble(named, faces);
}

}  // namespace mclift::fixtures
