#pragma once

#include <mclift/affine.hpp>
#include <mclift/error.hpp>
#include <mclift/face_path.hpp>
#include <mclift/framework.hpp>
#include <mclift/linalg.hpp>
#include <mclift/surface.hpp>

#include <optional>
#include <span>
#include <vector>

namespace mclift {

/// Linear map from stresses to loop lifts. Rows 3k, 3k+1, 3k+2 give the
/// a, b, c coefficients of the lift of loop k as functionals on edge weights.
struct MonodromyMatrix {
  std::vector<EdgeIndex> loop_edges;  // the cotree edge each loop crosses
  linalg::RationalMatrix rows;

  std::size_t loop_count() const { return loop_edges.size(); }

  AffineFunction evaluate(std::size_t loop, const StressVector& w) const {
    Rational coeff[3];
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t e = 0; e < rows.cols(); ++e)
        if (rows(3 * loop + r, e) != 0 && w.weights[e] != 0) coeff[r] += rows(3 * loop + r, e) * w.weights[e];
    return {coeff[0], coeff[1], coeff[2]};
  }
};

/// Symbolic accumulation of elementary-lift coefficients along every loop.
inline MonodromyMatrix monodromy_matrix(const Framework& fw, const CotreeLoopBasis& basis) {
  const auto& s = fw.complex();
  MonodromyMatrix m{basis.cotree_edges, linalg::RationalMatrix(3 * basis.loops.size(), s.edge_count())};
  for (std::size_t k = 0; k < basis.loops.size(); ++k) {
    const OrientedFacePath path = orient_face_path(s, basis.loops[k]);
    for (std::size_t step = 0; step < path.length(); ++step) {
      if (path.faces[step] == path.faces[step + 1]) continue;
      const DirectedEdge d = path.crossings[step];
      const std::size_t e = idx(path.edges[step]);
      const AffineFunction unit = fold_function(fw.position(d.from), fw.position(d.to));
      m.rows(3 * k, e) += unit.a;
      m.rows(3 * k + 1, e) += unit.b;
      m.rows(3 * k + 2, e) += unit.c;
    }
  }
  return m;
}

/// Rank of the monodromy map restricted to the self-stress space.
inline std::size_t monodromy_rank(const MonodromyMatrix& m, const StressBasis& stresses) {
  std::vector<linalg::Vector> cols;
  for (const auto& b : stresses.basis) cols.push_back(b.weights);
  return linalg::rank(linalg::multiply_columns(m.rows, cols));
}

/// Self-stresses whose lift vanishes along every cotree loop of `basis`.
inline StressBasis monodromy_free_basis(const Framework& fw, const CotreeLoopBasis& basis) {
  const StressBasis stresses = self_stress_basis(fw);
  StressBasis out;
  if (stresses.dimension() == 0) return out;
  const MonodromyMatrix m = monodromy_matrix(fw, basis);
  std::vector<linalg::Vector> cols;
  for (const auto& b : stresses.basis) cols.push_back(b.weights);
  const auto reduced = linalg::multiply_columns(m.rows, cols);

  std::vector<linalg::Vector> kernel;
  if (reduced.rows() == 0) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      linalg::Vector unit(cols.size(), Rational(0));
      unit[k] = 1;
      kernel.push_back(std::move(unit));
    }
  } else {
    kernel = linalg::null_space(reduced);
  }
  for (const auto& coeffs : kernel) {
    StressVector w = StressVector::zero(fw);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) w = w + coeffs[k] * stresses.basis[k];
    out.basis.push_back(std::move(w));
  }
  return out;
}

inline StressBasis monodromy_free_basis(const Framework& fw) {
  return monodromy_free_basis(fw, cotree_loop_basis(fw.complex(), FaceIndex{0}));
}

/// Orientation each face receives when reached from the root along the tree,
/// the root taking `initial`.
inline std::vector<Orientation> tree_orientations(const SurfaceComplex& s,
                                                  const CotreeLoopBasis& basis,
                                                  Orientation initial = Orientation::positive) {
  std::vector<Orientation> flags(s.face_count(), initial);
  for (FaceIndex g : basis.order) {
    auto parent = basis.parent[idx(g)];
    if (!parent) continue;
    const EdgeIndex e = *basis.parent_edge[idx(g)];
    const DirectedEdge d = s.traversal(*parent, e, flags[idx(*parent)]);
    flags[idx(g)] = s.traversal(g, e, Orientation::positive) == d ? Orientation::negative
                                                                   : Orientation::positive;
  }
  return flags;
}

struct LiftingResult {
  FaceIndex base_face{};
  std::vector<AffineFunction> heights;      // per face
  std::vector<Orientation> orientations;    // orientation each height refers to
};

struct FundamentalDomainLifting {
  LiftingResult lifting;
  CotreeLoopBasis basis;
  std::vector<EdgeIndex> cut_edges;               // == basis.cotree_edges
  std::vector<AffineFunction> monodromy_generators;  // per cut edge

  bool is_single_valued() const {
    for (const auto& g : monodromy_generators)
      if (!g.is_zero()) return false;
    return true;
  }
};

namespace detail {

inline std::vector<AffineFunction> tree_heights(const Framework& fw, const StressVector& w,
                                                const CotreeLoopBasis& basis,
                                                const std::vector<Orientation>& flags) {
  const auto& s = fw.complex();
  std::vector<AffineFunction> heights(s.face_count());
  for (FaceIndex g : basis.order) {
    auto parent = basis.parent[idx(g)];
    if (!parent) continue;
    const DirectedEdge d = s.traversal(*parent, *basis.parent_edge[idx(g)], flags[idx(*parent)]);
    heights[idx(g)] = heights[idx(*parent)] + elementary_lift(fw, w, *parent, g, d);
  }
  return heights;
}

}  // namespace detail

/// Lifting over the surface cut open along the cotree edges, plus the loop
/// monodromy of each cut edge. Works for every self-stress.
inline FundamentalDomainLifting fundamental_domain_lifting(const Framework& fw,
                                                           const StressVector& w,
                                                           const CotreeLoopBasis& basis) {
  const auto& s = fw.complex();
  if (w.size() != s.edge_count())
    throw Error(ErrorCode::UnknownEdgeKey, "stress does not match the framework's edge set");
  if (!is_self_stress(fw, w)) throw Error(ErrorCode::NotSelfStress, "equilibrium fails");

  FundamentalDomainLifting out;
  out.basis = basis;
  out.lifting.base_face = basis.base_face;
  out.lifting.orientations = tree_orientations(s, basis);
  out.lifting.heights = detail::tree_heights(fw, w, basis, out.lifting.orientations);
  out.cut_edges = basis.cotree_edges;
  for (const auto& loop : basis.loops)
    out.monodromy_generators.push_back(path_lift(fw, w, orient_face_path(s, loop)));
  return out;
}

inline FundamentalDomainLifting fundamental_domain_lifting(const Framework& fw,
                                                           const StressVector& w,
                                                           FaceIndex base) {
  return fundamental_domain_lifting(fw, w, cotree_loop_basis(fw.complex(), base));
}

/// Single-valued lifting with the base face at height zero.
inline LiftingResult lift_all_faces(const Framework& fw, const StressVector& w, FaceIndex base) {
  FundamentalDomainLifting fd = fundamental_domain_lifting(fw, w, base);
  for (std::size_t k = 0; k < fd.cut_edges.size(); ++k)
    if (!fd.monodromy_generators[k].is_zero())
      throw Error(ErrorCode::NotMonodromyFree,
                  "loop through " + fw.complex().edge_label(fd.cut_edges[k]) + " lifts to " +
                      to_string(fd.monodromy_generators[k]));
  return std::move(fd.lifting);
}

/// Reads the stress back from face heights. Interior edges come from the
/// jump between the two incident faces (after adding the monodromy of the
/// cut, for cotree edges); boundary edges are the unique completion to a
/// self-stress.
inline StressVector recover_stress(const Framework& fw, const CotreeLoopBasis& basis,
                                   std::span<const AffineFunction> heights,
                                   std::span<const AffineFunction> generators = {}) {
  const auto& s = fw.complex();
  if (heights.size() != s.face_count())
    throw Error(ErrorCode::MissingFaceHeight, "need one height per face");
  if (!generators.empty() && generators.size() != basis.cotree_edges.size())
    throw Error(ErrorCode::PreconditionViolated, "need one generator per cut edge");

  const auto flags = tree_orientations(s, basis);
  StressVector w = StressVector::zero(fw);
  std::vector<EdgeIndex> boundary;
  for (std::size_t ei = 0; ei < s.edge_count(); ++ei) {
    const auto e = make_index<EdgeIndex>(ei);
    if (s.is_boundary(e)) {
      boundary.push_back(e);
      continue;
    }
    auto incident = s.edge_faces(e);
    FaceIndex f = incident[0];
    FaceIndex g = incident[1];
    const auto cut = basis.cotree_position(e);
    if (!cut && basis.parent[idx(f)] == g) std::swap(f, g);

    const DirectedEdge d = s.traversal(f, e, flags[idx(f)]);
    const bool agree = s.traversal(g, e, flags[idx(g)]) == d.reversed();
    AffineFunction jump = heights[idx(g)] - heights[idx(f)];
    if (!agree) jump = -heights[idx(g)] - heights[idx(f)];
    if (cut && !generators.empty()) jump += generators[*cut];

    const AffineFunction unit = fold_function(fw.position(d.from), fw.position(d.to));
    const Rational weight = unit.a != 0 ? jump.a / unit.a : jump.b / unit.b;
    if (!(weight * unit == jump))
      throw Error(ErrorCode::FoldMismatch, "heights of " + s.face_id(f) + " and " + s.face_id(g) +
                                               " do not fold along " + s.edge_label(e));
    w[e] = weight;
  }

  if (!boundary.empty()) {
    const auto full = equilibrium_matrix(fw);
    linalg::RationalMatrix a(full.rows(), boundary.size());
    linalg::Vector rhs(full.rows(), Rational(0));
    for (std::size_t r = 0; r < full.rows(); ++r) {
      for (std::size_t k = 0; k < boundary.size(); ++k) a(r, k) = full(r, idx(boundary[k]));
      for (std::size_t e = 0; e < s.edge_count(); ++e)
        if (full(r, e) != 0 && w.weights[e] != 0) rhs[r] -= full(r, e) * w.weights[e];
    }
    const auto sol = linalg::solve(a, rhs);
    if (!sol.consistent)
      throw Error(ErrorCode::NotSelfStress, "no boundary weights balance the interior weights");
    if (sol.nullity != 0)
      throw Error(ErrorCode::BoundaryUnresolved, "boundary weights are not determined uniquely");
    for (std::size_t k = 0; k < boundary.size(); ++k) w[boundary[k]] = sol.particular[k];
  }
  if (!is_self_stress(fw, w)) throw Error(ErrorCode::NotSelfStress, "recovered weights are not in equilibrium");
  return w;
}

/// For heights known only up to additive constants across the cut edges:
/// the constant generator per cut edge that makes each jump vanish at the
/// edge's first endpoint. recover_stress then checks the rest of the fold.
inline std::vector<AffineFunction> constant_cut_offsets(const Framework& fw,
                                                        const CotreeLoopBasis& basis,
                                                        std::span<const AffineFunction> heights) {
  const auto& s = fw.complex();
  if (heights.size() != s.face_count())
    throw Error(ErrorCode::MissingFaceHeight, "need one height per face");
  const auto flags = tree_orientations(s, basis);
  std::vector<AffineFunction> out;
  for (EdgeIndex e : basis.cotree_edges) {
    const FaceIndex f = s.edge_faces(e)[0];
    const FaceIndex g = s.edge_faces(e)[1];
    const DirectedEdge d = s.traversal(f, e, flags[idx(f)]);
    const bool agree = s.traversal(g, e, flags[idx(g)]) == d.reversed();
    const AffineFunction jump = agree ? heights[idx(g)] - heights[idx(f)] : -heights[idx(g)] - heights[idx(f)];
    out.push_back({0, 0, -jump(fw.position(d.from))});
  }
  return out;
}

inline StressVector recover_stress(const Framework& fw, const FundamentalDomainLifting& fd) {
  return recover_stress(fw, fd.basis, fd.lifting.heights, fd.monodromy_generators);
}

}  // namespace mclift
