#pragma once

#include <mclift/error.hpp>
#include <mclift/linalg.hpp>
#include <mclift/rational.hpp>
#include <mclift/surface.hpp>

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mclift {

struct Point {
  Rational x;
  Rational y;

  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline Rational det(const Point& u, const Point& v) { return det2(u.x, u.y, v.x, v.y); }

/// A surface complex realised in the plane by exact rational coordinates.
class Framework {
 public:
  Framework(SurfaceComplex complex, std::vector<Point> positions)
      : complex_(std::move(complex)), positions_(std::move(positions)) {
    if (positions_.size() != complex_.vertex_count())
      throw Error(ErrorCode::UnknownVertex, "every vertex needs a position");
    for (std::size_t e = 0; e < complex_.edge_count(); ++e) {
      const Edge& ed = complex_.edge(make_index<EdgeIndex>(e));
      if (position(ed.first) == position(ed.second))
        throw Error(ErrorCode::ZeroLengthEdge,
                    "edge " + complex_.edge_label(make_index<EdgeIndex>(e)) +
                        " has coincident endpoints");
    }
  }

  const SurfaceComplex& complex() const { return complex_; }
  const Point& position(VertexIndex v) const { return positions_[idx(v)]; }
  const std::vector<Point>& positions() const { return positions_; }

 private:
  SurfaceComplex complex_;
  std::vector<Point> positions_;
};

/// Edge weights indexed by EdgeIndex; every edge of the framework has a slot.
struct StressVector {
  std::vector<Rational> weights;

  static StressVector zero(const Framework& fw) {
    return {std::vector<Rational>(fw.complex().edge_count(), Rational(0))};
  }

  const Rational& operator[](EdgeIndex e) const { return weights[idx(e)]; }
  Rational& operator[](EdgeIndex e) { return weights[idx(e)]; }
  std::size_t size() const { return weights.size(); }

  bool is_zero() const {
    for (const auto& w : weights)
      if (w != 0) return false;
    return true;
  }

  friend bool operator==(const StressVector&, const StressVector&) = default;
  friend StressVector operator+(StressVector a, const StressVector& b) {
    for (std::size_t k = 0; k < a.weights.size(); ++k) a.weights[k] += b.weights[k];
    return a;
  }
  friend StressVector operator*(const Rational& s, StressVector a) {
    for (auto& w : a.weights) w *= s;
    return a;
  }
};

/// Builds a stress from (vertex id, vertex id, weight) records; unlisted edges get 0.
inline StressVector make_stress(
    const Framework& fw,
    const std::vector<std::tuple<std::string, std::string, Rational>>& records) {
  StressVector w = StressVector::zero(fw);
  const auto& s = fw.complex();
  for (const auto& [a, b, value] : records) {
    auto va = s.find_vertex(a);
    auto vb = s.find_vertex(b);
    if (!va || !vb) throw Error(ErrorCode::UnknownVertex, "stress on " + a + " " + b);
    auto e = s.find_edge(*va, *vb);
    if (!e) throw Error(ErrorCode::UnknownEdgeKey, "no edge " + a + " " + b);
    w[*e] = value;
  }
  return w;
}

/// sum over edges at v of w(v,j) * (p_v - p_j).
inline Point equilibrium_residual(const Framework& fw, const StressVector& w, VertexIndex v) {
  const auto& s = fw.complex();
  if (idx(v) >= s.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  if (w.size() != s.edge_count())
    throw Error(ErrorCode::UnknownEdgeKey, "stress does not match the framework's edge set");
  Point sum{0, 0};
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    const Edge& ed = s.edge(make_index<EdgeIndex>(e));
    if (!ed.contains(v) || w.weights[e] == 0) continue;
    Point d = fw.position(v) - fw.position(ed.other(v));
    sum.x += w.weights[e] * d.x;
    sum.y += w.weights[e] * d.y;
  }
  return sum;
}

inline bool is_self_stress(const Framework& fw, const StressVector& w) {
  for (std::size_t v = 0; v < fw.complex().vertex_count(); ++v) {
    Point r = equilibrium_residual(fw, w, make_index<VertexIndex>(v));
    if (r.x != 0 || r.y != 0) return false;
  }
  return true;
}

/// The 2|V| x |E| equilibrium matrix; rows (2v, 2v+1) hold the x and y
/// components of the balance at vertex v.
inline linalg::RationalMatrix equilibrium_matrix(const Framework& fw) {
  const auto& s = fw.complex();
  linalg::RationalMatrix m(2 * s.vertex_count(), s.edge_count());
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    const Edge& ed = s.edge(make_index<EdgeIndex>(e));
    Point d = fw.position(ed.first) - fw.position(ed.second);
    m(2 * idx(ed.first), e) = d.x;
    m(2 * idx(ed.first) + 1, e) = d.y;
    m(2 * idx(ed.second), e) = -d.x;
    m(2 * idx(ed.second) + 1, e) = -d.y;
  }
  return m;
}

struct StressBasis {
  std::vector<StressVector> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Exact kernel of the equilibrium map. Free variables follow edge input order.
inline StressBasis self_stress_basis(const Framework& fw) {
  StressBasis out;
  for (auto& v : linalg::null_space(equilibrium_matrix(fw))) out.basis.push_back({std::move(v)});
  return out;
}

}  // namespace mclift
