#pragma once

#include <mclift/affine.hpp>
#include <mclift/error.hpp>
#include <mclift/framework.hpp>
#include <mclift/surface.hpp>

#include <vector>

namespace mclift {

/// Face-path with an orientation per step. crossings[k] is the shared edge of
/// steps k and k+1, directed as the oriented boundary of step k traverses it.
///
/// A step that changes face takes the orientation that traverses the crossing
/// opposite to the previous step. A step that stays on the same face keeps
/// the previous orientation.
struct OrientedFacePath {
  std::vector<FaceIndex> faces;
  std::vector<Orientation> orientations;
  std::vector<EdgeIndex> edges;
  std::vector<DirectedEdge> crossings;

  std::size_t length() const { return crossings.size(); }
  FaceIndex front() const { return faces.front(); }
  FaceIndex back() const { return faces.back(); }
  FacePath unoriented() const { return {faces, edges}; }

  friend bool operator==(const OrientedFacePath&, const OrientedFacePath&) = default;
};

inline OrientedFacePath orient_face_path(const SurfaceComplex& s, const FacePath& path,
                                         Orientation initial = Orientation::positive) {
  if (path.faces.empty() || path.crossings.size() + 1 != path.faces.size())
    throw Error(ErrorCode::PreconditionViolated, "face-path needs one crossing per step");
  for (FaceIndex f : path.faces)
    if (idx(f) >= s.face_count()) throw Error(ErrorCode::UnknownFace, "face index out of range");

  OrientedFacePath out;
  out.faces = path.faces;
  out.edges = path.crossings;
  out.orientations.push_back(initial);
  for (std::size_t k = 0; k < path.crossings.size(); ++k) {
    const FaceIndex f = path.faces[k];
    const FaceIndex g = path.faces[k + 1];
    const EdgeIndex e = path.crossings[k];
    if (idx(e) >= s.edge_count() || !s.face_has_edge(f, e) || !s.face_has_edge(g, e))
      throw Error(ErrorCode::NotAdjacent, "step " + std::to_string(k) + ": faces " +
                                              s.face_id(f) + " and " + s.face_id(g) +
                                              " do not share the crossing edge");
    const Orientation here = out.orientations.back();
    const DirectedEdge d = s.traversal(f, e, here);
    out.crossings.push_back(d);
    if (f == g) {
      out.orientations.push_back(here);
    } else {
      const bool forward_reversed = s.traversal(g, e, Orientation::positive) == d;
      out.orientations.push_back(forward_reversed ? Orientation::negative : Orientation::positive);
    }
  }
  return out;
}

inline OrientedFacePath orient_face_path(const SurfaceComplex& s,
                                         const std::vector<FaceIndex>& faces,
                                         const std::vector<EdgeIndex>& crossings,
                                         Orientation initial = Orientation::positive) {
  return orient_face_path(s, FacePath{faces, crossings}, initial);
}

/// w(pq) * det(p - q, p - x) for a step between different faces, zero otherwise.
inline AffineFunction elementary_lift(const Framework& fw, const StressVector& w, FaceIndex prev,
                                      FaceIndex next, DirectedEdge crossing) {
  const auto& s = fw.complex();
  auto e = s.find_edge(crossing.from, crossing.to);
  if (!e || w.size() != s.edge_count())
    throw Error(ErrorCode::UnknownEdgeKey, "crossing is not an edge of the framework");
  if (prev == next || w[*e] == 0) return {};
  return w[*e] * fold_function(fw.position(crossing.from), fw.position(crossing.to));
}

inline AffineFunction path_lift(const Framework& fw, const StressVector& w,
                                const OrientedFacePath& path) {
  AffineFunction sum;
  for (std::size_t k = 0; k < path.length(); ++k)
    sum += elementary_lift(fw, w, path.faces[k], path.faces[k + 1], path.crossings[k]);
  return sum;
}

/// The same route walked backwards, starting with the orientation the
/// original path ended in.
inline OrientedFacePath reverse_path(const SurfaceComplex& s, const OrientedFacePath& path) {
  FacePath p = path.unoriented();
  std::reverse(p.faces.begin(), p.faces.end());
  std::reverse(p.crossings.begin(), p.crossings.end());
  return orient_face_path(s, p, path.orientations.back());
}

/// Concatenates b after a; b must start at the face where a ends.
inline OrientedFacePath concatenate(const SurfaceComplex& s, const OrientedFacePath& a,
                                    const FacePath& b) {
  if (b.faces.empty() || b.faces.front() != a.back())
    throw Error(ErrorCode::PreconditionViolated, "paths do not meet");
  FacePath p = a.unoriented();
  p.faces.insert(p.faces.end(), b.faces.begin() + 1, b.faces.end());
  p.crossings.insert(p.crossings.end(), b.crossings.begin(), b.crossings.end());
  return orient_face_path(s, p, a.orientations.front());
}

// Elementary homotopy moves. `position` names a crossing: the step from
// faces[position] to faces[position + 1].

/// (.., f_i, f_{i+1}, ..) -> (.., f_i, g, g, f_{i+1}, ..) with crossings
/// (c_i, aux, c_i); g must contain c_i and aux must be an edge of g.
inline OrientedFacePath move1(const SurfaceComplex& s, const OrientedFacePath& path,
                              std::size_t position, FaceIndex g, EdgeIndex aux) {
  if (position >= path.length())
    throw Error(ErrorCode::PreconditionViolated, "no crossing at that position");
  const EdgeIndex c = path.edges[position];
  if (idx(g) >= s.face_count() || !s.face_has_edge(g, c))
    throw Error(ErrorCode::PreconditionViolated, "inserted face does not contain the crossing edge");
  if (idx(aux) >= s.edge_count() || !s.face_has_edge(g, aux))
    throw Error(ErrorCode::PreconditionViolated, "auxiliary edge is not on the inserted face");

  FacePath p = path.unoriented();
  p.faces.insert(p.faces.begin() + static_cast<std::ptrdiff_t>(position) + 1, {g, g});
  p.crossings.insert(p.crossings.begin() + static_cast<std::ptrdiff_t>(position) + 1, {aux, c});
  return orient_face_path(s, p, path.orientations.front());
}

/// Inverse of move1: removes the doubled face after `position`.
inline OrientedFacePath move1_inverse(const SurfaceComplex& s, const OrientedFacePath& path,
                                      std::size_t position) {
  if (position + 2 >= path.length() || path.faces[position + 1] != path.faces[position + 2] ||
      path.edges[position] != path.edges[position + 2])
    throw Error(ErrorCode::PreconditionViolated, "no doubled face at that position");
  FacePath p = path.unoriented();
  auto fpos = p.faces.begin() + static_cast<std::ptrdiff_t>(position) + 1;
  p.faces.erase(fpos, fpos + 2);
  auto cpos = p.crossings.begin() + static_cast<std::ptrdiff_t>(position) + 1;
  p.crossings.erase(cpos, cpos + 2);
  return orient_face_path(s, p, path.orientations.front());
}

enum class StarDirection {
  away_from_crossing,  // leave faces[position + 1] through its other edge at the pivot
  through_crossing,    // leave faces[position + 1] back through the crossing edge
};

/// Closed face-loop around `pivot` starting and ending at `start`, leaving
/// `start` through `first`.
inline FacePath star_loop(const SurfaceComplex& s, VertexIndex pivot, FaceIndex start,
                          EdgeIndex first) {
  const VertexStar& st = s.star(pivot);
  if (!st.closed)
    throw Error(ErrorCode::BoundaryVertex, "vertex " + s.vertex_id(pivot) + " is on the boundary");
  const std::size_t m = st.faces.size();
  std::size_t k = 0;
  while (k < m && st.faces[k] != start) ++k;
  if (k == m) throw Error(ErrorCode::PreconditionViolated, "face is not around the pivot");

  // Faces repeat in a star only when a face meets the vertex twice, which the
  // validator excludes, so the position of `start` is unique.
  const bool forward = st.edges[k] == first;
  if (!forward && st.edges[(k + m - 1) % m] != first)
    throw Error(ErrorCode::PreconditionViolated, "edge does not leave the face at the pivot");

  FacePath loop;
  loop.faces.push_back(start);
  for (std::size_t step = 0; step < m; ++step) {
    if (forward) {
      loop.crossings.push_back(st.edges[k]);
      k = (k + 1) % m;
    } else {
      k = (k + m - 1) % m;
      loop.crossings.push_back(st.edges[k]);
    }
    loop.faces.push_back(st.faces[k]);
  }
  return loop;
}

namespace detail {

inline FacePath move2_loop(const SurfaceComplex& s, const OrientedFacePath& path,
                           std::size_t position, VertexIndex pivot, StarDirection dir) {
  const EdgeIndex c = path.edges[position];
  if (!s.edge(c).contains(pivot))
    throw Error(ErrorCode::PreconditionViolated, "pivot is not an endpoint of the crossing edge");
  if (!s.is_interior_vertex(pivot))
    throw Error(ErrorCode::BoundaryVertex, "vertex " + s.vertex_id(pivot) + " is on the boundary");
  const FaceIndex b = path.faces[position + 1];
  const VertexStar& st = s.star(pivot);
  const std::size_t m = st.faces.size();
  std::size_t k = 0;
  while (st.faces[k] != b) ++k;
  const EdgeIndex out = st.edges[k];
  const EdgeIndex in = st.edges[(k + m - 1) % m];
  const EdgeIndex other = out == c ? in : out;
  return star_loop(s, pivot, b, dir == StarDirection::away_from_crossing ? other : c);
}

}  // namespace detail

/// Inserts a full loop of faces around `pivot` (an endpoint of the crossing
/// edge) right after faces[position + 1].
inline OrientedFacePath move2(const SurfaceComplex& s, const OrientedFacePath& path,
                              std::size_t position, VertexIndex pivot,
                              StarDirection dir = StarDirection::away_from_crossing) {
  if (position >= path.length())
    throw Error(ErrorCode::PreconditionViolated, "no crossing at that position");
  if (idx(pivot) >= s.vertex_count()) throw Error(ErrorCode::UnknownVertex, "pivot out of range");
  FacePath loop = detail::move2_loop(s, path, position, pivot, dir);

  FacePath p = path.unoriented();
  const auto at = static_cast<std::ptrdiff_t>(position) + 2;
  p.faces.insert(p.faces.begin() + at, loop.faces.begin() + 1, loop.faces.end());
  p.crossings.insert(p.crossings.begin() + at - 1, loop.crossings.begin(), loop.crossings.end());
  return orient_face_path(s, p, path.orientations.front());
}

/// Inverse of move2: removes a vertex loop around `pivot` inserted after
/// faces[position + 1] in either direction.
inline OrientedFacePath move2_inverse(const SurfaceComplex& s, const OrientedFacePath& path,
                                      std::size_t position, VertexIndex pivot) {
  if (position >= path.length())
    throw Error(ErrorCode::PreconditionViolated, "no crossing at that position");
  if (idx(pivot) >= s.vertex_count()) throw Error(ErrorCode::UnknownVertex, "pivot out of range");
  for (StarDirection dir : {StarDirection::away_from_crossing, StarDirection::through_crossing}) {
    FacePath loop = detail::move2_loop(s, path, position, pivot, dir);
    const std::size_t m = loop.length();
    if (position + 1 + m > path.length()) continue;
    bool match = true;
    for (std::size_t j = 0; j < m && match; ++j)
      match = path.edges[position + 1 + j] == loop.crossings[j] &&
              path.faces[position + 2 + j] == loop.faces[j + 1];
    if (!match) continue;
    FacePath p = path.unoriented();
    const auto at = static_cast<std::ptrdiff_t>(position) + 2;
    p.faces.erase(p.faces.begin() + at, p.faces.begin() + at + static_cast<std::ptrdiff_t>(m));
    p.crossings.erase(p.crossings.begin() + at - 1,
                      p.crossings.begin() + at - 1 + static_cast<std::ptrdiff_t>(m));
    return orient_face_path(s, p, path.orientations.front());
  }
  throw Error(ErrorCode::PreconditionViolated, "no vertex loop at that position");
}

}  // namespace mclift
