#pragma once

#include <mclift/error.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mclift {

enum class VertexIndex : std::uint32_t {};
enum class EdgeIndex : std::uint32_t {};
enum class FaceIndex : std::uint32_t {};

template <typename E>
constexpr std::size_t idx(E e) {
  return static_cast<std::size_t>(e);
}

template <typename E>
constexpr E make_index(std::size_t i) {
  return static_cast<E>(static_cast<std::uint32_t>(i));
}

/// Orientation of a face relative to the cyclic order it was listed with.
enum class Orientation : std::int8_t { positive = 1, negative = -1 };

constexpr Orientation flip(Orientation o) {
  return o == Orientation::positive ? Orientation::negative : Orientation::positive;
}

/// Undirected edge; endpoints are stored with first < second.
struct Edge {
  VertexIndex first;
  VertexIndex second;

  bool contains(VertexIndex v) const { return first == v || second == v; }
  VertexIndex other(VertexIndex v) const { return v == first ? second : first; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DirectedEdge {
  VertexIndex from;
  VertexIndex to;

  DirectedEdge reversed() const { return {to, from}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Face record as it appears in input: an id and a cyclic vertex sequence.
struct RawFace {
  std::string id;
  std::vector<std::string> vertices;
};

/// Cyclic sequence of faces and crossing edges around an interior vertex,
/// or the open fan around a boundary vertex. edges[k] separates faces[k] and
/// faces[k+1] (cyclically when closed).
struct VertexStar {
  VertexIndex vertex;
  bool closed = false;
  std::vector<FaceIndex> faces;
  std::vector<EdgeIndex> edges;
};

/// Combinatorial polygonal surface. Immutable once validated; only
/// validate_surface() produces instances.
class SurfaceComplex {
 public:
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return face_ids_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[idx(v)]; }
  const std::string& face_id(FaceIndex f) const { return face_ids_[idx(f)]; }

  std::optional<VertexIndex> find_vertex(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<FaceIndex> find_face(const std::string& id) const {
    auto it = face_lookup_.find(id);
    if (it == face_lookup_.end()) return std::nullopt;
    return it->second;
  }
  VertexIndex vertex(const std::string& id) const {
    if (auto v = find_vertex(id)) return *v;
    throw Error(ErrorCode::UnknownVertex, "no vertex '" + id + "'");
  }
  FaceIndex face(const std::string& id) const {
    if (auto f = find_face(id)) return *f;
    throw Error(ErrorCode::UnknownFace, "no face '" + id + "'");
  }

  std::span<const VertexIndex> face_vertices(FaceIndex f) const { return face_vertices_[idx(f)]; }
  /// face_edges(f)[k] joins corner k and corner k+1 (mod degree).
  std::span<const EdgeIndex> face_edges(FaceIndex f) const { return face_edges_[idx(f)]; }
  std::size_t face_degree(FaceIndex f) const { return face_vertices_[idx(f)].size(); }

  const Edge& edge(EdgeIndex e) const { return edges_[idx(e)]; }
  std::span<const FaceIndex> edge_faces(EdgeIndex e) const { return edge_faces_[idx(e)]; }
  bool is_interior(EdgeIndex e) const { return edge_faces_[idx(e)].size() == 2; }
  bool is_boundary(EdgeIndex e) const { return edge_faces_[idx(e)].size() == 1; }

  std::optional<EdgeIndex> find_edge(VertexIndex a, VertexIndex b) const {
    auto it = edge_lookup_.find(key(a, b));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
  }
  EdgeIndex edge_between(VertexIndex a, VertexIndex b) const {
    if (auto e = find_edge(a, b)) return *e;
    throw Error(ErrorCode::UnknownEdgeKey,
                "no edge " + vertex_id(a) + " " + vertex_id(b));
  }

  bool face_has_edge(FaceIndex f, EdgeIndex e) const {
    auto edges = face_edges(f);
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }

  /// Face on the other side of e, or nullopt for boundary edges.
  std::optional<FaceIndex> across(FaceIndex f, EdgeIndex e) const {
    auto faces = edge_faces(e);
    if (faces.size() != 2) return std::nullopt;
    return faces[0] == f ? faces[1] : faces[0];
  }

  /// Direction in which the boundary of f, oriented by o, traverses e.
  DirectedEdge traversal(FaceIndex f, EdgeIndex e, Orientation o) const {
    auto edges = face_edges(f);
    auto verts = face_vertices(f);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k] != e) continue;
      DirectedEdge d{verts[k], verts[(k + 1) % verts.size()]};
      return o == Orientation::positive ? d : d.reversed();
    }
    throw Error(ErrorCode::NotAdjacent,
                "edge " + edge_label(e) + " is not on face " + face_id(f));
  }

  /// Faces and crossing edges around v, computed at validation time.
  const VertexStar& star(VertexIndex v) const { return stars_[idx(v)]; }
  bool is_interior_vertex(VertexIndex v) const { return stars_[idx(v)].closed; }

  std::string edge_label(EdgeIndex e) const {
    return vertex_id(edges_[idx(e)].first) + "-" + vertex_id(edges_[idx(e)].second);
  }

 private:
  friend SurfaceComplex validate_surface(const std::vector<std::string>&,
                                         const std::vector<RawFace>&);

  static std::uint64_t key(VertexIndex a, VertexIndex b) {
    auto lo = std::min(idx(a), idx(b));
    auto hi = std::max(idx(a), idx(b));
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> face_ids_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, FaceIndex> face_lookup_;
  std::vector<std::vector<VertexIndex>> face_vertices_;
  std::vector<std::vector<EdgeIndex>> face_edges_;
  std::vector<Edge> edges_;
  std::vector<std::vector<FaceIndex>> edge_faces_;
  std::unordered_map<std::uint64_t, EdgeIndex> edge_lookup_;
  std::vector<VertexStar> stars_;
};

namespace detail {

// Walks the faces around v. Each face containing v has exactly two edges at v.
inline VertexStar build_star(const SurfaceComplex& s, VertexIndex v,
                             const std::vector<FaceIndex>& incident) {
  VertexStar star{v, false, {}, {}};
  if (incident.empty()) return star;

  auto edges_at = [&](FaceIndex f) {
    auto verts = s.face_vertices(f);
    auto edges = s.face_edges(f);
    const std::size_t n = verts.size();
    for (std::size_t k = 0; k < n; ++k)
      if (verts[k] == v) return std::pair{edges[(k + n - 1) % n], edges[k]};
    throw Error(ErrorCode::NonManifoldVertex, "vertex not on face");
  };

  std::size_t boundary_edges = 0;
  std::optional<FaceIndex> start;
  std::optional<EdgeIndex> entry;
  for (FaceIndex f : incident) {
    auto [in, out] = edges_at(f);
    for (EdgeIndex e : {in, out}) {
      if (!s.is_boundary(e)) continue;
      ++boundary_edges;
      if (!start) {
        start = f;
        entry = e;
      }
    }
  }
  if (boundary_edges > 2)
    throw Error(ErrorCode::NonManifoldBoundary,
                "vertex " + s.vertex_id(v) + " lies on more than two boundary edges");

  star.closed = boundary_edges == 0;
  FaceIndex face = start.value_or(incident.front());
  EdgeIndex came_from = entry.value_or(edges_at(face).first);
  for (;;) {
    star.faces.push_back(face);
    auto [a, b] = edges_at(face);
    EdgeIndex exit = a == came_from ? b : a;
    auto next = s.across(face, exit);
    if (!next) break;  // reached the other boundary edge
    star.edges.push_back(exit);
    if (star.closed && *next == star.faces.front() && star.faces.size() > 1) break;
    if (star.faces.size() > incident.size())
      throw Error(ErrorCode::NonManifoldVertex, "vertex " + s.vertex_id(v));
    face = *next;
    came_from = exit;
  }
  if (star.faces.size() != incident.size())
    throw Error(ErrorCode::NonManifoldVertex,
                "faces around vertex " + s.vertex_id(v) + " do not form a single fan");
  return star;
}

template <typename Neighbors>
bool connected(std::size_t n, Neighbors&& neighbors) {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t w : neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++count;
      queue.push_back(w);
    }
  }
  return count == n;
}

}  // namespace detail

/// Builds a SurfaceComplex from declared vertex ids and faces. Vertex order is
/// declaration order; edges are numbered by first appearance in the faces.
inline SurfaceComplex validate_surface(const std::vector<std::string>& vertex_ids,
                                       const std::vector<RawFace>& faces) {
  if (faces.empty()) throw Error(ErrorCode::EmptySurface, "no faces");

  SurfaceComplex s;
  for (const auto& id : vertex_ids) {
    auto v = make_index<VertexIndex>(s.vertex_ids_.size());
    if (!s.vertex_lookup_.emplace(id, v).second)
      throw Error(ErrorCode::DuplicateId, "vertex '" + id + "'");
    s.vertex_ids_.push_back(id);
  }

  for (const auto& raw : faces) {
    auto f = make_index<FaceIndex>(s.face_ids_.size());
    if (!s.face_lookup_.emplace(raw.id, f).second)
      throw Error(ErrorCode::DuplicateId, "face '" + raw.id + "'");
    if (raw.vertices.size() < 3)
      throw Error(ErrorCode::DegenerateFace, "face '" + raw.id + "' has fewer than 3 vertices");
    std::vector<VertexIndex> cycle;
    for (const auto& vid : raw.vertices) {
      auto v = s.find_vertex(vid);
      if (!v) throw Error(ErrorCode::UnknownVertex, "face '" + raw.id + "' uses '" + vid + "'");
      if (std::find(cycle.begin(), cycle.end(), *v) != cycle.end())
        throw Error(ErrorCode::RepeatedVertexInFace, "face '" + raw.id + "' repeats '" + vid + "'");
      cycle.push_back(*v);
    }
    s.face_ids_.push_back(raw.id);
    s.face_vertices_.push_back(std::move(cycle));
  }

  for (std::size_t fi = 0; fi < s.face_vertices_.size(); ++fi) {
    const auto& cycle = s.face_vertices_[fi];
    std::vector<EdgeIndex> fedges;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      VertexIndex a = cycle[k];
      VertexIndex b = cycle[(k + 1) % cycle.size()];
      auto [it, inserted] = s.edge_lookup_.emplace(SurfaceComplex::key(a, b),
                                                   make_index<EdgeIndex>(s.edges_.size()));
      if (inserted) {
        s.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
        s.edge_faces_.emplace_back();
      }
      auto& incidences = s.edge_faces_[idx(it->second)];
      incidences.push_back(make_index<FaceIndex>(fi));
      if (incidences.size() > 2)
        throw Error(ErrorCode::EdgeOverused,
                    "edge " + s.vertex_id(a) + "-" + s.vertex_id(b) + " lies on 3 or more faces");
      fedges.push_back(it->second);
    }
    s.face_edges_.push_back(std::move(fedges));
  }

  std::vector<std::vector<std::size_t>> vertex_adj(s.vertex_count());
  for (const auto& e : s.edges_) {
    vertex_adj[idx(e.first)].push_back(idx(e.second));
    vertex_adj[idx(e.second)].push_back(idx(e.first));
  }
  if (!detail::connected(s.vertex_count(), [&](std::size_t v) { return vertex_adj[v]; }))
    throw Error(ErrorCode::DisconnectedSkeleton, "vertex-edge graph is not connected");

  std::vector<std::vector<std::size_t>> face_adj(s.face_count());
  for (const auto& inc : s.edge_faces_) {
    if (inc.size() != 2) continue;
    face_adj[idx(inc[0])].push_back(idx(inc[1]));
    face_adj[idx(inc[1])].push_back(idx(inc[0]));
  }
  if (!detail::connected(s.face_count(), [&](std::size_t f) { return face_adj[f]; }))
    throw Error(ErrorCode::DisconnectedDual, "dual graph is not connected");

  std::vector<std::vector<FaceIndex>> incident(s.vertex_count());
  for (std::size_t fi = 0; fi < s.face_count(); ++fi)
    for (VertexIndex v : s.face_vertices_[fi]) incident[idx(v)].push_back(make_index<FaceIndex>(fi));
  for (std::size_t vi = 0; vi < s.vertex_count(); ++vi)
    s.stars_.push_back(detail::build_star(s, make_index<VertexIndex>(vi), incident[vi]));

  return s;
}

/// Vertex order is order of first appearance in the faces.
inline SurfaceComplex validate_surface(const std::vector<RawFace>& faces) {
  std::vector<std::string> ids;
  std::unordered_map<std::string, bool> seen;
  for (const auto& f : faces)
    for (const auto& v : f.vertices)
      if (seen.emplace(v, true).second) ids.push_back(v);
  return validate_surface(ids, faces);
}

struct TopologyReport {
  long long euler_characteristic = 0;
  bool is_closed = false;
  bool is_orientable = false;
  std::size_t betti1_rank = 0;
  std::size_t boundary_component_count = 0;
  std::size_t interior_edge_count = 0;
  std::size_t boundary_edge_count = 0;
};

/// Breadth-first propagation of face orientations over the dual graph.
/// Returns nullopt when two adjacent faces are forced to traverse their
/// shared edge in the same direction.
inline std::optional<std::vector<Orientation>> coherent_orientation(const SurfaceComplex& s) {
  std::vector<std::optional<Orientation>> flags(s.face_count());
  flags[0] = Orientation::positive;
  std::deque<FaceIndex> queue{FaceIndex{0}};
  while (!queue.empty()) {
    FaceIndex f = queue.front();
    queue.pop_front();
    for (EdgeIndex e : s.face_edges(f)) {
      auto g = s.across(f, e);
      if (!g) continue;
      DirectedEdge here = s.traversal(f, e, *flags[idx(f)]);
      Orientation wanted = s.traversal(*g, e, Orientation::positive) == here
                               ? Orientation::negative
                               : Orientation::positive;
      if (!flags[idx(*g)]) {
        flags[idx(*g)] = wanted;
        queue.push_back(*g);
      } else if (*flags[idx(*g)] != wanted) {
        return std::nullopt;
      }
    }
  }
  std::vector<Orientation> out;
  out.reserve(flags.size());
  for (auto& f : flags) out.push_back(*f);
  return out;
}

inline TopologyReport topology_report(const SurfaceComplex& s) {
  TopologyReport r;
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    if (s.is_interior(make_index<EdgeIndex>(e)))
      ++r.interior_edge_count;
    else
      ++r.boundary_edge_count;
  }
  r.euler_characteristic = static_cast<long long>(s.vertex_count()) -
                           static_cast<long long>(s.edge_count()) +
                           static_cast<long long>(s.face_count());
  r.is_closed = r.boundary_edge_count == 0;
  r.is_orientable = coherent_orientation(s).has_value();

  // Boundary edges form disjoint cycles (each boundary vertex meets exactly two).
  std::vector<std::vector<std::size_t>> adj(s.vertex_count());
  std::vector<bool> on_boundary(s.vertex_count(), false);
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    const auto ei = make_index<EdgeIndex>(e);
    if (!s.is_boundary(ei)) continue;
    const auto& ed = s.edge(ei);
    adj[idx(ed.first)].push_back(idx(ed.second));
    adj[idx(ed.second)].push_back(idx(ed.first));
    on_boundary[idx(ed.first)] = on_boundary[idx(ed.second)] = true;
  }
  std::vector<bool> seen(s.vertex_count(), false);
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    if (!on_boundary[v] || seen[v]) continue;
    ++r.boundary_component_count;
    std::deque<std::size_t> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }

  long long b1 = 1 - r.euler_characteristic + ((r.is_closed && r.is_orientable) ? 1 : 0);
  r.betti1_rank = static_cast<std::size_t>(std::max(0LL, b1));
  return r;
}

/// Unoriented face-path: faces[k] and faces[k+1] share crossings[k].
struct FacePath {
  std::vector<FaceIndex> faces;
  std::vector<EdgeIndex> crossings;

  std::size_t length() const { return crossings.size(); }
  friend bool operator==(const FacePath&, const FacePath&) = default;
};

/// Breadth-first spanning tree of the dual graph plus one face-loop per
/// interior edge outside the tree.
struct CotreeLoopBasis {
  FaceIndex base_face{};
  std::vector<std::optional<FaceIndex>> parent;      // per face; nullopt at the root
  std::vector<std::optional<EdgeIndex>> parent_edge;  // edge to the parent
  std::vector<std::size_t> depth;
  std::vector<FaceIndex> order;         // breadth-first discovery order, root first
  std::vector<EdgeIndex> tree_edges;    // in discovery order
  std::vector<EdgeIndex> cotree_edges;  // in edge input order
  std::vector<FacePath> loops;          // loops[k] crosses cotree_edges[k]

  bool in_tree(EdgeIndex e) const {
    return std::find(tree_edges.begin(), tree_edges.end(), e) != tree_edges.end();
  }
  std::optional<std::size_t> cotree_position(EdgeIndex e) const {
    auto it = std::find(cotree_edges.begin(), cotree_edges.end(), e);
    if (it == cotree_edges.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cotree_edges.begin());
  }
};

/// The cotree loop through e goes base -> faces[0] of e, crosses e, and
/// returns from the other incident face.
inline FacePath tree_face_path(const SurfaceComplex& s, const CotreeLoopBasis& basis,
                               FaceIndex from, FaceIndex to);

/// Spanning tree over the dual graph, breadth first from base_face. Each
/// face's neighbours are visited in increasing (face index, edge index) order.
/// Edges listed in `forbidden` are kept out of the tree.
inline CotreeLoopBasis cotree_loop_basis(const SurfaceComplex& s, FaceIndex base_face,
                                         std::span<const EdgeIndex> forbidden = {}) {
  if (idx(base_face) >= s.face_count())
    throw Error(ErrorCode::UnknownFace, "face index out of range");

  CotreeLoopBasis b;
  b.base_face = base_face;
  b.parent.assign(s.face_count(), std::nullopt);
  b.parent_edge.assign(s.face_count(), std::nullopt);
  b.depth.assign(s.face_count(), 0);

  std::vector<bool> visited(s.face_count(), false);
  std::vector<bool> used(s.edge_count(), false);
  visited[idx(base_face)] = true;
  b.order.push_back(base_face);
  std::deque<FaceIndex> queue{base_face};
  while (!queue.empty()) {
    FaceIndex f = queue.front();
    queue.pop_front();
    std::vector<std::pair<FaceIndex, EdgeIndex>> nbrs;
    for (EdgeIndex e : s.face_edges(f)) {
      if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end()) continue;
      if (auto g = s.across(f, e)) nbrs.emplace_back(*g, e);
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [g, e] : nbrs) {
      if (visited[idx(g)]) continue;
      visited[idx(g)] = true;
      b.parent[idx(g)] = f;
      b.parent_edge[idx(g)] = e;
      b.depth[idx(g)] = b.depth[idx(f)] + 1;
      b.tree_edges.push_back(e);
      b.order.push_back(g);
      used[idx(e)] = true;
      queue.push_back(g);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw Error(ErrorCode::DisconnectedDual, "forbidden edges disconnect the dual graph");

  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    auto ei = make_index<EdgeIndex>(e);
    if (!s.is_interior(ei) || used[e]) continue;
    b.cotree_edges.push_back(ei);
  }
  for (EdgeIndex e : b.cotree_edges) {
    auto faces = s.edge_faces(e);
    FacePath out = tree_face_path(s, b, base_face, faces[0]);
    FacePath back = tree_face_path(s, b, faces[1], base_face);
    out.crossings.push_back(e);
    out.faces.insert(out.faces.end(), back.faces.begin(), back.faces.end());
    out.crossings.insert(out.crossings.end(), back.crossings.begin(), back.crossings.end());
    b.loops.push_back(std::move(out));
  }
  return b;
}

inline FacePath tree_face_path(const SurfaceComplex& s, const CotreeLoopBasis& basis,
                               FaceIndex from, FaceIndex to) {
  if (idx(from) >= s.face_count() || idx(to) >= s.face_count())
    throw Error(ErrorCode::UnknownFace, "face index out of range");

  // Climb both ends to their lowest common ancestor.
  std::vector<FaceIndex> up_faces{from};
  std::vector<EdgeIndex> up_edges;
  std::vector<FaceIndex> down_faces{to};
  std::vector<EdgeIndex> down_edges;
  FaceIndex a = from;
  FaceIndex c = to;
  while (a != c) {
    if (basis.depth[idx(a)] >= basis.depth[idx(c)]) {
      up_edges.push_back(*basis.parent_edge[idx(a)]);
      a = *basis.parent[idx(a)];
      up_faces.push_back(a);
    } else {
      down_edges.push_back(*basis.parent_edge[idx(c)]);
      c = *basis.parent[idx(c)];
      down_faces.push_back(c);
    }
  }
  FacePath p;
  p.faces = std::move(up_faces);
  p.crossings = std::move(up_edges);
  // down_faces ends with the common ancestor, already present.
  for (std::size_t k = down_edges.size(); k-- > 0;) {
    p.crossings.push_back(down_edges[k]);
    p.faces.push_back(down_faces[k]);
  }
  return p;
}

/// Structural check: consecutive faces share the designated crossing edge.
inline bool is_valid_face_path(const SurfaceComplex& s, const FacePath& p) {
  if (p.faces.empty() || p.crossings.size() + 1 != p.faces.size()) return false;
  for (std::size_t k = 0; k < p.crossings.size(); ++k) {
    if (!s.face_has_edge(p.faces[k], p.crossings[k])) return false;
    if (!s.face_has_edge(p.faces[k + 1], p.crossings[k])) return false;
  }
  return true;
}

/// Face-loop once around an interior vertex, starting and ending at the first
/// face of its star.
inline FacePath vertex_loop(const SurfaceComplex& s, VertexIndex v) {
  const VertexStar& st = s.star(v);
  if (!st.closed)
    throw Error(ErrorCode::BoundaryVertex, "vertex " + s.vertex_id(v) + " is on the boundary");
  FacePath p;
  p.faces = st.faces;
  p.faces.push_back(st.faces.front());
  p.crossings = st.edges;
  return p;
}

}  // namespace mclift
