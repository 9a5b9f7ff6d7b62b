#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "zdg/blowup.hpp"
#include "zdg/graph.hpp"
#include "zdg/lattice.hpp"
#include "zdg/zerodiv.hpp"

namespace zdg {

/// Strong resolving graph G_SR. Vertex i of `graph` is base vertex
/// `vertices[i]`; `vertices` is the boundary ∂(G) in ascending order.
struct SRGraph {
  std::size_t base_vertex_count = 0;
  std::vector<Vertex> vertices;
  SimpleGraph graph;

  Bitset boundary() const { return from_indices(base_vertex_count, vertices); }

  /// SR edges in base-graph numbering.
  std::vector<std::pair<Vertex, Vertex>> base_edges() const {
    auto out = graph.edges();
    for (auto& [u, v] : out) {
      u = vertices[u];
      v = vertices[v];
    }
    return out;
  }

  friend bool operator==(const SRGraph&, const SRGraph&) = default;
};

namespace detail {

inline void require_connected(const SimpleGraph& g, const DistanceMatrix& d) {
  if (g.vertex_count() > 0 && !d.diameter()) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

inline bool maximally_distant(const SimpleGraph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  const auto duv = d(u, v);
  bool ok = true;
  for_each_bit(g.neighbors(u), [&](std::size_t w) { ok = ok && d(v, w) <= duv; });
  return ok;
}

inline bool mutually_maximally_distant(const SimpleGraph& g, const DistanceMatrix& d, Vertex u, Vertex v) {
  return maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u);
}

}  // namespace detail

/// True iff every neighbour w of u has d(v, w) <= d(u, v).
inline bool is_maximally_distant(const SimpleGraph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || u == v)
    throw Error(ErrorKind::InvalidArgument, "need two distinct vertices");
  const DistanceMatrix d(g);
  if (!d.reachable(u, v)) throw Error(ErrorKind::NotCoReachable, "vertices lie in different components");
  return detail::maximally_distant(g, d, u, v);
}

/// All mutually maximally distant pairs (u < v), lexicographic.
inline std::vector<std::pair<Vertex, Vertex>> mmd_pairs(const SimpleGraph& g, const DistanceMatrix& d) {
  detail::require_connected(g, d);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (detail::mutually_maximally_distant(g, d, u, v)) out.emplace_back(u, v);
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> mmd_pairs(const SimpleGraph& g) { return mmd_pairs(g, DistanceMatrix(g)); }

inline std::vector<Vertex> boundary(const SimpleGraph& g) {
  Bitset b(g.vertex_count());
  for (auto [u, v] : mmd_pairs(g)) {
    b.set(u);
    b.set(v);
  }
  return to_indices(b);
}

namespace detail {

inline SRGraph make_sr(const SimpleGraph& base, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Bitset on(base.vertex_count());
  for (auto [u, v] : pairs) {
    on.set(u);
    on.set(v);
  }
  SRGraph sr;
  sr.base_vertex_count = base.vertex_count();
  sr.vertices = to_indices(on);
  std::vector<std::size_t> local(base.vertex_count(), 0);
  for (std::size_t i = 0; i < sr.vertices.size(); ++i) local[sr.vertices[i]] = i;
  std::vector<std::string> labels;
  for (auto v : sr.vertices) labels.push_back(base.label(v));
  sr.graph = SimpleGraph(sr.vertices.size(), std::move(labels));
  for (auto [u, v] : pairs) sr.graph.add_edge(local[u], local[v]);
  return sr;
}

}  // namespace detail

/// Distance-based G_SR: vertices ∂(G), edges the mutually maximally distant pairs.
inline SRGraph strong_resolving_graph(const SimpleGraph& g, const DistanceMatrix& d) {
  return detail::make_sr(g, mmd_pairs(g, d));
}

inline SRGraph strong_resolving_graph(const SimpleGraph& g) { return strong_resolving_graph(g, DistanceMatrix(g)); }

/// G^c(L^B)_SR without any distance computation: vertices Z*(L^B), edge xy
/// iff x, y share an annihilator class or x ∧ y = 0. Numbering matches
/// complement_zero_divisor_graph(bu.lattice).
inline SRGraph blowup_sr_closed_form(const BlowUp& bu) {
  if (bu.spec.n() < 3) throw Error(ErrorKind::PreconditionFailed, "closed form needs n >= 3");
  const auto& L = bu.lattice;
  const auto z = zero_divisors(L);
  const auto part = annihilator_classes(L);
  std::vector<std::string> labels;
  for (auto a : z) labels.push_back(L.label(a));
  SRGraph sr;
  sr.base_vertex_count = z.size();
  sr.vertices.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) sr.vertices[i] = i;
  sr.graph = SimpleGraph(z.size(), std::move(labels));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (part.class_of[z[i]] == part.class_of[z[j]] || L.meet(z[i], z[j]) == L.bottom()) sr.graph.add_edge(i, j);
  return sr;
}

/// (G^c(L) ∨ K_t)_SR assembled as G^c(L)_SR + (K_t)_SR. Requires L atomic,
/// 0-distributive, with at least three atoms; t = 0 gives G^c(L)_SR.
inline SRGraph sr_of_join_decomposition(const FiniteLattice& L, std::size_t t) {
  if (atoms(L).size() < 3 || !is_atomic(L) || !is_zero_distributive(L))
    throw Error(ErrorKind::PreconditionFailed, "need an atomic 0-distributive lattice with at least three atoms");
  const auto gc = complement_zero_divisor_graph(L);
  auto core = strong_resolving_graph(gc);
  if (t == 0) return core;
  // (K_1)_SR is empty: a universal vertex is never maximally distant.
  const auto clique = strong_resolving_graph(complete_graph(t));
  SRGraph sr;
  sr.base_vertex_count = gc.vertex_count() + t;
  sr.vertices = core.vertices;
  for (auto k : clique.vertices) sr.vertices.push_back(gc.vertex_count() + k);
  sr.graph = disjoint_union(core.graph, clique.graph);
  return sr;
}

/// w strongly resolves u, v: u lies on a shortest v-w path or v on a shortest u-w path.
inline bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

inline bool strongly_resolves(const SimpleGraph& g, Vertex w, Vertex u, Vertex v) {
  const DistanceMatrix d(g);
  detail::require_connected(g, d);
  return strongly_resolves(d, w, u, v);
}

inline bool is_strong_resolving_set(const SimpleGraph& g, const DistanceMatrix& d, const std::vector<Vertex>& w) {
  detail::require_connected(g, d);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      bool resolved = false;
      for (auto x : w) resolved = resolved || strongly_resolves(d, x, u, v);
      if (!resolved) return false;
    }
  return true;
}

inline bool is_strong_resolving_set(const SimpleGraph& g, const std::vector<Vertex>& w) {
  return is_strong_resolving_set(g, DistanceMatrix(g), w);
}

/// Distinct distance vectors to W for every pair of vertices.
inline bool is_resolving_set(const SimpleGraph& g, const DistanceMatrix& d, const std::vector<Vertex>& w) {
  detail::require_connected(g, d);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      bool separated = false;
      for (auto x : w) separated = separated || d(u, x) != d(v, x);
      if (!separated) return false;
    }
  return true;
}

inline bool is_resolving_set(const SimpleGraph& g, const std::vector<Vertex>& w) {
  return is_resolving_set(g, DistanceMatrix(g), w);
}

/// SR graph as DOT over the base vertices, boundary vertices doubled.
inline void write_sr_dot(std::ostream& os, const SimpleGraph& base, const SRGraph& sr) {
  const auto marked = sr.boundary();
  write_dot(os, base, sr.base_edges(), &marked);
}

}  // namespace zdg
