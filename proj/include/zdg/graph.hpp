#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/error.hpp"
#include "zdg/text.hpp"

namespace zdg {

using Vertex = std::size_t;

/// Undirected simple graph with one bitset adjacency row per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  explicit SimpleGraph(std::size_t n, std::vector<std::string> labels = {})
      : adj_(n, Bitset(n)), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.resize(n);
      for (Vertex v = 0; v < n; ++v) labels_[v] = std::to_string(v);
    }
    if (labels_.size() != n) throw Error(ErrorKind::InvalidArgument, "label count differs from vertex count");
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_label(Vertex v, std::string text) { labels_.at(v) = std::move(text); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < vertex_count(); ++u)
      for_each_bit(adj_[u], [&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  /// Same vertex count and adjacency; labels ignored.
  bool same_structure(const SimpleGraph& other) const { return adj_ == other.adj_; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_ == b.adj_ && a.labels_ == b.labels_;
  }

 private:
  void check(Vertex v) const {
    if (v >= vertex_count()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  }

  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

inline SimpleGraph complete_graph(std::size_t t, const std::string& prefix = "k") {
  std::vector<std::string> labels(t);
  for (std::size_t i = 0; i < t; ++i) labels[i] = prefix + std::to_string(i + 1);
  SimpleGraph g(t, std::move(labels));
  for (Vertex u = 0; u < t; ++u)
    for (Vertex v = u + 1; v < t; ++v) g.add_edge(u, v);
  return g;
}

inline SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

/// Adjacency flipped off the diagonal; labels kept.
inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.vertex_count(), g.labels());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// Vertex-disjoint union; H's vertices follow G's. Labels are kept unless
/// the two label sets collide, in which case both sides get "0."/"1." prefixes.
inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  const std::size_t ng = g.vertex_count();
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (i < ng ? "0." : "1.") + labels[i];
  }
  SimpleGraph out(ng + h.vertex_count(), std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  return out;
}

/// G ∨ K_t: t new mutually adjacent vertices k1..kt, each adjacent to all of G.
inline SimpleGraph join_complete(const SimpleGraph& g, std::size_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "join_complete needs t >= 1");
  SimpleGraph out = disjoint_union(g, complete_graph(t));
  const std::size_t ng = g.vertex_count();
  for (Vertex k = ng; k < ng + t; ++k)
    for (Vertex v = 0; v < ng; ++v) out.add_edge(k, v);
  return out;
}

inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Vertex>& keep) {
  std::vector<std::string> labels;
  for (auto v : keep) labels.push_back(g.label(v));
  SimpleGraph out(keep.size(), std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

/// All-pairs BFS distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  explicit DistanceMatrix(const SimpleGraph& g) : n_(g.vertex_count()), d_(n_ * n_, kUnreachable) {
    for (Vertex s = 0; s < n_; ++s) {
      Bitset seen(n_), frontier(n_);
      seen.set(s);
      frontier.set(s);
      std::uint32_t dist = 0;
      while (frontier.any()) {
        Bitset next(n_);
        for_each_bit(frontier, [&](std::size_t v) {
          d_[s * n_ + v] = dist;
          next |= g.neighbors(v);
        });
        next -= seen;
        seen |= next;
        frontier = std::move(next);
        ++dist;
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }

  /// Max finite distance; nullopt when some pair is unreachable.
  std::optional<std::uint32_t> diameter() const {
    std::uint32_t best = 0;
    for (auto x : d_) {
      if (x == kUnreachable) return std::nullopt;
      best = std::max(best, x);
    }
    return best;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

inline DistanceMatrix all_pairs_distances(const SimpleGraph& g) { return DistanceMatrix(g); }

/// nullopt encodes an infinite diameter (disconnected graph).
inline std::optional<std::uint32_t> diameter(const SimpleGraph& g) { return DistanceMatrix(g).diameter(); }

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  Bitset unseen(n);
  unseen.set();
  while (unseen.any()) {
    const Vertex s = unseen.find_first();
    Bitset comp(n), frontier(n);
    comp.set(s);
    frontier.set(s);
    while (frontier.any()) {
      Bitset next(n);
      for_each_bit(frontier, [&](std::size_t v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(to_indices(comp));
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

inline bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// DOT export: vertices in index order, each edge once with i < j.
/// Vertices flagged in `marked` get peripheries=2.
inline void write_dot(std::ostream& os, const SimpleGraph& g, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      const Bitset* marked = nullptr) {
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v << " [label=\"" << detail::dot_escape(g.label(v)) << "\"";
    if (marked && marked->test(v)) os << ", peripheries=2";
    os << "];\n";
  }
  for (auto [u, v] : edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

inline void write_dot(std::ostream& os, const SimpleGraph& g) { write_dot(os, g, g.edges()); }

inline std::string to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  write_dot(os, g);
  return os.str();
}

/// Edge-list format: `v <i> <label>` lines then `e <i> <j>` lines.
inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "v " << v << ' ' << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline SimpleGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<Vertex, std::string>> vertices;
  std::vector<std::tuple<Vertex, Vertex, std::size_t>> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string kind, a, b;
    words >> kind >> a;
    if (kind == "v") {
      auto i = detail::parse_uint(a);
      if (!i || *i != vertices.size()) throw ParseError(line_no, "vertices must be listed as 0,1,2,...");
      std::string label;
      std::getline(words, label);
      label = detail::trim(label);
      vertices.emplace_back(*i, label.empty() ? a : label);
    } else if (kind == "e") {
      words >> b;
      auto i = detail::parse_uint(a), j = detail::parse_uint(b);
      std::string extra;
      if (!i || !j || (words >> extra)) throw ParseError(line_no, "expected `e <i> <j>`");
      if (*i == *j) throw ParseError(line_no, "loops are not allowed");
      edges.emplace_back(*i, *j, line_no);
    } else {
      throw ParseError(line_no, "unknown record `" + kind + "`");
    }
  }
  std::vector<std::string> labels;
  for (auto& [i, label] : vertices) labels.push_back(label);
  SimpleGraph g(vertices.size(), std::move(labels));
  for (auto [i, j, ln] : edges) {
    if (i >= g.vertex_count() || j >= g.vertex_count()) throw ParseError(ln, "edge endpoint out of range");
    g.add_edge(i, j);
  }
  return g;
}

inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace zdg
