#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/blowup.hpp"
#include "zdg/graph.hpp"
#include "zdg/strong_resolving.hpp"

namespace zdg {

/// Exact maximum independent set by branch and bound over bitsets:
/// branch on a max-degree vertex, prune with a greedy clique cover.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const SimpleGraph& g) : g_(g) {}

  /// Size of a largest independent set inside `candidates`, or any value
  /// >= `target` as soon as one that large is found.
  std::size_t solve(const Bitset& candidates, std::size_t target = SIZE_MAX) {
    best_ = 0;
    target_ = target;
    search(candidates, 0);
    return best_;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  // Each greedy clique holds at most one vertex of an independent set.
  std::size_t clique_cover_bound(Bitset rest) const {
    std::size_t cliques = 0;
    while (rest.any()) {
      const Vertex v = rest.find_first();
      rest.reset(v);
      Bitset common = rest & g_.neighbors(v);
      while (common.any()) {
        const Vertex w = common.find_first();
        rest.reset(w);
        common.reset(w);
        common &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(Bitset cand, std::size_t size) {
    ++nodes_;
    if (best_ >= target_) return;
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(cand) <= best_) return;

    Vertex pick = cand.find_first();
    std::size_t max_deg = 0;
    for_each_bit(cand, [&](std::size_t v) {
      const std::size_t deg = (g_.neighbors(v) & cand).count();
      if (deg > max_deg) {
        max_deg = deg;
        pick = v;
      }
    });
    if (max_deg == 0) {
      best_ = std::max(best_, size + cand.count());
      return;
    }
    Bitset with = cand - g_.neighbors(pick);
    with.reset(pick);
    search(std::move(with), size + 1);
    cand.reset(pick);
    search(std::move(cand), size);
  }

  const SimpleGraph& g_;
  std::size_t best_ = 0;
  std::size_t target_ = SIZE_MAX;
  std::size_t nodes_ = 0;
};

/// Maximum independent set; among optima, the lexicographically least
/// sorted vertex list.
inline std::vector<Vertex> max_independent_set(const SimpleGraph& g) {
  IndependentSetSearch search(g);
  Bitset all(g.vertex_count());
  all.set();
  std::size_t need = search.solve(all);
  std::vector<Vertex> chosen;
  Bitset open = all;
  for (Vertex v = 0; v < g.vertex_count() && need > 0; ++v) {
    if (!open.test(v)) continue;
    open.reset(v);
    Bitset rest = open - g.neighbors(v);
    if (need == 1 || search.solve(rest, need - 1) >= need - 1) {
      chosen.push_back(v);
      open = std::move(rest);
      --need;
    }
  }
  return chosen;
}

inline std::size_t independence_number(const SimpleGraph& g) {
  Bitset all(g.vertex_count());
  all.set();
  return IndependentSetSearch(g).solve(all);
}

/// |V| minus the independence number.
inline std::size_t vertex_cover_number(const SimpleGraph& g) { return g.vertex_count() - independence_number(g); }

enum class DimensionMethod { closed_form, sr_vertex_cover, brute_force };

constexpr std::string_view to_string(DimensionMethod m) {
  switch (m) {
    case DimensionMethod::closed_form: return "closed_form";
    case DimensionMethod::sr_vertex_cover: return "sr_vertex_cover";
    case DimensionMethod::brute_force: return "brute_force";
  }
  return "unknown";
}

/// alpha is the vertex cover number and beta the independence number of the
/// SR graph; they are absent for methods that never build it.
struct DimensionReport {
  std::string graph_id;
  std::size_t vertex_count = 0;
  std::size_t sdim = 0;
  DimensionMethod method = DimensionMethod::sr_vertex_cover;
  std::vector<Vertex> witness;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> beta;
  std::optional<std::size_t> sr_vertex_count;
  std::chrono::microseconds elapsed{0};
};

/// sdim_M(G) = α(G_SR). The witness is the complement of the lexicographically
/// least maximum independent set of G_SR, checked as a strong resolving set.
inline DimensionReport strong_metric_dimension(const SimpleGraph& g, std::string graph_id = "G") {
  const auto start = std::chrono::steady_clock::now();
  const DistanceMatrix d(g);
  const auto sr = strong_resolving_graph(g, d);
  const auto mis = max_independent_set(sr.graph);

  DimensionReport r;
  r.graph_id = std::move(graph_id);
  r.vertex_count = g.vertex_count();
  r.method = DimensionMethod::sr_vertex_cover;
  r.sr_vertex_count = sr.graph.vertex_count();
  r.beta = mis.size();
  r.alpha = sr.graph.vertex_count() - mis.size();
  r.sdim = *r.alpha;
  Bitset in_mis = from_indices(sr.graph.vertex_count(), mis);
  for (std::size_t i = 0; i < sr.vertices.size(); ++i)
    if (!in_mis.test(i)) r.witness.push_back(sr.vertices[i]);
  if (!is_strong_resolving_set(g, d, r.witness))
    throw Error(ErrorKind::TheoremViolated, "SR vertex cover is not a strong resolving set");
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

inline constexpr std::size_t kDefaultBruteForceCap = 16;

namespace detail {

// For every unordered pair, the mask of vertices that separate it.
template <typename Separates>
std::vector<std::uint64_t> pair_masks(const SimpleGraph& g, Separates separates) {
  std::vector<std::uint64_t> masks;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      std::uint64_t m = 0;
      for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (separates(w, u, v)) m |= std::uint64_t{1} << w;
      masks.push_back(m);
    }
  return masks;
}

// Smallest subset hitting every mask; subsets by popcount, then numeric value.
inline std::vector<Vertex> smallest_hitting_subset(std::size_t n, const std::vector<std::uint64_t>& masks) {
  auto hits = [&](std::uint64_t s) {
    return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & s) != 0; });
  };
  if (hits(0)) return {};
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t s = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (hits(s)) {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n; ++v)
          if (s >> v & 1u) out.push_back(v);
        return out;
      }
      // Gosper's hack: next subset with the same popcount
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {};
}

inline DistanceMatrix brute_force_distances(const SimpleGraph& g, std::size_t cap) {
  if (cap > 62) cap = 62;
  if (g.vertex_count() > cap)
    throw Error(ErrorKind::TooLarge, std::to_string(g.vertex_count()) + " vertices exceeds brute-force cap " +
                                         std::to_string(cap));
  DistanceMatrix d(g);
  require_connected(g, d);
  return d;
}

}  // namespace detail

/// A minimum strong resolving set by subset enumeration. Uses only the
/// strong-resolution definition, never the SR graph.
inline std::vector<Vertex> minimum_strong_resolving_set_bruteforce(const SimpleGraph& g,
                                                                   std::size_t cap = kDefaultBruteForceCap) {
  const auto d = detail::brute_force_distances(g, cap);
  const auto masks =
      detail::pair_masks(g, [&](Vertex w, Vertex u, Vertex v) { return strongly_resolves(d, w, u, v); });
  return detail::smallest_hitting_subset(g.vertex_count(), masks);
}

inline std::size_t strong_metric_dimension_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultBruteForceCap) {
  return minimum_strong_resolving_set_bruteforce(g, cap).size();
}

/// A metric basis by subset enumeration.
inline std::vector<Vertex> metric_basis_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultBruteForceCap) {
  const auto d = detail::brute_force_distances(g, cap);
  const auto masks = detail::pair_masks(g, [&](Vertex w, Vertex u, Vertex v) { return d(u, w) != d(v, w); });
  return detail::smallest_hitting_subset(g.vertex_count(), masks);
}

inline std::size_t metric_dimension_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultBruteForceCap) {
  return metric_basis_bruteforce(g, cap).size();
}

inline DimensionReport strong_metric_dimension_bruteforce_report(const SimpleGraph& g, std::string graph_id = "G",
                                                                 std::size_t cap = kDefaultBruteForceCap) {
  const auto start = std::chrono::steady_clock::now();
  DimensionReport r;
  r.graph_id = std::move(graph_id);
  r.vertex_count = g.vertex_count();
  r.method = DimensionMethod::brute_force;
  r.witness = minimum_strong_resolving_set_bruteforce(g, cap);
  r.sdim = r.witness.size();
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

/// |Z*(L^B)| - 2^(n-1) + 1, valid for n >= 3.
inline std::size_t closed_form_sdim_blowup(const BlowUpSpec& spec) {
  if (spec.n() < 3) throw Error(ErrorKind::PreconditionFailed, "closed form needs n >= 3");
  return spec.proper_element_count() - (std::size_t{1} << (spec.n() - 1)) + 1;
}

inline DimensionReport closed_form_report(const BlowUpSpec& spec, std::string graph_id = "G") {
  DimensionReport r;
  r.graph_id = std::move(graph_id);
  r.vertex_count = spec.proper_element_count();
  r.method = DimensionMethod::closed_form;
  r.sdim = closed_form_sdim_blowup(spec);
  r.sr_vertex_count = r.vertex_count;
  r.alpha = r.sdim;
  r.beta = (std::size_t{1} << (spec.n() - 1)) - 1;
  return r;
}

/// Machine-readable: `sdim=<k> method=<m> alpha=<a> beta=<b> witness=<csv>`.
inline std::string format_report_line(const DimensionReport& r) {
  auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
  std::string out = "sdim=" + std::to_string(r.sdim) + " method=" + std::string(to_string(r.method)) +
                    " alpha=" + opt(r.alpha) + " beta=" + opt(r.beta) + " witness=";
  if (r.method == DimensionMethod::closed_form) return out + "-";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(r.witness[i]);
  }
  return out;
}

/// Plain-text table; witness vertices shown by label.
inline std::string format_report_table(const DimensionReport& r, const SimpleGraph* g = nullptr,
                                       bool with_timing = false) {
  auto opt = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("-"); };
  std::ostringstream os;
  os << "graph        " << r.graph_id << "\n"
     << "vertices     " << r.vertex_count << "\n"
     << "method       " << to_string(r.method) << "\n"
     << "sdim         " << r.sdim << "\n"
     << "|V(G_SR)|    " << opt(r.sr_vertex_count) << "\n"
     << "alpha(G_SR)  " << opt(r.alpha) << "\n"
     << "beta(G_SR)   " << opt(r.beta) << "\n"
     << "witness      ";
  if (r.method == DimensionMethod::closed_form) {
    os << "-\n";  // a formula names no set
  } else {
    os << "{";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) os << ", ";
      os << (g ? g->label(r.witness[i]) : std::to_string(r.witness[i]));
    }
    os << "}\n";
  }
  if (with_timing) os << "elapsed_us   " << r.elapsed.count() << "\n";
  return os.str();
}

}  // namespace zdg
