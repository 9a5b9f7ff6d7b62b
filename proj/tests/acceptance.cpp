// Acceptance runner: one [PASS]/[FAIL] line per criterion.
//   acceptance        run all nine
//   acceptance <k>    run criterion k only
// Exit status is 0 iff every criterion that ran passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "zdg/zdg.hpp"

using namespace zdg;

namespace {

// Time limits (seconds).
constexpr double kLimitBoolean = 10.0;
constexpr double kLimitFig3 = 5.0;
constexpr double kLimitCorpus = 60.0;
constexpr double kLimitApplications = 60.0;

constexpr std::uint64_t kJoinSeed = 2024;
constexpr std::size_t kJoinPairs = 30;
constexpr std::size_t kJoinLenMax = 3;
constexpr std::size_t kBruteSdimLimit = 14;
constexpr std::size_t kBruteDimLimit = 12;

struct Outcome {
  bool passed = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail.clear();
  o.passed = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += why;
}

std::string str(std::size_t x) { return std::to_string(x); }

Vertex by_label(const SimpleGraph& g, const std::string& label) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  throw Error(ErrorKind::InvalidArgument, "no vertex labelled " + label);
}

const std::vector<BlowUpSpec>& corpus() {
  static const auto specs = blowup_corpus(CorpusOptions{});
  return specs;
}

// Largest independent set by Bron-Kerbosch with pivoting on the complement
// graph, kept apart from the branch-and-bound in the library.
std::size_t independence_by_cliques(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> comp(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) comp[u][v] = u != v && !g.adjacent(u, v);
  std::size_t best = 0;
  std::function<void(std::size_t, std::vector<Vertex>, std::vector<Vertex>)> expand =
      [&](std::size_t size, std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty()) {
          if (x.empty()) best = std::max(best, size);
          return;
        }
        if (size + p.size() <= best) return;
        Vertex pivot = p.front();
        std::size_t pivot_deg = 0;
        for (auto cand : p) {
          std::size_t deg = 0;
          for (auto w : p) deg += comp[cand][w];
          if (deg >= pivot_deg) pivot = cand, pivot_deg = deg;
        }
        for (auto v : std::vector<Vertex>(p)) {
          if (comp[pivot][v]) continue;
          std::vector<Vertex> p2, x2;
          for (auto w : p)
            if (comp[v][w]) p2.push_back(w);
          for (auto w : x)
            if (comp[v][w]) x2.push_back(w);
          expand(size + 1, p2, x2);
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  expand(0, all, {});
  return best;
}

// 1. sdim(G^c(2^n)) = 2^n - 2^(n-1) - 1 for n = 3, 4, 5; brute force at n = 3.
Outcome boolean_corollary() {
  Outcome o;
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto gc = complement_zero_divisor_graph(boolean_lattice(n));
    const std::size_t want = (std::size_t{1} << n) - (std::size_t{1} << (n - 1)) - 1;
    const auto got = strong_metric_dimension(gc).sdim;
    o.detail += "n=" + str(n) + ":" + str(got) + " ";
    if (got != want) fail(o, "n=" + str(n) + " sdim " + str(got) + " != " + str(want));
    if (n == 3) {
      const auto brute = strong_metric_dimension_bruteforce(gc);
      if (gc.vertex_count() != 6 || brute != want) fail(o, "n=3 brute force " + str(brute));
    }
  }
  return o;
}

// 2. C2 x C2 x C2: W = atoms is strong resolving, sdim = 3, solver witness of size 3.
Outcome boolean_example() {
  Outcome o;
  const auto gc = complement_zero_divisor_graph(product_of_chains({2, 2, 2}));
  const std::vector<Vertex> w{by_label(gc, "(1,0,0)"), by_label(gc, "(0,1,0)"), by_label(gc, "(0,0,1)")};
  if (!is_strong_resolving_set(gc, w)) fail(o, "W does not strongly resolve");
  const auto r = strong_metric_dimension(gc);
  if (r.sdim != 3) fail(o, "sdim " + str(r.sdim));
  if (r.witness.size() != 3 || !is_strong_resolving_set(gc, r.witness)) fail(o, "solver witness invalid");
  if (strong_metric_dimension_bruteforce(gc) != 3) fail(o, "brute force disagrees");
  // the minimum is not unique
  const std::vector<Vertex> other{by_label(gc, "(1,0,0)"), by_label(gc, "(0,1,0)"), by_label(gc, "(1,1,0)")};
  if (o.passed)
    o.detail = "sdim=3, W valid, solver witness size 3; another minimum: {(1,0,0),(0,1,0),(1,1,0)} " +
               std::string(is_strong_resolving_set(gc, other) ? "also valid" : "invalid");
  return o;
}

// 3. Worked blow-up: |Z*| = 12, beta(SR) = 3, sdim = 9 three ways.
Outcome fig3() {
  Outcome o;
  const BlowUpSpec spec(3, {{0b001, 3}, {0b010, 1}, {0b100, 2}, {0b011, 2}, {0b101, 3}, {0b110, 1}});
  const auto bu = build_blowup(spec);
  const auto gc = complement_zero_divisor_graph(bu.lattice);
  const auto sr = strong_resolving_graph(gc);
  const std::size_t z = gc.vertex_count();
  const std::size_t beta = independence_number(sr.graph);
  const std::size_t formula = closed_form_sdim_blowup(spec);
  const std::size_t cover = strong_metric_dimension(gc).sdim;
  const std::size_t brute = strong_metric_dimension_bruteforce(gc);
  if (z != 12) fail(o, "|Z*| = " + str(z));
  if (beta != 3) fail(o, "beta(SR) = " + str(beta));
  if (formula != 12 - 4 + 1) fail(o, "formula " + str(formula));
  if (cover != 9) fail(o, "SR cover " + str(cover));
  if (brute != 9) fail(o, "brute force " + str(brute));
  if (o.passed) o.detail = "|Z*|=12 beta=3 formula=cover=brute=9";
  return o;
}

// 4. Closed-form SR graph equals the distance-based one on the corpus.
Outcome closed_form_sr() {
  Outcome o;
  std::size_t mismatches = 0;
  for (const auto& spec : corpus()) {
    const auto bu = build_blowup(spec);
    const auto gc = complement_zero_divisor_graph(bu.lattice);
    const auto closed = blowup_sr_closed_form(bu);
    const auto dist = strong_resolving_graph(gc);
    if (closed.vertices != dist.vertices || closed.base_edges() != dist.base_edges()) {
      ++mismatches;
      fail(o, spec_key(spec));
    }
  }
  o.detail = str(corpus().size()) + " specs, " + str(mismatches) + " mismatches" + (o.passed ? "" : ": " + o.detail);
  return o;
}

// 5. SR(G^c v K_t) = SR(G^c) + K_t, edge for edge over V(G^c v K_t).
Outcome join_decomposition() {
  Outcome o;
  std::mt19937_64 rng(kJoinSeed);
  std::size_t mismatches = 0, unit_clique_pairs = 0;
  for (std::size_t i = 0; i < kJoinPairs; ++i) {
    const auto spec = random_blowup_spec(3, kJoinLenMax, rng);
    const std::size_t t = 1 + i % 3;
    const auto gc = complement_zero_divisor_graph(build_blowup(spec).lattice);
    const std::size_t m = gc.vertex_count();
    const auto joined = join_complete(gc, t);
    const auto lhs = strong_resolving_graph(joined);

    // right side: SR(G^c) on its own vertices, disjoint K_t on the new ones
    SimpleGraph rhs(m + t);
    for (auto [u, v] : strong_resolving_graph(gc).base_edges()) rhs.add_edge(u, v);
    for (Vertex a = m; a < m + t; ++a)
      for (Vertex b = a + 1; b < m + t; ++b) rhs.add_edge(a, b);
    SimpleGraph lhs_full(m + t);
    for (auto [u, v] : lhs.base_edges()) lhs_full.add_edge(u, v);

    if (lhs_full.edges() != rhs.edges()) {
      ++mismatches;
      fail(o, spec_key(spec) + " t=" + str(t));
    }
    // the assembled SR graph from the library must agree as well
    const auto assembled = sr_of_join_decomposition(build_blowup(spec).lattice, t);
    if (assembled.base_edges() != lhs.base_edges()) fail(o, "library assembly differs at " + spec_key(spec));
    if (t == 1) ++unit_clique_pairs;
  }
  o.detail = str(kJoinPairs) + " pairs, " + str(mismatches) + " mismatches (" + str(unit_clique_pairs) +
             " with t=1, where K_1 is an isolated SR vertex)" + (o.passed ? "" : ": " + o.detail);
  return o;
}

// 6. Closed form = alpha(SR) on the corpus, and = brute force when |Z*| <= 14.
Outcome sdim_formula() {
  Outcome o;
  std::size_t brute_checked = 0;
  for (const auto& spec : corpus()) {
    const auto gc = complement_zero_divisor_graph(build_blowup(spec).lattice);
    const auto formula = closed_form_sdim_blowup(spec);
    const auto alpha = vertex_cover_number(strong_resolving_graph(gc).graph);
    if (alpha != formula) fail(o, spec_key(spec) + ": alpha " + str(alpha) + " formula " + str(formula));
    if (gc.vertex_count() <= kBruteSdimLimit) {
      ++brute_checked;
      const auto brute = strong_metric_dimension_bruteforce(gc, kBruteSdimLimit);
      if (brute != formula) fail(o, spec_key(spec) + ": brute " + str(brute));
    }
  }
  if (o.passed) o.detail = str(corpus().size()) + " specs, " + str(brute_checked) + " also by brute force";
  return o;
}

// 7. Structural suite on every corpus blow-up.
Outcome structural() {
  Outcome o;
  std::uint32_t max_diam = 0;
  for (const auto& spec : corpus()) {
    const BlowUpCase c(spec);
    for (const auto& r : {check_structure(c), check_connectivity(c)})
      if (!r.passed) fail(o, spec_key(spec) + " " + r.clause + ": " + r.detail);
    std::uint32_t d = 0;
    const auto diam = check_sr_diameter(c, &d);
    if (!diam.passed) fail(o, spec_key(spec) + " sr_diameter: " + diam.detail);
    max_diam = std::max(max_diam, d);
    // Gallai: solver cover plus an independently found maximum independent set
    const auto rep = strong_metric_dimension(c.gc);
    const auto beta = independence_by_cliques(c.sr.graph);
    Bitset cover = from_indices(c.gc.vertex_count(), rep.witness);
    for (auto [u, v] : c.sr.base_edges())
      if (!cover.test(u) && !cover.test(v)) fail(o, spec_key(spec) + ": witness misses an SR edge");
    if (rep.witness.size() + beta != c.sr.graph.vertex_count()) fail(o, spec_key(spec) + ": alpha + beta != |V(SR)|");
  }
  if (o.passed) o.detail = str(corpus().size()) + " blow-ups, max diam(SR) " + str(max_diam);
  return o;
}

// 8. Application values against their closed forms.
Outcome applications() {
  Outcome o;
  auto expect = [&](const std::string& name, std::size_t got, std::size_t want, std::size_t closed) {
    o.detail += name + "=" + str(got) + " ";
    if (got != want || got != closed) fail(o, name + ": got " + str(got) + ", want " + str(want) + ", closed form " + str(closed));
  };
  auto reduced_closed = [](const std::vector<std::size_t>& q) {
    std::size_t all = 1, units = 1;
    for (auto x : q) all *= x, units *= x - 1;
    return (all - units - 1) - (std::size_t{1} << (q.size() - 1)) + 1;
  };
  for (const auto& [q, want] : std::vector<std::pair<std::vector<std::size_t>, std::size_t>>{
           {{2, 2, 2}, 3}, {{3, 3, 3}, 15}, {{2, 2, 2, 2}, 7}}) {
    const auto r = reduced_ring_graphs({q});
    expect("reduced q=" + detail::csv(q), r.report.sdim, want, reduced_closed(q));
  }
  {
    // |V| = prod(n_i + 2) - 2 ideals, closed form |V| - 2^(k-1)
    const auto inst = intersection_instance({{1, 1}});
    expect("pir n=1,1", strong_metric_dimension_bruteforce(inst.graph), 5, (3 * 3 - 2) - 2);
  }
  {
    // q^n - 1 - 2^(n-1)
    const auto small = vector_space_instance({3, 2});
    expect("vspace n=3 q=2", strong_metric_dimension_bruteforce(small.graph), 3, 8 - 1 - 4);
    expect("vspace n=3 q=3", component_graph({3, 3}).report.sdim, 22, 27 - 1 - 4);
  }
  return o;
}

// 9. dim <= sdim, and |V| <= 2^dim for diameter-2 graphs, on corpus graphs with |V| <= 12.
Outcome dimension_bounds() {
  Outcome o;
  std::size_t graphs = 0, order_violations = 0, bound_violations = 0, corrected_violations = 0;
  std::string first_bound_violation;
  for (const auto& spec : corpus()) {
    const auto gc = complement_zero_divisor_graph(build_blowup(spec).lattice);
    if (gc.vertex_count() > kBruteDimLimit || !is_connected(gc)) continue;
    ++graphs;
    const auto dim = metric_dimension_bruteforce(gc, kBruteDimLimit);
    const auto sdim = strong_metric_dimension_bruteforce(gc, kBruteDimLimit);
    if (dim > sdim) ++order_violations;
    if (diameter(gc) == 2u) {
      const std::size_t cap = std::size_t{1} << dim;
      if (gc.vertex_count() > cap) {
        if (!bound_violations)
          first_bound_violation = spec_key(spec) + " |V|=" + str(gc.vertex_count()) + " dim=" + str(dim);
        ++bound_violations;
      }
      if (gc.vertex_count() - dim > cap) ++corrected_violations;
    }
  }
  o.detail = str(graphs) + " graphs; dim<=sdim violations " + str(order_violations) + "; |V|<=2^dim violations " +
             str(bound_violations);
  if (bound_violations) o.detail += " (first: " + first_bound_violation + ")";
  o.detail += "; |V|-dim<=2^dim violations " + str(corrected_violations);
  o.passed = graphs > 0 && order_violations == 0 && bound_violations == 0;
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
  double limit_seconds;  // 0 = none
};

const Criterion kCriteria[] = {
    {"boolean corollary n=3,4,5", boolean_corollary, kLimitBoolean},
    {"C2^3 example", boolean_example, 0},
    {"worked blow-up", fig3, kLimitFig3},
    {"closed-form SR graph", closed_form_sr, kLimitCorpus},
    {"join decomposition", join_decomposition, 0},
    {"sdim formula", sdim_formula, 0},
    {"structural suite", structural, 0},
    {"applications", applications, kLimitApplications},
    {"dim/sdim bounds", dimension_bounds, 0},
};

bool run_one(std::size_t k) {
  const auto& c = kCriteria[k - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
    o.passed = false;
    o.detail += "; over time limit";
  }
  char timing[64];
  if (c.limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_seconds);
  else
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::printf("[%s] criterion %zu (%s): %s [%s]\n", o.passed ? "PASS" : "FAIL", k, c.name, o.detail.c_str(), timing);
  std::fflush(stdout);
  return o.passed;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr std::size_t count = std::size(kCriteria);
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], count);
    return 2;
  }
  if (argc == 2) {
    char* end = nullptr;
    const unsigned long k = std::strtoul(argv[1], &end, 10);
    if (*end || k < 1 || k > count) {
      std::fprintf(stderr, "criterion must be 1-%zu\n", count);
      return 2;
    }
    return run_one(k) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t k = 1; k <= count; ++k) all = run_one(k) && all;
  return all ? 0 : 1;
}
