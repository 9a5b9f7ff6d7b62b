#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/applications.hpp"
#include "zdg/blowup.hpp"
#include "zdg/solvers.hpp"
#include "zdg/strong_resolving.hpp"
#include "zdg/zerodiv.hpp"

namespace zdg {

// ---- corpus ----

/// Compact key: chain lengths in canonical subset order.
inline std::string spec_key(const BlowUpSpec& spec) {
  std::string out = "n=" + std::to_string(spec.n()) + " len=";
  bool first = true;
  for (auto s : spec.proper_subsets()) {
    if (!first) out += ',';
    out += std::to_string(spec.length(s));
    first = false;
  }
  return out;
}

inline BlowUpSpec random_blowup_spec(std::size_t n, std::size_t len_max, std::mt19937_64& rng) {
  BlowUpSpec spec(n);
  for (auto s : spec.proper_subsets()) spec.set_length(s, rng() % len_max + 1);
  return spec;
}

/// Every spec on 2^n with chain lengths in [1, len_max], odometer order.
inline std::vector<BlowUpSpec> all_blowup_specs(std::size_t n, std::size_t len_max) {
  BlowUpSpec spec(n);
  const auto subsets = spec.proper_subsets();
  std::vector<BlowUpSpec> out;
  std::vector<std::size_t> digits(subsets.size(), 1);
  while (true) {
    for (std::size_t i = 0; i < subsets.size(); ++i) spec.set_length(subsets[i], digits[i]);
    out.push_back(spec);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == len_max) digits[i++] = 1;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return out;
}

/// Up to `count` distinct random specs, in draw order.
inline std::vector<BlowUpSpec> sampled_blowup_specs(std::size_t n, std::size_t len_max, std::size_t count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  std::vector<BlowUpSpec> out;
  for (std::size_t attempts = 0; out.size() < count && attempts < 50 * count; ++attempts) {
    auto spec = random_blowup_spec(n, len_max, rng);
    if (seen.insert(spec_key(spec)).second) out.push_back(std::move(spec));
  }
  return out;
}

struct CorpusOptions {
  std::size_t n_min = 3;
  std::size_t n_max = 4;
  std::size_t len_max = 2;
  std::uint64_t seed = 7;
  /// Sizes with at most this many specs are enumerated outright.
  std::size_t exhaustive_limit = 64;
  std::size_t samples = 100;
};

/// For each n: all specs when there are few enough, else a seeded sample.
inline std::vector<BlowUpSpec> blowup_corpus(const CorpusOptions& opt) {
  std::vector<BlowUpSpec> out;
  for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
    const std::size_t slots = (std::size_t{1} << n) - 2;
    double total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= static_cast<double>(opt.len_max);
    auto part = total <= static_cast<double>(opt.exhaustive_limit)
                    ? all_blowup_specs(n, opt.len_max)
                    : sampled_blowup_specs(n, opt.len_max, opt.samples, opt.seed + n);
    for (auto& s : part) out.push_back(std::move(s));
  }
  return out;
}

// ---- checks ----

struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::string detail;
};

enum class Fault { none, sr_closed_form };

/// Everything a clause needs about one blow-up, computed once.
struct BlowUpCase {
  BlowUp blowup;
  SimpleGraph gc;
  DistanceMatrix distances;
  SRGraph sr;

  explicit BlowUpCase(const BlowUpSpec& spec)
      : blowup(build_blowup(spec)),
        gc(complement_zero_divisor_graph(blowup.lattice)),
        distances(gc),
        sr(strong_resolving_graph(gc, distances)) {}
};

namespace detail {

inline ClauseResult guarded(std::string name, const std::function<std::string()>& body) {
  ClauseResult r{std::move(name), true, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

inline std::string first_edge_difference(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count())
    return "vertex counts " + std::to_string(a.vertex_count()) + " vs " + std::to_string(b.vertex_count());
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v = u + 1; v < a.vertex_count(); ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v))
        return "edge " + a.label(u) + " -- " + a.label(v) + (a.adjacent(u, v) ? " only in first" : " only in second");
  return {};
}

}  // namespace detail

/// Lattice axioms, atomicity, 0-distributivity and the structure clauses
/// (pseudocomplements, quotients, coatoms).
inline ClauseResult check_structure(const BlowUpCase& c) {
  return detail::guarded("structure", [&]() -> std::string {
    const auto& L = c.blowup.lattice;
    L.validate();
    if (!is_atomic(L)) return "not atomic";
    if (!is_zero_distributive(L)) return "not 0-distributive";
    verify_blowup_structure(c.blowup);
    return {};
  });
}

/// G^c(L^B) connected with diameter 2.
inline ClauseResult check_connectivity(const BlowUpCase& c) {
  return detail::guarded("connectivity", [&]() -> std::string {
    const auto rep = check_connectivity_theorem(c.blowup.lattice);
    if (!rep.connected) return "G^c disconnected";
    if (rep.diameter != 2) return "diam(G^c) = " + std::to_string(rep.diameter.value_or(0));
    return {};
  });
}

/// Distance-based SR graph equals the class/meet rule, with every vertex on the boundary.
inline ClauseResult check_sr_closed_form(const BlowUpCase& c, Fault fault = Fault::none) {
  return detail::guarded("sr_closed_form", [&]() -> std::string {
    auto closed = blowup_sr_closed_form(c.blowup);
    if (fault == Fault::sr_closed_form && closed.graph.vertex_count() >= 2) {
      if (closed.graph.adjacent(0, 1))
        closed.graph.remove_edge(0, 1);
      else
        closed.graph.add_edge(0, 1);
    }
    if (c.sr.vertices.size() != c.gc.vertex_count())
      return "boundary has " + std::to_string(c.sr.vertices.size()) + " of " + std::to_string(c.gc.vertex_count()) +
             " vertices";
    return detail::first_edge_difference(c.sr.graph, closed.graph);
  });
}

/// With all chains of length 1, G^c(L)_SR is G(L) itself.
inline ClauseResult check_boolean_sr(const BlowUpCase& c) {
  return detail::guarded("boolean_sr_equals_g", [&]() -> std::string {
    return detail::first_edge_difference(c.sr.graph, zero_divisor_graph(c.blowup.lattice));
  });
}

/// SR(G^c v K_t) equals SR(G^c) + K_t.
inline ClauseResult check_join_decomposition(const BlowUpCase& c, std::size_t t) {
  return detail::guarded("join_decomposition", [&]() -> std::string {
    const auto joined = strong_resolving_graph(join_complete(c.gc, t));
    const auto assembled = sr_of_join_decomposition(c.blowup.lattice, t);
    if (joined.vertices != assembled.vertices) return "t=" + std::to_string(t) + ": boundaries differ";
    const auto diff = detail::first_edge_difference(joined.graph, assembled.graph);
    return diff.empty() ? diff : "t=" + std::to_string(t) + ": " + diff;
  });
}

/// beta(SR) = 2^(n-1) - 1, and the chain bottoms of subsets containing the
/// first atom form an independent set of that size.
inline ClauseResult check_independence_number(const BlowUpCase& c) {
  return detail::guarded("independence_number", [&]() -> std::string {
    const std::size_t n = c.blowup.spec.n();
    const std::size_t want = (std::size_t{1} << (n - 1)) - 1;
    const std::size_t beta = independence_number(c.sr.graph);
    if (beta != want) return "beta(SR) = " + std::to_string(beta) + ", expected " + std::to_string(want);
    const auto z = zero_divisors(c.blowup.lattice);
    std::vector<Vertex> first;
    for (Vertex v = 0; v < z.size(); ++v) {
      const auto& e = c.blowup.elements[z[v]];
      if (!(e.subset & 1u) || e.level != 1) continue;
      const auto it = std::lower_bound(c.sr.vertices.begin(), c.sr.vertices.end(), v);
      if (it == c.sr.vertices.end() || *it != v) return "vertex " + c.gc.label(v) + " is off the boundary";
      first.push_back(static_cast<Vertex>(it - c.sr.vertices.begin()));
    }
    if (first.size() != want) return "first-atom witness has " + std::to_string(first.size()) + " vertices";
    for (std::size_t i = 0; i < first.size(); ++i)
      for (std::size_t j = i + 1; j < first.size(); ++j)
        if (c.sr.graph.adjacent(first[i], first[j])) return "first-atom witness is not independent";
    return {};
  });
}

/// alpha + beta = |V| on the SR graph.
inline ClauseResult check_gallai(const BlowUpCase& c) {
  return detail::guarded("gallai", [&]() -> std::string {
    const auto mis = max_independent_set(c.sr.graph);
    const auto cover = vertex_cover_number(c.sr.graph);
    if (mis.size() + cover != c.sr.graph.vertex_count()) return "alpha + beta != |V(SR)|";
    for (std::size_t i = 0; i < mis.size(); ++i)
      for (std::size_t j = i + 1; j < mis.size(); ++j)
        if (c.sr.graph.adjacent(mis[i], mis[j])) return "returned set is not independent";
    return {};
  });
}

/// SR connected with diameter at most 3; `observed` receives the diameter.
inline ClauseResult check_sr_diameter(const BlowUpCase& c, std::uint32_t* observed = nullptr) {
  return detail::guarded("sr_diameter", [&]() -> std::string {
    const auto d = diameter(c.sr.graph);
    if (!d) return "SR graph disconnected";
    if (observed) *observed = *d;
    if (*d > 3) return "diam(SR) = " + std::to_string(*d);
    return {};
  });
}

/// Closed form = alpha(SR), and = brute force when |Z*| <= brute_limit.
inline ClauseResult check_sdim_formula(const BlowUpCase& c, std::size_t brute_limit = 14) {
  return detail::guarded("sdim_formula", [&]() -> std::string {
    const auto formula = closed_form_sdim_blowup(c.blowup.spec);
    const auto rep = strong_metric_dimension(c.gc);
    if (rep.sdim != formula)
      return "alpha(SR) = " + std::to_string(rep.sdim) + ", closed form " + std::to_string(formula);
    if (c.gc.vertex_count() <= brute_limit) {
      const auto brute = strong_metric_dimension_bruteforce(c.gc, brute_limit);
      if (brute != formula) return "brute force = " + std::to_string(brute) + ", closed form " + std::to_string(formula);
    }
    return {};
  });
}

// ---- runner ----

enum class Suite { lemmas, formulas, all };

struct VerifyOptions {
  Suite suite = Suite::all;
  CorpusOptions corpus;
  std::size_t brute_limit = 14;
  Fault fault = Fault::none;
};

struct CaseResult {
  std::size_t index = 0;
  std::string spec;
  std::vector<ClauseResult> clauses;

  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
  }
};

struct VerifyReport {
  std::vector<CaseResult> cases;
  std::uint32_t max_sr_diameter = 0;

  bool passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed(); });
  }
};

inline bool all_unit_chains(const BlowUpSpec& spec) {
  const auto subsets = spec.proper_subsets();
  return std::all_of(subsets.begin(), subsets.end(), [&](SubsetMask s) { return spec.length(s) == 1; });
}

inline CaseResult verify_blowup_case(const BlowUpSpec& spec, std::size_t index, const VerifyOptions& opt,
                                     std::uint32_t* sr_diameter = nullptr) {
  CaseResult out;
  out.index = index;
  out.spec = spec_key(spec);
  std::optional<BlowUpCase> c;
  try {
    c.emplace(spec);
  } catch (const std::exception& e) {
    out.clauses.push_back({"build", false, e.what()});
    return out;
  }
  const bool lemmas = opt.suite != Suite::formulas;
  const bool formulas = opt.suite != Suite::lemmas;
  if (lemmas) {
    out.clauses.push_back(check_structure(*c));
    out.clauses.push_back(check_connectivity(*c));
    out.clauses.push_back(check_sr_closed_form(*c, opt.fault));
    if (all_unit_chains(spec)) out.clauses.push_back(check_boolean_sr(*c));
    out.clauses.push_back(check_join_decomposition(*c, 1 + index % 3));
    out.clauses.push_back(check_independence_number(*c));
    out.clauses.push_back(check_gallai(*c));
    out.clauses.push_back(check_sr_diameter(*c, sr_diameter));
  }
  if (formulas) out.clauses.push_back(check_sdim_formula(*c, opt.brute_limit));
  return out;
}

/// Application instances whose closed forms are checked by the formula suite.
inline std::vector<ClauseResult> verify_applications() {
  std::vector<ClauseResult> out;
  auto run = [&](std::string name, const std::function<ApplicationResult()>& f) {
    out.push_back(detail::guarded(std::move(name), [&]() -> std::string {
      const auto r = f();
      return r.report.sdim == r.formula_sdim ? std::string{} : "formula mismatch";
    }));
  };
  run("reduced q=2,2,2", [] { return reduced_ring_graphs({{2, 2, 2}}); });
  run("reduced q=3,3,3", [] { return reduced_ring_graphs({{3, 3, 3}}); });
  run("reduced q=2,2,2,2", [] { return reduced_ring_graphs({{2, 2, 2, 2}}); });
  run("pir n=1,1", [] { return intersection_graph({{1, 1}}); });
  run("pir n=1,1,1", [] { return intersection_graph({{1, 1, 1}}); });
  run("fields k=3", [] { return intersection_graph_fields(3); });
  run("vspace n=3 q=2", [] { return component_graph({3, 2}); });
  run("vspace n=3 q=3", [] { return component_graph({3, 3}); });
  run("vspace n=4 q=2", [] { return component_graph({4, 2}); });
  out.push_back(detail::guarded("vspace n=3 q=2 skeleton", []() -> std::string {
    return skeleton_model_matches({3, 2}) ? std::string{} : "vector enumeration disagrees with blow-up model";
  }));
  for (auto q : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 3}, {3, 2, 2}}) {
    out.push_back(detail::guarded("blow-up equivalence q=" + detail::csv(q), [&]() -> std::string {
      blowup_equivalence_check({q});
      return {};
    }));
  }
  return out;
}

struct VerifyOutput {
  VerifyReport corpus;
  std::vector<ClauseResult> applications;

  bool passed() const {
    return corpus.passed() &&
           std::all_of(applications.begin(), applications.end(), [](const ClauseResult& c) { return c.passed; });
  }
};

inline VerifyOutput run_verification(const VerifyOptions& opt) {
  VerifyOutput out;
  const auto specs = blowup_corpus(opt.corpus);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    std::uint32_t d = 0;
    out.corpus.cases.push_back(verify_blowup_case(specs[i], i, opt, &d));
    out.corpus.max_sr_diameter = std::max(out.corpus.max_sr_diameter, d);
  }
  if (opt.suite != Suite::lemmas) out.applications = verify_applications();
  return out;
}

/// Deterministic text: one line per case, failures expanded, then totals.
inline std::string format_verification(const VerifyOutput& out) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : out.corpus.cases) {
    os << "case " << c.index << " " << c.spec << " " << (c.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& cl : c.clauses)
      if (!cl.passed) os << "  FAIL " << cl.clause << ": " << cl.detail << "\n";
    failed += !c.passed();
  }
  for (const auto& a : out.applications) {
    os << "application " << a.clause << " " << (a.passed ? "PASS" : "FAIL");
    if (!a.passed) os << ": " << a.detail;
    os << "\n";
    failed += !a.passed;
  }
  os << "cases " << out.corpus.cases.size() << ", applications " << out.applications.size() << ", failed " << failed
     << ", max diam(SR) " << out.corpus.max_sr_diameter << "\n";
  os << (out.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace zdg
