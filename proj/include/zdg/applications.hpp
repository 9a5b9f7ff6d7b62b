#pragma once

#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zdg/blowup.hpp"
#include "zdg/lattice.hpp"
#include "zdg/solvers.hpp"
#include "zdg/strong_resolving.hpp"
#include "zdg/text.hpp"
#include "zdg/zerodiv.hpp"

namespace zdg {

/// R = F_1 x ... x F_n given by field sizes.
struct ReducedRingSpec {
  std::vector<std::size_t> field_sizes;
};

/// R = R_1 x ... x R_k with each R_i a local PIR. Entry i counts the nonzero
/// proper ideals of R_i, so Id(R_i) is a chain with that many plus two elements.
struct PIRSpec {
  std::vector<std::size_t> proper_ideal_counts;
};

struct VectorSpaceSpec {
  std::size_t dimension = 0;
  std::size_t field_size = 0;
};

/// One application instance before solving: the underlying lattice, its
/// zero-divisor graph, the application graph and the closed-form sdim.
struct ApplicationInstance {
  std::string name;
  std::optional<FiniteLattice> lattice;
  SimpleGraph zero_divisor;
  SimpleGraph graph;
  std::size_t join_size = 0;
  std::size_t formula_sdim = 0;
  std::vector<std::string> notes;
};

struct ApplicationResult : ApplicationInstance {
  DimensionReport report;
};

namespace detail {

inline std::string csv(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

inline void require_formula(const std::string& what, std::size_t solver, std::size_t formula) {
  if (solver != formula)
    throw Error(ErrorKind::FormulaMismatch, what + ": solver gives " + std::to_string(solver) + ", closed form " +
                                                std::to_string(formula));
}

inline ApplicationResult solve(ApplicationInstance inst) {
  ApplicationResult r;
  static_cast<ApplicationInstance&>(r) = std::move(inst);
  r.report = strong_metric_dimension(r.graph, r.name);
  require_formula(r.name, r.report.sdim, r.formula_sdim);
  return r;
}

inline std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline void check_field_sizes(const ReducedRingSpec& spec) {
  if (spec.field_sizes.empty()) throw Error(ErrorKind::EmptyInput, "no field sizes");
  for (auto q : spec.field_sizes)
    if (q < 2) throw Error(ErrorKind::InvalidArgument, "field sizes must be >= 2");
}

// Mask of the atoms below x, atoms numbered in ascending element order.
inline std::uint64_t atom_mask(const FiniteLattice& L, const std::vector<Element>& atom_list, Element x) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < atom_list.size(); ++i)
    if (L.leq(atom_list[i], x)) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace detail

/// |Z*(R)| = prod q_i - prod (q_i - 1) - 1.
inline std::size_t reduced_ring_zero_divisor_count(const ReducedRingSpec& spec) {
  std::size_t all = 1, units = 1;
  for (auto q : spec.field_sizes) {
    all *= q;
    units *= q - 1;
  }
  return all - units - 1;
}

/// Zero-divisor graph of a reduced ring through the product of chains
/// C_{q_1} x ... x C_{q_n}, with sdim of the complement checked against
/// |Z*(R)| - 2^(n-1) + 1.
inline ApplicationInstance reduced_ring_instance(const ReducedRingSpec& spec) {
  detail::check_field_sizes(spec);
  const std::size_t n = spec.field_sizes.size();
  if (n < 3) throw Error(ErrorKind::PreconditionFailed, "the sdim formula needs at least three factors");
  ApplicationInstance r;
  r.name = "reduced q=" + detail::csv(spec.field_sizes);
  r.lattice = product_of_chains(spec.field_sizes);
  r.zero_divisor = zero_divisor_graph(*r.lattice);
  r.graph = complement(r.zero_divisor);
  const auto z = reduced_ring_zero_divisor_count(spec);
  if (r.graph.vertex_count() != z)
    throw Error(ErrorKind::FormulaMismatch, "constructed graph has " + std::to_string(r.graph.vertex_count()) +
                                                " vertices, expected |Z*(R)| = " + std::to_string(z));
  r.formula_sdim = z - (std::size_t{1} << (n - 1)) + 1;
  return r;
}

inline ApplicationResult reduced_ring_graphs(const ReducedRingSpec& spec) {
  return detail::solve(reduced_ring_instance(spec));
}

/// Outcome of matching G(C_{q_1} x ... x C_{q_n}) against the zero-divisor
/// graph of the blow-up with chain lengths prod_{i in S} (q_i - 1).
struct EquivalenceReport {
  BlowUpSpec blowup_spec{2};
  /// Annihilator class (as mask of atoms below) -> number of zero-divisors.
  std::map<std::uint64_t, std::size_t> class_sizes;
  /// Pairs of classes whose members meet to zero.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> class_edges;
  /// Vertex i of G(product) corresponds to vertex vertex_map[i] of G(L^B).
  std::vector<Vertex> vertex_map;
};

inline BlowUpSpec blowup_spec_for_reduced_ring(const ReducedRingSpec& spec) {
  detail::check_field_sizes(spec);
  const std::size_t n = spec.field_sizes.size();
  if (n < 2) throw Error(ErrorKind::PreconditionFailed, "need at least two factors");
  BlowUpSpec b(n);
  for (auto s : b.proper_subsets()) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) len *= spec.field_sizes[i] - 1;
    b.set_length(s, len);
  }
  return b;
}

inline EquivalenceReport blowup_equivalence_check(const ReducedRingSpec& spec) {
  EquivalenceReport rep;
  rep.blowup_spec = blowup_spec_for_reduced_ring(spec);
  const auto prod = product_of_chains(spec.field_sizes);
  const auto bu = build_blowup(rep.blowup_spec);

  struct Side {
    std::vector<Element> z;
    std::vector<std::uint64_t> mask;
    std::map<std::uint64_t, std::size_t> sizes;
    std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  };
  auto summarize = [](const FiniteLattice& L) {
    Side s;
    const auto at = atoms(L);
    s.z = zero_divisors(L);
    for (auto x : s.z) {
      s.mask.push_back(detail::atom_mask(L, at, x));
      ++s.sizes[s.mask.back()];
    }
    for (std::size_t i = 0; i < s.z.size(); ++i)
      for (std::size_t j = i + 1; j < s.z.size(); ++j)
        if (L.meet(s.z[i], s.z[j]) == L.bottom())
          s.edges.emplace(std::min(s.mask[i], s.mask[j]), std::max(s.mask[i], s.mask[j]));
    return s;
  };
  const Side a = summarize(prod);
  const Side b = summarize(bu.lattice);
  if (a.sizes != b.sizes) throw Error(ErrorKind::SignatureMismatch, "annihilator class sizes differ");
  if (a.edges != b.edges) throw Error(ErrorKind::SignatureMismatch, "class-level adjacency differs");

  // Pair the k-th member of each class on both sides, then compare every edge.
  std::map<std::uint64_t, std::vector<Vertex>> members;
  for (Vertex v = 0; v < b.z.size(); ++v) members[b.mask[v]].push_back(v);
  std::map<std::uint64_t, std::size_t> used;
  rep.vertex_map.resize(a.z.size());
  for (Vertex v = 0; v < a.z.size(); ++v) rep.vertex_map[v] = members[a.mask[v]][used[a.mask[v]]++];
  const auto ga = zero_divisor_graph(prod);
  const auto gb = zero_divisor_graph(bu.lattice);
  for (Vertex u = 0; u < a.z.size(); ++u)
    for (Vertex v = u + 1; v < a.z.size(); ++v)
      if (ga.adjacent(u, v) != gb.adjacent(rep.vertex_map[u], rep.vertex_map[v]))
        throw Error(ErrorKind::SignatureMismatch, "vertex bijection breaks at " + ga.label(u) + ", " + ga.label(v));

  rep.class_sizes = a.sizes;
  rep.class_edges.assign(a.edges.begin(), a.edges.end());
  return rep;
}

/// G^c(L^B) for the given chain lengths, n >= 3.
inline ApplicationInstance blowup_instance(const BlowUpSpec& spec, std::string name = "blowup") {
  if (spec.n() < 3) throw Error(ErrorKind::PreconditionFailed, "the sdim formula needs n >= 3");
  auto bu = build_blowup(spec);
  ApplicationInstance r;
  r.name = std::move(name);
  r.zero_divisor = zero_divisor_graph(bu.lattice);
  r.graph = complement(r.zero_divisor);
  r.lattice = std::move(bu.lattice);
  r.formula_sdim = r.graph.vertex_count() - (std::size_t{1} << (spec.n() - 1)) + 1;
  return r;
}

/// Total graph of a ring modelled as G^c(L^B) for the given blow-up data.
inline ApplicationResult total_graph(const BlowUpSpec& spec) { return detail::solve(blowup_instance(spec, "total")); }

/// Complement of the maximal graph; the same graph as total_graph.
inline ApplicationResult maximal_graph(const BlowUpSpec& spec) {
  return detail::solve(blowup_instance(spec, "maximal"));
}

namespace detail {

// Vertices: the nonzero proper elements, zero-divisors first; edge iff meet != 0.
inline SimpleGraph nonzero_meet_graph(const FiniteLattice& L, std::size_t& zero_divisor_count) {
  const auto z = zero_divisors(L);
  zero_divisor_count = z.size();
  std::vector<Element> order = z;
  Bitset in_z = from_indices(L.size(), z);
  for (Element x = 0; x < L.size(); ++x)
    if (x != L.bottom() && x != L.top() && !in_z.test(x)) order.push_back(x);
  std::vector<std::string> labels;
  for (auto x : order) labels.push_back(L.label(x));
  SimpleGraph g(order.size(), std::move(labels));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (L.meet(order[i], order[j]) != L.bottom()) g.add_edge(i, j);
  return g;
}

inline ApplicationInstance ideal_intersection_graph(FiniteLattice id, std::string name, std::size_t factors) {
  ApplicationInstance r;
  r.name = std::move(name);
  std::size_t zcount = 0;
  r.graph = nonzero_meet_graph(id, zcount);
  r.join_size = r.graph.vertex_count() - zcount;
  r.zero_divisor = zero_divisor_graph(id);
  const auto gc = complement(r.zero_divisor);
  const auto expected = r.join_size ? join_complete(gc, r.join_size) : gc;
  if (!r.graph.same_structure(expected))
    throw Error(ErrorKind::TheoremViolated, "intersection graph differs from G^c(Id) joined with K_t");
  if (!is_connected(r.graph)) throw Error(ErrorKind::Disconnected, r.name + ": intersection graph is disconnected");
  r.lattice = std::move(id);
  r.formula_sdim = r.graph.vertex_count() - (std::size_t{1} << (factors - 1)) + (r.join_size == 0 ? 1 : 0);
  return r;
}

}  // namespace detail

/// t predicted by prod (n_i + 1) - 1.
inline std::size_t pir_predicted_join_size(const PIRSpec& spec) {
  std::size_t p = 1;
  for (auto c : spec.proper_ideal_counts) p *= c + 1;
  return p - 1;
}

/// Intersection graph of ideals of a product of local PIRs (none a field).
/// t is read off the lattice; a disagreement with the count formula is noted.
inline ApplicationInstance intersection_instance(const PIRSpec& spec) {
  const auto& c = spec.proper_ideal_counts;
  if (c.size() < 2) throw Error(ErrorKind::PreconditionFailed, "need at least two factors");
  std::vector<std::size_t> lengths;
  for (auto ni : c) {
    if (ni < 1) throw Error(ErrorKind::InvalidArgument, "every factor needs a nonzero proper ideal");
    lengths.push_back(ni + 2);
  }
  auto r = detail::ideal_intersection_graph(product_of_chains(lengths), "pir n=" + detail::csv(c), c.size());
  const auto predicted = pir_predicted_join_size(spec);
  if (predicted != r.join_size)
    r.notes.push_back("t from lattice = " + std::to_string(r.join_size) + ", count formula gives " +
                      std::to_string(predicted));
  return r;
}

inline ApplicationResult intersection_graph(const PIRSpec& spec) { return detail::solve(intersection_instance(spec)); }

/// Intersection graph of ideals of a product of k fields: G^c(2^k).
inline ApplicationInstance fields_instance(std::size_t k) {
  if (k < 2) throw Error(ErrorKind::PreconditionFailed, "need at least two factors");
  return detail::ideal_intersection_graph(boolean_lattice(k), "fields k=" + std::to_string(k), k);
}

inline ApplicationResult intersection_graph_fields(std::size_t k) { return detail::solve(fields_instance(k)); }

inline BlowUpSpec blowup_spec_for_vector_space(const VectorSpaceSpec& spec) {
  if (spec.dimension < 3) throw Error(ErrorKind::PreconditionFailed, "component graph needs dimension >= 3");
  if (spec.field_size < 2) throw Error(ErrorKind::InvalidArgument, "field size must be >= 2");
  BlowUpSpec b(spec.dimension);
  for (auto s : b.proper_subsets())
    b.set_length(s, detail::pow_size(spec.field_size - 1, static_cast<std::size_t>(std::popcount(s))));
  return b;
}

/// Nonzero vectors of F_q^n, adjacent when their skeletons meet, built as
/// G^c(L^B) joined with K_{(q-1)^n}.
inline ApplicationInstance vector_space_instance(const VectorSpaceSpec& spec) {
  const auto bspec = blowup_spec_for_vector_space(spec);
  const std::size_t n = spec.dimension, q = spec.field_size;
  auto bu = build_blowup(bspec);
  ApplicationInstance r;
  r.name = "vspace n=" + std::to_string(n) + " q=" + std::to_string(q);
  r.zero_divisor = zero_divisor_graph(bu.lattice);
  r.join_size = detail::pow_size(q - 1, n);
  r.graph = join_complete(complement(r.zero_divisor), r.join_size);
  r.lattice = std::move(bu.lattice);
  const std::size_t nonzero = detail::pow_size(q, n) - 1;
  if (r.graph.vertex_count() != nonzero)
    throw Error(ErrorKind::FormulaMismatch, "component graph has " + std::to_string(r.graph.vertex_count()) +
                                                " vertices, expected q^n - 1 = " + std::to_string(nonzero));
  r.formula_sdim = nonzero - (std::size_t{1} << (n - 1));
  return r;
}

inline ApplicationResult component_graph(const VectorSpaceSpec& spec) {
  return detail::solve(vector_space_instance(spec));
}

inline constexpr std::size_t kVectorEnumerationLimit = 4096;

/// Component graph straight from coordinates: every nonzero vector in
/// {0..q-1}^n, adjacent iff their supports intersect. Field arithmetic is
/// never needed, only which coordinates are nonzero.
inline SimpleGraph component_graph_by_vectors(const VectorSpaceSpec& spec) {
  const std::size_t n = spec.dimension, q = spec.field_size;
  if (q < 2 || n == 0) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and q >= 2");
  const std::size_t total = detail::pow_size(q, n);
  if (total - 1 > kVectorEnumerationLimit) throw Error(ErrorKind::TooLarge, "too many vectors to enumerate");
  std::vector<std::uint64_t> support;
  std::vector<std::string> labels;
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<std::size_t> coords(n);
    std::uint64_t s = 0;
    for (std::size_t i = 0, c = code; i < n; ++i, c /= q) {
      coords[i] = c % q;
      if (coords[i]) s |= std::uint64_t{1} << i;
    }
    support.push_back(s);
    labels.push_back(detail::tuple_label(coords));
  }
  SimpleGraph g(support.size(), std::move(labels));
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (support[i] & support[j]) g.add_edge(i, j);
  return g;
}

/// Maps each vector to a blow-up vertex with the same support (full support
/// to the clique) and checks that adjacency agrees on every pair.
inline bool skeleton_model_matches(const VectorSpaceSpec& spec) {
  const auto direct = component_graph_by_vectors(spec);
  const auto bspec = blowup_spec_for_vector_space(spec);
  const auto bu = build_blowup(bspec);
  const auto z = zero_divisors(bu.lattice);
  const auto model = join_complete(complement(zero_divisor_graph(bu.lattice)), detail::pow_size(spec.field_size - 1, spec.dimension));

  std::map<std::uint64_t, std::vector<Vertex>> by_support;
  for (Vertex v = 0; v < z.size(); ++v) by_support[bu.elements[z[v]].subset].push_back(v);
  for (Vertex v = z.size(); v < model.vertex_count(); ++v) by_support[bspec.full_mask()].push_back(v);

  const std::size_t q = spec.field_size;
  std::map<std::uint64_t, std::size_t> used;
  std::vector<Vertex> image;
  for (std::size_t code = 1; code < detail::pow_size(q, spec.dimension); ++code) {
    std::uint64_t s = 0;
    for (std::size_t i = 0, c = code; i < spec.dimension; ++i, c /= q)
      if (c % q) s |= std::uint64_t{1} << i;
    auto& pool = by_support[s];
    if (used[s] >= pool.size()) return false;
    image.push_back(pool[used[s]++]);
  }
  if (image.size() != model.vertex_count()) return false;
  for (Vertex u = 0; u < image.size(); ++u)
    for (Vertex v = u + 1; v < image.size(); ++v)
      if (direct.adjacent(u, v) != model.adjacent(image[u], image[v])) return false;
  return true;
}

namespace detail {

// Collapses a spec file (comments stripped) or inline tokens into words,
// requiring `keyword` first.
inline std::vector<std::string> spec_words(const std::string& text, const std::string& keyword) {
  std::vector<std::string> words;
  std::istringstream lines(text);
  std::string raw;
  while (std::getline(lines, raw)) {
    std::istringstream in(raw.substr(0, raw.find('#')));
    std::string w;
    while (in >> w) words.push_back(w);
  }
  if (words.empty() || words.front() != keyword) throw ParseError(1, "expected `" + keyword + "` header");
  words.erase(words.begin());
  return words;
}

inline std::vector<std::size_t> parse_uint_list(const std::string& csv_text, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& part : split(csv_text, ',')) {
    auto v = parse_uint(part);
    if (!v) throw ParseError(1, "bad " + what + " entry `" + part + "`");
    out.push_back(*v);
  }
  return out;
}

}  // namespace detail

/// `reduced q=2,2,2`
inline ReducedRingSpec parse_reduced_spec(const std::string& text) {
  const auto words = detail::spec_words(text, "reduced");
  if (words.size() != 1 || !detail::keyed(words[0], "q")) throw ParseError(1, "expected `reduced q=<list>`");
  ReducedRingSpec spec{detail::parse_uint_list(*detail::keyed(words[0], "q"), "field size")};
  for (auto q : spec.field_sizes)
    if (q < 2) throw ParseError(1, "field sizes must be >= 2");
  return spec;
}

/// `pir n=1,1`
inline PIRSpec parse_pir_spec(const std::string& text) {
  const auto words = detail::spec_words(text, "pir");
  if (words.size() != 1 || !detail::keyed(words[0], "n")) throw ParseError(1, "expected `pir n=<list>`");
  PIRSpec spec{detail::parse_uint_list(*detail::keyed(words[0], "n"), "ideal count")};
  for (auto c : spec.proper_ideal_counts)
    if (c < 1) throw ParseError(1, "ideal counts must be >= 1");
  return spec;
}

/// `vspace n=3 q=2`
inline VectorSpaceSpec parse_vspace_spec(const std::string& text) {
  const auto words = detail::spec_words(text, "vspace");
  VectorSpaceSpec spec;
  for (const auto& w : words) {
    if (auto v = detail::keyed(w, "n")) {
      auto x = detail::parse_uint(*v);
      if (!x) throw ParseError(1, "bad dimension `" + *v + "`");
      spec.dimension = *x;
    } else if (auto v2 = detail::keyed(w, "q")) {
      auto x = detail::parse_uint(*v2);
      if (!x) throw ParseError(1, "bad field size `" + *v2 + "`");
      spec.field_size = *x;
    } else {
      throw ParseError(1, "unknown token `" + w + "`");
    }
  }
  if (spec.dimension == 0 || spec.field_size < 2) throw ParseError(1, "expected `vspace n=<int> q=<int>`, q >= 2");
  return spec;
}

}  // namespace zdg
