#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "zdg/applications.hpp"

using namespace zdg;

namespace {

// Ring-side models built from coordinates alone, never through a lattice.

// Complement of the zero-divisor graph of F_q1 x ... x F_qn: nonzero
// non-units, adjacent iff some coordinate is nonzero in both.
SimpleGraph reduced_ring_by_tuples(const std::vector<std::size_t>& q) {
  std::size_t total = 1;
  for (auto x : q) total *= x;
  const std::uint64_t full = (std::uint64_t{1} << q.size()) - 1;
  std::vector<std::uint64_t> support;
  for (std::size_t code = 1; code < total; ++code) {
    std::uint64_t s = 0;
    for (std::size_t i = 0, c = code; i < q.size(); c /= q[i], ++i)
      if (c % q[i]) s |= std::uint64_t{1} << i;
    if (s != full) support.push_back(s);
  }
  SimpleGraph g(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (support[i] & support[j]) g.add_edge(i, j);
  return g;
}

// Intersection graph of ideals of Z_{p^a1} x ... x Z_{p^ak}: an ideal is an
// exponent vector e with 0 <= e_i <= a_i, intersection takes the larger
// exponent, and the zero ideal has e = a.
SimpleGraph pir_by_exponents(const std::vector<std::size_t>& nonzero_proper) {
  std::vector<std::size_t> a;
  for (auto c : nonzero_proper) a.push_back(c + 1);
  std::vector<std::vector<std::size_t>> ideals;
  std::vector<std::size_t> e(a.size(), 0);
  for (;;) {
    const bool whole = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    bool zero = true;
    for (std::size_t i = 0; i < a.size(); ++i) zero = zero && e[i] == a[i];
    if (!whole && !zero) ideals.push_back(e);
    std::size_t i = 0;
    while (i < a.size() && e[i] == a[i]) e[i++] = 0;
    if (i == a.size()) break;
    ++e[i];
  }
  SimpleGraph g(ideals.size());
  for (std::size_t x = 0; x < ideals.size(); ++x)
    for (std::size_t y = x + 1; y < ideals.size(); ++y) {
      bool meet_zero = true;
      for (std::size_t i = 0; i < a.size(); ++i) meet_zero = meet_zero && std::max(ideals[x][i], ideals[y][i]) == a[i];
      if (!meet_zero) g.add_edge(x, y);
    }
  return g;
}

std::vector<std::size_t> degree_sequence(const SimpleGraph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t sdim_by_subsets(const SimpleGraph& g) { return strong_metric_dimension_bruteforce(g, 32); }

}  // namespace

TEST(ReducedRings, Values) {
  EXPECT_EQ(reduced_ring_graphs({{2, 2, 2}}).report.sdim, 3u);
  EXPECT_EQ(reduced_ring_graphs({{3, 3, 3}}).report.sdim, 15u);
  EXPECT_EQ(reduced_ring_graphs({{2, 2, 2, 2}}).report.sdim, 7u);
  EXPECT_EQ(reduced_ring_zero_divisor_count({{3, 3, 3}}), 18u);
  EXPECT_THROW(reduced_ring_graphs({{2, 2}}), Error);
  EXPECT_THROW(reduced_ring_graphs({{2, 1, 2}}), Error);
}

// Dual route: lattice model against the ring built from coordinate tuples.
TEST(ReducedRings, AgreeWithTupleModel) {
  for (const auto& q : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 2, 2}, {3, 3, 2}, {2, 2, 2, 2}, {3, 3, 3}}) {
    const auto r = reduced_ring_graphs({q});
    const auto direct = reduced_ring_by_tuples(q);
    EXPECT_EQ(r.graph.vertex_count(), direct.vertex_count());
    EXPECT_EQ(degree_sequence(r.graph), degree_sequence(direct));
    EXPECT_EQ(r.report.sdim, sdim_by_subsets(direct)) << ApplicationInstance(r).name;
    EXPECT_EQ(r.report.sdim, r.formula_sdim);
  }
  EXPECT_EQ(reduced_ring_graphs({{2, 2, 2}}).report.sdim, oracle::sdim(reduced_ring_by_tuples({2, 2, 2})));
}

TEST(ReducedRings, BlowUpEquivalence) {
  for (const auto& q : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 3}, {3, 2, 2}, {3, 4, 2}}) {
    const auto rep = blowup_equivalence_check({q});
    std::size_t total = 0;
    for (auto [mask, size] : rep.class_sizes) total += size;
    EXPECT_EQ(total, reduced_ring_zero_divisor_count({q}));
    EXPECT_EQ(rep.vertex_map.size(), total);
  }
  const auto spec = blowup_spec_for_reduced_ring({{3, 4, 2}});
  EXPECT_EQ(spec.length(0b001), 2u);  // F_3 contributes 2 units
  EXPECT_EQ(spec.length(0b011), 6u);
}

TEST(BlowUpApplications, TotalAndMaximal) {
  const BlowUpSpec fig3(3, {{1, 3}, {2, 1}, {4, 2}, {3, 2}, {5, 3}, {6, 1}});
  EXPECT_EQ(total_graph(fig3).report.sdim, 9u);
  EXPECT_EQ(maximal_graph(fig3).report.sdim, 9u);
  BlowUpSpec two(4);
  for (auto s : two.proper_subsets()) two.set_length(s, 2);
  const auto r = total_graph(two);
  EXPECT_EQ(r.graph.vertex_count(), 28u);
  EXPECT_EQ(r.report.sdim, 21u);
  EXPECT_THROW(total_graph(BlowUpSpec(2)), Error);
}

TEST(PIR, Values) {
  const auto a = intersection_graph({{1, 1}});
  EXPECT_EQ(a.graph.vertex_count(), 7u);
  EXPECT_EQ(a.join_size, 3u);
  EXPECT_EQ(a.report.sdim, 5u);
  EXPECT_TRUE(a.notes.empty());
  const auto b = intersection_graph({{1, 1, 1}});
  EXPECT_EQ(b.graph.vertex_count(), 25u);
  EXPECT_EQ(b.report.sdim, 21u);
  EXPECT_EQ(pir_predicted_join_size({{2, 1}}), 5u);
  EXPECT_THROW(intersection_graph({{1}}), Error);
  EXPECT_THROW(intersection_graph({{1, 0}}), Error);
}

// Dual route: lattice of ideals against exponent vectors.
TEST(PIR, AgreesWithExponentModel) {
  for (const auto& n : std::vector<std::vector<std::size_t>>{{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}}) {
    const auto r = intersection_graph({n});
    const auto direct = pir_by_exponents(n);
    EXPECT_EQ(r.graph.vertex_count(), direct.vertex_count());
    EXPECT_EQ(degree_sequence(r.graph), degree_sequence(direct));
    EXPECT_EQ(r.join_size, pir_predicted_join_size({n}));
    EXPECT_EQ(r.report.sdim, sdim_by_subsets(direct));
  }
  EXPECT_EQ(oracle::sdim(pir_by_exponents({1, 1})), 5u);
}

TEST(Fields, Values) {
  EXPECT_EQ(intersection_graph_fields(3).report.sdim, 3u);
  EXPECT_EQ(intersection_graph_fields(4).report.sdim, 7u);
  try {
    intersection_graph_fields(2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
  }
}

TEST(VectorSpace, Values) {
  const auto a = component_graph({3, 2});
  EXPECT_EQ(a.graph.vertex_count(), 7u);
  EXPECT_EQ(a.report.sdim, 3u);
  const auto b = component_graph({3, 3});
  EXPECT_EQ(b.graph.vertex_count(), 26u);
  EXPECT_EQ(b.report.sdim, 22u);
  const auto c = component_graph({4, 2});
  EXPECT_EQ(c.graph.vertex_count(), 15u);
  EXPECT_EQ(c.report.sdim, 7u);
  EXPECT_THROW(component_graph({2, 3}), Error);
}

// Dual route: coordinates against the skeleton model.
TEST(VectorSpace, AgreesWithCoordinates) {
  for (const auto& s : std::vector<VectorSpaceSpec>{{3, 2}, {3, 3}, {4, 2}, {3, 4}, {4, 3}}) {
    EXPECT_TRUE(skeleton_model_matches(s));
    const auto direct = component_graph_by_vectors(s);
    EXPECT_EQ(direct.vertex_count(), component_graph(s).graph.vertex_count());
    if (direct.vertex_count() <= 26) {
      EXPECT_EQ(sdim_by_subsets(direct), component_graph(s).report.sdim);
    }
  }
  EXPECT_EQ(oracle::sdim(component_graph_by_vectors({3, 2})), 3u);
  EXPECT_THROW(component_graph_by_vectors({13, 2}), Error);
}

TEST(SpecParsing, Accepts) {
  EXPECT_EQ(parse_reduced_spec("reduced q=3,2,2").field_sizes, (std::vector<std::size_t>{3, 2, 2}));
  EXPECT_EQ(parse_pir_spec("# c\npir n=1,2\n").proper_ideal_counts, (std::vector<std::size_t>{1, 2}));
  const auto v = parse_vspace_spec("vspace q=3 n=4");
  EXPECT_EQ(v.dimension, 4u);
  EXPECT_EQ(v.field_size, 3u);
  for (const auto& [file, kind] : std::vector<std::pair<std::string, int>>{
           {"f3cubed.reduced", 0}, {"z4z4.pir", 1}, {"f3cubed.vspace", 2}}) {
    std::ifstream f(std::string(ZDG_DATA_DIR) + "/" + file);
    ASSERT_TRUE(f) << file;
    std::stringstream ss;
    ss << f.rdbuf();
    std::size_t sdim = 0;
    if (kind == 0) sdim = reduced_ring_graphs(parse_reduced_spec(ss.str())).report.sdim;
    if (kind == 1) sdim = intersection_graph(parse_pir_spec(ss.str())).report.sdim;
    if (kind == 2) sdim = component_graph(parse_vspace_spec(ss.str())).report.sdim;
    EXPECT_EQ(sdim, kind == 0 ? 15u : kind == 1 ? 5u : 22u) << file;
  }
}

TEST(SpecParsing, Rejects) {
  EXPECT_THROW(parse_reduced_spec("reduced q=3,1"), ParseError);
  EXPECT_THROW(parse_reduced_spec("reduced q=3,x"), ParseError);
  EXPECT_THROW(parse_reduced_spec("pir q=3,3"), ParseError);
  EXPECT_THROW(parse_pir_spec("pir n=0,1"), ParseError);
  EXPECT_THROW(parse_pir_spec("pir"), ParseError);
  EXPECT_THROW(parse_vspace_spec("vspace n=3"), ParseError);
  EXPECT_THROW(parse_vspace_spec("vspace n=3 q=2 r=1"), ParseError);
}
