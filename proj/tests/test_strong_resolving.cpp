#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "zdg/strong_resolving.hpp"

using namespace zdg;

namespace {

Vertex by_label(const SimpleGraph& g, const std::string& label) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  throw std::runtime_error("no vertex " + label);
}

BlowUpSpec fig3_spec() { return BlowUpSpec(3, {{1, 3}, {2, 1}, {4, 2}, {3, 2}, {5, 3}, {6, 1}}); }

BlowUpSpec random_spec(std::size_t n, std::size_t len_max, std::mt19937_64& rng) {
  BlowUpSpec spec(n);
  for (auto s : spec.proper_subsets()) spec.set_length(s, rng() % len_max + 1);
  return spec;
}

// SR graph as a full-size adjacency matrix over the base vertices.
oracle::Matrix as_matrix(const SRGraph& sr) {
  oracle::Matrix m(sr.base_vertex_count, std::vector<int>(sr.base_vertex_count, 0));
  for (auto [u, v] : sr.base_edges()) m[u][v] = m[v][u] = 1;
  return m;
}

}  // namespace

TEST(MaximallyDistant, Boolean3) {
  const auto g = complement_zero_divisor_graph(boolean_lattice(3));
  const auto u = by_label(g, "(1,0,0)"), v = by_label(g, "(1,1,0)");
  EXPECT_TRUE(is_maximally_distant(g, u, v));
  EXPECT_FALSE(is_maximally_distant(g, v, u));
  EXPECT_TRUE(is_maximally_distant(g, u, by_label(g, "(0,1,0)")));
}

TEST(MaximallyDistant, Errors) {
  const auto g = disjoint_union(complete_graph(2), complete_graph(2, "m"));
  try {
    is_maximally_distant(g, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoReachable);
  }
  EXPECT_THROW(is_maximally_distant(g, 1, 1), Error);
  EXPECT_THROW(strong_resolving_graph(g), Error);
}

TEST(SRGraph, SmallGraphs) {
  const auto k4 = strong_resolving_graph(complete_graph(4));
  EXPECT_EQ(k4.vertices.size(), 4u);
  EXPECT_EQ(k4.graph.edge_count(), 6u);
  const auto p3 = strong_resolving_graph(path_graph(3));
  EXPECT_EQ(p3.vertices, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(p3.graph.edge_count(), 1u);
  EXPECT_EQ(boundary(path_graph(3)), (std::vector<Vertex>{0, 2}));
  EXPECT_TRUE(strong_resolving_graph(complete_graph(1)).vertices.empty());
  const auto c4 = strong_resolving_graph(cycle_graph(4));
  EXPECT_EQ(c4.base_edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}}));
}

TEST(SRGraph, Boolean3IsZeroDivisorGraph) {
  const auto L = boolean_lattice(3);
  const auto sr = strong_resolving_graph(complement_zero_divisor_graph(L));
  EXPECT_EQ(sr.vertices.size(), 6u);
  EXPECT_EQ(sr.graph, zero_divisor_graph(L));
}

// Dual route: bitset SR graph against Floyd-Warshall on plain matrices.
TEST(SRGraph, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto g = oracle::random_connected_graph(2 + rng() % 14, 0.15 + 0.1 * (i % 5), rng);
    const auto sr = strong_resolving_graph(g);
    EXPECT_EQ(as_matrix(sr), oracle::sr_matrix(oracle::adjacency(g)));
    for (Vertex k = 0; k < sr.vertices.size(); ++k) EXPECT_GT(sr.graph.degree(k), 0u);
  }
}

TEST(SRClosedForm, Fig3) {
  const auto bu = build_blowup(fig3_spec());
  const auto gc = complement_zero_divisor_graph(bu.lattice);
  EXPECT_EQ(blowup_sr_closed_form(bu), strong_resolving_graph(gc));
  EXPECT_THROW(blowup_sr_closed_form(build_blowup(BlowUpSpec(2))), Error);
}

// Property: closed-form SR edges agree with the distance oracle.
TEST(SRClosedForm, RandomSpecs) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    const auto bu = build_blowup(random_spec(3 + i % 2, 3, rng));
    const auto gc = complement_zero_divisor_graph(bu.lattice);
    const auto sr = blowup_sr_closed_form(bu);
    EXPECT_EQ(sr.vertices.size(), gc.vertex_count());
    EXPECT_EQ(as_matrix(sr), oracle::sr_matrix(oracle::adjacency(gc)));
  }
}

TEST(JoinDecomposition, AgreesWithDistances) {
  const auto L = build_blowup(fig3_spec()).lattice;
  const auto gc = complement_zero_divisor_graph(L);
  for (std::size_t t : {0u, 1u, 2u, 3u}) {
    const auto sr = sr_of_join_decomposition(L, t);
    const auto joined = t == 0 ? gc : join_complete(gc, t);
    EXPECT_EQ(as_matrix(sr), oracle::sr_matrix(oracle::adjacency(joined))) << "t=" << t;
  }
  EXPECT_EQ(sr_of_join_decomposition(L, 1).vertices.size(), 12u);
  EXPECT_EQ(sr_of_join_decomposition(L, 2).vertices.size(), 14u);
  EXPECT_THROW(sr_of_join_decomposition(product_of_chains({3, 3}), 1), Error);
}

TEST(StrongResolving, Predicates) {
  const auto g = complement_zero_divisor_graph(boolean_lattice(3));
  const auto a = by_label(g, "(1,0,0)"), b = by_label(g, "(0,1,0)"), c = by_label(g, "(0,0,1)");
  const std::vector<Vertex> w{a, b, c};
  EXPECT_TRUE(is_strong_resolving_set(g, w));
  EXPECT_FALSE(is_strong_resolving_set(g, {a, b}));
  EXPECT_FALSE(is_strong_resolving_set(g, {a}));
  EXPECT_TRUE(is_strong_resolving_set(g, {a, b, by_label(g, "(1,1,0)")}));
  EXPECT_TRUE(is_resolving_set(g, w));
  const auto d = oracle::floyd_warshall(oracle::adjacency(g));
  EXPECT_TRUE(oracle::strong_resolving(d, {a, b, c}));
  EXPECT_TRUE(strongly_resolves(g, a, a, b));
}

// Property: set predicates agree with the matrix oracle on random subsets.
TEST(StrongResolving, PredicatesMatchOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 2 + rng() % 10;
    const auto g = oracle::random_connected_graph(n, 0.3, rng);
    const auto d = oracle::floyd_warshall(oracle::adjacency(g));
    std::vector<Vertex> w;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) w.push_back(v);
    EXPECT_EQ(is_strong_resolving_set(g, w), oracle::strong_resolving(d, w));
    EXPECT_EQ(is_resolving_set(g, w), oracle::resolving(d, w));
  }
}

TEST(SRGraph, Dot) {
  const auto g = path_graph(3);
  std::ostringstream os;
  write_sr_dot(os, g, strong_resolving_graph(g));
  EXPECT_EQ(os.str(),
            "graph G {\n  0 [label=\"0\", peripheries=2];\n  1 [label=\"1\"];\n  2 [label=\"2\", peripheries=2];\n"
            "  0 -- 2;\n}\n");
}
