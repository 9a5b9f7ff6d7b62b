#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/lattice.hpp"

namespace zdg {

/// G(L) on Z*(L); vertex k is zero_divisors(L)[k] and carries its label.
/// Chains give the empty graph.
inline SimpleGraph zero_divisor_graph(const FiniteLattice& L) {
  const auto z = zero_divisors(L);
  std::vector<std::string> labels;
  for (auto a : z) labels.push_back(L.label(a));
  SimpleGraph g(z.size(), std::move(labels));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (L.meet(z[i], z[j]) == L.bottom()) g.add_edge(i, j);
  return g;
}

/// G^c(L): same vertices, edge iff a ∧ b ≠ 0.
inline SimpleGraph complement_zero_divisor_graph(const FiniteLattice& L) { return complement(zero_divisor_graph(L)); }

struct ConnectivityReport {
  std::size_t atom_count = 0;
  std::size_t component_count = 0;
  bool connected = false;
  bool two_cliques = false;
  std::optional<std::uint32_t> diameter;
};

/// Checks the connectivity facts for G^c(L) of an atomic 0-distributive L:
/// at most two components; exactly two atoms gives two cliques; connected
/// iff at least three atoms; connected implies diameter 2.
inline ConnectivityReport check_connectivity_theorem(const FiniteLattice& L) {
  if (!is_atomic(L) || !is_zero_distributive(L))
    throw Error(ErrorKind::PreconditionFailed, "lattice must be atomic and 0-distributive");
  const auto gc = complement_zero_divisor_graph(L);
  if (gc.vertex_count() == 0) throw Error(ErrorKind::PreconditionFailed, "Z*(L) is empty");

  ConnectivityReport r;
  r.atom_count = atoms(L).size();
  const auto comps = components(gc);
  r.component_count = comps.size();
  r.connected = comps.size() == 1;
  r.two_cliques = comps.size() == 2 && is_clique(gc, comps[0]) && is_clique(gc, comps[1]);
  r.diameter = diameter(gc);

  auto fail = [](const std::string& what) { throw Error(ErrorKind::TheoremViolated, what); };
  if (r.component_count > 2) fail("G^c(L) has more than two components");
  if (r.atom_count == 2 && !r.two_cliques) fail("two atoms but G^c(L) is not two disjoint cliques");
  if (r.connected != (r.atom_count >= 3)) fail("connectivity does not match the atom count");
  if (r.connected && r.diameter != 2u) fail("connected G^c(L) without diameter 2");
  return r;
}

}  // namespace zdg
