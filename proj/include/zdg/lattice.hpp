#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/error.hpp"

namespace zdg {

using Element = std::size_t;

namespace detail {

inline std::vector<Bitset> transpose(const std::vector<Bitset>& rows) {
  const std::size_t m = rows.size();
  std::vector<Bitset> cols(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) for_each_bit(rows[a], [&](std::size_t b) { cols[b].set(a); });
  return cols;
}

inline void check_poset(const std::vector<Bitset>& up) {
  const std::size_t m = up.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (up[a].size() != m) throw Error(ErrorKind::InvalidArgument, "order relation is not square");
    if (!up[a].test(a)) throw Error(ErrorKind::NotAPoset, "not reflexive at " + std::to_string(a));
  }
  for (std::size_t a = 0; a < m; ++a) {
    for_each_bit(up[a], [&](std::size_t b) {
      if (b != a && up[b].test(a)) {
        throw Error(ErrorKind::NotAPoset,
                    "not antisymmetric: " + std::to_string(a) + " <= " + std::to_string(b) + " <= " +
                        std::to_string(a));
      }
      // a <= b implies up(b) is contained in up(a)
      if (!up[b].is_subset_of(up[a]))
        throw Error(ErrorKind::NotAPoset, "not transitive through " + std::to_string(a) + " <= " + std::to_string(b));
    });
  }
}

struct Bounds {
  Element bottom;
  Element top;
};

inline Bounds find_bounds(const std::vector<Bitset>& up, const std::vector<Bitset>& down) {
  const std::size_t m = up.size();
  std::optional<Element> bottom, top;
  for (Element a = 0; a < m; ++a) {
    if (up[a].all()) bottom = a;
    if (down[a].all()) top = a;
  }
  if (!bottom || !top) throw Error(ErrorKind::NotBounded, "no global minimum or maximum");
  return {*bottom, *top};
}

// Unique element g of `candidates` whose cone equals `candidates` (the greatest/least member).
inline std::optional<Element> extremum(const Bitset& candidates, const std::vector<Bitset>& cone) {
  std::optional<Element> found;
  for_each_bit(candidates, [&](std::size_t g) {
    if (!found && cone[g] == candidates) found = g;
  });
  return found;
}

}  // namespace detail

/// Bounded finite lattice stored as explicit order, meet and join tables.
/// Element identity is the integer index; labels are for display only.
class FiniteLattice {
 public:
  /// Builds the lattice from its order relation (row a = up-set of a) and
  /// derives meet/join by glb/lub search. Always validated.
  static FiniteLattice from_order(std::vector<Bitset> up, std::vector<std::string> labels = {}) {
    if (up.empty()) throw Error(ErrorKind::InvalidArgument, "lattice needs at least one element");
    detail::check_poset(up);
    auto down = detail::transpose(up);
    auto bounds = detail::find_bounds(up, down);
    const std::size_t m = up.size();
    std::vector<Element> meet(m * m), join(m * m);
    for (Element a = 0; a < m; ++a) {
      for (Element b = a; b < m; ++b) {
        auto g = detail::extremum(down[a] & down[b], down);
        auto l = detail::extremum(up[a] & up[b], up);
        if (!g || !l) {
          throw Error(ErrorKind::NotALattice, "pair (" + std::to_string(a) + ", " + std::to_string(b) + ") lacks a " +
                                                  (g ? "least upper bound" : "greatest lower bound"));
        }
        meet[a * m + b] = meet[b * m + a] = *g;
        join[a * m + b] = join[b * m + a] = *l;
      }
    }
    return FiniteLattice(std::move(up), std::move(down), std::move(meet), std::move(join), bounds,
                         std::move(labels));
  }

  /// Builds from precomputed tables. Construction-time validation is optional
  /// because internal constructors are correct by design.
  static FiniteLattice from_tables(std::vector<Bitset> up, std::vector<Element> meet, std::vector<Element> join,
                                   std::vector<std::string> labels, bool validate) {
    if (up.empty()) throw Error(ErrorKind::InvalidArgument, "lattice needs at least one element");
    const std::size_t m = up.size();
    if (meet.size() != m * m || join.size() != m * m)
      throw Error(ErrorKind::InvalidArgument, "meet/join tables must be m*m");
    if (validate) detail::check_poset(up);
    auto down = detail::transpose(up);
    auto bounds = detail::find_bounds(up, down);
    FiniteLattice lattice(std::move(up), std::move(down), std::move(meet), std::move(join), bounds,
                          std::move(labels));
    if (validate) lattice.validate();
    return lattice;
  }

  std::size_t size() const noexcept { return up_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const { return up_[a].test(b); }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }

  const Bitset& up_set(Element a) const { return up_[a]; }
  const Bitset& down_set(Element a) const { return down_[a]; }

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Full axiom check: poset, glb/lub correctness of both tables, bounds.
  void validate() const {
    detail::check_poset(up_);
    const std::size_t m = size();
    for (Element a = 0; a < m; ++a) {
      if (!leq(bottom_, a) || !leq(a, top_)) throw Error(ErrorKind::NotBounded, "bounds violated");
      for (Element b = 0; b < m; ++b) {
        const Element g = meet(a, b), l = join(a, b);
        if (g >= m || l >= m) throw Error(ErrorKind::NotALattice, "table entry out of range");
        if (down_[g] != (down_[a] & down_[b]))
          throw Error(ErrorKind::NotALattice, "meet table is not the glb at (" + std::to_string(a) + ", " +
                                                  std::to_string(b) + ")");
        if (up_[l] != (up_[a] & up_[b]))
          throw Error(ErrorKind::NotALattice, "join table is not the lub at (" + std::to_string(a) + ", " +
                                                  std::to_string(b) + ")");
      }
    }
  }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.up_ == y.up_ && x.meet_ == y.meet_ && x.join_ == y.join_ && x.labels_ == y.labels_;
  }

 private:
  FiniteLattice(std::vector<Bitset> up, std::vector<Bitset> down, std::vector<Element> meet,
                std::vector<Element> join, detail::Bounds bounds, std::vector<std::string> labels)
      : up_(std::move(up)),
        down_(std::move(down)),
        meet_(std::move(meet)),
        join_(std::move(join)),
        bottom_(bounds.bottom),
        top_(bounds.top),
        labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.resize(size());
      for (Element a = 0; a < size(); ++a) labels_[a] = std::to_string(a);
    }
    if (labels_.size() != size()) throw Error(ErrorKind::InvalidArgument, "label count differs from element count");
  }

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_;
  Element top_;
  std::vector<std::string> labels_;
};

/// Validating constructor from an m x m boolean order relation.
inline FiniteLattice lattice_from_leq(std::size_t m, const std::vector<std::vector<bool>>& leq,
                                      std::vector<std::string> labels = {}) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (leq.size() != m) throw Error(ErrorKind::InvalidArgument, "order relation must have m rows");
  std::vector<Bitset> up(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    if (leq[a].size() != m) throw Error(ErrorKind::InvalidArgument, "order relation must have m columns");
    for (std::size_t b = 0; b < m; ++b)
      if (leq[a][b]) up[a].set(b);
  }
  return FiniteLattice::from_order(std::move(up), std::move(labels));
}

/// Reflexive-transitive closure of a covering (or any) relation, as up-sets.
inline std::vector<Bitset> reflexive_transitive_closure(std::vector<Bitset> up) {
  const std::size_t m = up.size();
  for (std::size_t a = 0; a < m; ++a) up[a].set(a);
  // Warshall over bit rows.
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t a = 0; a < m; ++a)
      if (up[a].test(k)) up[a] |= up[k];
  return up;
}

namespace detail {

inline std::string tuple_label(const std::vector<std::size_t>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

}  // namespace detail

/// Product of chains C_{q_1} x ... x C_{q_n} with componentwise order.
/// Element index is mixed radix with the first coordinate varying fastest,
/// so for 2^n the index of a tuple equals its support bitmask.
inline FiniteLattice product_of_chains(const std::vector<std::size_t>& lengths, bool validate = false) {
  if (lengths.empty()) throw Error(ErrorKind::EmptyInput, "need at least one chain");
  for (auto q : lengths)
    if (q < 2) throw Error(ErrorKind::ChainTooShort, "every chain needs at least 2 elements");

  std::size_t m = 1;
  for (auto q : lengths) m *= q;
  const std::size_t n = lengths.size();

  std::vector<std::vector<std::size_t>> coords(m, std::vector<std::size_t>(n));
  for (std::size_t idx = 0; idx < m; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      coords[idx][i] = rest % lengths[i];
      rest /= lengths[i];
    }
  }
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < n; ++i) {
      idx += c[i] * stride;
      stride *= lengths[i];
    }
    return idx;
  };

  std::vector<Bitset> up(m, Bitset(m));
  std::vector<Element> meet(m * m), join(m * m);
  std::vector<std::size_t> lo(n), hi(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < n; ++i) {
        le = le && coords[a][i] <= coords[b][i];
        lo[i] = std::min(coords[a][i], coords[b][i]);
        hi[i] = std::max(coords[a][i], coords[b][i]);
      }
      if (le) up[a].set(b);
      meet[a * m + b] = encode(lo);
      join[a * m + b] = encode(hi);
    }
  }
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) labels[a] = detail::tuple_label(coords[a]);
  return FiniteLattice::from_tables(std::move(up), std::move(meet), std::move(join), std::move(labels), validate);
}

inline FiniteLattice boolean_lattice(std::size_t n, bool validate = false) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  return product_of_chains(std::vector<std::size_t>(n, 2), validate);
}

/// Annihilator of a as a bitset: { b : a ∧ b = 0 }.
inline Bitset annihilator_bits(const FiniteLattice& L, Element a) {
  Bitset out(L.size());
  for (Element b = 0; b < L.size(); ++b)
    if (L.meet(a, b) == L.bottom()) out.set(b);
  return out;
}

inline std::vector<Element> annihilator(const FiniteLattice& L, Element a) {
  return to_indices(annihilator_bits(L, a));
}

/// Greatest element of the annihilator, if it has one.
inline std::optional<Element> pseudocomplement(const FiniteLattice& L, Element a) {
  const Bitset ann = annihilator_bits(L, a);
  std::optional<Element> result;
  for_each_bit(ann, [&](std::size_t g) {
    if (!result && ann.is_subset_of(L.down_set(g))) result = g;
  });
  return result;
}

inline bool is_pseudocomplemented(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a)
    if (!pseudocomplement(L, a)) return false;
  return true;
}

/// Elements covering the bottom.
inline std::vector<Element> atoms(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element a = 0; a < L.size(); ++a)
    if (a != L.bottom() && L.down_set(a).count() == 2) out.push_back(a);
  return out;
}

inline bool is_atomic(const FiniteLattice& L) {
  const auto at = atoms(L);
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    if (std::none_of(at.begin(), at.end(), [&](Element q) { return L.leq(q, a); })) return false;
  }
  return true;
}

/// a∧b = 0 and a∧c = 0 imply a∧(b∨c) = 0, for all triples.
inline bool is_zero_distributive(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a) {
    const auto ann = annihilator(L, a);
    for (std::size_t i = 0; i < ann.size(); ++i)
      for (std::size_t j = i + 1; j < ann.size(); ++j)
        if (L.meet(a, L.join(ann[i], ann[j])) != L.bottom()) return false;
  }
  return true;
}

/// Order reversed, meet and join swapped. Labels and indices are kept.
inline FiniteLattice dual(const FiniteLattice& L) {
  const std::size_t m = L.size();
  std::vector<Bitset> up(m);
  std::vector<Element> meet(m * m), join(m * m);
  for (Element a = 0; a < m; ++a) {
    up[a] = L.down_set(a);
    for (Element b = 0; b < m; ++b) {
      meet[a * m + b] = L.join(a, b);
      join[a * m + b] = L.meet(a, b);
    }
  }
  return FiniteLattice::from_tables(std::move(up), std::move(meet), std::move(join), L.labels(), false);
}

inline bool is_one_distributive(const FiniteLattice& L) { return is_zero_distributive(dual(L)); }

/// Z*(L): nonzero elements with a nonzero annihilator partner.
inline std::vector<Element> zero_divisors(const FiniteLattice& L) {
  std::vector<Element> out;
  for (Element a = 0; a < L.size(); ++a) {
    if (a == L.bottom()) continue;
    for (Element b = 0; b < L.size(); ++b) {
      if (b != L.bottom() && L.meet(a, b) == L.bottom()) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

/// Partition of L by equal annihilators, with the quotient lattice
/// ordered by [x] <= [y] iff y^⊥ ⊆ x^⊥.
struct AnnihilatorClassPartition {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<Bitset> class_annihilator;
  FiniteLattice quotient;
};

inline AnnihilatorClassPartition annihilator_classes(const FiniteLattice& L) {
  const std::size_t m = L.size();
  std::vector<std::vector<Element>> classes;
  std::vector<Bitset> reps;
  std::vector<std::size_t> class_of(m);
  for (Element a = 0; a < m; ++a) {
    Bitset ann = annihilator_bits(L, a);
    auto it = std::find(reps.begin(), reps.end(), ann);
    if (it == reps.end()) {
      class_of[a] = reps.size();
      reps.push_back(std::move(ann));
      classes.push_back({a});
    } else {
      class_of[a] = static_cast<std::size_t>(it - reps.begin());
      classes[class_of[a]].push_back(a);
    }
  }
  const std::size_t k = classes.size();
  std::vector<Bitset> up(k, Bitset(k));
  std::vector<std::string> labels(k);
  for (std::size_t x = 0; x < k; ++x) {
    labels[x] = "[" + L.label(classes[x].front()) + "]";
    for (std::size_t y = 0; y < k; ++y)
      if (reps[y].is_subset_of(reps[x])) up[x].set(y);
  }
  try {
    auto quotient = FiniteLattice::from_order(std::move(up), std::move(labels));
    return {std::move(classes), std::move(class_of), std::move(reps), std::move(quotient)};
  } catch (const Error& e) {
    throw Error(ErrorKind::QuotientNotLattice, e.what());
  }
}

}  // namespace zdg
