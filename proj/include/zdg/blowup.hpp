#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zdg/error.hpp"
#include "zdg/lattice.hpp"
#include "zdg/text.hpp"

namespace zdg {

using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxBlowUpAtoms = 20;

/// Chain length for every nonempty proper subset S of {1..n} (bit i-1 <-> i).
/// Unspecified subsets default to length 1, i.e. the plain Boolean element.
class BlowUpSpec {
 public:
  explicit BlowUpSpec(std::size_t n) : n_(n) {
    if (n < 2 || n > kMaxBlowUpAtoms)
      throw Error(ErrorKind::SpecInvalid, "blow-up needs 2 <= n <= " + std::to_string(kMaxBlowUpAtoms));
    lengths_.assign(std::size_t{1} << n, 1);
  }

  BlowUpSpec(std::size_t n, const std::map<SubsetMask, std::size_t>& lengths) : BlowUpSpec(n) {
    for (auto [mask, len] : lengths) set_length(mask, len);
  }

  std::size_t n() const noexcept { return n_; }
  SubsetMask full_mask() const noexcept { return static_cast<SubsetMask>((std::size_t{1} << n_) - 1); }

  bool is_proper(SubsetMask mask) const noexcept { return mask != 0 && mask < full_mask(); }

  std::size_t length(SubsetMask mask) const { return lengths_.at(mask); }

  void set_length(SubsetMask mask, std::size_t len) {
    if (!is_proper(mask)) throw Error(ErrorKind::SpecInvalid, "chain subset must be nonempty and proper");
    if (len == 0) throw Error(ErrorKind::SpecInvalid, "chain length must be positive");
    lengths_[mask] = len;
  }

  /// Σ over nonempty proper S of chain_len(S) = |Z*(L^B)|.
  std::size_t proper_element_count() const {
    std::size_t total = 0;
    for (SubsetMask s = 1; s < full_mask(); ++s) total += lengths_[s];
    return total;
  }

  /// Nonempty proper subsets in canonical order: popcount, then mask value.
  std::vector<SubsetMask> proper_subsets() const {
    std::vector<SubsetMask> out;
    for (SubsetMask s = 1; s < full_mask(); ++s) out.push_back(s);
    std::stable_sort(out.begin(), out.end(),
                     [](SubsetMask a, SubsetMask b) { return std::popcount(a) < std::popcount(b); });
    return out;
  }

  friend bool operator==(const BlowUpSpec&, const BlowUpSpec&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> lengths_;
};

/// Element x^level_S of L^B; subset ∅ is the bottom, the full set is the top.
struct BlowUpElement {
  SubsetMask subset = 0;
  std::size_t level = 1;

  friend auto operator<=>(const BlowUpElement&, const BlowUpElement&) = default;

  /// Tuple encoding: coordinate i is `level` when i ∈ S, else 0.
  std::vector<std::size_t> tuple(std::size_t n) const {
    std::vector<std::size_t> z(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (subset >> i & 1u) z[i] = level;
    return z;
  }

  /// Subscript name like "x13^2"; "0" and "1" for the bounds.
  std::string name(std::size_t n) const {
    if (subset == 0) return "0";
    if (subset == (SubsetMask{1} << n) - 1) return "1";
    std::string s = "x";
    for (std::size_t i = 0; i < n; ++i)
      if (subset >> i & 1u) s += std::to_string(i + 1);
    return s + "^" + std::to_string(level);
  }
};

/// A constructed blow-up: the lattice plus the element decoding.
struct BlowUp {
  BlowUpSpec spec;
  FiniteLattice lattice;
  std::vector<BlowUpElement> elements;

  Element index_of(const BlowUpElement& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e, canonical_less);
    if (it == elements.end() || *it != e) throw Error(ErrorKind::InvalidArgument, "element not in blow-up");
    return static_cast<Element>(it - elements.begin());
  }

  static bool canonical_less(const BlowUpElement& a, const BlowUpElement& b) {
    const int pa = std::popcount(a.subset), pb = std::popcount(b.subset);
    if (pa != pb) return pa < pb;
    if (a.subset != b.subset) return a.subset < b.subset;
    return a.level < b.level;
  }
};

/// (A,s) <= (B,t) iff A ⊊ B, or A = B and s <= t.
inline bool blowup_leq(const BlowUpElement& a, const BlowUpElement& b) {
  if (a.subset == b.subset) return a.level <= b.level;
  return (a.subset & b.subset) == a.subset;
}

/// Builds L^B. Meet and join tables come from glb/lub search over the order,
/// independent of the closed-form rules in blowup_meet/blowup_join.
inline BlowUp build_blowup(const BlowUpSpec& spec) {
  std::vector<BlowUpElement> elements;
  elements.push_back({0, 1});
  for (auto s : spec.proper_subsets())
    for (std::size_t t = 1; t <= spec.length(s); ++t) elements.push_back({s, t});
  elements.push_back({spec.full_mask(), 1});

  const std::size_t m = elements.size();
  std::vector<Bitset> up(m, Bitset(m));
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = detail::tuple_label(elements[a].tuple(spec.n()));
    for (std::size_t b = 0; b < m; ++b)
      if (blowup_leq(elements[a], elements[b])) up[a].set(b);
  }
  auto lattice = FiniteLattice::from_order(std::move(up), std::move(labels));
  return {spec, std::move(lattice), std::move(elements)};
}

namespace detail {

inline void check_element(const BlowUpElement& e, const BlowUpSpec& spec) {
  if (e.subset > spec.full_mask() || e.level == 0 || e.level > spec.length(e.subset))
    throw Error(ErrorKind::InvalidArgument, "element not valid for this blow-up");
}

}  // namespace detail

/// Closed-form meet: chains compare by level, nested chains by containment,
/// otherwise the top of the chain of A∩B (or 0).
inline BlowUpElement blowup_meet(const BlowUpElement& a, const BlowUpElement& b, const BlowUpSpec& spec) {
  detail::check_element(a, spec);
  detail::check_element(b, spec);
  if (a.subset == b.subset) return {a.subset, std::min(a.level, b.level)};
  const SubsetMask common = a.subset & b.subset;
  if (common == a.subset) return a;
  if (common == b.subset) return b;
  if (common == 0) return {0, 1};
  return {common, spec.length(common)};
}

/// Dual of blowup_meet: bottom of the chain of A∪B (or 1).
inline BlowUpElement blowup_join(const BlowUpElement& a, const BlowUpElement& b, const BlowUpSpec& spec) {
  detail::check_element(a, spec);
  detail::check_element(b, spec);
  if (a.subset == b.subset) return {a.subset, std::max(a.level, b.level)};
  const SubsetMask both = a.subset | b.subset;
  if (both == b.subset) return b;
  if (both == a.subset) return a;
  return {both, 1};
}

struct BlowUpStructureReport {
  std::size_t class_count = 0;
  std::size_t dual_class_count = 0;
  /// class id -> subset mask, for L^B and its dual
  std::vector<SubsetMask> class_subset;
  std::vector<SubsetMask> dual_class_subset;
};

namespace detail {

// Checks that a class partition is constant on subsets, hits every subset
// exactly once, and orders classes as `subset_leq` says.
template <typename SubsetLeq>
std::vector<SubsetMask> quotient_by_subsets(const BlowUp& bu, const AnnihilatorClassPartition& part,
                                            SubsetLeq subset_leq, const std::string& which) {
  const std::size_t k = part.classes.size();
  const std::size_t want = std::size_t{1} << bu.spec.n();
  if (k != want)
    throw Error(ErrorKind::StructureViolation,
                "clause (ii) " + which + ": " + std::to_string(k) + " classes, expected " + std::to_string(want));
  std::vector<SubsetMask> subset_of(k);
  std::vector<bool> seen(want, false);
  for (std::size_t c = 0; c < k; ++c) {
    const SubsetMask s = bu.elements[part.classes[c].front()].subset;
    for (auto e : part.classes[c])
      if (bu.elements[e].subset != s)
        throw Error(ErrorKind::StructureViolation, "clause (ii) " + which + ": class mixes chains");
    if (seen[s]) throw Error(ErrorKind::StructureViolation, "clause (ii) " + which + ": subset hit twice");
    seen[s] = true;
    subset_of[c] = s;
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (part.quotient.leq(x, y) != subset_leq(subset_of[x], subset_of[y]))
        throw Error(ErrorKind::StructureViolation, "clause (ii) " + which + ": quotient order is not 2^n");
  return subset_of;
}

}  // namespace detail

/// Checks the pseudocomplement and quotient structure of a blow-up:
///  (i)   L^B and its dual are pseudocomplemented;
///  (ii)  both annihilator quotients are 2^n, matched by subset signature;
///  (iii) q_i* is the dual atom over the complement of i, and q_i** is the
///        largest element of the chain of q_i.
/// Throws StructureViolation naming the failing clause.
inline BlowUpStructureReport verify_blowup_structure(const BlowUp& bu) {
  const auto& L = bu.lattice;
  const auto D = dual(L);
  if (!is_pseudocomplemented(L)) throw Error(ErrorKind::StructureViolation, "clause (i): L^B not pseudocomplemented");
  if (!is_pseudocomplemented(D))
    throw Error(ErrorKind::StructureViolation, "clause (i): dual of L^B not pseudocomplemented");

  BlowUpStructureReport report;
  const auto part = annihilator_classes(L);
  report.class_subset = detail::quotient_by_subsets(
      bu, part, [](SubsetMask a, SubsetMask b) { return (a & b) == a; }, "L^B");
  report.class_count = part.classes.size();
  const auto dual_part = annihilator_classes(D);
  report.dual_class_subset = detail::quotient_by_subsets(
      bu, dual_part, [](SubsetMask a, SubsetMask b) { return (a & b) == b; }, "dual");
  report.dual_class_count = dual_part.classes.size();

  const std::size_t n = bu.spec.n();
  const SubsetMask full = bu.spec.full_mask();
  for (std::size_t i = 0; i < n; ++i) {
    const SubsetMask qi = SubsetMask{1} << i;
    const Element atom = bu.index_of({qi, 1});
    const auto star = pseudocomplement(L, atom);
    const SubsetMask rest = full & ~qi;
    const Element dual_atom = bu.index_of({rest, bu.spec.length(rest)});
    // dual atom: covered by the top
    if (!star || *star != dual_atom || L.up_set(dual_atom).count() != 2)
      throw Error(ErrorKind::StructureViolation,
                  "clause (iii): pseudocomplement of atom q" + std::to_string(i + 1) + " is not its dual atom");
    const auto star2 = pseudocomplement(L, dual_atom);
    if (!star2 || *star2 != bu.index_of({qi, bu.spec.length(qi)}))
      throw Error(ErrorKind::StructureViolation, "clause (iii): pseudocomplement of dual atom q" +
                                                     std::to_string(i + 1) + "* is not the top of chain [q" +
                                                     std::to_string(i + 1) + "]");
  }
  return report;
}

/// Reads `blowup n=<int>` followed by `chain <i,j,...> : <len>` lines.
/// Blank lines and `#` comments are ignored.
inline BlowUpSpec parse_blowup_spec(std::istream& in) {
  std::optional<BlowUpSpec> spec;
  std::vector<bool> listed;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "blowup") {
      if (spec) throw ParseError(line_no, "duplicate blowup header");
      std::string tok;
      words >> tok;
      auto value = detail::keyed(tok, "n");
      auto n = value ? detail::parse_uint(*value) : std::nullopt;
      if (!n) throw ParseError(line_no, "expected `blowup n=<int>`");
      try {
        spec.emplace(*n);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      listed.assign(std::size_t{1} << *n, false);
    } else if (head == "chain") {
      if (!spec) throw ParseError(line_no, "chain before blowup header");
      const auto rest = line.substr(5);
      const auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError(line_no, "expected `chain <subset> : <length>`");
      SubsetMask mask = 0;
      for (const auto& part : detail::split(rest.substr(0, colon), ',')) {
        auto i = detail::parse_uint(part);
        if (!i || *i < 1 || *i > spec->n()) throw ParseError(line_no, "subset entry out of range: `" + part + "`");
        mask |= SubsetMask{1} << (*i - 1);
      }
      if (!spec->is_proper(mask)) throw ParseError(line_no, "chain subset must be nonempty and proper");
      if (listed[mask]) throw ParseError(line_no, "chain listed twice");
      listed[mask] = true;
      auto len = detail::parse_uint(rest.substr(colon + 1));
      if (!len || *len == 0) throw ParseError(line_no, "chain length must be a positive integer");
      spec->set_length(mask, *len);
    } else {
      throw ParseError(line_no, "unknown directive `" + head + "`");
    }
  }
  if (!spec) throw ParseError(line_no, "missing `blowup n=<int>` header");
  return *spec;
}

inline BlowUpSpec parse_blowup_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_blowup_spec(in);
}

/// Inverse of parse_blowup_spec; lists every non-unit chain.
inline std::string format_blowup_spec(const BlowUpSpec& spec) {
  std::string out = "blowup n=" + std::to_string(spec.n()) + "\n";
  for (auto s : spec.proper_subsets()) {
    if (spec.length(s) == 1) continue;
    out += "chain ";
    bool first = true;
    for (std::size_t i = 0; i < spec.n(); ++i) {
      if (!(s >> i & 1u)) continue;
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
    out += " : " + std::to_string(spec.length(s)) + "\n";
  }
  return out;
}

}  // namespace zdg
