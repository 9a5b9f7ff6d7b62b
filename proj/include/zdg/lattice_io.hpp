#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zdg/error.hpp"
#include "zdg/graph.hpp"
#include "zdg/lattice.hpp"
#include "zdg/text.hpp"

namespace zdg {

/// Reads a lattice spec:
///   lattice m=<int>
///   leq <i> <j>      full order relation (reflexive pairs may be omitted)
///   cover <i> <j>    covering pairs only; closure is computed by the loader
///   label <i> <text>
/// A file uses either `leq` or `cover` lines, not both.
inline FiniteLattice parse_lattice_spec(std::istream& in) {
  std::optional<std::size_t> m;
  std::vector<Bitset> up;
  std::vector<std::string> labels;
  bool saw_leq = false, saw_cover = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "lattice") {
      if (m) throw ParseError(line_no, "duplicate lattice header");
      std::string tok;
      words >> tok;
      auto value = detail::keyed(tok, "m");
      auto parsed = value ? detail::parse_uint(*value) : std::nullopt;
      if (!parsed || *parsed == 0) throw ParseError(line_no, "expected `lattice m=<positive int>`");
      m = parsed;
      up.assign(*m, Bitset(*m));
      labels.resize(*m);
      for (std::size_t i = 0; i < *m; ++i) labels[i] = std::to_string(i);
      continue;
    }
    if (!m) throw ParseError(line_no, "missing `lattice m=<int>` header");
    std::string a, b;
    words >> a;
    auto i = detail::parse_uint(a);
    if (!i || *i >= *m) throw ParseError(line_no, "element index out of range: `" + a + "`");
    if (head == "leq" || head == "cover") {
      words >> b;
      auto j = detail::parse_uint(b);
      if (!j || *j >= *m) throw ParseError(line_no, "element index out of range: `" + b + "`");
      std::string extra;
      if (words >> extra) throw ParseError(line_no, "trailing text after pair");
      (head == "leq" ? saw_leq : saw_cover) = true;
      if (saw_leq && saw_cover) throw ParseError(line_no, "cannot mix `leq` and `cover` lines");
      up[*i].set(*j);
    } else if (head == "label") {
      std::string text;
      std::getline(words, text);
      text = detail::trim(text);
      if (text.empty()) throw ParseError(line_no, "empty label");
      labels[*i] = text;
    } else {
      throw ParseError(line_no, "unknown directive `" + head + "`");
    }
  }
  if (!m) throw ParseError(line_no, "missing `lattice m=<int>` header");
  if (saw_cover) {
    up = reflexive_transitive_closure(std::move(up));
  } else {
    for (std::size_t a = 0; a < *m; ++a) up[a].set(a);
  }
  return FiniteLattice::from_order(std::move(up), std::move(labels));
}

inline FiniteLattice parse_lattice_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_lattice_spec(in);
}

/// Covering pairs (a, b) with a ⋖ b, in index order.
inline std::vector<std::pair<Element, Element>> covering_pairs(const FiniteLattice& L) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < L.size(); ++a) {
    for_each_bit(L.up_set(a), [&](std::size_t b) {
      if (b == a) return;
      // nothing strictly between a and b
      if ((L.up_set(a) & L.down_set(b)).count() == 2) out.emplace_back(a, b);
    });
  }
  return out;
}

inline std::string format_lattice_spec(const FiniteLattice& L) {
  std::string out = "lattice m=" + std::to_string(L.size()) + "\n";
  for (Element a = 0; a < L.size(); ++a) out += "label " + std::to_string(a) + " " + L.label(a) + "\n";
  for (auto [a, b] : covering_pairs(L)) out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

/// Hasse diagram as DOT, bottom drawn lowest.
inline void write_hasse_dot(std::ostream& os, const FiniteLattice& L) {
  os << "graph Hasse {\n  rankdir=BT;\n";
  for (Element a = 0; a < L.size(); ++a) os << "  " << a << " [label=\"" << detail::dot_escape(L.label(a)) << "\"];\n";
  for (auto [a, b] : covering_pairs(L)) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
}

}  // namespace zdg
