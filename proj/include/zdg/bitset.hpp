#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace zdg {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Iterate set bits in ascending order.
template <typename F>
void for_each_bit(const Bitset& bits, F&& f) {
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) f(i);
}

inline std::vector<std::size_t> to_indices(const Bitset& bits) {
  std::vector<std::size_t> out;
  out.reserve(bits.count());
  for_each_bit(bits, [&](std::size_t i) { out.push_back(i); });
  return out;
}

inline Bitset from_indices(std::size_t size, const std::vector<std::size_t>& indices) {
  Bitset bits(size);
  for (auto i : indices) bits.set(i);
  return bits;
}

}  // namespace zdg
