#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace socchoice {

// Indexes into countable algebras and profile families are plain naturals,
// but the codes of even modest formation sequences outgrow machine words.
using Index = boost::multiprecision::cpp_int;

// pair(m,n) = (m+n)^2 + m
inline Index pair_code(const Index& m, const Index& n) {
  Index s = m + n;
  return s * s + m;
}

inline std::uint64_t pair_code_u64(std::uint64_t m, std::uint64_t n) {
  std::uint64_t s = m + n;
  return s * s + m;
}

// Inverse of pair_code where one exists. Not every natural is a pair code.
inline std::optional<std::pair<Index, Index>> unpair_code(const Index& c) {
  if (c < 0) return std::nullopt;
  Index r = boost::multiprecision::sqrt(c);
  Index m = c - r * r;
  if (m > r) return std::nullopt;
  return std::make_pair(m, r - m);
}

// Sequence codes. A sequence of naturals is written as a trit string: the
// binary digits of each entry (msb first) followed by a separator trit 2,
// with a leading sentinel 1, read as a base-3 numeral. Every sequence gets a
// distinct positive code, decoding rejects anything that is not the canonical
// image of some sequence.
Index seq_encode(const std::vector<Index>& entries);
std::optional<std::vector<Index>> seq_decode(const Index& code);

// Finite sets of naturals as bitmask codes: code(S) = sum of 2^v for v in S.
// Monotone under inclusion.
Index finite_set_code(const std::vector<std::uint64_t>& members);

}  // namespace socchoice
