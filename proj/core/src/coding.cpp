#include "socchoice/coding.hpp"

#include <algorithm>

namespace socchoice {

namespace {

void push_binary(std::vector<int>& trits, const Index& a) {
  if (a == 0) {
    trits.push_back(0);
    return;
  }
  std::vector<int> bits;
  Index v = a;
  while (v > 0) {
    bits.push_back(static_cast<int>(v & 1));
    v >>= 1;
  }
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) trits.push_back(*it);
}

}  // namespace

Index seq_encode(const std::vector<Index>& entries) {
  std::vector<int> trits;
  for (const Index& a : entries) {
    push_binary(trits, a);
    trits.push_back(2);
  }
  Index value = 1;  // sentinel
  for (int t : trits) value = value * 3 + t;
  return value;
}

std::optional<std::vector<Index>> seq_decode(const Index& code) {
  if (code < 1) return std::nullopt;
  std::vector<int> trits;
  Index v = code;
  while (v > 0) {
    trits.push_back(static_cast<int>(v % 3));
    v /= 3;
  }
  std::reverse(trits.begin(), trits.end());
  if (trits.empty() || trits.front() != 1) return std::nullopt;

  std::vector<Index> out;
  std::vector<int> chunk;
  for (std::size_t i = 1; i < trits.size(); ++i) {
    if (trits[i] == 2) {
      if (chunk.empty()) return std::nullopt;
      if (chunk.size() > 1 && chunk.front() == 0) return std::nullopt;
      Index a = 0;
      for (int b : chunk) a = (a << 1) | b;
      out.push_back(a);
      chunk.clear();
    } else {
      chunk.push_back(trits[i]);
    }
  }
  if (!chunk.empty()) return std::nullopt;  // must end on a separator
  return out;
}

Index finite_set_code(const std::vector<std::uint64_t>& members) {
  Index c = 0;
  for (std::uint64_t v : members) boost::multiprecision::bit_set(c, static_cast<unsigned>(v));
  return c;
}

}  // namespace socchoice
