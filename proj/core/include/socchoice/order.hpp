#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "socchoice/coding.hpp"

namespace socchoice {

using Alt = std::uint32_t;

enum class Rel3 { strict_less, equivalent, strict_greater };

// Weak order on a finite alternative set: transitive, strongly connected,
// ties allowed. Stored as a relation bitmask over local positions; the
// canonical numeric code is the bitmask-of-pair-codes over the alt values,
// which is monotone under relation inclusion.
class WeakOrder {
 public:
  // rel bit (i * n + j) set means alts[i] is ranked at least as highly as
  // alts[j].
  static std::optional<WeakOrder> from_rel(std::vector<Alt> alts,
                                           std::uint32_t rel);
  static std::optional<WeakOrder> decode(const Index& code,
                                         const std::vector<Alt>& alts);

  const std::vector<Alt>& alts() const { return alts_; }
  std::uint32_t rel_mask() const { return rel_; }

  bool leq(Alt x, Alt y) const;     // x at least as high as y
  bool less(Alt x, Alt y) const;    // strictly higher
  bool equiv(Alt x, Alt y) const;

  Index code() const;
  std::vector<std::pair<Alt, Alt>> pairs() const;

  bool operator==(const WeakOrder& o) const {
    return alts_ == o.alts_ && rel_ == o.rel_;
  }

 private:
  WeakOrder(std::vector<Alt> alts, std::uint32_t rel)
      : alts_(std::move(alts)), rel_(rel) {}
  std::size_t pos(Alt x) const;

  std::vector<Alt> alts_;  // sorted ascending
  std::uint32_t rel_;
};

Rel3 order_relation(const WeakOrder& r, Alt x, Alt y);

// All weak orders on X, each exactly once, ascending by code.
// Counts 1, 3, 13, 75, 541 for |X| = 1..5.
std::vector<WeakOrder> enumerate_weak_orders(const std::vector<Alt>& X);

// The x < y < z ~ * pattern notation. Groups are listed best-first; the
// wildcard collects every unmentioned alternative into one indifference
// class, either as its own level or merged into an existing group.
struct OrderPattern {
  enum class Wildcard { none, own_level, join_group };
  std::vector<std::vector<Alt>> groups;
  Wildcard wildcard = Wildcard::none;
  std::size_t wildcard_pos = 0;  // own_level: insertion index; join_group: group index

  // "0<1<2~*", "0<*", "0~1<2"
  static OrderPattern parse(const std::string& text);
};

WeakOrder make_order(const OrderPattern& pattern, const std::vector<Alt>& X);
WeakOrder restrict_order(const WeakOrder& r, const std::vector<Alt>& Y);

}  // namespace socchoice
