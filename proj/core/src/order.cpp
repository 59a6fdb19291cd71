#include "socchoice/order.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace socchoice {

namespace {

bool is_transitive(std::uint32_t rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(rel >> (i * n + j) & 1)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if ((rel >> (j * n + k) & 1) && !(rel >> (i * n + k) & 1)) return false;
    }
  return true;
}

bool is_strongly_connected(std::uint32_t rel, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(rel >> (i * n + j) & 1) && !(rel >> (j * n + i) & 1)) return false;
  return true;
}

std::uint32_t rel_from_levels(const std::vector<std::size_t>& level,
                              std::size_t n) {
  std::uint32_t rel = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (level[i] <= level[j]) rel |= 1u << (i * n + j);
  return rel;
}

}  // namespace

std::optional<WeakOrder> WeakOrder::from_rel(std::vector<Alt> alts,
                                             std::uint32_t rel) {
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  std::size_t n = alts.size();
  if (n == 0 || n > 5) return std::nullopt;
  if (n * n < 32 && (rel >> (n * n)) != 0) return std::nullopt;
  if (!is_transitive(rel, n) || !is_strongly_connected(rel, n))
    return std::nullopt;
  return WeakOrder(std::move(alts), rel);
}

std::size_t WeakOrder::pos(Alt x) const {
  auto it = std::lower_bound(alts_.begin(), alts_.end(), x);
  if (it == alts_.end() || *it != x)
    throw std::out_of_range("alternative not in order");
  return static_cast<std::size_t>(it - alts_.begin());
}

bool WeakOrder::leq(Alt x, Alt y) const {
  return rel_ >> (pos(x) * alts_.size() + pos(y)) & 1;
}

bool WeakOrder::less(Alt x, Alt y) const { return leq(x, y) && !leq(y, x); }

bool WeakOrder::equiv(Alt x, Alt y) const { return leq(x, y) && leq(y, x); }

Index WeakOrder::code() const {
  Index c = 0;
  std::size_t n = alts_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel_ >> (i * n + j) & 1)
        boost::multiprecision::bit_set(
            c, static_cast<unsigned>(pair_code_u64(alts_[i], alts_[j])));
  return c;
}

std::vector<std::pair<Alt, Alt>> WeakOrder::pairs() const {
  std::vector<std::pair<Alt, Alt>> out;
  std::size_t n = alts_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel_ >> (i * n + j) & 1) out.emplace_back(alts_[i], alts_[j]);
  return out;
}

std::optional<WeakOrder> WeakOrder::decode(const Index& code,
                                           const std::vector<Alt>& alts) {
  std::vector<Alt> xs = alts;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::size_t n = xs.size();
  if (n == 0 || n > 5) return std::nullopt;

  Index residue = code;
  std::uint32_t rel = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned bit = static_cast<unsigned>(pair_code_u64(xs[i], xs[j]));
      if (boost::multiprecision::bit_test(code, bit)) {
        rel |= 1u << (i * n + j);
        boost::multiprecision::bit_unset(residue, bit);
      }
    }
  if (residue != 0) return std::nullopt;  // bits outside X x X
  return from_rel(std::move(xs), rel);
}

Rel3 order_relation(const WeakOrder& r, Alt x, Alt y) {
  bool xy = r.leq(x, y), yx = r.leq(y, x);
  if (xy && yx) return Rel3::equivalent;
  return xy ? Rel3::strict_less : Rel3::strict_greater;
}

std::vector<WeakOrder> enumerate_weak_orders(const std::vector<Alt>& X) {
  std::vector<Alt> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::size_t n = xs.size();
  if (n < 1 || n > 5) throw std::invalid_argument("alternative set too large");

  std::vector<WeakOrder> out;
  if (n <= 4) {
    std::uint32_t limit = 1u << (n * n);
    for (std::uint32_t rel = 0; rel < limit; ++rel) {
      auto w = WeakOrder::from_rel(xs, rel);
      if (w) out.push_back(*w);
    }
  } else {
    // Level patterns: maps X -> {0..k-1} with contiguous image are exactly
    // the ordered set partitions, i.e. the weak orders.
    std::vector<std::size_t> level(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t v = t;
      std::size_t maxl = 0;
      std::set<std::size_t> used;
      for (std::size_t i = 0; i < n; ++i) {
        level[i] = v % n;
        v /= n;
        used.insert(level[i]);
        maxl = std::max(maxl, level[i]);
      }
      if (used.size() != maxl + 1) continue;  // image not contiguous from 0
      auto w = WeakOrder::from_rel(xs, rel_from_levels(level, n));
      if (w) out.push_back(*w);
    }
  }
  std::sort(out.begin(), out.end(), [](const WeakOrder& a, const WeakOrder& b) {
    return a.code() < b.code();
  });
  return out;
}

OrderPattern OrderPattern::parse(const std::string& text) {
  OrderPattern p;
  std::vector<Alt> group;
  bool saw_wildcard = false;
  std::size_t i = 0;
  auto flush = [&]() {
    if (!group.empty()) {
      p.groups.push_back(group);
      group.clear();
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Alt a = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        a = a * 10 + static_cast<Alt>(text[i++] - '0');
      group.push_back(a);
    } else if (c == '<') {
      flush();
      ++i;
    } else if (c == '~') {
      ++i;
    } else if (c == '*') {
      saw_wildcard = true;
      if (group.empty()) {
        // "... < *": wildcard level of its own
        p.wildcard = Wildcard::own_level;
        p.wildcard_pos = p.groups.size();
      } else {
        // "... ~ *": wildcard joins the current group
        p.wildcard = Wildcard::join_group;
        p.wildcard_pos = p.groups.size();  // index after flush below
      }
      ++i;
    } else {
      throw std::invalid_argument("bad pattern character");
    }
  }
  flush();
  if (saw_wildcard && p.wildcard == Wildcard::join_group &&
      p.wildcard_pos >= p.groups.size())
    p.wildcard_pos = p.groups.size() - 1;
  return p;
}

WeakOrder make_order(const OrderPattern& pattern, const std::vector<Alt>& X) {
  std::vector<Alt> xs = X;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::size_t n = xs.size();
  if (n == 0) throw std::invalid_argument("empty alternative set");

  // Assemble the final level list: mentioned groups, wildcard inserted or
  // merged per the pattern.
  std::vector<std::vector<Alt>> levels = pattern.groups;
  std::vector<Alt> mentioned;
  for (const auto& g : levels) mentioned.insert(mentioned.end(), g.begin(), g.end());
  std::sort(mentioned.begin(), mentioned.end());
  if (std::adjacent_find(mentioned.begin(), mentioned.end()) != mentioned.end())
    throw std::invalid_argument("pattern mentions an alternative twice");
  std::vector<Alt> rest;
  for (Alt a : xs)
    if (!std::binary_search(mentioned.begin(), mentioned.end(), a))
      rest.push_back(a);
  for (Alt a : mentioned)
    if (!std::binary_search(xs.begin(), xs.end(), a))
      throw std::invalid_argument("pattern mentions an unknown alternative");

  switch (pattern.wildcard) {
    case OrderPattern::Wildcard::none:
      if (!rest.empty())
        throw std::invalid_argument("pattern does not cover X");
      break;
    case OrderPattern::Wildcard::own_level:
      if (pattern.wildcard_pos > levels.size())
        throw std::invalid_argument("wildcard position out of range");
      if (!rest.empty())
        levels.insert(levels.begin() + static_cast<std::ptrdiff_t>(pattern.wildcard_pos), rest);
      break;
    case OrderPattern::Wildcard::join_group:
      if (pattern.wildcard_pos >= levels.size())
        throw std::invalid_argument("wildcard group out of range");
      for (Alt a : rest) levels[pattern.wildcard_pos].push_back(a);
      break;
  }

  std::vector<std::size_t> level(n, 0);
  std::vector<bool> assigned(n, false);
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (Alt a : levels[l]) {
      std::size_t p = static_cast<std::size_t>(
          std::lower_bound(xs.begin(), xs.end(), a) - xs.begin());
      level[p] = l;
      assigned[p] = true;
    }
  for (bool b : assigned)
    if (!b) throw std::invalid_argument("pattern does not cover X");

  auto w = WeakOrder::from_rel(xs, rel_from_levels(level, n));
  if (!w) throw std::logic_error("level pattern produced a non-order");
  return *w;
}

WeakOrder restrict_order(const WeakOrder& r, const std::vector<Alt>& Y) {
  std::vector<Alt> ys = Y;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.empty()) throw std::invalid_argument("empty restriction");
  for (Alt a : ys)
    if (!std::binary_search(r.alts().begin(), r.alts().end(), a))
      throw std::invalid_argument("restriction outside the order's domain");
  std::size_t m = ys.size();
  std::uint32_t rel = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (r.leq(ys[i], ys[j])) rel |= 1u << (i * m + j);
  auto w = WeakOrder::from_rel(ys, rel);
  if (!w) throw std::logic_error("restriction of a weak order must be one");
  return *w;
}

}  // namespace socchoice
