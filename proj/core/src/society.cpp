#include "socchoice/society.hpp"

#include <algorithm>
#include <set>

namespace socchoice {

namespace {

std::vector<Alt> checked_alts(std::vector<Alt> X) {
  std::sort(X.begin(), X.end());
  if (X.empty() || std::adjacent_find(X.begin(), X.end()) != X.end())
    throw std::invalid_argument("alternative set must be nonempty and distinct");
  return X;
}

}  // namespace

Society::Society(std::vector<Alt> X, std::shared_ptr<const Algebra> algebra)
    : alts_(checked_alts(std::move(X))),
      orders_(enumerate_weak_orders(alts_)),
      algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("society needs an algebra");
  if (orders_.size() < 2)
    throw std::invalid_argument("society needs at least two orders");
}

std::size_t Society::order_pos(const WeakOrder& w) const {
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (orders_[i] == w) return i;
  throw std::invalid_argument("order not over this society's alternatives");
}

const Society::Profile& Society::profile_at(const Index& n) const {
  std::lock_guard lock(cache_mutex_);
  auto it = profile_cache_.find(n);
  if (it != profile_cache_.end()) return it->second;

  Profile p;
  auto outer = seq_decode(n);
  do {
    if (!outer || outer->size() != 2) break;

    auto perm_codes = seq_decode((*outer)[0]);
    if (!perm_codes || perm_codes->size() != orders_.size()) break;
    std::vector<std::size_t> perm;
    std::set<std::size_t> seen;
    bool ok = true;
    for (const Index& c : *perm_codes) {
      std::size_t pos = orders_.size();
      for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i].code() == c) { pos = i; break; }
      if (pos == orders_.size() || !seen.insert(pos).second) { ok = false; break; }
      perm.push_back(pos);
    }
    if (!ok) break;

    auto cells = seq_decode((*outer)[1]);
    if (!cells || cells->empty() || cells->size() > orders_.size() - 1) break;

    p.valid = true;
    p.perm = std::move(perm);
    p.cells = std::move(*cells);
    for (const Index& c : p.cells) p.cell_sets.push_back(algebra_->set_at(c));
  } while (false);

  return profile_cache_.emplace(n, std::move(p)).first->second;
}

const WeakOrder& Society::eval(const Index& n, std::uint64_t v) const {
  if (!voters().contains(v))
    throw std::invalid_argument("voter outside the universe");
  const Profile& p = profile_at(n);
  if (!p.valid) return orders_[0];
  std::size_t hits = 0, hit = 0;
  for (std::size_t j = 0; j < p.cell_sets.size(); ++j)
    if (p.cell_sets[j].contains(v)) { ++hits; hit = j; }
  if (hits == 1) return orders_[p.perm[hit]];
  return orders_[p.perm[p.cells.size()]];
}

Index Society::embed(const std::vector<std::size_t>& perm,
                     const std::vector<Index>& cells) const {
  if (perm.size() != orders_.size())
    throw std::invalid_argument("permutation must cover every order");
  std::set<std::size_t> seen(perm.begin(), perm.end());
  if (seen.size() != perm.size() || *seen.rbegin() >= orders_.size())
    throw std::invalid_argument("not a permutation of order positions");
  if (cells.empty() || cells.size() > orders_.size() - 1)
    throw std::invalid_argument("cell count out of range");
  std::vector<Index> perm_codes;
  for (std::size_t i : perm) perm_codes.push_back(orders_[i].code());
  return seq_encode({seq_encode(perm_codes), seq_encode(cells)});
}

Index Society::mu(const Index& n, Alt x, Alt y) const {
  if (!std::binary_search(alts_.begin(), alts_.end(), x) ||
      !std::binary_search(alts_.begin(), alts_.end(), y))
    throw std::invalid_argument("alternative outside the society");
  {
    std::lock_guard lock(cache_mutex_);
    auto it = mu_cache_.find({n, x, y});
    if (it != mu_cache_.end()) return it->second;
  }
  const Algebra& a = *algebra_;
  const Profile& p = profile_at(n);

  Index result;
  if (!p.valid) {
    result = orders_[0].leq(x, y) ? a.universe_index() : a.empty_index();
  } else {
    std::size_t k = p.cells.size();
    std::vector<Index> compl_idx;
    for (const Index& c : p.cells) compl_idx.push_back(a.complement_index(c));

    // exclusive region of cell j: in that cell and outside every other
    std::vector<Index> excl;
    for (std::size_t j = 0; j < k; ++j) {
      Index d = p.cells[j];
      for (std::size_t i = 0; i < k; ++i)
        if (i != j) d = a.intersect_index(d, compl_idx[i]);
      excl.push_back(std::move(d));
    }

    auto fold_union = [&](const std::vector<Index>& parts) -> std::optional<Index> {
      std::optional<Index> acc;
      for (const Index& part : parts)
        acc = acc ? a.union_index(*acc, part) : part;
      return acc;
    };

    std::vector<Index> agree, disagree;
    for (std::size_t j = 0; j < k; ++j)
      (orders_[p.perm[j]].leq(x, y) ? agree : disagree).push_back(excl[j]);

    if (orders_[p.perm[k]].leq(x, y)) {
      // default bucket agrees: everything outside the disagreeing regions
      auto u = fold_union(disagree);
      result = u ? a.complement_index(*u) : a.universe_index();
    } else {
      auto u = fold_union(agree);
      result = u ? *u : a.empty_index();
    }
  }

  std::lock_guard lock(cache_mutex_);
  return mu_cache_.emplace(std::make_tuple(n, x, y), std::move(result)).first->second;
}

Index Society::mu_strict(const Index& n, Alt x, Alt y) const {
  return algebra_->complement_index(mu(n, y, x));
}

Index Society::mu_indiff(const Index& n, Alt x, Alt y) const {
  return algebra_->intersect_index(mu(n, x, y), mu(n, y, x));
}

Cert Society::profiles_agree_on(const Index& n, const Index& m, Alt x, Alt y,
                                std::uint64_t bound) const {
  if (voters().finite) {
    for (std::uint64_t v : *voters().finite)
      if (order_relation(eval(n, v), x, y) != order_relation(eval(m, v), x, y))
        return Cert::no;
    return Cert::yes;
  }
  const Algebra& a = *algebra_;
  Cert fwd = set_equal(a.set_at(mu(n, x, y)), a.set_at(mu(m, x, y)), bound);
  Cert bwd = set_equal(a.set_at(mu(n, y, x)), a.set_at(mu(m, y, x)), bound);
  if (fwd == Cert::no || bwd == Cert::no) return Cert::no;
  if (fwd == Cert::yes && bwd == Cert::yes) return Cert::yes;
  return Cert::up_to_bound;
}

std::vector<std::size_t> Society::perm_starting_with(
    const std::vector<std::size_t>& front) const {
  std::set<std::size_t> seen(front.begin(), front.end());
  if (seen.size() != front.size() ||
      (!seen.empty() && *seen.rbegin() >= orders_.size()))
    throw std::invalid_argument("front positions must be distinct and in range");
  std::vector<std::size_t> perm = front;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    if (!seen.count(i)) perm.push_back(i);
  return perm;
}

std::shared_ptr<const Society> canonical_society(
    std::vector<Alt> X, std::shared_ptr<const Algebra> algebra) {
  return std::make_shared<const Society>(std::move(X), std::move(algebra));
}

FiniteSociety::FiniteSociety(std::vector<std::uint64_t> voters,
                             std::vector<Alt> X)
    : FiniteSociety(powerset_algebra(std::move(voters)), std::move(X)) {}

FiniteSociety::FiniteSociety(std::shared_ptr<const PowersetAlgebra> pow,
                             std::vector<Alt> X)
    : Society(std::move(X), pow), pow_(std::move(pow)) {
  if (pow_->size() < 1 || pow_->size() > 4)
    throw std::invalid_argument("finite society supports 1 to 4 voters");
  if (alts().size() != 3)
    throw std::invalid_argument("finite society supports exactly 3 alternatives");
}

std::vector<FiniteSociety::TableProfile> FiniteSociety::all_profiles() const {
  std::size_t k = orders().size(), n = pow_->size();
  std::vector<TableProfile> out;
  TableProfile cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == k) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Index FiniteSociety::table_index(const TableProfile& tp) const {
  if (tp.size() != pow_->size())
    throw std::invalid_argument("table profile must assign every voter");
  for (std::size_t o : tp)
    if (o >= orders().size()) throw std::invalid_argument("order position out of range");

  std::vector<std::size_t> used;
  for (std::size_t o : tp)
    if (std::find(used.begin(), used.end(), o) == used.end()) used.push_back(o);
  std::sort(used.begin(), used.end());

  std::vector<Index> cells;
  for (std::size_t o : used) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < tp.size(); ++v)
      if (tp[v] == o) mask |= 1u << v;
    cells.push_back(pow_->subset_index(mask));
  }
  return embed(perm_starting_with(used), cells);
}

std::shared_ptr<const FiniteSociety> finite_society(
    std::vector<std::uint64_t> voters, std::vector<Alt> X) {
  return std::make_shared<const FiniteSociety>(std::move(voters), std::move(X));
}

}  // namespace socchoice
