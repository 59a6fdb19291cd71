#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "socchoice/order.hpp"
#include "socchoice/setalg.hpp"

namespace socchoice {

// Countable society over (V, X, A) with the canonical quasi-partition
// profile family: profile index n decodes (when valid) to a pair (p, s) of a
// permutation of W and a quasi-partition of algebra indexes. A voter lying
// in exactly one cell s(j) gets order p(j); everyone else gets the default
// bucket p(|s|). Invalid indexes denote the constant profile at the first
// enumerated order.
class Society {
 public:
  Society(std::vector<Alt> X, std::shared_ptr<const Algebra> algebra);
  virtual ~Society() = default;

  const std::vector<Alt>& alts() const { return alts_; }
  const std::vector<WeakOrder>& orders() const { return orders_; }
  const Algebra& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra> algebra_ptr() const { return algebra_; }
  const Universe& voters() const { return algebra_->universe(); }

  struct Profile {
    bool valid = false;               // decoded as a genuine (p, s) pair
    std::vector<std::size_t> perm;    // positions into orders()
    std::vector<Index> cells;
    std::vector<DescribedSet> cell_sets;
  };

  const Profile& profile_at(const Index& n) const;
  const WeakOrder& eval(const Index& n, std::uint64_t v) const;

  // The quasi-partition embedding e. perm is a permutation of order
  // positions; 1 <= |cells| <= |W| - 1.
  Index embed(const std::vector<std::size_t>& perm,
              const std::vector<Index>& cells) const;

  // Uniform measurability: index of { v : x is ranked at least as highly as
  // y by f_n(v) }, built by boolean combination of exclusive cell regions.
  Index mu(const Index& n, Alt x, Alt y) const;
  Index mu_strict(const Index& n, Alt x, Alt y) const;  // complement of mu(n,y,x)
  Index mu_indiff(const Index& n, Alt x, Alt y) const;

  Cert profiles_agree_on(const Index& n, const Index& m, Alt x, Alt y,
                         std::uint64_t bound = 1000) const;

  // Permutation beginning with the given order positions, continuing with
  // the rest ascending by code.
  std::vector<std::size_t> perm_starting_with(
      const std::vector<std::size_t>& front) const;

  std::size_t order_pos(const WeakOrder& w) const;

 private:
  std::vector<Alt> alts_;
  std::vector<WeakOrder> orders_;
  std::shared_ptr<const Algebra> algebra_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Index, Profile> profile_cache_;
  mutable std::map<std::tuple<Index, Alt, Alt>, Index> mu_cache_;
};

std::shared_ptr<const Society> canonical_society(
    std::vector<Alt> X, std::shared_ptr<const Algebra> algebra);

// Finite society over a powerset algebra, additionally exposing the full
// profile table W^V and the bridge locating each table profile inside the
// canonical quasi-partition family.
class FiniteSociety : public Society {
 public:
  // a table profile assigns an order position to each voter, in members() order
  using TableProfile = std::vector<std::size_t>;

  FiniteSociety(std::vector<std::uint64_t> voters, std::vector<Alt> X);

  const std::vector<std::uint64_t>& members() const { return pow_->members(); }
  const PowersetAlgebra& powerset() const { return *pow_; }
  std::shared_ptr<const PowersetAlgebra> powerset_ptr() const { return pow_; }

  std::vector<TableProfile> all_profiles() const;  // |W|^|V| of them
  Index table_index(const TableProfile& tp) const;  // the bridge

 private:
  FiniteSociety(std::shared_ptr<const PowersetAlgebra> pow, std::vector<Alt> X);

  std::shared_ptr<const PowersetAlgebra> pow_;
};

std::shared_ptr<const FiniteSociety> finite_society(
    std::vector<std::uint64_t> voters, std::vector<Alt> X);

}  // namespace socchoice
