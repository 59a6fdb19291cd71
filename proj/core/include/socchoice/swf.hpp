#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "socchoice/society.hpp"
#include "socchoice/ultra.hpp"

namespace socchoice {

// A social welfare function: a total map from profile indexes to orders.
struct Swf {
  struct Dictator { std::uint64_t d; };
  struct FromUltrafilter { Ultrafilter u; };
  struct Table { std::vector<std::size_t> outputs; };  // by table profile number

  std::shared_ptr<const Society> society;
  std::function<WeakOrder(const Index&)> sigma;
  std::variant<Dictator, FromUltrafilter, Table> provenance;
};

Swf dictator_swf(std::shared_ptr<const Society> soc, std::uint64_t d);

// sigma(n) is the relation { (x,y) : mu(n,x,y) is in U }. Throws if U goes
// undecided at a needed index, or if the relation fails to be a weak order
// (which flags a corrupted U).
Swf swf_from_ultrafilter(std::shared_ptr<const Society> soc, Ultrafilter u);

// Explicit output table over a finite society, indexed by the mixed-radix
// table profile number (voter 0 fastest), matching all_profiles() order.
Swf table_swf(std::shared_ptr<const FiniteSociety> soc,
              std::vector<std::size_t> outputs);

std::size_t table_profile_number(const FiniteSociety& soc,
                                 const FiniteSociety::TableProfile& tp);
FiniteSociety::TableProfile table_profile_of(const Swf& s, const Index& n);

struct SwfCheckReport {
  struct Witness {
    Index n;
    std::optional<Index> m;  // the second profile, for independence
    Alt x, y;
  };
  std::size_t checked = 0;
  std::size_t applicable = 0;
  std::vector<Witness> failures;
  bool passed() const { return failures.empty(); }
};

// Unanimity: whenever every voter strictly prefers x to y, so does sigma.
SwfCheckReport check_unanimity(const Swf& s, const std::vector<Index>& probes,
                               std::uint64_t bound = 1000);

// Independence: profiles agreeing on a pair get the same social restriction
// to that pair.
SwfCheckReport check_independence(
    const Swf& s, const std::vector<std::pair<Index, Index>>& probe_pairs,
    std::uint64_t bound = 1000);

// Exhaustive independence on a finite society, factored: profiles are
// grouped by their voter-wise restriction to each pair; each group must get
// one social restriction. Equivalent to checking all pairs of profiles.
SwfCheckReport check_independence_exhaustive(const Swf& s);
std::vector<Index> exhaustive_profile_probes(const Swf& s);

// The membership test of the extracted filter: g(n) embeds coalition index n
// into the two-order profile p(0) = a<b<*, p(1) = b<a<* (default), and
// membership is whether sigma(g(n)) ranks a above b. a, b are the two
// smallest alternatives.
struct AdMembership {
  Alt a, b;
  std::function<Index(const Index&)> g;
  std::function<MemberResult(const Index&)> member;
};

AdMembership almost_decisive_membership(const Swf& s);

struct DecisivenessQuery {
  enum class Mode { decisive, almost_decisive, almost_decisive_at };
  Index coalition;
  Mode mode = Mode::decisive;
  std::optional<std::pair<Alt, Alt>> pair;  // absent: all ordered pairs
  std::optional<Index> at_profile;          // almost_decisive_at only
};

// Brute force over every table profile of a finite society. The independent
// oracle the one-shot membership test is validated against.
bool decisiveness_oracle(const Swf& s, const DecisivenessQuery& q);

// Extract the decisive-coalition ultrafilter. Refuses when the axiom checks
// fail; on finite societies also cross-checks membership against the
// decisiveness oracle on every subset.
Ultrafilter ks_extract(const Swf& s, std::uint64_t bound = 1000);

// Unique voter whose singleton is in the extracted filter; cross-checked by
// replaying every table profile.
std::uint64_t find_dictator(const Swf& s);

struct NonDictReport {
  struct Overrule {
    std::vector<std::uint64_t> voters;
    Index profile;
    Alt x, y;
  };
  std::vector<Overrule> plain;       // one overruled voter at a time
  std::vector<Overrule> tuples;      // k voters overruled simultaneously
  std::size_t cofinite_checks = 0;   // cofinite majorities followed
  bool passed = true;
};

NonDictReport nondictatoriality_suite(const Swf& s, std::size_t k,
                                      std::uint64_t bound);

}  // namespace socchoice
