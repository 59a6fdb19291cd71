#pragma once

#include <array>
#include <optional>

#include "socchoice/swf.hpp"

namespace socchoice {

// Exhaustive desk-scale search for aggregation rules satisfying unanimity
// and pair independence on two voters and three alternatives. Independence
// lets the rule factor into three per-pair tables; unanimity pins the two
// all-strict cells of each table; the search backtracks over the rest and
// prunes as soon as some profile's three pair verdicts fail to glue into a
// weak order.

enum class ArrowDomain { linear, weak };

// social stance on an ordered pair: first over second, second over first, tie
inline int rel3_state(Rel3 r) {
  switch (r) {
    case Rel3::strict_less: return 0;
    case Rel3::strict_greater: return 1;
    default: return 2;
  }
}

struct ArrowSurvivor {
  ArrowDomain domain;
  // per pair {0,1}, {0,2}, {1,2}: social state by voter-state key
  // (key = 3 * state(voter 0) + state(voter 1)); -1 where the domain never
  // produces the key
  std::array<std::array<int, 9>, 3> table;
  std::optional<std::uint64_t> dictator;
  Index code;  // base-3 digest of the assigned cells, the deterministic sort key
};

struct ArrowSearchResult {
  std::vector<ArrowSurvivor> survivors;  // sorted by code
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;

  struct PruneWitness {
    std::size_t order_a, order_b;  // the profile exhibiting the violation
    std::array<int, 3> states;     // its three incoherent pair verdicts
  };
  std::vector<PruneWitness> prune_log;  // first hundred witnesses
};

ArrowSearchResult enumerate_arrovian_swfs(std::size_t voters, std::size_t alts,
                                          ArrowDomain domain);

// Flat recount of the linear domain without backtracking: every assignment
// of the six free cells, validated against all 36 profiles.
std::uint64_t naive_linear_count();

// The two projection rules, in the survivor format.
ArrowSurvivor projection_rule(ArrowDomain domain, std::uint64_t voter);

struct KsBridgeReport {
  std::uint64_t expected;
  std::uint64_t extracted;
  bool match;
};

// Bridge a survivor into the society machinery and confirm the extracted
// principal point equals the brute-force verdict. Linear survivors are first
// completed on the tie-carrying cells by their own dictator's projection.
KsBridgeReport verify_against_ks(const ArrowSurvivor& s);

}  // namespace socchoice
