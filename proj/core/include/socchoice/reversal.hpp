#pragma once

#include <map>

#include "socchoice/swf.hpp"

namespace socchoice {

// A total computable enumeration whose range the gadget interrogates.
struct Enumerator {
  std::function<std::uint64_t(std::uint64_t)> h;
  std::string description;
};

// finite table, every unlisted argument maps to the default
Enumerator table_enumerator(std::map<std::uint64_t, std::uint64_t> table,
                            std::uint64_t default_value = 0);

// a bundled step-counting toy: h(m) decodes m as (n, t) and emits n exactly
// when the Collatz orbit of n reaches 1 within t steps, else 0
Enumerator toy_enumerator();

// Society over all naturals whose algebra is generated by the row sequence
// B: even rows B(2n) = { v : some m < v has h(m) = n } (empty or an upward
// tail, decided by bounded scan), odd rows B(2n+1) = {n} (the atoms).
struct GadgetSociety {
  Enumerator h;
  std::shared_ptr<const Algebra> algebra;
  std::shared_ptr<const Society> society;
};

GadgetSociety build_gadget(Enumerator h);

// Profile: voters in B(2n) rank 0 over 1, everyone else 1 over 0, third
// alternative at the bottom throughout.
Index gadget_g(const GadgetSociety& gs, std::uint64_t n);

// sigma over the gadget, derived from the stage-bounded Frechet ultrafilter
Swf gadget_swf(const GadgetSociety& gs, std::uint64_t stage_bound);

// Membership of n in the range of h, read off the social outcome at g(n).
// Deciding it means deciding cofiniteness of B(2n); the scan is cut at T and
// the verdict says so. An unbounded evaluation would decide the full range,
// which is exactly what a computable sigma cannot deliver.
struct PhiResult {
  enum class Kind { in_range, no_witness_up_to };
  Kind kind;
  std::uint64_t stage;  // in_range: least v with a witness m < v; else T
  bool operator==(const PhiResult&) const = default;
};

PhiResult phi(const GadgetSociety& gs, const Swf& sigma, std::uint64_t n,
              std::uint64_t T);

}  // namespace socchoice
