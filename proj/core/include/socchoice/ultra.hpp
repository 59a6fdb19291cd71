#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "socchoice/setalg.hpp"

namespace socchoice {

// Three-valued membership: unknown only appears over oracle-backed algebras
// where the stage bound has not settled a finite/cofinite form.
struct MemberResult {
  enum class Kind { in, out, unknown };
  Kind kind;
  std::uint64_t stage = 0;

  static MemberResult in() { return {Kind::in, 0}; }
  static MemberResult out() { return {Kind::out, 0}; }
  static MemberResult unknown(std::uint64_t stage) { return {Kind::unknown, stage}; }
  bool is_in() const { return kind == Kind::in; }
  bool is_out() const { return kind == Kind::out; }
  bool decided() const { return kind != Kind::unknown; }
};

struct Ultrafilter {
  struct Principal { std::uint64_t d; };
  struct Frechet { std::uint64_t stage_bound; };
  struct Derived { std::string origin; };

  std::shared_ptr<const Algebra> algebra;
  std::function<MemberResult(const Index&)> member;
  std::variant<Principal, Frechet, Derived> kind;

  bool is_principal() const { return std::holds_alternative<Principal>(kind); }
};

Ultrafilter principal_ultrafilter(std::shared_ptr<const Algebra> a, std::uint64_t d);

// The unique non-principal ultrafilter on the finite-cofinite algebra:
// cofinite in, finite out. Refuses algebras with oracle-backed generators
// unless a stage bound is supplied; membership then goes three-valued.
Ultrafilter frechet_ultrafilter(std::shared_ptr<const Algebra> a);
Ultrafilter frechet_ultrafilter(std::shared_ptr<const Algebra> a, std::uint64_t stage_bound);

// Probe-based axiom reports. Witnesses carry the offending index tuple.
struct ClauseReport {
  std::string clause;
  std::size_t checked = 0;
  std::size_t applicable = 0;
  std::vector<std::vector<Index>> failures;

  bool passed() const { return failures.empty(); }
};

struct AxiomReport {
  std::vector<ClauseReport> clauses;
  bool passed() const {
    for (const auto& c : clauses)
      if (!c.passed()) return false;
    return true;
  }
};

// Def. 2.4 clauses 1-5, instance-wise over probe triples (i,j,k).
AxiomReport check_ultrafilter_axioms(const Ultrafilter& u,
                                     const std::vector<std::array<Index, 3>>& probes,
                                     std::uint64_t bound = 1000);

// Lemma 2.5: complement exclusion, union splitting, finite-sequence union
// splitting, and the principality equivalences (the latter exhaustive only
// when the probe carries the full extensional picture, e.g. a powerset).
struct UnionProbe {
  std::vector<Index> parts;
  Index whole;
};

AxiomReport uf_basic_properties(const Ultrafilter& u,
                                const std::vector<std::array<Index, 3>>& probes,
                                const std::vector<UnionProbe>& union_probes,
                                std::uint64_t bound = 1000);

// All triples over representative indexes of every subset of a small
// powerset algebra: the exhaustive probe the finite checks run on.
std::vector<std::array<Index, 3>> exhaustive_probes(const PowersetAlgebra& a);

}  // namespace socchoice
