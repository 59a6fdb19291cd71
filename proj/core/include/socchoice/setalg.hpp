#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "socchoice/coding.hpp"

namespace socchoice {

// Voter universe: either an explicit finite set or all of N.
struct Universe {
  std::optional<std::vector<std::uint64_t>> finite;  // sorted when present

  bool contains(std::uint64_t v) const;
  bool is_infinite() const { return !finite.has_value(); }
  static Universe naturals() { return Universe{}; }
  static Universe of(std::vector<std::uint64_t> members);
};

// Finite/cofinite normal form, or an honest "not settled below this stage".
struct NormalForm {
  enum class Kind { finite, cofinite, unknown };
  Kind kind = Kind::unknown;
  std::vector<std::uint64_t> support;  // sorted
  std::uint64_t stage = 0;             // meaningful for unknown

  static NormalForm fin(std::vector<std::uint64_t> s);
  static NormalForm cof(std::vector<std::uint64_t> s);
  static NormalForm unk(std::uint64_t stage);
  bool exact() const { return kind != Kind::unknown; }
};

// A subset of the universe with decidable pointwise membership. Values are
// immutable DAG nodes shared freely.
class DescribedSet {
 public:
  struct OracleGen {
    std::function<bool(std::uint64_t)> member;
    std::function<NormalForm(std::uint64_t)> normal_form_at;  // stage bound
    std::string description;
  };

  static DescribedSet finite(Universe u, std::vector<std::uint64_t> members);
  static DescribedSet cofinite(Universe u, std::vector<std::uint64_t> excluded);
  static DescribedSet oracle(Universe u, OracleGen gen);
  static DescribedSet complement(const DescribedSet& s);
  static DescribedSet intersect(const DescribedSet& a, const DescribedSet& b);

  bool contains(std::uint64_t v) const;
  // Exact wherever the structure allows; Unknown(stage) only past oracle
  // generators that have not settled below the stage bound.
  NormalForm normal_form(std::uint64_t stage_bound) const;
  const Universe& universe() const;

 private:
  struct Node;
  explicit DescribedSet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Three-valued set facts, honest about bounded checking.
enum class Cert { yes, no, up_to_bound };

Cert set_is_empty(const DescribedSet& s, std::uint64_t bound);
Cert set_is_universe(const DescribedSet& s, std::uint64_t bound);
Cert set_subset(const DescribedSet& a, const DescribedSet& b, std::uint64_t bound);
Cert set_equal(const DescribedSet& a, const DescribedSet& b, std::uint64_t bound);

// Boolean formation sequences. Entry (0,n,n) loads generator n, (1,n,n)
// complements the set built at position n, (2,n,m) intersects the sets built
// at positions n and m.
struct FormationEntry {
  std::uint8_t tag;
  std::uint64_t n;
  std::uint64_t m;
  bool operator==(const FormationEntry&) const = default;
};

using FormationSeq = std::vector<FormationEntry>;

bool formation_valid(const FormationSeq& s);
Index formation_encode(const FormationSeq& s);
std::optional<FormationSeq> formation_decode(const Index& code);

// Countable atomic algebra indexed by formation-sequence codes. Invalid
// codes denote the empty set.
class Algebra {
 public:
  using GeneratorFn = std::function<DescribedSet(std::uint64_t)>;
  using AtomSeqFn = std::function<FormationSeq(std::uint64_t)>;

  Algebra(Universe u, GeneratorFn gen, AtomSeqFn atom_seq,
          bool exact_generators, std::string description);

  const Universe& universe() const { return universe_; }
  bool exact_generators() const { return exact_generators_; }
  const std::string& description() const { return description_; }

  DescribedSet eval_formation(const FormationSeq& s) const;  // throws on junk
  DescribedSet set_at(const Index& i) const;                 // total, junk -> empty
  Index index_of(const FormationSeq& s) const { return formation_encode(s); }

  Index atom_index(std::uint64_t v) const;
  Index empty_index() const;
  Index universe_index() const;
  Index complement_index(const Index& i) const;
  Index intersect_index(const Index& i, const Index& j) const;
  Index union_index(const Index& i, const Index& j) const;

  NormalForm normal_form(const Index& i, std::uint64_t stage_bound) const;

  DescribedSet generator(std::uint64_t n) const { return gen_(n); }

 private:
  FormationSeq seq_or_empty(const Index& i) const;

  Universe universe_;
  GeneratorFn gen_;
  AtomSeqFn atom_seq_;
  bool exact_generators_;
  std::string description_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Index, DescribedSet> set_cache_;
};

// Generators are the singletons {v}; the generated algebra is exactly the
// finite and cofinite subsets of N.
std::shared_ptr<const Algebra> finite_cofinite_algebra();

// Atomic algebra holding every subset of a finite universe, with an
// exhaustive side enumeration of the 2^|V| subsets.
class PowersetAlgebra : public Algebra {
 public:
  explicit PowersetAlgebra(std::vector<std::uint64_t> members);

  const std::vector<std::uint64_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // Extensional content of any set as a bitmask over members().
  std::uint32_t mask_of(const DescribedSet& s) const;
  // Canonical algebra index realizing a bitmask (union of atoms).
  Index subset_index(std::uint32_t mask) const;

 private:
  std::vector<std::uint64_t> members_;
};

std::shared_ptr<const PowersetAlgebra> powerset_algebra(
    std::vector<std::uint64_t> members);

}  // namespace socchoice
