#include "socchoice/setalg.hpp"

#include <algorithm>
#include <limits>

namespace socchoice {

namespace {

std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint64_t> set_minus(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<std::uint64_t> set_union(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

bool disjoint(const std::vector<std::uint64_t>& a,
              const std::vector<std::uint64_t>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

bool includes(const std::vector<std::uint64_t>& big,
              const std::vector<std::uint64_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool Universe::contains(std::uint64_t v) const {
  if (!finite) return true;
  return std::binary_search(finite->begin(), finite->end(), v);
}

Universe Universe::of(std::vector<std::uint64_t> members) {
  Universe u;
  u.finite = sorted_unique(std::move(members));
  return u;
}

NormalForm NormalForm::fin(std::vector<std::uint64_t> s) {
  return NormalForm{Kind::finite, std::move(s), 0};
}
NormalForm NormalForm::cof(std::vector<std::uint64_t> s) {
  return NormalForm{Kind::cofinite, std::move(s), 0};
}
NormalForm NormalForm::unk(std::uint64_t stage) {
  return NormalForm{Kind::unknown, {}, stage};
}

struct DescribedSet::Node {
  enum class Kind { finite, cofinite, oracle, comp, inter };
  Kind kind;
  std::shared_ptr<const Universe> universe;
  std::vector<std::uint64_t> support;  // finite: members; cofinite: excluded
  std::optional<OracleGen> gen;
  std::shared_ptr<const Node> left, right;

  bool contains(std::uint64_t v) const {
    if (!universe->contains(v)) return false;
    switch (kind) {
      case Kind::finite:
        return std::binary_search(support.begin(), support.end(), v);
      case Kind::cofinite:
        return !std::binary_search(support.begin(), support.end(), v);
      case Kind::oracle:
        return gen->member(v);
      case Kind::comp:
        return !left->contains(v);
      case Kind::inter:
        return left->contains(v) && right->contains(v);
    }
    return false;
  }

  mutable std::mutex nf_mutex;
  mutable std::optional<NormalForm> nf_cache;
  mutable std::uint64_t nf_cache_stage = 0;

  // cached wrapper. A result is reusable at the same stage, an exact result
  // at any larger stage, an unknown at any smaller one; anything else is
  // recomputed so a low stage bound never inherits a deeper scan's answer.
  NormalForm normal_form(std::uint64_t stage) const {
    std::lock_guard lock(nf_mutex);
    if (nf_cache) {
      if (nf_cache->exact() && stage >= nf_cache_stage) return *nf_cache;
      if (!nf_cache->exact() && stage <= nf_cache_stage)
        return NormalForm::unk(stage);
    }
    NormalForm nf = compute_normal_form(stage);
    nf_cache = nf;
    nf_cache_stage = stage;
    return nf;
  }

  NormalForm compute_normal_form(std::uint64_t stage) const {
    switch (kind) {
      case Kind::finite:
        return NormalForm::fin(support);
      case Kind::cofinite:
        return NormalForm::cof(support);
      case Kind::oracle:
        return gen->normal_form_at(stage);
      case Kind::comp: {
        NormalForm a = left->normal_form(stage);
        if (!a.exact()) return a;
        if (universe->finite) {
          // complements stay finite over a finite universe
          return NormalForm::fin(set_minus(*universe->finite, a.support));
        }
        return a.kind == NormalForm::Kind::finite ? NormalForm::cof(a.support)
                                                  : NormalForm::fin(a.support);
      }
      case Kind::inter: {
        NormalForm a = left->normal_form(stage);
        NormalForm b = right->normal_form(stage);
        // A finite side settles the intersection pointwise whatever the
        // other side is.
        if (a.kind == NormalForm::Kind::finite) {
          std::vector<std::uint64_t> out;
          for (std::uint64_t v : a.support)
            if (right->contains(v)) out.push_back(v);
          return NormalForm::fin(std::move(out));
        }
        if (b.kind == NormalForm::Kind::finite) {
          std::vector<std::uint64_t> out;
          for (std::uint64_t v : b.support)
            if (left->contains(v)) out.push_back(v);
          return NormalForm::fin(std::move(out));
        }
        if (a.kind == NormalForm::Kind::cofinite &&
            b.kind == NormalForm::Kind::cofinite)
          return NormalForm::cof(set_union(a.support, b.support));
        return NormalForm::unk(stage);
      }
    }
    return NormalForm::unk(stage);
  }
};

DescribedSet DescribedSet::finite(Universe u, std::vector<std::uint64_t> members) {
  auto uni = std::make_shared<const Universe>(std::move(u));
  members = sorted_unique(std::move(members));
  if (uni->finite) {
    std::vector<std::uint64_t> filtered;
    for (std::uint64_t v : members)
      if (uni->contains(v)) filtered.push_back(v);
    members = std::move(filtered);
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::finite;
  n->universe = uni;
  n->support = std::move(members);
  return DescribedSet(n);
}

DescribedSet DescribedSet::cofinite(Universe u, std::vector<std::uint64_t> excluded) {
  excluded = sorted_unique(std::move(excluded));
  if (u.finite) {
    std::vector<std::uint64_t> members = set_minus(*u.finite, excluded);
    return finite(std::move(u), std::move(members));
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::cofinite;
  n->universe = std::make_shared<const Universe>(std::move(u));
  n->support = std::move(excluded);
  return DescribedSet(n);
}

DescribedSet DescribedSet::oracle(Universe u, OracleGen gen) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::oracle;
  n->universe = std::make_shared<const Universe>(std::move(u));
  n->gen = std::move(gen);
  return DescribedSet(n);
}

DescribedSet DescribedSet::complement(const DescribedSet& s) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::comp;
  n->universe = s.node_->universe;
  n->left = s.node_;
  return DescribedSet(n);
}

DescribedSet DescribedSet::intersect(const DescribedSet& a, const DescribedSet& b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::inter;
  n->universe = a.node_->universe;
  n->left = a.node_;
  n->right = b.node_;
  return DescribedSet(n);
}

bool DescribedSet::contains(std::uint64_t v) const { return node_->contains(v); }

NormalForm DescribedSet::normal_form(std::uint64_t stage_bound) const {
  return node_->normal_form(stage_bound);
}

const Universe& DescribedSet::universe() const { return *node_->universe; }

namespace {

Cert pointwise_fallback(const DescribedSet& a, const DescribedSet& b,
                        std::uint64_t bound) {
  for (std::uint64_t v = 0; v < bound; ++v)
    if (a.contains(v) != b.contains(v)) return Cert::no;
  return Cert::up_to_bound;
}

}  // namespace

Cert set_is_empty(const DescribedSet& s, std::uint64_t bound) {
  NormalForm nf = s.normal_form(bound);
  if (nf.kind == NormalForm::Kind::finite)
    return nf.support.empty() ? Cert::yes : Cert::no;
  if (nf.kind == NormalForm::Kind::cofinite) return Cert::no;
  for (std::uint64_t v = 0; v < bound; ++v)
    if (s.contains(v)) return Cert::no;
  return Cert::up_to_bound;
}

Cert set_is_universe(const DescribedSet& s, std::uint64_t bound) {
  NormalForm nf = s.normal_form(bound);
  const Universe& u = s.universe();
  if (nf.kind == NormalForm::Kind::cofinite)
    return nf.support.empty() ? Cert::yes : Cert::no;
  if (nf.kind == NormalForm::Kind::finite) {
    if (u.finite) return nf.support == *u.finite ? Cert::yes : Cert::no;
    return Cert::no;  // finite set over an infinite universe
  }
  for (std::uint64_t v = 0; v < bound; ++v)
    if (u.contains(v) && !s.contains(v)) return Cert::no;
  return Cert::up_to_bound;
}

Cert set_subset(const DescribedSet& a, const DescribedSet& b, std::uint64_t bound) {
  NormalForm x = a.normal_form(bound), y = b.normal_form(bound);
  if (x.exact() && y.exact()) {
    bool xf = x.kind == NormalForm::Kind::finite;
    bool yf = y.kind == NormalForm::Kind::finite;
    if (xf && yf) return includes(y.support, x.support) ? Cert::yes : Cert::no;
    if (xf && !yf) return disjoint(x.support, y.support) ? Cert::yes : Cert::no;
    if (!xf && yf) return Cert::no;  // cofinite inside finite
    return includes(x.support, y.support) ? Cert::yes : Cert::no;
  }
  // A finite left side stays decidable against any right side.
  if (x.kind == NormalForm::Kind::finite) {
    for (std::uint64_t v : x.support)
      if (!b.contains(v)) return Cert::no;
    return Cert::yes;
  }
  for (std::uint64_t v = 0; v < bound; ++v)
    if (a.contains(v) && !b.contains(v)) return Cert::no;
  return Cert::up_to_bound;
}

Cert set_equal(const DescribedSet& a, const DescribedSet& b, std::uint64_t bound) {
  NormalForm x = a.normal_form(bound), y = b.normal_form(bound);
  if (x.exact() && y.exact()) {
    if (x.kind != y.kind) return Cert::no;
    return x.support == y.support ? Cert::yes : Cert::no;
  }
  return pointwise_fallback(a, b, bound);
}

bool formation_valid(const FormationSeq& s) {
  if (s.empty()) return false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const FormationEntry& e = s[j];
    switch (e.tag) {
      case 0:
        if (e.n != e.m) return false;
        break;
      case 1:
        if (e.n != e.m || e.n >= j) return false;
        break;
      case 2:
        if (e.n >= j || e.m >= j) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

Index formation_encode(const FormationSeq& s) {
  std::vector<Index> entries;
  entries.reserve(s.size());
  for (const FormationEntry& e : s)
    entries.push_back(pair_code(e.tag, pair_code(e.n, e.m)));
  return seq_encode(entries);
}

std::optional<FormationSeq> formation_decode(const Index& code) {
  auto entries = seq_decode(code);
  if (!entries) return std::nullopt;
  FormationSeq s;
  for (const Index& c : *entries) {
    auto outer = unpair_code(c);
    if (!outer) return std::nullopt;
    auto inner = unpair_code(outer->second);
    if (!inner) return std::nullopt;
    if (outer->first > 2) return std::nullopt;
    if (inner->first > std::numeric_limits<std::uint64_t>::max() ||
        inner->second > std::numeric_limits<std::uint64_t>::max())
      return std::nullopt;
    s.push_back(FormationEntry{static_cast<std::uint8_t>(outer->first),
                               static_cast<std::uint64_t>(inner->first),
                               static_cast<std::uint64_t>(inner->second)});
  }
  if (!formation_valid(s)) return std::nullopt;
  return s;
}

Algebra::Algebra(Universe u, GeneratorFn gen, AtomSeqFn atom_seq,
                 bool exact_generators, std::string description)
    : universe_(std::move(u)),
      gen_(std::move(gen)),
      atom_seq_(std::move(atom_seq)),
      exact_generators_(exact_generators),
      description_(std::move(description)) {}

DescribedSet Algebra::eval_formation(const FormationSeq& s) const {
  if (!formation_valid(s)) throw std::invalid_argument("invalid formation sequence");
  std::vector<DescribedSet> built;
  built.reserve(s.size());
  for (const FormationEntry& e : s) {
    switch (e.tag) {
      case 0:
        built.push_back(gen_(e.n));
        break;
      case 1:
        built.push_back(DescribedSet::complement(built[e.n]));
        break;
      case 2:
        built.push_back(DescribedSet::intersect(built[e.n], built[e.m]));
        break;
    }
  }
  return built.back();
}

DescribedSet Algebra::set_at(const Index& i) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = set_cache_.find(i);
    if (it != set_cache_.end()) return it->second;
  }
  auto s = formation_decode(i);
  DescribedSet out = s ? eval_formation(*s) : DescribedSet::finite(universe_, {});
  std::lock_guard lock(cache_mutex_);
  return set_cache_.emplace(i, std::move(out)).first->second;
}

namespace {

const FormationSeq& canonical_empty_seq() {
  // S_0 intersected with its own complement
  static const FormationSeq s{{0, 0, 0}, {1, 0, 0}, {2, 0, 1}};
  return s;
}

void shift_refs(FormationSeq& s, std::uint64_t by) {
  for (FormationEntry& e : s)
    if (e.tag != 0) {
      e.n += by;
      e.m += by;
    }
}

}  // namespace

FormationSeq Algebra::seq_or_empty(const Index& i) const {
  auto s = formation_decode(i);
  return s ? *s : canonical_empty_seq();
}

Index Algebra::atom_index(std::uint64_t v) const {
  return formation_encode(atom_seq_(v));
}

Index Algebra::empty_index() const {
  return formation_encode(canonical_empty_seq());
}

Index Algebra::universe_index() const {
  return complement_index(empty_index());
}

Index Algebra::complement_index(const Index& i) const {
  FormationSeq s = seq_or_empty(i);
  std::uint64_t k = s.size() - 1;
  s.push_back(FormationEntry{1, k, k});
  return formation_encode(s);
}

Index Algebra::intersect_index(const Index& i, const Index& j) const {
  FormationSeq s = seq_or_empty(i);
  FormationSeq t = seq_or_empty(j);
  std::uint64_t ls = s.size();
  shift_refs(t, ls);
  s.insert(s.end(), t.begin(), t.end());
  s.push_back(FormationEntry{2, ls - 1, ls + t.size() - 1});
  return formation_encode(s);
}

Index Algebra::union_index(const Index& i, const Index& j) const {
  return complement_index(
      intersect_index(complement_index(i), complement_index(j)));
}

NormalForm Algebra::normal_form(const Index& i, std::uint64_t stage_bound) const {
  return set_at(i).normal_form(stage_bound);
}

std::shared_ptr<const Algebra> finite_cofinite_algebra() {
  Universe u = Universe::naturals();
  auto gen = [u](std::uint64_t v) { return DescribedSet::finite(u, {v}); };
  auto atom = [](std::uint64_t v) { return FormationSeq{{0, v, v}}; };
  return std::make_shared<Algebra>(u, gen, atom, true, "finite-cofinite");
}

PowersetAlgebra::PowersetAlgebra(std::vector<std::uint64_t> members)
    : Algebra(Universe::of(members),
              [u = Universe::of(members)](std::uint64_t v) {
                if (u.contains(v)) return DescribedSet::finite(u, {v});
                return DescribedSet::finite(u, {});
              },
              [](std::uint64_t v) { return FormationSeq{{0, v, v}}; },
              true, "powerset"),
      members_(*universe().finite) {
  if (members_.empty() || members_.size() > 20)
    throw std::invalid_argument("powerset universe size out of range");
}

std::uint32_t PowersetAlgebra::mask_of(const DescribedSet& s) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (s.contains(members_[i])) mask |= 1u << i;
  return mask;
}

Index PowersetAlgebra::subset_index(std::uint32_t mask) const {
  Index acc = empty_index();
  bool first = true;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    Index a = atom_index(members_[i]);
    acc = first ? a : union_index(acc, a);
    first = false;
  }
  return acc;
}

std::shared_ptr<const PowersetAlgebra> powerset_algebra(
    std::vector<std::uint64_t> members) {
  return std::make_shared<PowersetAlgebra>(std::move(members));
}

}  // namespace socchoice
