#include "socchoice/ultra.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace socchoice {

Ultrafilter principal_ultrafilter(std::shared_ptr<const Algebra> a, std::uint64_t d) {
  if (!a->universe().contains(d))
    throw std::invalid_argument("principal point outside the universe");
  Ultrafilter u;
  u.algebra = a;
  u.kind = Ultrafilter::Principal{d};
  u.member = [a, d](const Index& i) {
    return a->set_at(i).contains(d) ? MemberResult::in() : MemberResult::out();
  };
  return u;
}

namespace {

Ultrafilter make_frechet(std::shared_ptr<const Algebra> a, std::uint64_t stage) {
  if (!a->universe().is_infinite())
    throw std::invalid_argument("frechet ultrafilter needs an infinite universe");
  Ultrafilter u;
  u.algebra = a;
  u.kind = Ultrafilter::Frechet{stage};
  u.member = [a, stage](const Index& i) {
    NormalForm nf = a->normal_form(i, stage);
    switch (nf.kind) {
      case NormalForm::Kind::cofinite: return MemberResult::in();
      case NormalForm::Kind::finite: return MemberResult::out();
      default: return MemberResult::unknown(nf.stage);
    }
  };
  return u;
}

}  // namespace

Ultrafilter frechet_ultrafilter(std::shared_ptr<const Algebra> a) {
  if (!a->exact_generators())
    throw std::invalid_argument(
        "frechet ultrafilter without a stage bound requires exact normal forms");
  return make_frechet(std::move(a), 0);
}

Ultrafilter frechet_ultrafilter(std::shared_ptr<const Algebra> a, std::uint64_t stage_bound) {
  return make_frechet(std::move(a), stage_bound);
}

namespace {

DescribedSet ds_union(const DescribedSet& a, const DescribedSet& b) {
  return DescribedSet::complement(
      DescribedSet::intersect(DescribedSet::complement(a), DescribedSet::complement(b)));
}

}  // namespace

AxiomReport check_ultrafilter_axioms(const Ultrafilter& u,
                                     const std::vector<std::array<Index, 3>>& probes,
                                     std::uint64_t bound) {
  const Algebra& alg = *u.algebra;
  ClauseReport nonempty{"non-emptiness"}, proper{"properness"},
      upwards{"upwards-closure"}, inters{"intersections"}, maximal{"maximality"};

  for (const auto& [i, j, k] : probes) {
    DescribedSet si = alg.set_at(i), sj = alg.set_at(j), sk = alg.set_at(k);
    MemberResult mi = u.member(i), mj = u.member(j), mk = u.member(k);

    ++nonempty.checked;
    if (set_is_universe(si, bound) == Cert::yes) {
      ++nonempty.applicable;
      if (!mi.is_in()) nonempty.failures.push_back({i});
    }

    ++proper.checked;
    if (set_is_empty(si, bound) == Cert::yes) {
      ++proper.applicable;
      if (!mi.is_out()) proper.failures.push_back({i});
    }

    ++upwards.checked;
    if (mi.is_in() && set_subset(si, sj, bound) == Cert::yes) {
      ++upwards.applicable;
      if (!mj.is_in()) upwards.failures.push_back({i, j});
    }

    ++inters.checked;
    if (mi.is_in() && mj.is_in() &&
        set_equal(sk, DescribedSet::intersect(si, sj), bound) == Cert::yes) {
      ++inters.applicable;
      if (!mk.is_in()) inters.failures.push_back({i, j, k});
    }

    ++maximal.checked;
    if (set_equal(sj, DescribedSet::complement(si), bound) == Cert::yes) {
      ++maximal.applicable;
      if (!mi.is_in() && !mj.is_in()) maximal.failures.push_back({i, j});
    }
  }

  return AxiomReport{{nonempty, proper, upwards, inters, maximal}};
}

AxiomReport uf_basic_properties(const Ultrafilter& u,
                                const std::vector<std::array<Index, 3>>& probes,
                                const std::vector<UnionProbe>& union_probes,
                                std::uint64_t bound) {
  const Algebra& alg = *u.algebra;
  ClauseReport compl_excl{"complement-exclusion"}, union_split{"union-splitting"},
      seq_split{"finite-sequence-union"}, princ{"principality-equivalence"};

  for (const auto& [i, j, k] : probes) {
    DescribedSet si = alg.set_at(i), sj = alg.set_at(j), sk = alg.set_at(k);
    MemberResult mi = u.member(i), mj = u.member(j), mk = u.member(k);

    ++compl_excl.checked;
    if (mi.is_in() && set_equal(sj, DescribedSet::complement(si), bound) == Cert::yes) {
      ++compl_excl.applicable;
      if (!mj.is_out()) compl_excl.failures.push_back({i, j});
    }

    ++union_split.checked;
    if (mk.is_in() && set_equal(sk, ds_union(si, sj), bound) == Cert::yes) {
      ++union_split.applicable;
      if (!mi.is_in() && !mj.is_in()) union_split.failures.push_back({i, j, k});
    }
  }

  for (const UnionProbe& p : union_probes) {
    ++seq_split.checked;
    if (p.parts.empty()) continue;
    DescribedSet acc = alg.set_at(p.parts[0]);
    for (std::size_t t = 1; t < p.parts.size(); ++t)
      acc = ds_union(acc, alg.set_at(p.parts[t]));
    if (u.member(p.whole).is_in() &&
        set_equal(alg.set_at(p.whole), acc, bound) == Cert::yes) {
      ++seq_split.applicable;
      bool some = false;
      for (const Index& part : p.parts)
        if (u.member(part).is_in()) some = true;
      if (!some) {
        std::vector<Index> w = p.parts;
        w.push_back(p.whole);
        seq_split.failures.push_back(w);
      }
    }
  }

  // Lemma 2.5 part 4 over the probe's index pool: (b) some finite member,
  // (c) some point generating the filter on every probed index.
  {
    ++princ.checked;
    std::set<Index> pool;
    for (const auto& t : probes) pool.insert(t.begin(), t.end());

    bool has_finite_member = false;
    std::set<std::uint64_t> candidates;
    if (alg.universe().finite) {
      candidates.insert(alg.universe().finite->begin(), alg.universe().finite->end());
    }
    for (const Index& i : pool) {
      NormalForm nf = alg.normal_form(i, bound);
      if (nf.kind == NormalForm::Kind::finite && u.member(i).is_in()) {
        has_finite_member = true;
        candidates.insert(nf.support.begin(), nf.support.end());
      }
    }
    bool generated_by_point = false;
    for (std::uint64_t d : candidates) {
      bool all = true;
      for (const Index& i : pool) {
        MemberResult m = u.member(i);
        if (!m.decided() || m.is_in() != alg.set_at(i).contains(d)) {
          all = false;
          break;
        }
      }
      if (all) {
        generated_by_point = true;
        break;
      }
    }
    ++princ.applicable;
    if (has_finite_member != generated_by_point ||
        (u.is_principal() && !has_finite_member))
      princ.failures.push_back({});
  }

  return AxiomReport{{compl_excl, union_split, seq_split, princ}};
}

std::vector<std::array<Index, 3>> exhaustive_probes(const PowersetAlgebra& a) {
  std::uint32_t total = 1u << a.size();
  std::vector<Index> reps;
  reps.reserve(total);
  for (std::uint32_t mask = 0; mask < total; ++mask)
    reps.push_back(a.subset_index(mask));
  std::vector<std::array<Index, 3>> probes;
  probes.reserve(static_cast<std::size_t>(total) * total * total);
  for (const Index& i : reps)
    for (const Index& j : reps)
      for (const Index& k : reps) probes.push_back({i, j, k});
  return probes;
}

}  // namespace socchoice
