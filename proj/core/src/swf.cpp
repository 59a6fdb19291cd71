#include "socchoice/swf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace socchoice {

namespace {

std::shared_ptr<const FiniteSociety> as_finite(const Swf& s) {
  return std::dynamic_pointer_cast<const FiniteSociety>(s.society);
}

// position of the order x above y, everything else as one bottom level
std::size_t pos_of_pair_order(const Society& soc, Alt x, Alt y) {
  OrderPattern p;
  p.groups = {{x}, {y}};
  p.wildcard = OrderPattern::Wildcard::own_level;
  p.wildcard_pos = 2;
  return soc.order_pos(make_order(p, soc.alts()));
}

}  // namespace

Swf dictator_swf(std::shared_ptr<const Society> soc, std::uint64_t d) {
  if (!soc->voters().contains(d))
    throw std::invalid_argument("dictator outside the universe");
  Swf s;
  s.society = soc;
  s.provenance = Swf::Dictator{d};
  s.sigma = [soc, d](const Index& n) { return soc->eval(n, d); };
  return s;
}

Swf swf_from_ultrafilter(std::shared_ptr<const Society> soc, Ultrafilter u) {
  if (u.algebra.get() != soc->algebra_ptr().get())
    throw std::invalid_argument("ultrafilter lives on a different algebra");
  Swf s;
  s.society = soc;
  s.provenance = Swf::FromUltrafilter{u};
  s.sigma = [soc, u](const Index& n) {
    const auto& X = soc->alts();
    std::uint32_t rel = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j) {
        MemberResult m = u.member(soc->mu(n, X[i], X[j]));
        if (!m.decided())
          throw std::runtime_error("ultrafilter undecided at stage bound");
        if (m.is_in()) rel |= 1u << (i * X.size() + j);
      }
    auto w = WeakOrder::from_rel(X, rel);
    if (!w) throw std::runtime_error("derived relation is not a weak order");
    return *w;
  };
  return s;
}

std::size_t table_profile_number(const FiniteSociety& soc,
                                 const FiniteSociety::TableProfile& tp) {
  std::size_t k = soc.orders().size(), num = 0;
  for (std::size_t v = tp.size(); v-- > 0;) num = num * k + tp[v];
  return num;
}

FiniteSociety::TableProfile table_profile_of(const Swf& s, const Index& n) {
  auto fin = as_finite(s);
  if (!fin) throw std::invalid_argument("table view requires a finite society");
  FiniteSociety::TableProfile tp;
  for (std::uint64_t v : fin->members())
    tp.push_back(fin->order_pos(fin->eval(n, v)));
  return tp;
}

Swf table_swf(std::shared_ptr<const FiniteSociety> soc,
              std::vector<std::size_t> outputs) {
  std::size_t k = soc->orders().size(), want = 1;
  for (std::size_t v = 0; v < soc->members().size(); ++v) want *= k;
  if (outputs.size() != want)
    throw std::invalid_argument("output table has the wrong size");
  for (std::size_t o : outputs)
    if (o >= k) throw std::invalid_argument("output order position out of range");
  Swf s;
  s.society = soc;
  auto shared = std::make_shared<std::vector<std::size_t>>(outputs);
  s.provenance = Swf::Table{std::move(outputs)};
  s.sigma = [soc, shared](const Index& n) {
    FiniteSociety::TableProfile tp;
    for (std::uint64_t v : soc->members())
      tp.push_back(soc->order_pos(soc->eval(n, v)));
    return soc->orders()[(*shared)[table_profile_number(*soc, tp)]];
  };
  return s;
}

std::vector<Index> exhaustive_profile_probes(const Swf& s) {
  auto fin = as_finite(s);
  if (!fin)
    throw std::invalid_argument("exhaustive probes require a finite society");
  std::vector<Index> probes;
  for (const auto& tp : fin->all_profiles()) probes.push_back(fin->table_index(tp));
  return probes;
}

SwfCheckReport check_unanimity(const Swf& s, const std::vector<Index>& probes,
                               std::uint64_t bound) {
  const Society& soc = *s.society;
  const Algebra& a = soc.algebra();
  SwfCheckReport rep;
  for (const Index& n : probes) {
    WeakOrder out = s.sigma(n);
    for (Alt x : soc.alts())
      for (Alt y : soc.alts()) {
        if (x == y) continue;
        ++rep.checked;
        if (set_is_universe(a.set_at(soc.mu_strict(n, x, y)), bound) != Cert::yes)
          continue;
        ++rep.applicable;
        if (!out.less(x, y)) rep.failures.push_back({n, std::nullopt, x, y});
      }
  }
  return rep;
}

SwfCheckReport check_independence(
    const Swf& s, const std::vector<std::pair<Index, Index>>& probe_pairs,
    std::uint64_t bound) {
  const Society& soc = *s.society;
  SwfCheckReport rep;
  for (const auto& [n, m] : probe_pairs) {
    WeakOrder sn = s.sigma(n), sm = s.sigma(m);
    for (std::size_t i = 0; i < soc.alts().size(); ++i)
      for (std::size_t j = i + 1; j < soc.alts().size(); ++j) {
        Alt x = soc.alts()[i], y = soc.alts()[j];
        ++rep.checked;
        if (soc.profiles_agree_on(n, m, x, y, bound) != Cert::yes) continue;
        ++rep.applicable;
        if (order_relation(sn, x, y) != order_relation(sm, x, y))
          rep.failures.push_back({n, m, x, y});
      }
  }
  return rep;
}

SwfCheckReport check_independence_exhaustive(const Swf& s) {
  auto fin = as_finite(s);
  if (!fin)
    throw std::invalid_argument("exhaustive independence requires a finite society");
  auto profiles = fin->all_profiles();
  std::vector<WeakOrder> outs;
  std::vector<Index> idx;
  outs.reserve(profiles.size());
  for (const auto& tp : profiles) {
    idx.push_back(fin->table_index(tp));
    outs.push_back(s.sigma(idx.back()));
  }

  SwfCheckReport rep;
  const auto& X = fin->alts();
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j) {
      Alt x = X[i], y = X[j];
      // key: every voter's three-way stance on (x,y)
      std::map<std::vector<Rel3>, std::pair<std::size_t, Rel3>> groups;
      for (std::size_t t = 0; t < profiles.size(); ++t) {
        std::vector<Rel3> key;
        for (std::size_t o : profiles[t])
          key.push_back(order_relation(fin->orders()[o], x, y));
        Rel3 social = order_relation(outs[t], x, y);
        ++rep.checked;
        auto [it, fresh] = groups.emplace(std::move(key), std::make_pair(t, social));
        if (fresh) continue;
        ++rep.applicable;
        if (it->second.second != social)
          rep.failures.push_back({idx[it->second.first], idx[t], x, y});
      }
    }
  return rep;
}

AdMembership almost_decisive_membership(const Swf& s) {
  auto soc = s.society;
  const auto& X = soc->alts();
  Alt a = X[0], b = X[1];
  std::size_t p_ab = pos_of_pair_order(*soc, a, b);
  std::size_t p_ba = pos_of_pair_order(*soc, b, a);
  auto perm = soc->perm_starting_with({p_ab, p_ba});

  AdMembership m;
  m.a = a;
  m.b = b;
  m.g = [soc, perm](const Index& n) { return soc->embed(perm, {n}); };

  if (auto* fu = std::get_if<Swf::FromUltrafilter>(&s.provenance)) {
    // route through the source filter so undecidedness stays three-valued
    Ultrafilter u = fu->u;
    auto g = m.g;
    m.member = [soc, u, g, a, b](const Index& n) {
      return u.member(soc->mu_strict(g(n), a, b));
    };
  } else {
    Swf copy = s;
    auto g = m.g;
    m.member = [copy, g, a, b](const Index& n) {
      return copy.sigma(g(n)).less(a, b) ? MemberResult::in() : MemberResult::out();
    };
  }
  return m;
}

bool decisiveness_oracle(const Swf& s, const DecisivenessQuery& q) {
  auto fin = as_finite(s);
  if (!fin) throw std::invalid_argument("oracle requires finite society");
  DescribedSet coalition = fin->algebra().set_at(q.coalition);

  std::vector<bool> in_coalition;
  for (std::uint64_t v : fin->members())
    in_coalition.push_back(coalition.contains(v));

  auto check_profile = [&](const FiniteSociety::TableProfile& tp, Alt x, Alt y,
                           bool almost) {
    for (std::size_t v = 0; v < tp.size(); ++v) {
      const WeakOrder& r = fin->orders()[tp[v]];
      if (in_coalition[v] && !r.less(x, y)) return true;         // premise fails
      if (almost && !in_coalition[v] && !r.less(y, x)) return true;
    }
    return s.sigma(fin->table_index(tp)).less(x, y);
  };

  std::vector<std::pair<Alt, Alt>> pairs;
  if (q.pair) {
    pairs.push_back(*q.pair);
  } else {
    for (Alt x : fin->alts())
      for (Alt y : fin->alts())
        if (x != y) pairs.emplace_back(x, y);
  }

  if (q.mode == DecisivenessQuery::Mode::almost_decisive_at) {
    if (!q.pair || !q.at_profile)
      throw std::invalid_argument("almost_decisive_at needs a pair and a profile");
    FiniteSociety::TableProfile tp;
    for (std::uint64_t v : fin->members())
      tp.push_back(fin->order_pos(fin->eval(*q.at_profile, v)));
    return check_profile(tp, q.pair->first, q.pair->second, true);
  }

  bool almost = q.mode == DecisivenessQuery::Mode::almost_decisive;
  for (const auto& tp : fin->all_profiles())
    for (const auto& [x, y] : pairs)
      if (!check_profile(tp, x, y, almost)) return false;
  return true;
}

namespace {

// bounded probe policy for infinite societies: a spread of raw indexes plus
// constructed single-cell profiles around the membership-test orders
void default_infinite_probes(const Swf& s, std::vector<Index>& probes,
                             std::vector<std::pair<Index, Index>>& pairs) {
  auto soc = s.society;
  for (std::uint64_t n = 0; n < 200; ++n) probes.push_back(Index(n));

  const auto& X = soc->alts();
  std::vector<std::size_t> fronts{
      pos_of_pair_order(*soc, X[0], X[1]), pos_of_pair_order(*soc, X[1], X[0]),
      pos_of_pair_order(*soc, X[0], X[2]), pos_of_pair_order(*soc, X[1], X[2])};
  std::vector<Index> built;
  for (std::size_t f1 : fronts)
    for (std::size_t f2 : fronts) {
      if (f1 == f2) continue;
      for (std::uint64_t v : {0ull, 3ull, 11ull}) {
        built.push_back(soc->embed(soc->perm_starting_with({f1, f2}),
                                   {soc->algebra().atom_index(v)}));
      }
    }
  probes.insert(probes.end(), built.begin(), built.end());
  for (std::size_t i = 0; i < built.size(); ++i)
    for (std::size_t j = i + 1; j < built.size(); ++j)
      pairs.emplace_back(built[i], built[j]);
}

}  // namespace

Ultrafilter ks_extract(const Swf& s, std::uint64_t bound) {
  auto fin = as_finite(s);

  SwfCheckReport una, ind;
  if (fin) {
    una = check_unanimity(s, exhaustive_profile_probes(s), bound);
    ind = check_independence_exhaustive(s);
  } else {
    std::vector<Index> probes;
    std::vector<std::pair<Index, Index>> pairs;
    default_infinite_probes(s, probes, pairs);
    una = check_unanimity(s, probes, bound);
    ind = check_independence(s, pairs, bound);
  }
  if (!una.passed() || !ind.passed())
    throw std::runtime_error("axiom checks failed; refusing extraction");

  AdMembership adm = almost_decisive_membership(s);

  if (fin) {
    // the extracted filter must coincide with plain decisiveness
    for (std::uint32_t mask = 0; mask < (1u << fin->powerset().size()); ++mask) {
      Index i = fin->powerset().subset_index(mask);
      bool member = adm.member(i).is_in();
      DecisivenessQuery qd{i, DecisivenessQuery::Mode::decisive, {}, {}};
      DecisivenessQuery qa{i, DecisivenessQuery::Mode::almost_decisive, {}, {}};
      if (member != decisiveness_oracle(s, qd) ||
          member != decisiveness_oracle(s, qa))
        throw std::runtime_error("axiom checks failed; refusing extraction");
    }
  }

  Ultrafilter u;
  u.algebra = s.society->algebra_ptr();
  u.member = adm.member;
  u.kind = Ultrafilter::Derived{"decisive-coalition extraction"};
  return u;
}

std::uint64_t find_dictator(const Swf& s) {
  auto fin = as_finite(s);
  if (!fin) throw std::invalid_argument("dictator search requires finite society");
  Ultrafilter u = ks_extract(s);

  std::vector<std::uint64_t> hits;
  for (std::uint64_t v : fin->members())
    if (u.member(fin->algebra().atom_index(v)).is_in()) hits.push_back(v);
  if (hits.size() != 1)
    throw std::runtime_error("axiom checks were incomplete");
  std::uint64_t d = hits[0];

  // replay: the dictator's strict preferences are always followed
  for (const auto& tp : fin->all_profiles()) {
    Index n = fin->table_index(tp);
    WeakOrder out = s.sigma(n);
    const WeakOrder& own = fin->eval(n, d);
    for (Alt x : fin->alts())
      for (Alt y : fin->alts())
        if (own.less(x, y) && !out.less(x, y))
          throw std::runtime_error("axiom checks were incomplete");
  }
  return d;
}

NonDictReport nondictatoriality_suite(const Swf& s, std::size_t k,
                                      std::uint64_t bound) {
  auto soc = s.society;
  if (!soc->voters().is_infinite())
    throw std::invalid_argument("suite requires an infinite society");
  Ultrafilter u = ks_extract(s);
  for (std::uint64_t v = 0; v < std::min<std::uint64_t>(bound, 50); ++v)
    if (u.member(soc->algebra().atom_index(v)).is_in())
      throw std::runtime_error("extraction is principal");

  const Algebra& a = soc->algebra();
  const auto& X = soc->alts();
  Alt x = X[0], y = X[1];
  auto perm = soc->perm_starting_with(
      {pos_of_pair_order(*soc, x, y), pos_of_pair_order(*soc, y, x)});

  NonDictReport rep;
  auto overruled = [&](const std::vector<std::uint64_t>& voters) {
    // the voters form the dissenting cell for x over y; everyone else
    // (the cofinite default region) ranks y over x
    Index cell = a.atom_index(voters[0]);
    for (std::size_t i = 1; i < voters.size(); ++i)
      cell = a.union_index(cell, a.atom_index(voters[i]));
    Index n = soc->embed(perm, {cell});
    bool ok = s.sigma(n).less(y, x);
    if (!ok) rep.passed = false;
    return NonDictReport::Overrule{voters, n, x, y};
  };

  for (std::uint64_t v = 0; v < bound; ++v) rep.plain.push_back(overruled({v}));

  for (std::uint64_t start : {0ull, 5ull, 17ull}) {
    std::vector<std::uint64_t> tuple;
    for (std::size_t i = 0; i < k; ++i) tuple.push_back(start + 2 * i);
    rep.tuples.push_back(overruled(tuple));
  }

  // cofinite-majority checks: with the same profiles, sigma must follow the
  // cofinite default region
  for (std::uint64_t width : {1ull, 4ull, 10ull}) {
    std::vector<std::uint64_t> dissent;
    for (std::uint64_t v = 0; v < width; ++v) dissent.push_back(v);
    Index cell = a.atom_index(dissent[0]);
    for (std::size_t i = 1; i < dissent.size(); ++i)
      cell = a.union_index(cell, a.atom_index(dissent[i]));
    Index n = soc->embed(perm, {cell});
    ++rep.cofinite_checks;
    if (!s.sigma(n).less(y, x)) rep.passed = false;
  }
  return rep;
}

}  // namespace socchoice
