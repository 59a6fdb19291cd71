// Acceptance gate: nine criteria, each printed as a single PASS/FAIL line
// with its elapsed time against a pinned budget.

#include <chrono>
#include <cstdio>
#include <random>

#include "socchoice/arrowcheck.hpp"
#include "socchoice/reversal.hpp"
#include "socchoice/selftest.hpp"

using namespace socchoice;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool ok, double secs, double budget) {
  std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)\n",
              ok && secs <= budget ? "PASS" : "FAIL", criterion, what, secs, budget);
  if (!ok || secs > budget) ++failures;
}

template <typename F>
void run(int criterion, const char* what, double budget, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", criterion, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(criterion, what, ok, secs, budget);
}

std::vector<Alt> alts_upto(std::size_t n) {
  std::vector<Alt> X(n);
  for (std::size_t i = 0; i < n; ++i) X[i] = static_cast<Alt>(i);
  return X;
}

// independent filter oracle: all relation masks, checked for transitivity
// and strong connectedness
std::size_t brute_order_count(std::size_t n) {
  std::size_t count = 0;
  for (std::uint32_t rel = 0; rel < (1u << (n * n)); ++rel) {
    auto at = [&](std::size_t i, std::size_t j) { return (rel >> (i * n + j)) & 1u; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (!at(i, j) && !at(j, i)) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (at(i, j) && at(j, k) && !at(i, k)) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

bool criterion1() {
  const std::size_t expect[] = {1, 3, 13, 75};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t got = enumerate_weak_orders(alts_upto(n)).size();
    if (got != expect[n - 1] || got != brute_order_count(n)) return false;
  }
  return true;
}

bool criterion2() {
  auto alg = powerset_algebra({0, 1, 2});
  auto probes = exhaustive_probes(*alg);
  std::vector<UnionProbe> unions;
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      unions.push_back({{alg->subset_index(x), alg->subset_index(y)},
                        alg->subset_index(x | y)});
  for (std::uint64_t d = 0; d < 3; ++d) {
    Ultrafilter u = principal_ultrafilter(alg, d);
    AxiomReport ax = check_ultrafilter_axioms(u, probes);
    AxiomReport pr = uf_basic_properties(u, probes, unions);
    if (!ax.passed() || !pr.passed()) return false;
    for (const auto& c : ax.clauses)
      if (c.applicable == 0) return false;
    for (const auto& c : pr.clauses)
      if (c.applicable == 0) return false;
  }
  return true;
}

bool criterion3() {
  for (std::size_t nv : {2u, 3u}) {
    std::vector<std::uint64_t> V;
    for (std::size_t v = 0; v < nv; ++v) V.push_back(v);
    auto soc = finite_society(V, {0, 1, 2});
    std::vector<Swf> swfs;
    for (std::uint64_t d : V) {
      swfs.push_back(dictator_swf(soc, d));
      swfs.push_back(
          swf_from_ultrafilter(soc, principal_ultrafilter(soc->algebra_ptr(), d)));
    }
    for (const Swf& s : swfs) {
      AdMembership adm = almost_decisive_membership(s);
      for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
        Index i = soc->powerset().subset_index(mask);
        bool member = adm.member(i).is_in();
        if (member != decisiveness_oracle(
                          s, {i, DecisivenessQuery::Mode::decisive, {}, {}}))
          return false;
        if (member !=
            decisiveness_oracle(
                s, {i, DecisivenessQuery::Mode::almost_decisive, {}, {}}))
          return false;
      }
    }
  }
  return true;
}

bool criterion4() {
  std::mt19937_64 rng(2024);
  for (std::size_t nv : {2u, 3u}) {
    std::vector<std::uint64_t> V;
    for (std::size_t v = 0; v < nv; ++v) V.push_back(v);
    auto soc = finite_society(V, {0, 1, 2});
    auto profiles = soc->all_profiles();
    for (std::uint64_t d : V) {
      Ultrafilter u = principal_ultrafilter(soc->algebra_ptr(), d);
      Swf s = swf_from_ultrafilter(soc, u);
      if (find_dictator(s) != d) return false;

      Ultrafilter back = ks_extract(dictator_swf(soc, d));
      for (std::uint64_t v : V)
        if (back.member(soc->algebra().atom_index(v)).is_in() != (v == d))
          return false;

      Swf direct = dictator_swf(soc, d);
      for (int trial = 0; trial < 300; ++trial) {
        Index n = trial % 2 == 0
                      ? Index(rng() % 10000)
                      : soc->table_index(profiles[rng() % profiles.size()]);
        if (!(s.sigma(n) == direct.sigma(n))) return false;
      }
    }
  }
  return true;
}

bool criterion5() {
  auto res = enumerate_arrovian_swfs(2, 3, ArrowDomain::linear);
  if (res.survivors.empty()) return false;
  auto p0 = projection_rule(ArrowDomain::linear, 0);
  auto p1 = projection_rule(ArrowDomain::linear, 1);
  bool saw0 = false, saw1 = false;
  for (const auto& s : res.survivors) {
    if (!s.dictator) return false;
    saw0 = saw0 || s.code == p0.code;
    saw1 = saw1 || s.code == p1.code;
  }
  return saw0 && saw1 && naive_linear_count() == res.survivors.size();
}

bool criterion6() {
  auto res = enumerate_arrovian_swfs(2, 3, ArrowDomain::weak);
  if (res.survivors.empty()) return false;
  for (const auto& s : res.survivors) {
    if (!s.dictator) return false;
    if (!verify_against_ks(s).match) return false;
  }
  return true;
}

bool criterion7() {
  auto soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  const Algebra& a = soc->algebra();
  Swf s = swf_from_ultrafilter(soc, frechet_ultrafilter(soc->algebra_ptr()));

  // a deterministic pool of quasi-partition profiles
  std::mt19937_64 rng(7);
  std::vector<Index> pool;
  for (int t = 0; t < 60; ++t) {
    std::vector<std::size_t> front{rng() % 13, rng() % 13};
    if (front[0] == front[1]) front[1] = (front[1] + 1) % 13;
    std::size_t k = 1 + rng() % 2;
    std::vector<Index> cells;
    for (std::size_t j = 0; j < k; ++j) {
      Index c = a.atom_index(rng() % 40);
      if (rng() % 2) c = a.union_index(c, a.atom_index(rng() % 40));
      cells.push_back(c);
    }
    pool.push_back(soc->embed(soc->perm_starting_with(front), cells));
  }
  std::vector<std::pair<Index, Index>> pairs;
  while (pairs.size() < 500) {
    std::size_t i = rng() % pool.size(), j = rng() % pool.size();
    pairs.emplace_back(pool[i], pool[j]);
  }
  if (!check_unanimity(s, pool).passed()) return false;
  if (!check_independence(s, pairs).passed()) return false;

  // cofinite-majority profiles: a finite dissenter block against a cofinite
  // region ranking 0 over 1
  OrderPattern ab, ba;
  ab.groups = {{0}, {1}};
  ab.wildcard = OrderPattern::Wildcard::own_level;
  ab.wildcard_pos = 2;
  ba.groups = {{1}, {0}};
  ba.wildcard = OrderPattern::Wildcard::own_level;
  ba.wildcard_pos = 2;
  std::size_t pab = soc->order_pos(make_order(ab, soc->alts()));
  std::size_t pba = soc->order_pos(make_order(ba, soc->alts()));
  auto perm = soc->perm_starting_with({pba, pab});
  for (int t = 0; t < 100; ++t) {
    Index cell = a.atom_index(rng() % 30);
    for (int u2 = 0; u2 < t % 5; ++u2)
      cell = a.union_index(cell, a.atom_index(rng() % 30));
    Index n = soc->embed(perm, {cell});
    if (!s.sigma(n).less(0, 1)) return false;
  }

  // plain witnesses for every voter below 50
  NonDictReport nd = nondictatoriality_suite(s, 3, 50);
  if (!nd.passed || nd.plain.size() != 50) return false;

  // 20 sampled tuples of sizes 1..5, all overruled simultaneously
  auto perm2 = soc->perm_starting_with({pab, pba});
  for (int t = 0; t < 20; ++t) {
    std::size_t size = 1 + t % 5;
    Index cell = a.atom_index(rng() % 60);
    for (std::size_t i = 1; i < size; ++i)
      cell = a.union_index(cell, a.atom_index(rng() % 60));
    Index n = soc->embed(perm2, {cell});
    if (!s.sigma(n).less(1, 0)) return false;  // the cofinite default wins
  }
  return true;
}

bool criterion8() {
  std::vector<std::map<std::uint64_t, std::uint64_t>> tables = {
      {},           {{0, 5}},          {{0, 5}, {2, 9}}, {{1, 7}, {3, 7}},
      {{4, 49}},    {{0, 1}, {1, 2}},  {{9, 30}},        {{2, 2}},
      {{0, 5}, {1, 6}, {2, 7}},        {{10, 40}, {20, 41}}};
  const std::uint64_t T = 100;
  for (std::size_t ti = 0; ti < tables.size(); ++ti) {
    GadgetSociety gs =
        build_gadget(table_enumerator(tables[ti], ti % 3));
    Swf sigma = gadget_swf(gs, T);
    for (std::uint64_t n = 0; n < 50; ++n) {
      std::uint64_t least = T;
      for (std::uint64_t m = 0; m < T; ++m)
        if (gs.h.h(m) == n) {
          least = m;
          break;
        }
      PhiResult r = phi(gs, sigma, n, T);
      if (least < T) {
        if (!(r == PhiResult{PhiResult::Kind::in_range, least + 1})) return false;
        // monotonicity: the least stage is stable under a deeper scan
        PhiResult r2 = phi(gs, sigma, n, 2 * T);
        if (!(r2 == r)) return false;
      } else if (!(r == PhiResult{PhiResult::Kind::no_witness_up_to, T})) {
        return false;
      }
    }
  }
  return true;
}

bool criterion9() { return selftest_json() == selftest_json(); }

}  // namespace

int main() {
  run(1, "weak-order enumeration vs filter oracle", 1, criterion1);
  run(2, "ultrafilter axioms exhaustive on the 3-voter powerset", 10, criterion2);
  run(3, "membership test vs brute-force decisiveness, |V| in {2,3}", 120, criterion3);
  run(4, "dictator/principal roundtrips", 120, criterion4);
  run(5, "Arrow search, linear domain, with flat recount", 30, criterion5);
  run(6, "Arrow search, weak domain, survivors bridged to extraction", 900, criterion6);
  run(7, "non-dictatorial possibility suite on the frechet swf", 60, criterion7);
  run(8, "reversal gadget vs direct range scan on 10 tables", 5, criterion8);
  run(9, "selftest determinism", 60, criterion9);
  return failures == 0 ? 0 : 1;
}
