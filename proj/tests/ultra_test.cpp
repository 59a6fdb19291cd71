#include "doctest.h"

#include <random>

#include "socchoice/ultra.hpp"

using namespace socchoice;

namespace {

FormationSeq random_formation(std::mt19937_64& rng, std::size_t len,
                              std::uint64_t gen_range) {
  FormationSeq s;
  std::uint64_t g0 = rng() % gen_range;
  s.push_back({0, g0, g0});
  for (std::size_t j = 1; j < len; ++j) {
    switch (rng() % 3) {
      case 0: {
        std::uint64_t g = rng() % gen_range;
        s.push_back({0, g, g});
        break;
      }
      case 1: {
        std::uint64_t n = rng() % j;
        s.push_back({1, n, n});
        break;
      }
      case 2:
        s.push_back({2, rng() % j, rng() % j});
        break;
    }
  }
  return s;
}

std::vector<UnionProbe> powerset_union_probes(const PowersetAlgebra& a) {
  std::vector<UnionProbe> probes;
  std::uint32_t total = 1u << a.size();
  for (std::uint32_t x = 0; x < total; ++x)
    for (std::uint32_t y = 0; y < total; ++y)
      probes.push_back({{a.subset_index(x), a.subset_index(y)},
                        a.subset_index(x | y)});
  // the atoms split the universe
  std::vector<Index> atoms;
  for (std::uint64_t v : a.members()) atoms.push_back(a.atom_index(v));
  probes.push_back({atoms, a.universe_index()});
  return probes;
}

}  // namespace

TEST_CASE("principal ultrafilters satisfy every clause exhaustively") {
  auto alg = powerset_algebra({0, 1, 2});
  auto probes = exhaustive_probes(*alg);
  REQUIRE(probes.size() == 512);
  auto union_probes = powerset_union_probes(*alg);

  for (std::uint64_t d : {0ull, 1ull, 2ull}) {
    Ultrafilter u = principal_ultrafilter(alg, d);
    CHECK(u.is_principal());

    AxiomReport ax = check_ultrafilter_axioms(u, probes);
    CHECK(ax.passed());
    REQUIRE(ax.clauses.size() == 5);
    for (const ClauseReport& c : ax.clauses) {
      INFO(c.clause);
      CHECK(c.applicable > 0);
      CHECK(c.failures.empty());
    }
    // every (i,j,k) with i the universe triggers non-emptiness: 8 * 8 of them
    CHECK(ax.clauses[0].applicable == 64);
    CHECK(ax.clauses[1].applicable == 64);

    AxiomReport props = uf_basic_properties(u, probes, union_probes);
    CHECK(props.passed());
    REQUIRE(props.clauses.size() == 4);
    for (const ClauseReport& c : props.clauses) {
      INFO(c.clause);
      CHECK(c.applicable > 0);
    }
  }
}

TEST_CASE("a principal ultrafilter holds exactly half of the subsets") {
  auto alg = powerset_algebra({0, 1, 2});
  Ultrafilter u = principal_ultrafilter(alg, 1);
  int in = 0, out = 0;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    MemberResult m = u.member(alg->subset_index(mask));
    REQUIRE(m.decided());
    (m.is_in() ? in : out)++;
    CHECK(m.is_in() == ((mask >> 1) & 1));
  }
  CHECK(in == 4);
  CHECK(out == 4);
}

TEST_CASE("a corrupted membership function is caught") {
  auto alg = powerset_algebra({0, 1, 2});
  Ultrafilter u = principal_ultrafilter(alg, 1);
  Index bad = alg->subset_index(0b010);  // the atom {1}

  Ultrafilter corrupted = u;
  corrupted.member = [base = u.member, bad](const Index& i) {
    MemberResult m = base(i);
    if (i == bad) return m.is_in() ? MemberResult::out() : MemberResult::in();
    return m;
  };

  auto probes = exhaustive_probes(*alg);
  AxiomReport ax = check_ultrafilter_axioms(corrupted, probes);
  CHECK_FALSE(ax.passed());
  AxiomReport props =
      uf_basic_properties(corrupted, probes, powerset_union_probes(*alg));
  CHECK_FALSE(props.passed());
}

TEST_CASE("frechet ultrafilter on the finite-cofinite algebra") {
  auto alg = finite_cofinite_algebra();
  Ultrafilter u = frechet_ultrafilter(alg);
  CHECK_FALSE(u.is_principal());

  CHECK(u.member(alg->atom_index(7)).is_out());
  CHECK(u.member(alg->complement_index(alg->atom_index(7))).is_in());
  CHECK(u.member(alg->universe_index()).is_in());
  CHECK(u.member(alg->empty_index()).is_out());
  CHECK(u.member(Index(0)).is_out());  // junk index denotes the empty set

  std::mt19937_64 rng(77);
  std::vector<std::array<Index, 3>> probes;
  std::vector<UnionProbe> union_probes;
  for (int trial = 0; trial < 400; ++trial) {
    Index i = alg->index_of(random_formation(rng, 1 + rng() % 8, 25));
    Index j = alg->index_of(random_formation(rng, 1 + rng() % 8, 25));
    probes.push_back({i, j, alg->intersect_index(i, j)});
    probes.push_back({i, alg->complement_index(i), alg->universe_index()});
    probes.push_back({i, alg->union_index(i, j), alg->universe_index()});
    union_probes.push_back({{i, j}, alg->union_index(i, j)});
  }

  AxiomReport ax = check_ultrafilter_axioms(u, probes);
  CHECK(ax.passed());
  for (const ClauseReport& c : ax.clauses) {
    INFO(c.clause);
    CHECK(c.applicable > 0);
  }
  AxiomReport props = uf_basic_properties(u, probes, union_probes);
  CHECK(props.passed());
}

TEST_CASE("frechet over oracle generators goes three-valued") {
  // generator 0 is an oracle set that never settles; the rest are singletons
  Universe nat = Universe::naturals();
  DescribedSet::OracleGen evens;
  evens.member = [](std::uint64_t v) { return v % 2 == 0; };
  evens.normal_form_at = [](std::uint64_t stage) { return NormalForm::unk(stage); };
  evens.description = "evens";
  auto gen = [nat, evens](std::uint64_t n) {
    if (n == 0) return DescribedSet::oracle(nat, evens);
    return DescribedSet::finite(nat, {n});
  };
  auto atom_seq = [](std::uint64_t v) { return FormationSeq{{0, v, v}}; };
  auto alg = std::make_shared<const Algebra>(nat, gen, atom_seq, false,
                                             "evens plus singletons");

  CHECK_THROWS_AS(frechet_ultrafilter(alg), std::invalid_argument);

  Ultrafilter u = frechet_ultrafilter(alg, 100);
  MemberResult m = u.member(alg->index_of({{0, 0, 0}}));
  CHECK_FALSE(m.decided());
  CHECK(u.member(alg->index_of({{0, 5, 5}})).is_out());
  CHECK(u.member(alg->complement_index(alg->index_of({{0, 5, 5}}))).is_in());
}
