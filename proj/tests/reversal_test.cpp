#include "doctest.h"

#include "socchoice/reversal.hpp"

using namespace socchoice;

TEST_CASE("row sets of a one-entry table") {
  // h maps 0 to 5, everything else to 0
  GadgetSociety gs = build_gadget(table_enumerator({{0, 5}}, 0));

  // row 10 = B(2*5): witness m = 0, so the row is every v >= 1
  auto b10 = gs.algebra->generator(10);
  CHECK_FALSE(b10.contains(0));
  CHECK(b10.contains(1));
  CHECK(b10.contains(100));
  NormalForm nf = b10.normal_form(3);
  REQUIRE(nf.kind == NormalForm::Kind::cofinite);
  CHECK(nf.support == std::vector<std::uint64_t>{0});

  // row 11 = B(2*5+1) is the atom {5}
  auto b11 = gs.algebra->generator(11);
  CHECK(b11.contains(5));
  CHECK_FALSE(b11.contains(4));

  // row 0 = B(0): h hits 0 from m = 1 on, so the row is every v >= 2
  NormalForm nf0 = gs.algebra->generator(0).normal_form(5);
  REQUIRE(nf0.kind == NormalForm::Kind::cofinite);
  CHECK(nf0.support == std::vector<std::uint64_t>{0, 1});

  // a value never enumerated: the row never settles
  auto b14 = gs.algebra->generator(14);  // B(2*7)
  for (std::uint64_t v : {0ull, 1ull, 50ull}) CHECK_FALSE(b14.contains(v));
  CHECK_FALSE(gs.algebra->generator(14).normal_form(1000).exact());

  // atoms are present for every n
  for (std::uint64_t n = 0; n < 50; ++n) {
    NormalForm a = gs.algebra->generator(2 * n + 1).normal_form(0);
    REQUIRE(a.kind == NormalForm::Kind::finite);
    CHECK(a.support == std::vector<std::uint64_t>{n});
  }
}

TEST_CASE("constant-zero enumerator") {
  GadgetSociety gs = build_gadget(table_enumerator({}, 0));
  NormalForm b0 = gs.algebra->generator(0).normal_form(2);
  REQUIRE(b0.kind == NormalForm::Kind::cofinite);
  CHECK(b0.support == std::vector<std::uint64_t>{0});
  for (std::uint64_t n = 1; n < 10; ++n)
    CHECK_FALSE(gs.algebra->generator(2 * n).normal_form(100).exact());
}

TEST_CASE("gadget profiles split voters by range membership") {
  GadgetSociety gs = build_gadget(table_enumerator({{0, 5}}, 0));
  Index j5 = gadget_g(gs, 5);
  const auto& soc = *gs.society;
  REQUIRE(soc.profile_at(j5).valid);

  // voter 0 is outside B(10), voter 3 inside
  CHECK(soc.eval(j5, 0).less(1, 0));
  CHECK(soc.eval(j5, 3).less(0, 1));

  // a value outside the range: everyone ranks 1 over 0
  Index j7 = gadget_g(gs, 7);
  for (std::uint64_t v : {0ull, 2ull, 9ull}) CHECK(soc.eval(j7, v).less(1, 0));
}

TEST_CASE("phi decides bounded range membership honestly") {
  GadgetSociety gs = build_gadget(table_enumerator({{0, 5}}, 0));
  Swf sigma = gadget_swf(gs, 100);

  CHECK(phi(gs, sigma, 5, 10) == PhiResult{PhiResult::Kind::in_range, 1});
  CHECK(phi(gs, sigma, 7, 50) ==
        PhiResult{PhiResult::Kind::no_witness_up_to, 50});
  CHECK(phi(gs, sigma, 5, 0) ==
        PhiResult{PhiResult::Kind::no_witness_up_to, 0});
  CHECK(phi(gs, sigma, 0, 10) == PhiResult{PhiResult::Kind::in_range, 2});

  // monotonicity: a found witness keeps its least stage at larger bounds
  for (std::uint64_t T : {1ull, 10ull, 200ull})
    CHECK(phi(gs, sigma, 5, T) == PhiResult{PhiResult::Kind::in_range, 1});
}

TEST_CASE("phi agrees with the direct range scan on the toy enumerator") {
  GadgetSociety gs = build_gadget(toy_enumerator());
  Swf sigma = gadget_swf(gs, 4000);
  const std::uint64_t T = 4000;

  for (std::uint64_t n = 0; n < 50; ++n) {
    std::uint64_t least = T;
    for (std::uint64_t m = 0; m < T; ++m)
      if (gs.h.h(m) == n) {
        least = m;
        break;
      }
    PhiResult r = phi(gs, sigma, n, T);
    if (least < T) {
      CHECK(r == PhiResult{PhiResult::Kind::in_range, least + 1});
      CHECK(gs.h.h(r.stage - 1) == n);  // soundness, re-checked against h
    } else {
      CHECK(r == PhiResult{PhiResult::Kind::no_witness_up_to, T});
    }
  }
}
