#include "socchoice/reversal.hpp"

#include <stdexcept>

namespace socchoice {

Enumerator table_enumerator(std::map<std::uint64_t, std::uint64_t> table,
                            std::uint64_t default_value) {
  Enumerator e;
  e.description = "table";
  e.h = [table = std::move(table), default_value](std::uint64_t m) {
    auto it = table.find(m);
    return it == table.end() ? default_value : it->second;
  };
  return e;
}

Enumerator toy_enumerator() {
  Enumerator e;
  e.description = "collatz-steps";
  e.h = [](std::uint64_t m) -> std::uint64_t {
    std::uint64_t n = m % 64, budget = m / 64, c = n;
    if (n == 0) return 0;
    for (std::uint64_t step = 0; step < budget; ++step) {
      if (c == 1) return n;
      c = c % 2 == 0 ? c / 2 : 3 * c + 1;
    }
    return c == 1 ? n : 0;
  };
  return e;
}

GadgetSociety build_gadget(Enumerator h) {
  Universe nat = Universe::naturals();
  auto fn = h.h;
  auto gen = [nat, fn](std::uint64_t row) -> DescribedSet {
    if (row % 2 == 1) return DescribedSet::finite(nat, {row / 2});
    std::uint64_t n = row / 2;
    DescribedSet::OracleGen g;
    g.description = "range row";
    g.member = [fn, n](std::uint64_t v) {
      for (std::uint64_t m = 0; m < v; ++m)
        if (fn(m) == n) return true;
      return false;
    };
    g.normal_form_at = [fn, n](std::uint64_t stage) -> NormalForm {
      for (std::uint64_t m = 0; m < stage; ++m)
        if (fn(m) == n) {
          // least witness m: the row is the tail above m
          std::vector<std::uint64_t> low(m + 1);
          for (std::uint64_t v = 0; v <= m; ++v) low[v] = v;
          return NormalForm::cof(std::move(low));
        }
      return NormalForm::unk(stage);
    };
    return DescribedSet::oracle(nat, g);
  };
  auto atom_seq = [](std::uint64_t v) {
    return FormationSeq{{0, 2 * v + 1, 2 * v + 1}};
  };
  auto alg = std::make_shared<const Algebra>(nat, gen, atom_seq, false,
                                             "range gadget");
  GadgetSociety gs;
  gs.h = std::move(h);
  gs.algebra = alg;
  gs.society = canonical_society({0, 1, 2}, alg);
  return gs;
}

namespace {

std::vector<std::size_t> gadget_perm(const Society& soc) {
  OrderPattern ab, ba;
  ab.groups = {{0}, {1}};
  ab.wildcard = OrderPattern::Wildcard::own_level;
  ab.wildcard_pos = 2;
  ba.groups = {{1}, {0}};
  ba.wildcard = OrderPattern::Wildcard::own_level;
  ba.wildcard_pos = 2;
  return soc.perm_starting_with({soc.order_pos(make_order(ab, soc.alts())),
                                 soc.order_pos(make_order(ba, soc.alts()))});
}

}  // namespace

Index gadget_g(const GadgetSociety& gs, std::uint64_t n) {
  Index cell = gs.algebra->index_of({{0, 2 * n, 2 * n}});
  return gs.society->embed(gadget_perm(*gs.society), {cell});
}

Swf gadget_swf(const GadgetSociety& gs, std::uint64_t stage_bound) {
  return swf_from_ultrafilter(gs.society,
                              frechet_ultrafilter(gs.algebra, stage_bound));
}

PhiResult phi(const GadgetSociety& gs, const Swf& sigma, std::uint64_t n,
              std::uint64_t T) {
  Index j = gadget_g(gs, n);
  Index strict = gs.society->mu_strict(j, 0, 1);
  NormalForm nf = gs.algebra->normal_form(strict, T);
  if (nf.kind == NormalForm::Kind::cofinite) {
    std::uint64_t stage = nf.support.empty() ? 0 : nf.support.back() + 1;
    if (stage > 0 && gs.h.h(stage - 1) != n)
      throw std::logic_error("witness re-check failed");
    // when sigma's own stage bound suffices it must say the same
    try {
      if (!sigma.sigma(j).less(0, 1))
        throw std::logic_error("sigma disagrees with the witness scan");
    } catch (const std::runtime_error&) {
      // undecided at sigma's bound; the verdict stands on the direct scan
    }
    return {PhiResult::Kind::in_range, stage};
  }
  return {PhiResult::Kind::no_witness_up_to, T};
}

}  // namespace socchoice
