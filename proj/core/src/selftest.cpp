#include "socchoice/selftest.hpp"

#include <array>

#include "json.hpp"
#include "socchoice/arrowcheck.hpp"
#include "socchoice/reversal.hpp"

namespace socchoice {

namespace {

using json = nlohmann::ordered_json;

json check(bool ok, const std::string& detail) {
  return json{{"pass", ok}, {"detail", detail}};
}

json run_orders() {
  const std::array<std::size_t, 4> expect{1, 3, 13, 75};
  bool ok = true;
  json counts = json::array();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Alt> X(n);
    for (std::size_t i = 0; i < n; ++i) X[i] = static_cast<Alt>(i);
    std::size_t got = enumerate_weak_orders(X).size();
    counts.push_back(got);
    ok = ok && got == expect[n - 1];
  }
  json r = check(ok, "weak order counts for 1..4 alternatives");
  r["counts"] = counts;
  return r;
}

json run_ultra() {
  auto alg = powerset_algebra({0, 1, 2});
  auto probes = exhaustive_probes(*alg);
  std::vector<UnionProbe> unions;
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y)
      unions.push_back({{alg->subset_index(x), alg->subset_index(y)},
                        alg->subset_index(x | y)});
  bool ok = true;
  for (std::uint64_t d = 0; d < 3; ++d) {
    Ultrafilter u = principal_ultrafilter(alg, d);
    ok = ok && check_ultrafilter_axioms(u, probes).passed();
    ok = ok && uf_basic_properties(u, probes, unions).passed();
  }
  return check(ok, "ultrafilter axioms exhaustive on the 3-voter powerset");
}

json run_roundtrips() {
  auto soc = finite_society({0, 1}, {0, 1, 2});
  bool ok = true;
  for (std::uint64_t d : {0ull, 1ull}) {
    Swf s = swf_from_ultrafilter(
        soc, principal_ultrafilter(soc->algebra_ptr(), d));
    ok = ok && find_dictator(s) == d;
    Ultrafilter back = ks_extract(dictator_swf(soc, d));
    for (std::uint64_t v : soc->members())
      ok = ok && (back.member(soc->algebra().atom_index(v)).is_in() == (v == d));
  }
  return check(ok, "dictator/principal-ultrafilter roundtrips, two voters");
}

json run_arrow() {
  auto res = enumerate_arrovian_swfs(2, 3, ArrowDomain::linear);
  bool ok = !res.survivors.empty();
  for (const auto& s : res.survivors) ok = ok && s.dictator.has_value();
  ok = ok && naive_linear_count() == res.survivors.size();
  json r = check(ok, "linear-domain search: all survivors dictatorial, recount agrees");
  r["survivors"] = res.survivors.size();
  return r;
}

json run_fishburn() {
  auto soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  Swf s = swf_from_ultrafilter(soc, frechet_ultrafilter(soc->algebra_ptr()));
  NonDictReport rep = nondictatoriality_suite(s, 3, 10);
  json r = check(rep.passed, "frechet swf: non-dictatoriality witnesses");
  r["overruled_voters"] = rep.plain.size();
  return r;
}

json run_reversal() {
  bool ok = true;
  for (std::uint64_t def : {0ull, 1ull, 3ull}) {
    GadgetSociety gs =
        build_gadget(table_enumerator({{0, 5}, {2, 9}}, def));
    Swf sigma = gadget_swf(gs, 100);
    for (std::uint64_t n = 0; n < 20; ++n) {
      std::uint64_t least = 100;
      for (std::uint64_t m = 0; m < 100; ++m)
        if (gs.h.h(m) == n) {
          least = m;
          break;
        }
      PhiResult r = phi(gs, sigma, n, 100);
      if (least < 100)
        ok = ok && r == PhiResult{PhiResult::Kind::in_range, least + 1};
      else
        ok = ok && r == PhiResult{PhiResult::Kind::no_witness_up_to, 100};
    }
  }
  return check(ok, "reversal gadget agrees with the direct range scan");
}

}  // namespace

std::string selftest_json() {
  json out;
  out["suite"] = "selftest";
  out["sections"] = json::object();
  out["sections"]["orders"] = run_orders();
  out["sections"]["ultrafilters"] = run_ultra();
  out["sections"]["roundtrips"] = run_roundtrips();
  out["sections"]["arrow_linear"] = run_arrow();
  out["sections"]["fishburn"] = run_fishburn();
  out["sections"]["reversal"] = run_reversal();
  bool all = true;
  for (const auto& [k, v] : out["sections"].items()) all = all && v["pass"].get<bool>();
  out["pass"] = all;
  return out.dump(2) + "\n";
}

}  // namespace socchoice
