#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "socchoice/arrowcheck.hpp"
#include "socchoice/reversal.hpp"
#include "socchoice/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace socchoice;

namespace {

std::string index_str(const Index& i) { return i.str(); }

// best-first textual form, ties joined with '~'
std::string order_text(const WeakOrder& r) {
  std::vector<std::vector<Alt>> groups;
  for (Alt x : r.alts()) {
    bool placed = false;
    for (auto& g : groups)
      if (r.equiv(x, g[0])) {
        g.push_back(x);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({x});
  }
  std::sort(groups.begin(), groups.end(),
            [&](const auto& a, const auto& b) { return r.less(a[0], b[0]); });
  std::string out;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += "<";
    for (std::size_t j = 0; j < groups[i].size(); ++j) {
      if (j) out += "~";
      out += std::to_string(groups[i][j]);
    }
  }
  return out;
}

json order_json(const WeakOrder& r) {
  return json{{"code", index_str(r.code())}, {"pattern", order_text(r)}};
}

std::vector<std::uint64_t> parse_voters(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoull(tok));
  return out;
}

Enumerator load_enumerator(const std::string& spec) {
  if (spec == "toy") return toy_enumerator();
  std::ifstream in(spec);
  if (!in) throw std::runtime_error("cannot open enumerator file: " + spec);
  json j = json::parse(in);
  std::map<std::uint64_t, std::uint64_t> table;
  for (const auto& [k, v] : j.value("table", json::object()).items())
    table[std::stoull(k)] = v.get<std::uint64_t>();
  return table_enumerator(std::move(table), j.value("default", 0));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int usage_error(const std::string& msg) {
  std::cerr << "usage error: " << msg << "\n";
  return 2;
}

const json kSchemas = {
    {"orders.enum",
     {{"alts", "int"}, {"count", "int"}, {"orders", "[{code, pattern}]"}}},
    {"society.build",
     {{"kind", "finite | finite-cofinite | gadget"},
      {"orders", "int"},
      {"profile", "{valid, perm, cells} when --profile-index given"}}},
    {"swf.eval",
     {{"provenance", "dictator | frechet"},
      {"profile_index", "decimal string"},
      {"sigma", "{code, pattern}"}}},
    {"ks.extract",
     {{"provenance", "string"},
      {"principal", "bool"},
      {"dictator", "int when principal"},
      {"atom_members", "[bool]"}}},
    {"arrow.search",
     {{"domain", "linear | weak"},
      {"survivors", "int"},
      {"non_dictatorial", "int"},
      {"list", "[{code, dictator}]"}}},
    {"fishburn.demo",
     {{"passed", "bool"},
      {"overruled", "[{voters, profile, pair}]"},
      {"cofinite_checks", "int"}}},
    {"reversal",
     {{"n", "int"},
      {"stage_bound", "int"},
      {"verdict", "in_range | no_witness_up_to"},
      {"stage", "int"},
      {"note", "string"}}},
    {"selftest", {{"sections", "{name: {pass, detail}}"}, {"pass", "bool"}}}};

int print_schema(const std::string& verb) {
  emit(json{{"verb", verb}, {"output", kSchemas.at(verb)}});
  return 0;
}

int run_orders_enum(bool schema, int alts) {
  if (schema) return print_schema("orders.enum");
  if (alts < 1 || alts > 5) return usage_error("--alts must be in 1..5");
  std::vector<Alt> X(alts);
  for (int i = 0; i < alts; ++i) X[i] = i;
  auto orders = enumerate_weak_orders(X);
  json list = json::array();
  for (const auto& r : orders) list.push_back(order_json(r));
  emit(json{{"alts", alts}, {"count", orders.size()}, {"orders", list}});
  return 0;
}

json profile_json(const Society& soc, const Index& n) {
  const auto& p = soc.profile_at(n);
  json out{{"valid", p.valid}};
  if (p.valid) {
    out["perm"] = p.perm;
    json cells = json::array();
    for (const Index& c : p.cells) cells.push_back(index_str(c));
    out["cells"] = cells;
  }
  return out;
}

int run_society_build(bool schema, const std::string& kind,
                      const std::string& voters, const std::string& hspec,
                      const std::string& profile_index) {
  if (schema) return print_schema("society.build");
  std::shared_ptr<const Society> soc;
  json out{{"kind", kind}};
  if (kind == "finite") {
    if (voters.empty()) return usage_error("--voters required for kind finite");
    auto fin = finite_society(parse_voters(voters), {0, 1, 2});
    out["voters"] = fin->members();
    soc = fin;
  } else if (kind == "finite-cofinite") {
    soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  } else if (kind == "gadget") {
    if (hspec.empty()) return usage_error("--h required for kind gadget");
    GadgetSociety gs = build_gadget(load_enumerator(hspec));
    out["enumerator"] = gs.h.description;
    soc = gs.society;
  } else {
    return usage_error("unknown --kind");
  }
  out["alts"] = soc->alts();
  out["orders"] = soc->orders().size();
  if (!profile_index.empty())
    out["profile"] = profile_json(*soc, Index(profile_index));
  emit(out);
  return 0;
}

int run_swf_eval(bool schema, const std::string& society,
                 const std::string& voters, const std::string& provenance,
                 std::int64_t dictator, const std::string& profile_index) {
  if (schema) return print_schema("swf.eval");
  if (profile_index.empty()) return usage_error("--profile-index required");
  std::shared_ptr<const Society> soc;
  if (society == "finite") {
    if (voters.empty()) return usage_error("--voters required");
    soc = finite_society(parse_voters(voters), {0, 1, 2});
  } else if (society == "finite-cofinite") {
    soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  } else {
    return usage_error("unknown --society");
  }
  Swf s;
  if (provenance == "dictator") {
    if (dictator < 0) return usage_error("--dictator required");
    s = dictator_swf(soc, static_cast<std::uint64_t>(dictator));
  } else if (provenance == "frechet") {
    if (society != "finite-cofinite")
      return usage_error("frechet needs the finite-cofinite society");
    s = swf_from_ultrafilter(soc, frechet_ultrafilter(soc->algebra_ptr()));
  } else {
    return usage_error("unknown --provenance");
  }
  Index n(profile_index);
  emit(json{{"provenance", provenance},
            {"profile_index", index_str(n)},
            {"sigma", order_json(s.sigma(n))}});
  return 0;
}

int run_ks_extract(bool schema, const std::string& society,
                   const std::string& voters, const std::string& provenance,
                   std::int64_t dictator) {
  if (schema) return print_schema("ks.extract");
  json out{{"provenance", provenance}};
  if (society == "finite") {
    if (voters.empty()) return usage_error("--voters required");
    auto fin = finite_society(parse_voters(voters), {0, 1, 2});
    Swf s;
    if (provenance == "dictator") {
      if (dictator < 0) return usage_error("--dictator required");
      s = dictator_swf(fin, static_cast<std::uint64_t>(dictator));
    } else {
      return usage_error("finite extraction supports --provenance dictator");
    }
    Ultrafilter u = ks_extract(s);
    json atoms = json::array();
    std::optional<std::uint64_t> principal_at;
    for (std::uint64_t v : fin->members()) {
      bool in = u.member(fin->algebra().atom_index(v)).is_in();
      atoms.push_back(in);
      if (in) principal_at = v;
    }
    out["principal"] = principal_at.has_value();
    if (principal_at) out["dictator"] = *principal_at;
    out["atom_members"] = atoms;
  } else if (society == "finite-cofinite" && provenance == "frechet") {
    auto soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
    Swf s = swf_from_ultrafilter(soc, frechet_ultrafilter(soc->algebra_ptr()));
    Ultrafilter u = ks_extract(s);
    json atoms = json::array();
    bool any = false;
    for (std::uint64_t v = 0; v < 10; ++v) {
      bool in = u.member(soc->algebra().atom_index(v)).is_in();
      atoms.push_back(in);
      any = any || in;
    }
    out["principal"] = any;
    out["atom_members"] = atoms;
  } else {
    return usage_error("unsupported society/provenance combination");
  }
  emit(out);
  return 0;
}

int run_arrow_search(bool schema, int nvoters, int alts,
                     const std::string& domain, const std::string& emit_path) {
  if (schema) return print_schema("arrow.search");
  ArrowDomain d;
  if (domain == "linear")
    d = ArrowDomain::linear;
  else if (domain == "weak")
    d = ArrowDomain::weak;
  else
    return usage_error("--domain must be linear or weak");
  auto res = enumerate_arrovian_swfs(nvoters, alts, d);
  json list = json::array();
  std::size_t bad = 0;
  for (const auto& s : res.survivors) {
    json e{{"code", index_str(s.code)}};
    if (s.dictator)
      e["dictator"] = *s.dictator;
    else {
      e["dictator"] = nullptr;
      ++bad;
    }
    list.push_back(e);
  }
  json out{{"domain", domain},        {"survivors", res.survivors.size()},
           {"non_dictatorial", bad},  {"nodes", res.nodes},
           {"pruned", res.pruned},    {"list", list}};
  if (!emit_path.empty()) std::ofstream(emit_path) << out.dump(2) << "\n";
  emit(out);
  return bad == 0 ? 0 : 1;
}

int run_fishburn(bool schema, int k, int bound) {
  if (schema) return print_schema("fishburn.demo");
  auto soc = canonical_society({0, 1, 2}, finite_cofinite_algebra());
  Swf s = swf_from_ultrafilter(soc, frechet_ultrafilter(soc->algebra_ptr()));
  NonDictReport rep = nondictatoriality_suite(
      s, static_cast<std::size_t>(k), static_cast<std::uint64_t>(bound));
  json over = json::array();
  for (const auto& o : rep.plain)
    over.push_back(json{{"voters", o.voters},
                        {"profile", index_str(o.profile)},
                        {"pair", {o.x, o.y}}});
  for (const auto& o : rep.tuples)
    over.push_back(json{{"voters", o.voters},
                        {"profile", index_str(o.profile)},
                        {"pair", {o.x, o.y}}});
  emit(json{{"passed", rep.passed},
            {"overruled", over},
            {"cofinite_checks", rep.cofinite_checks}});
  return rep.passed ? 0 : 1;
}

int run_reversal(bool schema, const std::string& hspec, std::int64_t n,
                 std::int64_t stage_bound) {
  if (schema) return print_schema("reversal");
  if (hspec.empty() || n < 0 || stage_bound < 0)
    return usage_error("--h, --n and --stage-bound are required");
  GadgetSociety gs = build_gadget(load_enumerator(hspec));
  Swf sigma = gadget_swf(gs, static_cast<std::uint64_t>(stage_bound));
  PhiResult r = phi(gs, sigma, static_cast<std::uint64_t>(n),
                    static_cast<std::uint64_t>(stage_bound));
  emit(json{
      {"enumerator", gs.h.description},
      {"n", n},
      {"stage_bound", stage_bound},
      {"verdict",
       r.kind == PhiResult::Kind::in_range ? "in_range" : "no_witness_up_to"},
      {"stage", r.stage},
      {"note", "membership past the stage bound stays open; an unbounded "
               "evaluation of the social outcome would decide the full range "
               "of h"}});
  return 0;
}

int run_selftest(bool schema) {
  if (schema) return print_schema("selftest");
  std::string body = selftest_json();
  std::cout << body;
  return json::parse(body)["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable social choice toolkit"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker cap (current algorithms are serial)");

  int exit_code = 0;

  auto* orders = app.add_subcommand("orders", "weak order enumeration");
  orders->require_subcommand(1);
  {
    auto* en = orders->add_subcommand("enum", "list all weak orders");
    auto schema = std::make_shared<bool>(false);
    auto alts = std::make_shared<int>(3);
    en->add_flag("--schema", *schema, "print the output schema");
    en->add_option("--alts", *alts, "number of alternatives");
    en->callback([&exit_code, schema, alts] {
      exit_code = run_orders_enum(*schema, *alts);
    });
  }

  auto* society = app.add_subcommand("society", "society construction");
  society->require_subcommand(1);
  {
    auto* b = society->add_subcommand("build", "build and summarize a society");
    auto schema = std::make_shared<bool>(false);
    auto kind = std::make_shared<std::string>("finite-cofinite");
    auto voters = std::make_shared<std::string>();
    auto hspec = std::make_shared<std::string>();
    auto pidx = std::make_shared<std::string>();
    b->set_help_flag("--help", "print help");
    b->add_flag("--schema", *schema, "print the output schema");
    b->add_option("--kind", *kind, "finite | finite-cofinite | gadget");
    b->add_option("--voters", *voters, "comma-separated voters (finite)");
    b->add_option("--h", *hspec, "toy or a JSON enumerator file (gadget)");
    b->add_option("--profile-index", *pidx, "decode this profile index");
    b->callback([&exit_code, schema, kind, voters, hspec, pidx] {
      exit_code = run_society_build(*schema, *kind, *voters, *hspec, *pidx);
    });
  }

  auto* swf = app.add_subcommand("swf", "social welfare functions");
  swf->require_subcommand(1);
  {
    auto* ev = swf->add_subcommand("eval", "evaluate sigma at a profile index");
    auto schema = std::make_shared<bool>(false);
    auto society_kind = std::make_shared<std::string>("finite-cofinite");
    auto voters = std::make_shared<std::string>();
    auto prov = std::make_shared<std::string>("frechet");
    auto dict = std::make_shared<std::int64_t>(-1);
    auto pidx = std::make_shared<std::string>();
    ev->add_flag("--schema", *schema, "print the output schema");
    ev->add_option("--society", *society_kind, "finite | finite-cofinite");
    ev->add_option("--voters", *voters, "comma-separated voters (finite)");
    ev->add_option("--provenance", *prov, "dictator | frechet");
    ev->add_option("--dictator", *dict, "dictating voter");
    ev->add_option("--profile-index", *pidx, "profile index, decimal");
    ev->callback([&exit_code, schema, society_kind, voters, prov, dict, pidx] {
      exit_code = run_swf_eval(*schema, *society_kind, *voters, *prov, *dict, *pidx);
    });
  }

  auto* ks = app.add_subcommand("ks", "decisive-coalition extraction");
  ks->require_subcommand(1);
  {
    auto* ex = ks->add_subcommand("extract", "extract and classify the filter");
    auto schema = std::make_shared<bool>(false);
    auto society_kind = std::make_shared<std::string>("finite");
    auto voters = std::make_shared<std::string>();
    auto prov = std::make_shared<std::string>("dictator");
    auto dict = std::make_shared<std::int64_t>(-1);
    ex->add_flag("--schema", *schema, "print the output schema");
    ex->add_option("--society", *society_kind, "finite | finite-cofinite");
    ex->add_option("--voters", *voters, "comma-separated voters (finite)");
    ex->add_option("--provenance", *prov, "dictator | frechet");
    ex->add_option("--dictator", *dict, "dictating voter");
    ex->callback([&exit_code, schema, society_kind, voters, prov, dict] {
      exit_code = run_ks_extract(*schema, *society_kind, *voters, *prov, *dict);
    });
  }

  auto* arrow = app.add_subcommand("arrow", "exhaustive Arrow verification");
  arrow->require_subcommand(1);
  {
    auto* se = arrow->add_subcommand("search", "enumerate axiom-satisfying rules");
    auto schema = std::make_shared<bool>(false);
    auto nvoters = std::make_shared<int>(2);
    auto alts = std::make_shared<int>(3);
    auto domain = std::make_shared<std::string>("linear");
    auto emit_path = std::make_shared<std::string>();
    se->add_flag("--schema", *schema, "print the output schema");
    se->add_option("--voters", *nvoters, "number of voters");
    se->add_option("--alts", *alts, "number of alternatives");
    se->add_option("--domain", *domain, "linear | weak");
    se->add_option("--emit", *emit_path, "also write the report here");
    se->callback([&exit_code, schema, nvoters, alts, domain, emit_path] {
      exit_code = run_arrow_search(*schema, *nvoters, *alts, *domain, *emit_path);
    });
  }

  auto* fish = app.add_subcommand("fishburn", "non-dictatorial possibility demo");
  fish->require_subcommand(1);
  {
    auto* de = fish->add_subcommand("demo", "witness suite on the frechet swf");
    auto schema = std::make_shared<bool>(false);
    auto k = std::make_shared<int>(3);
    auto bound = std::make_shared<int>(50);
    de->add_flag("--schema", *schema, "print the output schema");
    de->add_option("--k", *k, "tuple size for simultaneous overruling");
    de->add_option("--bound", *bound, "overrule every voter below this");
    de->callback([&exit_code, schema, k, bound] {
      exit_code = run_fishburn(*schema, *k, *bound);
    });
  }

  {
    auto* rv = app.add_subcommand("reversal", "range-membership gadget");
    auto schema = std::make_shared<bool>(false);
    auto hspec = std::make_shared<std::string>();
    auto n = std::make_shared<std::int64_t>(-1);
    auto stage = std::make_shared<std::int64_t>(-1);
    rv->set_help_flag("--help", "print help");
    rv->add_flag("--schema", *schema, "print the output schema");
    rv->add_option("--h", *hspec, "toy or a JSON enumerator file");
    rv->add_option("--n", *n, "queried value");
    rv->add_option("--stage-bound", *stage, "scan cutoff");
    rv->callback([&exit_code, schema, hspec, n, stage] {
      exit_code = run_reversal(*schema, *hspec, *n, *stage);
    });
  }

  {
    auto* st = app.add_subcommand("selftest", "deterministic property battery");
    auto schema = std::make_shared<bool>(false);
    st->add_flag("--schema", *schema, "print the output schema");
    st->callback([&exit_code, schema] { exit_code = run_selftest(*schema); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (jobs < 1) return 2;
  return exit_code;
}
