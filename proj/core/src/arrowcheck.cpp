#include "socchoice/arrowcheck.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace socchoice {

namespace {

const std::vector<Alt> X3{0, 1, 2};
const std::array<std::pair<Alt, Alt>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

struct Setup {
  std::vector<WeakOrder> orders;               // all 13
  std::vector<std::array<int, 3>> triples;     // pair-state triple per order
  std::set<std::array<int, 3>> valid;          // the 13 coherent triples
  std::map<std::array<int, 3>, std::size_t> order_of_triple;
  std::vector<std::size_t> domain_orders;      // positions usable by voters

  explicit Setup(ArrowDomain domain) {
    orders = enumerate_weak_orders(X3);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::array<int, 3> t;
      for (std::size_t p = 0; p < 3; ++p)
        t[p] = rel3_state(order_relation(orders[i], kPairs[p].first, kPairs[p].second));
      triples.push_back(t);
      valid.insert(t);
      order_of_triple[t] = i;
      bool linear = t[0] != 2 && t[1] != 2 && t[2] != 2;
      if (domain == ArrowDomain::weak || linear) domain_orders.push_back(i);
    }
  }
};

constexpr int cell_of(std::size_t pair, int s0, int s1) {
  return static_cast<int>(pair) * 9 + s0 * 3 + s1;
}

struct Profile2 {
  std::size_t oa, ob;        // voter order positions
  std::array<int, 3> cells;  // one aggregator cell per pair
};

struct Search {
  Setup setup;
  std::vector<Profile2> profiles;
  std::array<int, 27> assign;            // -1 unassigned, -2 unreachable
  std::vector<int> free_cells;           // in interleaved first-use order
  std::vector<std::vector<std::size_t>> by_cell;  // profiles touching a cell
  ArrowSearchResult result;
  ArrowDomain domain;

  explicit Search(ArrowDomain d) : setup(d), domain(d) {
    assign.fill(-2);
    for (std::size_t a : setup.domain_orders)
      for (std::size_t b : setup.domain_orders) {
        Profile2 pr{a, b, {}};
        for (std::size_t p = 0; p < 3; ++p)
          pr.cells[p] = cell_of(p, setup.triples[a][p], setup.triples[b][p]);
        profiles.push_back(pr);
      }

    // unanimity pins the two all-strict cells of every pair
    for (std::size_t p = 0; p < 3; ++p) {
      assign[cell_of(p, 0, 0)] = 0;
      assign[cell_of(p, 1, 1)] = 1;
    }
    by_cell.resize(27);
    for (std::size_t t = 0; t < profiles.size(); ++t)
      for (int c : profiles[t].cells) {
        if (assign[c] == -2) {
          assign[c] = -1;
          free_cells.push_back(c);
        }
        by_cell[c].push_back(t);
      }
  }

  // a profile is violated when all three of its cells are set and the triple
  // is not the restriction pattern of any weak order
  bool violated(const Profile2& pr, std::array<int, 3>* states) const {
    std::array<int, 3> t;
    for (std::size_t p = 0; p < 3; ++p) {
      int v = assign[pr.cells[p]];
      if (v < 0) return false;
      t[p] = v;
    }
    if (setup.valid.count(t)) return false;
    if (states) *states = t;
    return true;
  }

  void record_survivor() {
    ArrowSurvivor s;
    s.domain = domain;
    for (auto& row : s.table) row.fill(-1);
    Index code = 0;
    for (int c = 0; c < 27; ++c) {
      if (assign[c] < 0) continue;
      s.table[c / 9][c % 9] = assign[c];
      code = code * 3 + assign[c];
    }
    s.code = code;
    s.dictator = verdict();
    result.survivors.push_back(std::move(s));
  }

  std::optional<std::uint64_t> verdict() const {
    for (std::uint64_t d : {0ull, 1ull}) {
      bool follows = true;
      for (const Profile2& pr : profiles) {
        const auto& own = setup.triples[d == 0 ? pr.oa : pr.ob];
        for (std::size_t p = 0; p < 3 && follows; ++p)
          if (own[p] != 2 && assign[pr.cells[p]] != own[p]) follows = false;
        if (!follows) break;
      }
      if (follows) return d;
    }
    return std::nullopt;
  }

  void dfs(std::size_t depth) {
    if (depth == free_cells.size()) {
      record_survivor();
      return;
    }
    int cell = free_cells[depth];
    for (int state = 0; state < 3; ++state) {
      ++result.nodes;
      assign[cell] = state;
      bool bad = false;
      for (std::size_t t : by_cell[cell]) {
        std::array<int, 3> states;
        if (violated(profiles[t], &states)) {
          ++result.pruned;
          if (result.prune_log.size() < 100)
            result.prune_log.push_back(
                {profiles[t].oa, profiles[t].ob, states});
          bad = true;
          break;
        }
      }
      if (!bad) dfs(depth + 1);
      assign[cell] = -1;
    }
  }
};

}  // namespace

ArrowSearchResult enumerate_arrovian_swfs(std::size_t voters, std::size_t alts,
                                          ArrowDomain domain) {
  if (voters != 2 || alts != 3)
    throw std::invalid_argument("search supports exactly 2 voters and 3 alternatives");
  Search s(domain);
  s.dfs(0);
  std::sort(s.result.survivors.begin(), s.result.survivors.end(),
            [](const ArrowSurvivor& a, const ArrowSurvivor& b) {
              return a.code < b.code;
            });
  return std::move(s.result);
}

std::uint64_t naive_linear_count() {
  Search s(ArrowDomain::linear);
  const auto& cells = s.free_cells;
  std::uint64_t count = 0, total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= 3;
  for (std::uint64_t word = 0; word < total; ++word) {
    std::uint64_t w = word;
    for (int c : cells) {
      s.assign[c] = static_cast<int>(w % 3);
      w /= 3;
    }
    bool ok = true;
    for (const Profile2& pr : s.profiles)
      if (s.violated(pr, nullptr)) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

ArrowSurvivor projection_rule(ArrowDomain domain, std::uint64_t voter) {
  if (voter > 1) throw std::invalid_argument("two voters only");
  Search s(domain);
  for (int c : s.free_cells) {
    int s0 = (c % 9) / 3, s1 = c % 3;
    s.assign[c] = voter == 0 ? s0 : s1;
  }
  s.record_survivor();
  return s.result.survivors.back();
}

KsBridgeReport verify_against_ks(const ArrowSurvivor& s) {
  if (!s.dictator)
    throw std::invalid_argument("only dictatorial survivors can be bridged");
  Setup setup(ArrowDomain::weak);

  // complete any cells the linear domain left open with the dictator's own
  // stance; for weak survivors this is a no-op
  std::array<std::array<int, 9>, 3> table = s.table;
  for (std::size_t p = 0; p < 3; ++p)
    for (int key = 0; key < 9; ++key)
      if (table[p][key] < 0)
        table[p][key] = *s.dictator == 0 ? key / 3 : key % 3;

  auto soc = finite_society({0, 1}, X3);
  std::vector<std::size_t> outputs;
  for (const auto& tp : soc->all_profiles()) {
    std::array<int, 3> t;
    for (std::size_t p = 0; p < 3; ++p)
      t[p] = table[p][3 * setup.triples[tp[0]][p] + setup.triples[tp[1]][p]];
    outputs.push_back(setup.order_of_triple.at(t));
  }

  KsBridgeReport rep;
  rep.expected = *s.dictator;
  rep.extracted = find_dictator(table_swf(soc, outputs));
  rep.match = rep.expected == rep.extracted;
  return rep;
}

}  // namespace socchoice
