#include "checks.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>

using namespace codonsym;

namespace checks {

const std::vector<OptionPair>& quoted_option_pairs() {
  static const std::vector<OptionPair> v = {
      {"osp52-c1", "soft:1", 12, 36},
      {"osp52-c1", "strong:1", 18, 36},
      {"osp52-c1", "soft:2", 13, 30},
      {"osp52-c1", "strong:2", 21, 30},
      {"osp52-c1", "soft:1,sas:1", 18, 36},
      {"osp52-c1", "soft:1,soft:2", 15, 18},
      {"osp52-c1", "soft:1,strong:2", 25, 18},
      {"osp52-c1", "strong:1,soft:2", 22, 18},
      {"osp52-c1", "strong:1,strong:2", 35, 18},
      {"osp52-c1", "soft:2,soft:1", 15, 18},
      {"osp52-c1", "soft:2,strong:1", 22, 18},
      {"osp52-c1", "soft:2,sas:2", 21, 30},
      {"osp52-c1", "soft:2,soft:3", 16, 12},
      {"osp52-c1", "soft:2,strong:3", 26, 12},
      {"osp52-c3", "soft:12", 21, 18},
      {"osp52-c3", "strong:12", 35, 18},
      {"osp52-c3", "soft:3", 18, 24},
      {"osp52-c3", "strong:3", 28, 24},
      {"osp52-c3", "soft:3,soft:12", 26, 0},
      {"osp52-c3", "soft:3,strong:12", 42, 0},
      {"osp52-c3", "soft:3,sas:3", 28, 24},
      {"osp42a-d23", "soft:1", 18, 48},
      {"osp42a-d23", "strong:1", 32, 48},
      {"osp42a-d23", "soft:23", 12, 18},
      {"osp42a-d23", "strong:23", 16, 18},
      {"osp42a-d23", "soft:1,sas:1", 32, 48},
      {"osp42a-d23", "soft:1,soft:23", 27, 0},
      {"osp42a-d23", "soft:1,strong:23", 35, 0},
      {"osp42b-c1", "soft:1", 11, 36},
      {"osp42b-c1", "strong:1", 18, 36},
      {"osp42b-c1", "soft:2", 9, 30},
      {"osp42b-c1", "strong:2", 14, 30},
      {"osp42b-c1", "soft:1,sas:1", 18, 36},
      {"osp42b-c1", "soft:1,soft:2", 12, 24},
      {"osp42b-c1", "soft:1,strong:2", 19, 24},
      {"osp42b-c1", "soft:1,soft:3", 15, 12},
      {"osp42b-c1", "soft:1,strong:3", 24, 12},
      {"osp42b-c1", "strong:1,soft:2", 20, 24},
      {"osp42b-c1", "strong:1,strong:2", 30, 24},
      {"osp42b-c1", "strong:1,soft:3", 24, 12},
      {"osp42b-c1", "strong:1,strong:3", 40, 12},
      {"osp42b-c1", "soft:2,soft:1", 12, 24},
      {"osp42b-c1", "soft:2,strong:1", 20, 24},
      {"osp42b-c1", "soft:2,sas:2", 14, 30},
      {"osp42b-c1", "soft:1,soft:2,sas:1", 20, 24},
      {"osp42b-c1", "soft:1,soft:2,sas:2", 19, 24},
      {"osp42b-c1", "soft:1,soft:2,soft:3", 16, 0},
      {"osp42b-c1", "soft:1,soft:2,strong:3", 26, 0},
  };
  return v;
}

long hand_count_soft_strong(const std::string& fixture, std::size_t column, std::size_t soft_slot,
                            std::size_t strong_slot) {
  // soft: |m| = s, s-1, ..., i.e. floor(2s/2)+1 pieces; strong: 2s+1 pieces
  Doc d = load_fixture(fixture);
  std::set<std::string> seen;
  long n = 0;
  static const std::regex num(R"(\d+)");
  for (auto& p : d["paths"]) {
    std::string prefix;
    for (std::size_t c = 0; c <= column; ++c) prefix += p["cells"][c].dump();
    if (!seen.insert(prefix).second) continue;
    std::string lab = p["cells"][column][0];
    std::vector<int> two_s;
    for (std::sregex_iterator it(lab.begin(), lab.end(), num), e; it != e; ++it) two_s.push_back(std::stoi(it->str()));
    n += (two_s.at(soft_slot) / 2 + 1) * (two_s.at(strong_slot) + 1);
  }
  return n;
}

std::vector<CountSlip> known_count_slips() {
  return {
      {"osp52-c1", "soft:1,strong:2", 25, hand_count_soft_strong("table5.json", 1, 0, 1)},
      {"osp42a-d23", "soft:1,strong:23", 35, hand_count_soft_strong("table9.json", 1, 0, 1)},
  };
}

namespace {

std::vector<RootSystem> small_root_systems() {
  std::vector<RootSystem> v;
  for (int r = 1; r <= 5; ++r) v.push_back(build_root_system(Series::A, r));
  v.push_back(build_root_system(Series::B, 2));
  for (int r = 2; r <= 3; ++r) v.push_back(build_root_system(Series::C, r));
  return v;
}

// every irrep of dimension <= cap, by walking outward from the trivial one
std::vector<Labels> irreps_up_to(const RootSystem& rs, long cap) {
  std::vector<Labels> out, frontier = {Labels(rs.rank, 0)};
  std::set<Labels> seen(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    std::vector<Labels> next;
    for (auto& l : frontier) {
      if (weyl_dimension(rs, l) > cap) continue;
      out.push_back(l);
      for (int i = 0; i < rs.rank; ++i) {
        auto m = l;
        ++m[i];
        if (seen.insert(m).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

PhaseTwo phase2_start(const ChainSpec& c) { return to_phase_two(run_chain(c)); }

std::vector<const ChainSpec*> sl2_chains() {
  std::vector<const ChainSpec*> v;
  for (auto& c : chain_registry())
    if (run_chain(c).algebra.all_sl2()) v.push_back(&c);
  return v;
}

}  // namespace

Failures freudenthal_vs_weyl() {
  Failures f;
  for (auto& rs : small_root_systems())
    for (auto& l : irreps_up_to(rs, 64)) {
      long total = 0;
      for (auto& [w, m] : irrep_character(rs, l)) total += m;
      if (total != weyl_dimension(rs, l))
        f.push_back(rs.name() + " " + format_labels(l) + ": Freudenthal " + std::to_string(total) + " vs Weyl " +
                    std::to_string(weyl_dimension(rs, l)));
    }
  return f;
}

Failures dimension_conservation() {
  Failures f;
  for (auto& c : chain_registry()) {
    const auto& rep = catalog_entry(c.catalog_id);
    auto d = start_distribution(build_super(rep.algebra), rep.hw);
    if (d.total_dim() != 64) f.push_back(c.id + ": first step has dim " + std::to_string(d.total_dim()));
    for (auto& s : c.steps) {
      d = apply_step(d, s);
      if (d.total_dim() != 64) f.push_back(c.id + " after " + s.describe() + ": dim " + std::to_string(d.total_dim()));
    }
    if (!d.algebra.all_sl2()) continue;
    PhaseTwo p = to_phase_two(d);
    for (int k = 0; k < static_cast<int>(p.slot_names.size()); ++k)
      for (auto kind : {OpKind::Soft, OpKind::Strong}) {
        auto q = apply_op(p, {k, kind});
        if (q.total_dim() != 64) f.push_back(c.id + " " + q.render_op({k, kind}) + ": dim " + std::to_string(q.total_dim()));
      }
  }
  return f;
}

Failures peel_nonnegative(std::uint32_t seed, int trials) {
  Failures f;
  std::mt19937 rng(seed);
  auto systems = small_root_systems();
  for (int t = 0; t < trials; ++t) {
    const auto& rs = systems[rng() % systems.size()];
    auto pool = irreps_up_to(rs, 20);
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    // tensor product character, peeled back into irreps
    FormalCharacter ch;
    for (auto& [w1, m1] : irrep_character(rs, a))
      for (auto& [w2, m2] : irrep_character(rs, b)) ch[w1 + w2] += m1 * m2;
    auto g = make_algebra({rs});
    Multiset m;
    try {
      m = peel(g, ch);
    } catch (const std::exception& e) {
      f.push_back(rs.name() + " " + format_labels(a) + "x" + format_labels(b) + ": " + e.what());
      continue;
    }
    long dim = 0;
    for (auto& [lab, k] : m) {
      if (k <= 0) f.push_back(rs.name() + ": nonpositive multiplicity for " + format_tuple(lab));
      dim += k * tuple_dimension(g, lab);
    }
    if (dim != weyl_dimension(rs, a) * weyl_dimension(rs, b))
      f.push_back(rs.name() + " " + format_labels(a) + "x" + format_labels(b) + ": dimension not conserved");
  }
  return f;
}

Failures phase2_monotone(std::uint32_t seed, int sequences) {
  Failures f;
  std::mt19937 rng(seed);
  auto chains = sl2_chains();
  std::vector<PhaseTwo> starts;
  for (auto* c : chains) starts.push_back(phase2_start(*c));
  for (int t = 0; t < sequences; ++t) {
    std::size_t ci = rng() % starts.size();
    PhaseTwo d = starts[ci];
    Stats s = stats(d);
    const int K = static_cast<int>(d.slot_names.size());
    std::string trail = chains[ci]->id;
    for (int step = 0; step < 6; ++step) {
      std::vector<Op> ops;
      for (int k = 0; k < K; ++k)
        for (auto kind : applicable(d, k)) ops.push_back({k, kind});
      if (ops.empty()) break;
      Op op = ops[rng() % ops.size()];
      // occasionally freeze a random subset, which must not break monotonicity either
      std::vector<bool> frozen(d.entries.size(), false);
      bool use_frozen = rng() % 4 == 0;
      if (use_frozen)
        for (std::size_t i = 0; i < frozen.size(); ++i) frozen[i] = rng() % 3 == 0;
      trail += " " + d.render_op(op);
      d = apply_op(d, op, use_frozen ? &frozen : nullptr);
      Stats n = stats(d);
      if (n.singlets < s.singlets) f.push_back(trail + ": singlets decreased");
      if (n.odd < s.odd) f.push_back(trail + ": odd count decreased");
      if (n.d3 > s.d3) f.push_back(trail + ": d3 increased");
      if (n.n < s.n) f.push_back(trail + ": multiplet count decreased");
      if (d.total_dim() != 64) f.push_back(trail + ": dimension not conserved");
      s = n;
    }
  }
  return f;
}

Failures conjugation_equivariance() {
  Failures f;
  for (auto& e : builtin_registry()) {
    if (e.source.factors.size() != 1) continue;
    const auto& rs = e.source.factors[0];
    for (auto& l : irreps_up_to(rs, 30)) {
      Multiset direct = branch(e, conjugate(rs, l));
      Multiset via;
      for (auto& [t, k] : branch(e, l)) via[conjugate(e.target, t)] += k;
      if (direct != via) f.push_back(e.name + " " + format_labels(l) + ": branching does not commute with conjugation");
    }
  }
  return f;
}

Failures pruning_soundness(std::uint32_t seed, int nodes) {
  Failures f;
  const auto& target = genetic_code_target();
  struct Pruned {
    std::string where;
    PhaseTwo d;
  };
  std::vector<Pruned> pool;
  for (auto* c : sl2_chains()) {
    PhaseTwo start = phase2_start(*c);
    enumerate_phase2(start, [&](const Node& n) {
      if (n.violations.empty()) return;
      std::string where = c->id;
      for (auto& op : n.plan) where += " " + start.render_op(op);
      pool.push_back({where, *n.dist});
    });
  }
  if (pool.empty()) return {"no pruned nodes found"};
  std::mt19937 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(pool.size(), nodes));
  for (auto& p : pool) {
    if (match_target(p.d, target)) f.push_back(p.where + ": pruned node matches the target");
    // all continuations of depth 1 and 2, freezing allowed at the last step
    std::function<void(const PhaseTwo&, int, std::string)> go = [&](const PhaseTwo& d, int depth, std::string trail) {
      const int K = static_cast<int>(d.slot_names.size());
      for (int k = 0; k < K; ++k)
        for (auto kind : applicable(d, k)) {
          Op op{k, kind};
          auto t = trail + " " + d.render_op(op);
          if (!solve_freezing(d, op, target).masks.empty()) f.push_back(t + ": descendant of a pruned node matches");
          if (depth > 1) go(apply_op(d, op), depth - 1, t);
        }
    };
    go(p.d, 2, p.where);
  }
  return f;
}

Rational casimir_b2_by_hand(int a, int b) {
  // orthonormal basis: lambda = (a + b/2, b/2), 2 rho = (3, 1)
  Rational x = Rational(a) + Rational(b, 2), y = Rational(b, 2);
  return x * (x + 3) + y * (y + 1);
}

}  // namespace checks
