#include "doctest.h"

#include <algorithm>

#include "checks.hpp"

using namespace codonsym;

namespace {
const SearchReport& report() {
  static const SearchReport r = full_search();
  return r;
}
const ChainVerdict& verdict(const std::string& id) {
  for (auto& c : report().chains)
    if (c.chain_id == id) return c;
  throw std::runtime_error("no verdict for " + id);
}
bool has(const std::vector<Violation>& v, Violation x) { return std::find(v.begin(), v.end(), x) != v.end(); }
}  // namespace

TEST_CASE("prune criteria") {
  Stats s;
  s.n = 10;
  s.d3 = 30;
  s.singlets = 3;
  s.odd = 5;
  auto v = prune(s, 1);
  CHECK(has(v, Violation::TooManySinglets));
  CHECK(has(v, Violation::TooManyOdd));
  CHECK_FALSE(has(v, Violation::D3TooSmall));
  s.singlets = 2;
  s.odd = 4;
  s.d3 = 23;
  CHECK(prune(s, 1).empty());
  CHECK(prune(s, 2) == std::vector<Violation>{Violation::D3TooSmall});
  s.d3 = 24;
  CHECK(prune(s, 2).empty());
  s.total_pairing = true;
  CHECK(has(prune(s, 1), Violation::TotalPairing));
  for (auto x : {Violation::TotalPairing, Violation::NoFreezingMatch, Violation::TripletInfeasible})
    CHECK(parse_violation(violation_name(x)) == x);
}

TEST_CASE("target matching") {
  const auto& t = genetic_code_target();
  CHECK(format_hist(t) == "{6:3,4:5,3:2,2:9,1:2}");
  CHECK(match_target(t, t));
  // the osp52-c3 chain end still has an octet and a nonet
  CHECK_FALSE(match_target(to_phase_two(run_chain(find_chain("osp52-c3"))), t));
  // Soft(3) then Soft(12) with its frozen rows
  PhaseTwo p = to_phase_two(run_chain(find_chain("osp52-c3")));
  p = apply_op(p, {1, OpKind::Soft});
  auto sol = solve_freezing(p, {0, OpKind::Soft}, t);
  REQUIRE(sol.masks.size() == 1);
  auto frozen = expand_mask(p, sol, sol.masks[0]);
  CHECK(match_target(apply_op(p, {0, OpKind::Soft}, &frozen), t));
}

TEST_CASE("exactly three schemes survive, all for osp(5|2)") {
  std::vector<std::string> survivors;
  for (auto& c : report().chains)
    if (c.survives()) survivors.push_back(c.chain_id);
  CHECK(survivors == std::vector<std::string>{"osp52-c3"});
  auto& v = verdict("osp52-c3");
  REQUIRE(v.schemes.size() == 3);
  std::map<std::string, long> got;
  for (auto& s : v.schemes) {
    CHECK(s.prefix == std::vector<std::string>{"Soft(3)"});
    CHECK_FALSE(s.masks.empty());
    got[s.final_op] = s.subspaces;
  }
  CHECK(got == std::map<std::string, long>{{"Soft(12)", 26}, {"Strong(12)", 42}, {"StrongAfterSoft(3)", 28}});
}

TEST_CASE("every listed chain has a verdict naming what excluded it") {
  CHECK(report().chains.size() == chain_registry().size());
  std::set<std::string> ids;
  for (auto& c : report().chains) {
    CHECK(ids.insert(c.chain_id).second);
    if (!c.survives()) CHECK((!c.violations.empty() || c.schemes.empty()));
  }
  auto text = text_summary(report());
  for (auto& c : chain_registry()) CHECK(text.find(c.id) != std::string::npos);
  CHECK(has(verdict("sl21").violations, Violation::OnlySingletsOrDoublets));
  CHECK(has(verdict("sl22a").violations, Violation::TripletInfeasible));
  CHECK(has(verdict("sl31").violations, Violation::TotalPairing));
}

TEST_CASE("computed exclusions include what the text states") {
  for (auto& spec : chain_registry()) {
    auto& v = verdict(spec.id);
    CAPTURE(spec.id);
    for (auto x : spec.published.expect) CHECK(has(v.violations, x));
    for (auto& [d, k] : spec.published.profile) CHECK(v.end_hist.count(d) ? v.end_hist.at(d) == k : k == 0);
    if (spec.published.n >= 0) CHECK(v.end_n == spec.published.n);
    if (spec.published.d3 >= 0) CHECK(v.end_d3 == spec.published.d3);
    CHECK(v.survives() == spec.published.survives);
  }
}

TEST_CASE("near-misses are kept") {
  auto has_nm = [](const ChainVerdict& v, const std::string& hist) {
    for (auto& n : v.near_misses)
      if (n.n == 21 && format_hist(n.hist) == hist) return true;
    return false;
  };
  CHECK(has_nm(verdict("osp52-c1"), "{6:3,4:5,3:4,2:5,1:4}"));
  CHECK(has_nm(verdict("osp52-c3"), "{6:2,4:7,3:2,2:8,1:2}"));
}

TEST_CASE("triplet reachability matches the worked arguments") {
  // a sextet (1)-(2) style multiplet yields 0 or 4 triplets in pairs, so 2 is out of reach
  CHECK_FALSE(verdict("osp42b-d12").uniform_triplets.count(2));
  CHECK_FALSE(verdict("sl22a").uniform_triplets.count(2));
  CHECK(verdict("osp52-c3").uniform_triplets.count(2));
}

TEST_CASE("searching is deterministic and the report round-trips through JSON") {
  auto a = full_search("", true);
  auto b = full_search("", false);
  CHECK(report_to_json(a) == report_to_json(b));
  auto back = report_from_json(report_to_json(a));
  CHECK(back.chains == a.chains);
  CHECK(back.target == a.target);
  CHECK(report_to_json(back) == report_to_json(a));
  CHECK(full_search("osp(5|2)").chains.size() == 4);
  CHECK(full_search("osp52-c3").chains.size() == 1);
}

TEST_CASE("property: pruned nodes have no matching descendants within two steps (seed 1234)") {
  auto f = checks::pruning_soundness(1234u, 20);
  std::string why;
  for (auto& x : f) why += x + "\n";
  CHECK_MESSAGE(f.empty(), why);
}
