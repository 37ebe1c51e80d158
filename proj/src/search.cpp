#include "codonsym/search.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "json.hpp"

namespace codonsym {

namespace {
const char* kViolationNames[] = {"TotalPairing",           "TooManySinglets",   "TooManyOdd",     "D3TooSmall",
                                 "OnlySingletsOrDoublets", "TripletInfeasible", "NoFreezingMatch"};
}

std::string violation_name(Violation v) { return kViolationNames[static_cast<int>(v)]; }

Violation parse_violation(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == kViolationNames[i]) return static_cast<Violation>(i);
  throw ConfigError("unknown violation '" + s + "'");
}

std::vector<Violation> prune(const Stats& s, int phase) {
  std::vector<Violation> v;
  if (s.total_pairing) v.push_back(Violation::TotalPairing);
  if (s.singlets > 2) v.push_back(Violation::TooManySinglets);
  if (s.odd > 4) v.push_back(Violation::TooManyOdd);
  if (phase == 2 && s.d3 < 24) v.push_back(Violation::D3TooSmall);
  return v;
}

const Histogram& genetic_code_target() {
  static const Histogram t = {{6, 3}, {4, 5}, {3, 2}, {2, 9}, {1, 2}};
  return t;
}

bool match_target(const Histogram& h, const Histogram& target) {
  Histogram a, b;
  for (auto& [d, k] : h)
    if (k) a[d] = k;
  for (auto& [d, k] : target)
    if (k) b[d] = k;
  return a == b;
}

bool match_target(const PhaseTwo& d, const Histogram& target) { return match_target(stats(d).hist, target); }

FreezingSolution solve_freezing(const PhaseTwo& before, const Op& op, const Histogram& target) {
  std::map<std::vector<SlotState>, long> count;
  for (auto& e : before.entries) count[e.slots] += e.mult;

  FreezingSolution sol;
  std::vector<Histogram> broken;
  for (auto& [slots, k] : count) {
    Multiplet m{slots, 1, {}};
    FreezeGroup g{slots, m.label(), k, m.dim(), false};
    Histogram b;
    auto kids = break_slot(slots.at(op.slot), op.kind);
    for (auto& s : kids) {
      Multiplet c = m;
      c.slots[op.slot] = s;
      b[c.dim()] += 1;
    }
    // freezing a group the op leaves alone is the same scheme as breaking it
    g.fixed = g.dim > 6 || (kids.size() == 1 && kids[0].dim() == slots[op.slot].dim());
    sol.groups.push_back(g);
    broken.push_back(b);
  }

  std::vector<long> choice;
  std::function<void(std::size_t, const Histogram&)> rec = [&](std::size_t i, const Histogram& acc) {
    for (auto& [d, k] : acc) {
      auto it = target.find(d);
      if (k > (it == target.end() ? 0 : it->second)) return;
    }
    if (i == sol.groups.size()) {
      if (match_target(acc, target)) sol.masks.push_back(choice);
      return;
    }
    const auto& g = sol.groups[i];
    long top = g.fixed ? 0 : g.count;
    for (long f = 0; f <= top; ++f) {
      Histogram a = acc;
      if (f) a[g.dim] += f;
      for (auto& [d, k] : broken[i]) a[d] += k * (g.count - f);
      choice.push_back(f);
      rec(i + 1, a);
      choice.pop_back();
    }
  };
  rec(0, {});
  return sol;
}

std::vector<bool> expand_mask(const PhaseTwo& d, const FreezingSolution& s, const std::vector<long>& mask) {
  std::map<std::vector<SlotState>, long> left;
  for (std::size_t i = 0; i < s.groups.size(); ++i) left[s.groups[i].slots] = mask.at(i);
  std::vector<bool> out;
  for (auto& e : d.entries) {
    long& l = left[e.slots];
    if (l > 0 && e.mult > l) throw DomainError("mask splits a merged entry");
    bool fr = l > 0;
    if (fr) l -= e.mult;
    out.push_back(fr);
  }
  return out;
}

void enumerate_phase2(const PhaseTwo& start, const std::function<void(const Node&)>& visit) {
  Stats s0 = stats(start);
  auto v0 = prune(s0, 2);
  visit(Node{{}, &start, s0, v0});
  if (!v0.empty()) return;
  const int K = static_cast<int>(start.slot_names.size());
  std::set<std::vector<Op>> seen;
  std::function<void(const PhaseTwo&, const std::vector<Op>&)> dfs = [&](const PhaseTwo& d, const std::vector<Op>& plan) {
    for (int k = 0; k < K; ++k)
      for (auto kind : applicable(d, k)) {
        auto np = plan;
        np.push_back({k, kind});
        auto key = np;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        PhaseTwo child = apply_op(d, np.back());
        Stats st = stats(child);
        auto viol = prune(st, 2);
        visit(Node{np, &child, st, viol});
        if (viol.empty()) dfs(child, np);
      }
  };
  dfs(start, {});
}

namespace {

std::vector<std::string> render_plan(const PhaseTwo& d, const std::vector<Op>& plan) {
  std::vector<std::string> r;
  for (auto& op : plan) r.push_back(d.render_op(op));
  return r;
}

}  // namespace

ChainSearch search_phase2(const PhaseTwo& start, const Histogram& target) {
  ChainSearch out;
  std::set<std::vector<Op>> near_seen;
  const int K = static_cast<int>(start.slot_names.size());
  enumerate_phase2(start, [&](const Node& node) {
    if (!node.violations.empty()) return;
    const PhaseTwo& d = *node.dist;
    for (int k = 0; k < K; ++k)
      for (auto kind : applicable(d, k)) {
        Op op{k, kind};
        auto sol = solve_freezing(d, op, target);
        PhaseTwo after = apply_op(d, op);
        if (!sol.masks.empty())
          out.schemes.push_back({render_plan(d, node.plan), d.render_op(op), after.count(), sol.groups, sol.masks});
        Stats st = stats(after);
        auto key = node.plan;
        key.push_back(op);
        std::sort(key.begin(), key.end());
        if (st.n == 21 && st.hist.begin()->first <= 6 && !match_target(st.hist, target) &&
            near_seen.insert(key).second) {
          auto plan = node.plan;
          plan.push_back(op);
          out.near_misses.push_back({render_plan(d, plan), st.n, st.hist});
        }
      }
  });
  return out;
}

namespace {

// every uniform assignment of unbroken / soft / strong to the slots
template <class F>
void for_each_signature(const PhaseTwo& d, F&& f) {
  const int K = static_cast<int>(d.slot_names.size());
  int total = 1;
  for (int k = 0; k < K; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    PhaseTwo cur = d;
    int c = code;
    for (int k = 0; k < K; ++k, c /= 3) {
      if (c % 3 == 1) cur = apply_op(cur, {k, OpKind::Soft});
      if (c % 3 == 2) cur = apply_op(cur, {k, OpKind::Strong});
    }
    f(cur);
  }
}

}  // namespace

std::set<long> uniform_triplets(const PhaseTwo& d) {
  std::set<long> out;
  for_each_signature(d, [&](const PhaseTwo& p) {
    auto h = stats(p).hist;
    out.insert(h.count(3) ? h[3] : 0);
  });
  return out;
}

std::vector<TripletYield> triplet_yields(const PhaseTwo& d) {
  std::vector<TripletYield> out;
  for (auto& e : d.entries) {
    if (e.dim() % 3) continue;
    PhaseTwo one{d.slot_names, {e}};
    one.entries[0].mult = 1;
    out.push_back({format_tuple(e.ancestry.back()), e.mult, uniform_triplets(one)});
  }
  return out;
}

ChainVerdict evaluate_chain(const ChainSpec& c, const Histogram& target) {
  ChainVerdict v;
  v.chain_id = c.id;
  v.catalog_id = c.catalog_id;
  v.algebra = catalog_entry(c.catalog_id).algebra;
  v.notation = c.notation;
  v.published_reason = c.published.reason;
  Distribution d = run_chain(c);
  v.slot_names = d.slot_names;
  Stats st = stats(d);
  v.end_n = st.n;
  v.end_d3 = st.d3;
  v.end_singlets = st.singlets;
  v.end_odd = st.odd;
  v.end_pairing = st.total_pairing;
  v.end_hist = st.hist;
  const bool sl2 = d.algebra.all_sl2();
  v.violations = prune(st, sl2 ? 2 : 1);
  if (!sl2) return v;

  PhaseTwo p = to_phase_two(d);
  bool basic_ok = v.violations.empty();
  bool all_big = std::all_of(p.entries.begin(), p.entries.end(), [](auto& e) { return e.dim() > 6; });
  if (p.slot_names.size() == 1 && all_big) v.violations.push_back(Violation::OnlySingletsOrDoublets);
  v.uniform_triplets = uniform_triplets(p);
  v.triplet_yields = triplet_yields(p);
  auto t3 = target.find(3);
  bool triplets_ok = v.uniform_triplets.count(t3 == target.end() ? 0 : t3->second) > 0;
  if (!triplets_ok) v.violations.push_back(Violation::TripletInfeasible);
  if (!basic_ok || (p.slot_names.size() == 1 && all_big)) return v;

  // exhaustive search also where the triplet argument already excludes the
  // chain, so that the argument itself gets audited
  auto res = search_phase2(p, target);
  v.near_misses = res.near_misses;
  if (res.schemes.empty()) v.violations.push_back(Violation::NoFreezingMatch);
  (triplets_ok ? v.schemes : v.audit_schemes) = std::move(res.schemes);
  return v;
}

SearchReport full_search(const std::string& filter, bool parallel) {
  SearchReport r;
  r.target = genetic_code_target();
  std::vector<const ChainSpec*> todo;
  for (auto& c : chain_registry())
    if (filter.empty() || filter == c.id || filter == c.catalog_id || filter == catalog_entry(c.catalog_id).algebra)
      todo.push_back(&c);
  if (todo.empty()) throw ConfigError("no chain matches '" + filter + "'");
  if (parallel) {
    std::vector<std::future<ChainVerdict>> fut;
    for (auto* c : todo) fut.push_back(std::async(std::launch::async, evaluate_chain, std::cref(*c), std::cref(r.target)));
    for (auto& f : fut) r.chains.push_back(f.get());
  } else {
    for (auto* c : todo) r.chains.push_back(evaluate_chain(*c, r.target));
  }
  return r;
}

// serialization

namespace {

using J = nlohmann::ordered_json;

J hist_json(const Histogram& h) {
  J j = J::object();
  for (auto& [d, k] : h) j[std::to_string(d)] = k;
  return j;
}

Histogram hist_from(const J& j) {
  Histogram h;
  for (auto& [k, v] : j.items()) h[std::stol(k)] = v.get<long>();
  return h;
}

J slots_json(const std::vector<SlotState>& s) {
  J a = J::array();
  for (auto& x : s) a.push_back({static_cast<int>(x.kind), x.value});
  return a;
}

std::vector<SlotState> slots_from(const J& j) {
  std::vector<SlotState> s;
  for (auto& x : j) s.push_back({static_cast<SlotState::Kind>(x[0].get<int>()), x[1].get<int>()});
  return s;
}

J scheme_json(const Scheme& s) {
  J j;
  j["plan"] = s.prefix;
  j["final_op"] = s.final_op;
  j["subspaces"] = s.subspaces;
  J g = J::array();
  for (auto& x : s.groups)
    g.push_back({{"label", x.label}, {"slots", slots_json(x.slots)}, {"count", x.count}, {"dim", x.dim}, {"fixed", x.fixed}});
  j["groups"] = g;
  j["masks"] = s.masks;
  return j;
}

Scheme scheme_from(const J& j) {
  Scheme s;
  s.prefix = j["plan"].get<std::vector<std::string>>();
  s.final_op = j["final_op"];
  s.subspaces = j["subspaces"];
  for (auto& g : j["groups"])
    s.groups.push_back({slots_from(g["slots"]), g["label"], g["count"], g["dim"], g["fixed"]});
  s.masks = j["masks"].get<std::vector<std::vector<long>>>();
  return s;
}

}  // namespace

std::string report_to_json(const SearchReport& r) {
  J root;
  root["target"] = hist_json(r.target);
  J chains = J::array();
  for (auto& c : r.chains) {
    J j;
    j["chain_id"] = c.chain_id;
    j["catalog_id"] = c.catalog_id;
    j["algebra"] = c.algebra;
    j["notation"] = c.notation;
    j["slots"] = c.slot_names;
    j["end"] = {{"n", c.end_n},         {"d3", c.end_d3},           {"singlets", c.end_singlets},
                {"odd", c.end_odd},     {"total_pairing", c.end_pairing}, {"hist", hist_json(c.end_hist)}};
    J viol = J::array();
    for (auto v : c.violations) viol.push_back(violation_name(v));
    j["verdict"] = c.survives() ? "survives" : "excluded";
    j["violations"] = viol;
    j["published_reason"] = c.published_reason;
    j["uniform_triplets"] = c.uniform_triplets;
    J ty = J::array();
    for (auto& t : c.triplet_yields) ty.push_back({{"label", t.label}, {"mult", t.mult}, {"yields", t.yields}});
    j["triplet_yields"] = ty;
    J sc = J::array(), au = J::array(), nm = J::array();
    for (auto& s : c.schemes) sc.push_back(scheme_json(s));
    for (auto& s : c.audit_schemes) au.push_back(scheme_json(s));
    for (auto& n : c.near_misses) nm.push_back({{"plan", n.plan}, {"n", n.n}, {"hist", hist_json(n.hist)}});
    j["schemes"] = sc;
    j["near_misses"] = nm;
    j["audit_schemes"] = au;
    chains.push_back(j);
  }
  root["chains"] = chains;
  return root.dump(1);
}

SearchReport report_from_json(const std::string& text) {
  J root = J::parse(text);
  SearchReport r;
  r.target = hist_from(root["target"]);
  for (auto& j : root["chains"]) {
    ChainVerdict c;
    c.chain_id = j["chain_id"];
    c.catalog_id = j["catalog_id"];
    c.algebra = j["algebra"];
    c.notation = j["notation"];
    c.slot_names = j["slots"].get<std::vector<std::string>>();
    auto& e = j["end"];
    c.end_n = e["n"];
    c.end_d3 = e["d3"];
    c.end_singlets = e["singlets"];
    c.end_odd = e["odd"];
    c.end_pairing = e["total_pairing"];
    c.end_hist = hist_from(e["hist"]);
    for (auto& v : j["violations"]) c.violations.push_back(parse_violation(v));
    c.published_reason = j["published_reason"];
    c.uniform_triplets = j["uniform_triplets"].get<std::set<long>>();
    for (auto& t : j["triplet_yields"]) c.triplet_yields.push_back({t["label"], t["mult"], t["yields"].get<std::set<long>>()});
    for (auto& s : j["schemes"]) c.schemes.push_back(scheme_from(s));
    for (auto& s : j["audit_schemes"]) c.audit_schemes.push_back(scheme_from(s));
    for (auto& n : j["near_misses"]) c.near_misses.push_back({n["plan"].get<std::vector<std::string>>(), n["n"], hist_from(n["hist"])});
    r.chains.push_back(std::move(c));
  }
  return r;
}

std::string text_summary(const SearchReport& r) {
  std::ostringstream o;
  int survivors = 0;
  for (auto& c : r.chains) {
    o << c.chain_id << "  [" << c.notation << "]\n";
    o << "  end of first phase: n=" << c.end_n << " d3=" << c.end_d3 << " " << format_hist(c.end_hist)
      << (c.end_pairing ? " paired" : "") << "\n";
    if (c.survives()) {
      ++survivors;
      o << "  SURVIVES with " << c.schemes.size() << " scheme(s)\n";
    } else {
      o << "  excluded:";
      for (auto v : c.violations) o << " " << violation_name(v);
      o << "  (stated: " << c.published_reason << ")\n";
    }
    for (auto& s : c.schemes) {
      o << "    plan";
      for (auto& p : s.prefix) o << " " << p;
      o << " then " << s.final_op << ": " << s.subspaces << " subspaces, " << s.masks.size() << " freezing mask(s)\n";
    }
    for (auto& n : c.near_misses) {
      o << "    near miss";
      for (auto& p : n.plan) o << " " << p;
      o << ": " << n.n << " multiplets " << format_hist(n.hist) << "\n";
    }
    for (auto& s : c.audit_schemes) {
      o << "    audit: plan";
      for (auto& p : s.prefix) o << " " << p;
      o << " then " << s.final_op << " matches with " << s.masks.size() << " mask(s) despite the triplet argument\n";
    }
  }
  o << survivors << " surviving chain(s)\n";
  return o.str();
}

}  // namespace codonsym
