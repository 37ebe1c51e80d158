#include "codonsym/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#ifndef CODONSYM_DATA_DIR
#define CODONSYM_DATA_DIR "data"
#endif

namespace codonsym {

std::string strip_spaces(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string normalize_pair_label(const std::string& s) {
  auto t = strip_spaces(s);
  if (t.size() > 2 && t.front() == '(' && t.back() == ')' && t.find(")-(") == std::string::npos &&
      t.find('-') != std::string::npos && t.find(',') == std::string::npos) {
    std::string out = "(";
    for (char c : t.substr(1, t.size() - 2)) out += c == '-' ? std::string(")-(") : std::string(1, c);
    return out + ")";
  }
  return t;
}

namespace {

// columns on screen, not bytes (labels carry a UTF-8 plus-minus sign)
std::size_t width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
}

std::string compact(const LabelTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "-" : "") + std::to_string(t[i][0]);
  return s;
}

std::string stage_name(const SemisimpleAlgebra& g, const std::vector<std::string>& names, const std::string& even) {
  if (!g.all_sl2()) return even;
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i)
    s += (i ? "+" : "") + std::string("sl(2)") + (names[i].size() > 1 ? "_" + names[i] : "");
  return s;
}

struct ChainRun {
  std::vector<Distribution> stages;
  std::vector<std::string> names;
};

ChainRun run_stages(const ChainSpec& c) {
  const auto& rep = catalog_entry(c.catalog_id);
  auto sa = build_super(rep.algebra);
  ChainRun r;
  r.stages.push_back(start_distribution(sa, rep.hw));
  for (auto& s : c.steps) r.stages.push_back(apply_step(r.stages.back(), s));
  for (auto& d : r.stages) r.names.push_back(stage_name(d.algebra, d.slot_names, sa.even_name()));
  return r;
}

}  // namespace

Doc chain_table(const std::string& chain_id) {
  const auto& c = find_chain(chain_id);
  auto run = run_stages(c);
  Doc d;
  d["kind"] = "chain";
  d["catalog_id"] = c.catalog_id;
  d["chain_id"] = c.id;
  d["stages"] = run.names;
  Doc subs = Doc::array();
  for (auto& s : run.stages) subs.push_back(s.count());
  d["subspaces"] = subs;
  Doc paths = Doc::array();
  const auto& last = run.stages.back();
  for (auto& e : last.entries)
    for (long k = 0; k < e.mult; ++k) {
      Doc cells = Doc::array();
      for (std::size_t s = 0; s < e.ancestry.size(); ++s)
        cells.push_back({format_tuple(e.ancestry[s]), tuple_dimension(run.stages[s].algebra, e.ancestry[s])});
      cells.push_back({format_tuple(e.labels), tuple_dimension(last.algebra, e.labels)});
      paths.push_back({{"cells", cells}});
    }
  d["paths"] = paths;
  return d;
}

Doc phase2_table(const std::string& chain_id, const std::string& plan_text, std::size_t mask_index) {
  const auto& c = find_chain(chain_id);
  auto run = run_stages(c);
  PhaseTwo p = to_phase_two(run.stages.back());
  auto plan = parse_plan(p, plan_text);
  if (plan.empty()) throw ConfigError("empty plan");
  // chain stages that are already sums of sl(2)'s open the table
  std::vector<std::size_t> sl2_stages;
  for (std::size_t s = 0; s < run.stages.size(); ++s)
    if (run.stages[s].algebra.all_sl2()) sl2_stages.push_back(s);

  std::vector<PhaseTwo> states = {p};
  for (std::size_t i = 0; i + 1 < plan.size(); ++i) states.push_back(apply_op(states.back(), plan[i]));
  const PhaseTwo& before = states.back();
  auto sol = solve_freezing(before, plan.back(), genetic_code_target());
  std::vector<bool> frozen(before.entries.size(), false);
  if (!sol.masks.empty()) frozen = expand_mask(before, sol, sol.masks.at(std::min(mask_index, sol.masks.size() - 1)));

  Doc d;
  d["kind"] = "phase2";
  d["catalog_id"] = c.catalog_id;
  d["chain_id"] = c.id;
  Doc stages = Doc::array();
  for (auto s : sl2_stages) stages.push_back(run.names[s]);
  for (auto& op : plan) stages.push_back(p.render_op(op));
  d["stages"] = stages;
  Doc subs = Doc::array();
  for (auto s : sl2_stages) subs.push_back(run.stages[s].count());
  for (std::size_t i = 1; i < states.size(); ++i) subs.push_back(states[i].count());
  subs.push_back(apply_op(before, plan.back()).count());
  d["subspaces"] = subs;
  d["plan"] = plan_text;
  d["masks"] = sol.masks.size();

  // walk each entry of `before` through the final op, carrying its history
  Doc paths = Doc::array();
  std::size_t first_chain = run.stages.size() - p.entries[0].ancestry.size();
  for (std::size_t i = 0; i < before.entries.size(); ++i) {
    const auto& m = before.entries[i];
    // intermediate states: chain-end labels with the earlier ops replayed
    Multiplet cur{{}, 1, m.ancestry};
    for (auto& l : m.ancestry.back()) cur.slots.push_back(unbroken(l[0]));
    std::vector<Multiplet> seq;
    for (std::size_t j = 0; j + 1 < plan.size(); ++j) {
      cur.slots[plan[j].slot] = m.slots[plan[j].slot];
      seq.push_back(cur);
    }
    for (auto& child : break_slot(m.slots[plan.back().slot], plan.back().kind)) {
      Multiplet f = m;
      f.slots[plan.back().slot] = child;
      for (long k = 0; k < m.mult; ++k) {
        Doc cells = Doc::array();
        for (auto s : sl2_stages) {
          const auto& t = m.ancestry.at(s - first_chain);
          cells.push_back({compact(t), tuple_dimension(run.stages[s].algebra, t)});
        }
        for (auto& q : seq) cells.push_back({q.label("-"), q.dim()});
        cells.push_back({f.label("-"), f.dim()});
        paths.push_back({{"cells", cells}, {"frozen", static_cast<bool>(frozen[i])}});
      }
    }
  }
  d["paths"] = paths;
  return d;
}

Doc generate_table(int id) {
  if (id >= 1 && id <= 3) {
    Doc d;
    d["id"] = id;
    d["kind"] = "first-step";
    Doc entries = Doc::array();
    for (auto& e : catalog()) {
      if (e.table != id) continue;
      auto dist = start_distribution(build_super(e.algebra), e.hw);
      Doc rows = Doc::array();
      for (auto& en : dist.entries)
        rows.push_back({{"label", format_tuple(en.labels)}, {"mult", en.mult}, {"d", tuple_dimension(dist.algebra, en.labels)}});
      entries.push_back({{"catalog_id", e.id}, {"algebra", e.algebra}, {"hw", join_rationals(e.hw)}, {"rows", rows}});
    }
    d["entries"] = entries;
    return d;
  }
  Doc d;
  switch (id) {
    case 4: d = chain_table("osp34-c3"); break;
    case 5: d = chain_table("osp52-c3"); break;
    case 9: d = chain_table("osp42a-d23"); break;
    case 6: d = phase2_table("osp52-c3", "soft:3,soft:12"); break;
    case 7: d = phase2_table("osp52-c3", "soft:3,strong:12"); break;
    case 8: d = phase2_table("osp52-c3", "soft:3,sas:3"); break;
    default: throw ConfigError("table id must be 1..9, got " + std::to_string(id));
  }
  Doc out;
  out["id"] = id;
  for (auto& [k, v] : d.items()) out[k] = v;
  return out;
}

std::string render_text(const Doc& d) {
  std::ostringstream o;
  if (d.contains("id")) o << "Table " << d["id"].get<int>() << "\n";
  if (d["kind"] == "first-step") {
    for (auto& e : d["entries"]) {
      o << e["algebra"].get<std::string>() << " (" << e["hw"].get<std::string>() << ")\n";
      for (auto& r : e["rows"]) {
        std::string lab = r["label"];
        long m = r["mult"];
        o << "  " << (m > 1 ? std::to_string(m) + " x " : "    ") << lab << std::string(lab.size() < 24 ? 24 - lab.size() : 1, ' ')
          << r["d"].get<long>() << "\n";
      }
    }
    return o.str();
  }
  o << d["chain_id"].get<std::string>();
  if (d.contains("plan")) o << "  plan " << d["plan"].get<std::string>();
  o << "\n";
  std::size_t ns = d["stages"].size();
  std::vector<std::size_t> w(ns, 0);
  for (std::size_t s = 0; s < ns; ++s) w[s] = width(d["stages"][s]);
  for (auto& p : d["paths"])
    for (std::size_t s = 0; s < ns; ++s)
      w[s] = std::max(w[s], width(p["cells"][s][0]) + 1 + std::to_string(p["cells"][s][1].get<long>()).size());
  auto pad = [&](std::string s, std::size_t n) { return s + std::string(n > width(s) ? n - width(s) : 0, ' '); };
  for (std::size_t s = 0; s < ns; ++s) o << pad(d["stages"][s], w[s]) << (s + 1 < ns ? " | " : "\n");
  std::vector<std::string> prev(ns);
  for (auto& p : d["paths"]) {
    bool same = true;
    for (std::size_t s = 0; s < ns; ++s) {
      std::string cell = p["cells"][s][0].get<std::string>() + " " + std::to_string(p["cells"][s][1].get<long>());
      // repeat a parent cell only when its subtree changes
      std::string key = cell + "#" + std::to_string(s);
      bool show = !(same && s + 1 < ns && prev[s] == key);
      same = same && prev[s] == key;
      prev[s] = key;
      o << pad(show ? cell : "", w[s]) << (s + 1 < ns ? " | " : "");
    }
    if (p.contains("frozen") && p["frozen"].get<bool>()) o << "  frozen";
    o << "\n";
  }
  o << "subspaces:";
  for (auto& s : d["subspaces"]) o << " " << s.get<long>();
  o << "\n";
  return o.str();
}

std::string render_csv(const Doc& d) {
  std::ostringstream o;
  o << "stage,label,dim,multiplicity,d3_running\n";
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  if (d["kind"] == "first-step") {
    for (auto& e : d["entries"]) {
      std::string stage = e["algebra"].get<std::string>() + " (" + e["hw"].get<std::string>() + ")";
      long d3 = 0;
      for (auto& r : e["rows"]) {
        long dim = r["d"], m = r["mult"];
        if (dim % 3 == 0) d3 += dim * m;
        o << q(stage) << "," << q(r["label"]) << "," << dim << "," << m << "," << d3 << "\n";
      }
    }
    return o.str();
  }
  std::size_t ns = d["stages"].size();
  for (std::size_t s = 0; s < ns; ++s) {
    // one row per distinct node at this stage (a node is a path prefix)
    std::vector<std::string> seen;
    long d3 = 0;
    for (auto& p : d["paths"]) {
      std::string key;
      for (std::size_t t = 0; t <= s; ++t) key += p["cells"][t].dump() + "|";
      if (std::find(seen.begin(), seen.end(), key) != seen.end() && s + 1 < ns) continue;
      seen.push_back(key);
      long dim = p["cells"][s][1];
      if (dim % 3 == 0) d3 += dim;
      o << q(d["stages"][s]) << "," << q(p["cells"][s][0]) << "," << dim << ",1," << d3 << "\n";
    }
  }
  return o.str();
}

std::string fixture_dir() {
  const char* env = std::getenv("CODONSYM_FIXTURES");
  return env && *env ? env : CODONSYM_DATA_DIR;
}

Doc load_fixture(const std::string& file) {
  std::string path = fixture_dir() + "/" + file;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return Doc::parse(in);
}

namespace {

using Key = std::string;

std::map<Key, long> multiset_of(const Doc& rows, const std::function<Key(const Doc&)>& key) {
  std::map<Key, long> m;
  for (auto& r : rows) m[key(r)] += 1;
  return m;
}

void diff_multisets(const std::map<Key, long>& want, const std::map<Key, long>& got, const std::string& where,
                    GoldenResult& r) {
  for (auto& [k, n] : want) {
    auto it = got.find(k);
    long g = it == got.end() ? 0 : it->second;
    if (g != n) {
      r.ok = false;
      r.diffs.push_back(where + ": fixture has " + std::to_string(n) + " x " + k + ", computed " + std::to_string(g));
    }
  }
  for (auto& [k, n] : got)
    if (!want.count(k)) {
      r.ok = false;
      r.diffs.push_back(where + ": computed " + std::to_string(n) + " x " + k + ", absent from fixture");
    }
}

Key path_key(const Doc& p) {
  std::string s;
  for (auto& c : p["cells"]) s += strip_spaces(c[0].get<std::string>()) + "[" + std::to_string(c[1].get<long>()) + "] ";
  return s;
}

void check_subspaces(const Doc& want, const Doc& got, GoldenResult& r) {
  if (want["subspaces"] != got["subspaces"]) {
    r.ok = false;
    r.diffs.push_back("subspace counts: fixture " + want["subspaces"].dump() + ", computed " + got["subspaces"].dump());
  }
}

// turn the fixture's marked rows into frozen counts per group of the solver
std::optional<std::vector<long>> fixture_mask(const Doc& fix, const ChainSpec& c, const std::string& plan_text,
                                              FreezingSolution& sol) {
  PhaseTwo p = to_phase_two(run_chain(c));
  auto plan = parse_plan(p, plan_text);
  for (std::size_t i = 0; i + 1 < plan.size(); ++i) p = apply_op(p, plan[i]);
  sol = solve_freezing(p, plan.back(), genetic_code_target());
  std::map<std::string, long> paths;  // pre-final label -> frozen paths
  for (auto& path : fix["paths"])
    if (path["frozen"].get<bool>()) {
      auto& cells = path["cells"];
      paths[strip_spaces(cells[cells.size() - 2][0].get<std::string>())] += 1;
    }
  std::vector<long> mask;
  for (auto& g : sol.groups) {
    auto children = static_cast<long>(break_slot(g.slots[plan.back().slot], plan.back().kind).size());
    auto it = paths.find(strip_spaces(g.label));
    long n = it == paths.end() ? 0 : it->second;
    if (n % children) return std::nullopt;
    // a frozen multiplet above dimension 6 cannot be any solution; trivial groups are shown broken
    if (g.fixed && n > 0 && children > 1) return std::nullopt;
    mask.push_back(g.fixed ? 0 : n / children);
    if (it != paths.end()) paths.erase(it);
  }
  if (!paths.empty()) return std::nullopt;
  return mask;
}

}  // namespace

GoldenResult verify_fixture(const std::string& file) {
  GoldenResult r;
  r.fixture = file;
  Doc fix = load_fixture(file);
  if (file == "figure.json") {
    for (auto& f : fix["figure"]) {
      auto& e = catalog_entry(f["catalog_id"]);
      auto dist = start_distribution(build_super(e.algebra), e.hw);
      std::map<Key, long> got;
      for (auto& en : dist.entries) got[format_tuple(en.labels)] += en.mult;
      std::map<Key, long> want;
      for (auto& l : f["labels"]) want[normalize_pair_label(l)] += 1;
      diff_multisets(want, got, "figure " + e.id, r);
    }
    for (auto& f : fix["floors"]) {
      auto& e = catalog_entry(f["catalog_id"]);
      auto dist = start_distribution(build_super(e.algebra), e.hw);
      std::map<Key, long> got;
      for (auto& en : dist.entries) {
        // so(4) pairs are printed as one two-entry label
        LabelTuple t = en.labels;
        if (t.size() == 3) t = {t[0], {t[1][0], t[2][0]}};
        got[format_tuple(t)] += en.mult;
      }
      std::map<Key, long> want;
      for (auto& l : f["labels"]) want[strip_spaces(l)] += 1;
      diff_multisets(want, got, "floors " + e.id, r);
    }
    return r;
  }
  int id = fix["id"];
  Doc gen = generate_table(id);
  if (fix["kind"] != gen["kind"]) {
    r.ok = false;
    r.diffs.push_back("kind differs");
    return r;
  }
  if (fix["kind"] == "first-step") {
    std::map<std::string, const Doc*> byid;
    for (auto& e : gen["entries"]) byid[e["catalog_id"]] = &e;
    auto rowkey = [](const Doc& x) {
      return strip_spaces(x["label"].get<std::string>()) + " x" + std::to_string(x["mult"].get<long>()) + " d=" +
             std::to_string(x["d"].get<long>());
    };
    for (auto& e : fix["entries"]) {
      auto it = byid.find(e["catalog_id"]);
      if (it == byid.end()) {
        r.ok = false;
        r.diffs.push_back("no computed entry for " + e["catalog_id"].get<std::string>());
        continue;
      }
      if (strip_spaces(e["hw"]) != strip_spaces((*it->second)["hw"])) {
        r.ok = false;
        r.diffs.push_back(e["catalog_id"].get<std::string>() + ": highest weight differs");
      }
      diff_multisets(multiset_of(e["rows"], rowkey), multiset_of((*it->second)["rows"], rowkey),
                     e["catalog_id"].get<std::string>() + " " + e["algebra"].get<std::string>(), r);
      byid.erase(it);
    }
    for (auto& [k, v] : byid) {
      r.ok = false;
      r.diffs.push_back("computed entry " + k + " missing from fixture");
    }
    return r;
  }
  check_subspaces(fix, gen, r);
  diff_multisets(multiset_of(fix["paths"], path_key), multiset_of(gen["paths"], path_key),
                 "table " + std::to_string(id), r);
  if (fix["kind"] == "phase2") {
    FreezingSolution sol;
    auto mask = fixture_mask(fix, find_chain(fix["chain_id"]), fix["plan"], sol);
    if (!mask) {
      r.ok = false;
      r.diffs.push_back("marked rows do not form whole groups");
    } else if (std::find(sol.masks.begin(), sol.masks.end(), *mask) == sol.masks.end()) {
      r.ok = false;
      std::string m;
      for (auto x : *mask) m += std::to_string(x) + " ";
      r.diffs.push_back("marked rows (" + m + ") are not among the " + std::to_string(sol.masks.size()) +
                        " solved freezing masks");
    }
  }
  return r;
}

std::vector<GoldenResult> verify_all() {
  std::vector<GoldenResult> out;
  for (int i = 1; i <= 9; ++i) out.push_back(verify_fixture("table" + std::to_string(i) + ".json"));
  out.push_back(verify_fixture("figure.json"));
  return out;
}

}  // namespace codonsym
