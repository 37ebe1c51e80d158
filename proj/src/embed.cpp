#include "codonsym/embed.hpp"

#include "json.hpp"

namespace codonsym {

namespace {

const Rational h(1, 2);

Weight cat(const Weight& a, const Weight& b) {
  Weight r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// traceless sl(n) weight of the i-th defining basis vector
Weight fw(int n, int i) {
  Weight w(n, Rational(-1, n));
  w[i] += 1;
  return w;
}

Weight W(std::initializer_list<Rational> xs) { return Weight(xs); }

Multiset M(std::initializer_list<std::pair<const char*, long>> xs) {
  Multiset m;
  for (auto& [s, k] : xs) m[parse_tuple(s)] += k;
  return m;
}

Embedding make(std::string name, const char* src, const char* tgt, std::vector<Weight> images, std::string defining,
               std::vector<Embedding::Check> checks) {
  Embedding e;
  e.name = std::move(name);
  e.source = parse_algebra(src);
  e.target = parse_algebra(tgt);
  e.images = std::move(images);
  e.defining = std::move(defining);
  e.validation = std::move(checks);
  return e;
}

std::vector<Embedding> build_registry() {
  std::vector<Embedding> r;
  auto f3 = [](int i) { return fw(3, i); };
  auto f4 = [](int i) { return fw(4, i); };
  auto f5 = [](int i) { return fw(5, i); };

  r.push_back(make("A3>A2", "A3", "A2", {f3(0), f3(1), f3(2), Weight(3, 0)}, "4 -> (1,0) + (0,0)",
                   {{{1, 0, 0}, M({{"(1,0)", 1}, {"(0,0)", 1}})}}));
  r.push_back(make("A3>C2", "A3", "C2", {W({1, 0}), W({0, 1}), W({0, -1}), W({-1, 0})}, "4 -> (1,0)",
                   {{{1, 0, 0}, M({{"(1,0)", 1}})}}));
  r.push_back(make("A3>A1+A1", "A3", "A1+A1", {W({h, h}), W({h, -h}), W({-h, h}), W({-h, -h})}, "4 -> (1)-(1)",
                   {{{1, 0, 0}, M({{"(1)-(1)", 1}})}}));
  r.push_back(make("C2>A1+A1", "C2", "A1+A1", {W({h, 0}), W({0, h})}, "4 -> (1)-(0) + (0)-(1)",
                   {{{1, 0}, M({{"(1)-(0)", 1}, {"(0)-(1)", 1}})}, {{0, 1}, M({{"(1)-(1)", 1}, {"(0)-(0)", 1}})}}));
  r.push_back(make("C2>A1", "C2", "A1", {W({Rational(3, 2)}), W({h})}, "4 -> (3)", {{{1, 0}, M({{"(3)", 1}})}}));

  {
    std::vector<Weight> im;
    for (int i = 0; i < 5; ++i) im.push_back(f5(i));
    im.push_back(Weight(5, 0));
    r.push_back(make("A5>A4", "A5", "A4", im, "6 -> (1,0,0,0) + (0,0,0,0)",
                     {{{1, 0, 0, 0, 0}, M({{"(1,0,0,0)", 1}, {"(0,0,0,0)", 1}})}}));
  }
  {
    std::vector<Weight> im;
    for (int i = 0; i < 4; ++i) im.push_back(f4(i));
    im.push_back(Weight(4, 0));
    im.push_back(Weight(4, 0));
    r.push_back(make("A5>A3", "A5", "A3", im, "6 -> (1,0,0) + 2 (0,0,0)",
                     {{{1, 0, 0, 0, 0}, M({{"(1,0,0)", 1}, {"(0,0,0)", 2}})}}));
  }
  r.push_back(make("A5>C3", "A5", "C3",
                   {W({1, 0, 0}), W({0, 1, 0}), W({0, 0, 1}), W({0, 0, -1}), W({0, -1, 0}), W({-1, 0, 0})},
                   "6 -> (1,0,0)", {{{1, 0, 0, 0, 0}, M({{"(1,0,0)", 1}})}}));
  r.push_back(make("A5>A2", "A5", "A2",
                   {f3(0) + f3(0), f3(1) + f3(1), f3(2) + f3(2), f3(0) + f3(1), f3(0) + f3(2), f3(1) + f3(2)},
                   "6 -> (2,0)", {{{1, 0, 0, 0, 0}, M({{"(2,0)", 1}})}}));
  {
    std::vector<Weight> im = {cat(W({h}), Weight(4, 0)), cat(W({-h}), Weight(4, 0))};
    for (int i = 0; i < 4; ++i) im.push_back(cat(W({0}), f4(i)));
    r.push_back(make("A5>A1+A3", "A5", "A1+A3", im, "6 -> (1)-(0,0,0) + (0)-(1,0,0)",
                     {{{1, 0, 0, 0, 0}, M({{"(1)-(0,0,0)", 1}, {"(0)-(1,0,0)", 1}})}}));
  }
  {
    std::vector<Weight> im;
    for (int i = 0; i < 3; ++i) im.push_back(cat(f3(i), Weight(3, 0)));
    for (int i = 0; i < 3; ++i) im.push_back(cat(Weight(3, 0), f3(i)));
    r.push_back(make("A5>A2+A2", "A5", "A2+A2", im, "6 -> (1,0)-(0,0) + (0,0)-(1,0)",
                     {{{1, 0, 0, 0, 0}, M({{"(1,0)-(0,0)", 1}, {"(0,0)-(1,0)", 1}})}}));
  }
  {
    std::vector<Weight> im;
    for (Rational s : {h, -h})
      for (int i = 0; i < 3; ++i) im.push_back(cat(W({s}), f3(i)));
    r.push_back(make("A5>A1+A2", "A5", "A1+A2", im, "6 -> (1)-(1,0)", {{{1, 0, 0, 0, 0}, M({{"(1)-(1,0)", 1}})}}));
  }
  // su(3) > su(2) and su(3) > so(3)
  r.push_back(make("A2>A1(1)", "A2", "A1", {W({h}), W({-h}), W({0})}, "3 -> (1) + (0)",
                   {{{1, 0}, M({{"(1)", 1}, {"(0)", 1}})}}));
  r.push_back(make("A2>A1(2)", "A2", "A1", {W({1}), W({0}), W({-1})}, "3 -> (2)", {{{1, 0}, M({{"(2)", 1}})}}));
  // so(5) > so(4) = sl(2)+sl(2): vector 5 -> (1)-(1) + (0)-(0), spinor 4 -> (1)-(0) + (0)-(1)
  r.push_back(make("B2>A1+A1", "B2", "A1+A1", {W({h, h}), W({-h, h})}, "5 -> (1)-(1) + (0)-(0)",
                   {{{1, 0}, M({{"(1)-(1)", 1}, {"(0)-(0)", 1}})},
                    {{0, 1}, M({{"(1)-(0)", 1}, {"(0)-(1)", 1}})},
                    {{1, 1}, M({{"(2)-(1)", 1}, {"(1)-(2)", 1}, {"(1)-(0)", 1}, {"(0)-(1)", 1}})}}));
  r.push_back(make("B2>A1", "B2", "A1", {W({2}), W({1})}, "5 -> (4)",
                   {{{1, 0}, M({{"(4)", 1}})}, {{0, 1}, M({{"(3)", 1}})}}));
  return r;
}

}  // namespace

Weight Embedding::project(const Weight& w) const {
  if (w.size() != images.size()) throw DomainError(name + ": weight has wrong length");
  Weight out = zero_weight(target.weight_dim());
  for (std::size_t k = 0; k < w.size(); ++k) out = out + w[k] * images[k];
  return out;
}

const std::vector<Embedding>& builtin_registry() {
  static const std::vector<Embedding> reg = [] {
    auto r = build_registry();
    for (auto& e : r) validate_embedding(e);
    return r;
  }();
  return reg;
}

const Embedding& find_embedding(const std::string& name) {
  for (auto& e : builtin_registry())
    if (e.name == name) return e;
  throw ConfigError("unknown embedding '" + name + "'");
}

Multiset branch(const Embedding& e, const Labels& labels) {
  if (e.source.factors.size() != 1) throw ConfigError(e.name + ": source must be simple");
  FormalCharacter img;
  for (auto& [w, m] : irrep_character(e.source.factors[0], labels)) img[e.project(w)] += m;
  try {
    return peel(e.target, std::move(img));
  } catch (const std::runtime_error& ex) {
    throw ConfigError(e.name + " is misconfigured: " + ex.what());
  }
}

void validate_embedding(const Embedding& e) {
  if (e.images.size() != static_cast<std::size_t>(e.source.weight_dim()))
    throw ConfigError(e.name + ": need one image per source coordinate");
  for (auto& c : e.validation) {
    auto got = branch(e, c.source);
    if (got != c.expected) throw ConfigError(e.name + ": validation failed on " + format_labels(c.source));
    long d = 0;
    for (auto& [t, k] : got) d += k * tuple_dimension(e.target, t);
    if (d != weyl_dimension(e.source.factors[0], c.source)) throw ConfigError(e.name + ": dimension not preserved");
  }
}

std::string export_registry() {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto& e : builtin_registry()) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["source"] = e.source.name();
    j["target"] = e.target.name();
    j["defining"] = e.defining;
    auto rows = nlohmann::ordered_json::array();
    // projection rows: one per target coordinate
    for (int t = 0; t < e.target.weight_dim(); ++t) {
      auto row = nlohmann::ordered_json::array();
      for (auto& im : e.images) row.push_back(to_string(im[t]));
      rows.push_back(row);
    }
    j["projection"] = rows;
    auto checks = nlohmann::ordered_json::array();
    for (auto& c : e.validation) {
      std::string rhs;
      for (auto& [t, k] : c.expected) rhs += (rhs.empty() ? "" : " + ") + (k > 1 ? std::to_string(k) + " " : "") + format_tuple(t);
      checks.push_back(format_labels(c.source) + " -> " + rhs);
    }
    j["validation"] = checks;
    out.push_back(j);
  }
  return out.dump(1);
}

Multiset diagonal_clebsch(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative sl(2) label");
  Multiset m;
  for (int c = a + b; c >= std::abs(a - b); c -= 2) m[{{c}}] += 1;
  return m;
}

long Distribution::count() const {
  long n = 0;
  for (auto& e : entries) n += e.mult;
  return n;
}

long Distribution::total_dim() const {
  long n = 0;
  for (auto& e : entries) n += e.mult * tuple_dimension(algebra, e.labels);
  return n;
}

std::string Step::describe() const {
  if (kind == Kind::Diagonal) return "diag(" + std::to_string(slot + 1) + "," + std::to_string(other + 1) + ")";
  return embedding + "@" + std::to_string(slot + 1);
}

Step embed_step(int slot, const std::string& embedding) {
  Step s;
  s.kind = Step::Kind::Embed;
  s.slot = slot;
  s.embedding = embedding;
  return s;
}

Step diag_step(int i, int j) {
  Step s;
  s.kind = Step::Kind::Diagonal;
  s.slot = i;
  s.other = j;
  return s;
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  return v;
}

// children of one parent: larger multiplets first, then labels descending
std::vector<std::pair<LabelTuple, long>> ordered(const SemisimpleAlgebra& g, const Multiset& m) {
  std::vector<std::pair<LabelTuple, long>> v(m.rbegin(), m.rend());
  std::stable_sort(v.begin(), v.end(),
                   [&](auto& a, auto& b) { return tuple_dimension(g, a.first) > tuple_dimension(g, b.first); });
  return v;
}

// merge entries with equal labels and equal history, keep first-seen order
std::vector<DistEntry> merge(std::vector<DistEntry> in) {
  std::vector<DistEntry> out;
  std::map<std::pair<LabelTuple, std::vector<LabelTuple>>, std::size_t> at;
  for (auto& e : in) {
    auto key = std::make_pair(e.labels, e.ancestry);
    auto it = at.find(key);
    if (it == at.end()) {
      at.emplace(key, out.size());
      out.push_back(std::move(e));
    } else {
      out[it->second].mult += e.mult;
    }
  }
  return out;
}

}  // namespace

Distribution start_distribution(const SuperAlgebra& sa, const KacHighestWeight& hw) {
  Distribution d;
  d.algebra = sa.even_ss();
  d.slot_names = numbered(d.algebra.factors.size());
  auto ms = drop_abelian_charges(branch_to_even(sa, hw));
  // largest multiplets first, as the tables print them
  for (auto& [t, k] : ordered(d.algebra, ms)) d.entries.push_back({t, k, {}});
  return d;
}

Distribution apply_step(const Distribution& d, const Step& s) {
  const int nf = static_cast<int>(d.algebra.factors.size());
  Distribution out;
  std::vector<DistEntry> next;
  if (s.kind == Step::Kind::Embed) {
    if (s.slot < 0 || s.slot >= nf) throw ConfigError("chain step " + s.describe() + ": no such factor");
    const auto& e = find_embedding(s.embedding);
    if (!(e.source.factors[0] == d.algebra.factors[s.slot]))
      throw ConfigError("chain step " + s.describe() + ": factor is " + d.algebra.factors[s.slot].name() +
                        ", embedding expects " + e.source.name());
    auto f = d.algebra.factors;
    f.erase(f.begin() + s.slot);
    f.insert(f.begin() + s.slot, e.target.factors.begin(), e.target.factors.end());
    out.algebra = make_algebra(f);
    out.slot_names = numbered(f.size());
    for (auto& en : d.entries) {
      auto hist = en.ancestry;
      hist.push_back(en.labels);
      for (auto& [t, k] : ordered(e.target, branch(e, en.labels[s.slot]))) {
        LabelTuple nl = en.labels;
        nl.erase(nl.begin() + s.slot);
        nl.insert(nl.begin() + s.slot, t.begin(), t.end());
        next.push_back({nl, en.mult * k, hist});
      }
    }
  } else {
    if (s.slot == s.other || s.slot < 0 || s.other < 0 || s.slot >= nf || s.other >= nf)
      throw ConfigError("chain step " + s.describe() + ": bad slots");
    if (!d.algebra.factors[s.slot].is_sl2() || !d.algebra.factors[s.other].is_sl2())
      throw ConfigError("chain step " + s.describe() + ": diagonal needs two sl(2) factors");
    auto f = d.algebra.factors;
    f.erase(f.begin() + s.other);
    out.algebra = make_algebra(f);
    out.slot_names = d.slot_names;
    out.slot_names[s.slot] = d.slot_names[s.slot] + d.slot_names[s.other];
    out.slot_names.erase(out.slot_names.begin() + s.other);
    for (auto& en : d.entries) {
      auto hist = en.ancestry;
      hist.push_back(en.labels);
      for (auto& [t, k] : ordered(make_algebra({f[s.slot]}), diagonal_clebsch(en.labels[s.slot][0], en.labels[s.other][0]))) {
        LabelTuple nl = en.labels;
        nl[s.slot] = t[0];
        nl.erase(nl.begin() + s.other);
        next.push_back({nl, en.mult * k, hist});
      }
    }
  }
  out.entries = merge(std::move(next));
  return out;
}

Distribution apply_chain(const CatalogEntry& rep, const std::vector<Step>& steps) {
  auto d = start_distribution(build_super(rep.algebra), rep.hw);
  for (auto& s : steps) d = apply_step(d, s);
  return d;
}

Multiset collapse(const Distribution& d) {
  Multiset m;
  for (auto& e : d.entries) m[e.labels] += e.mult;
  return m;
}

}  // namespace codonsym
