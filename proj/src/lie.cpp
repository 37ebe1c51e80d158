#include "codonsym/lie.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

namespace codonsym {

namespace {

Rational half(1, 2);

Weight e_minus(std::size_t n, std::size_t i, std::size_t j) { return unit(n, i) - unit(n, j); }
Weight e_plus(std::size_t n, std::size_t i, std::size_t j) { return unit(n, i) + unit(n, j); }

long orbit_size(const RootSystem& rs, const Weight& start) {
  std::set<Weight> seen{start};
  std::vector<Weight> stack{start};
  while (!stack.empty()) {
    Weight v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      Weight u = reflect(rs, i, v);
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace

std::string RootSystem::name() const {
  const char* s = "ABCD";
  return std::string(1, s[static_cast<int>(series)]) + std::to_string(rank);
}

RootSystem build_root_system(Series s, int r) {
  bool ok = (s == Series::A && r >= 1 && r <= 5) || (s == Series::B && r == 2) ||
            (s == Series::C && (r == 2 || r == 3));
  if (!ok) {
    const char* n = "ABCD";
    std::string what = std::string(1, n[static_cast<int>(s)]) + std::to_string(r);
    if (s == Series::D && r == 2) throw ConfigError("D2 is modelled as A1+A1; use parse_algebra(\"D2\")");
    throw ConfigError("unsupported root system " + what);
  }
  RootSystem rs;
  rs.series = s;
  rs.rank = r;
  if (s == Series::A && r == 1) {
    rs.dim = 1;
    rs.simple_roots = {Weight{1}};
    rs.positive_roots = rs.simple_roots;
    rs.fundamental_weights = {Weight{half}};
  } else if (s == Series::A) {
    std::size_t n = r + 1;
    rs.dim = static_cast<int>(n);
    for (std::size_t i = 0; i < n - 1; ++i) rs.simple_roots.push_back(e_minus(n, i, i + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) rs.positive_roots.push_back(e_minus(n, i, j));
    for (std::size_t i = 1; i < n; ++i) {
      Weight w(n);
      for (std::size_t k = 0; k < n; ++k)
        w[k] = (k < i ? Rational(1) : Rational(0)) - Rational(static_cast<long>(i), static_cast<long>(n));
      rs.fundamental_weights.push_back(w);
    }
  } else {
    std::size_t n = r;
    rs.dim = r;
    Rational lng = s == Series::B ? 1 : 2;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        rs.positive_roots.push_back(e_minus(n, i, j));
        rs.positive_roots.push_back(e_plus(n, i, j));
      }
      rs.positive_roots.push_back(unit(n, i, lng));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) rs.simple_roots.push_back(e_minus(n, i, i + 1));
    rs.simple_roots.push_back(unit(n, n - 1, lng));
    for (std::size_t i = 1; i <= n; ++i) {
      Weight w(n, Rational(0));
      for (std::size_t k = 0; k < i; ++k) w[k] = 1;
      if (s == Series::B && i == n) w = half * w;
      rs.fundamental_weights.push_back(w);
    }
  }
  rs.rho0 = zero_weight(rs.dim);
  for (auto& a : rs.positive_roots) rs.rho0 = rs.rho0 + a;
  rs.rho0 = half * rs.rho0;
  rs.weyl_order = orbit_size(rs, rs.rho0);  // rho is regular, stabiliser trivial
  return rs;
}

RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2) throw ConfigError("bad root system name '" + name + "'");
  Series s;
  switch (name[0]) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    default: throw ConfigError("bad root system name '" + name + "'");
  }
  int r = 0;
  try {
    r = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw ConfigError("bad root system name '" + name + "'");
  }
  return build_root_system(s, r);
}

Weight reflect(const RootSystem& rs, std::size_t i, const Weight& v) {
  const Weight& a = rs.simple_roots.at(i);
  Rational k = 2 * dot(v, a) / dot(a, a);
  return v - k * a;
}

std::vector<Weight> all_roots(const RootSystem& rs) {
  std::vector<Weight> out = rs.positive_roots;
  for (auto& a : rs.positive_roots) out.push_back(Rational(-1) * a);
  std::sort(out.begin(), out.end());
  return out;
}

Weight weight_of(const RootSystem& rs, const Labels& labels) {
  if (labels.size() != static_cast<std::size_t>(rs.rank))
    throw DomainError(rs.name() + ": expected " + std::to_string(rs.rank) + " labels");
  Weight w = zero_weight(rs.dim);
  for (std::size_t i = 0; i < labels.size(); ++i) w = w + Rational(labels[i]) * rs.fundamental_weights[i];
  return w;
}

std::vector<Rational> rational_labels(const RootSystem& rs, const Weight& w) {
  std::vector<Rational> out;
  for (auto& a : rs.simple_roots) out.push_back(2 * dot(w, a) / dot(a, a));
  return out;
}

Labels integral_labels(const RootSystem& rs, const Weight& w) {
  Labels out;
  for (auto& r : rational_labels(rs, w)) {
    if (!is_integral(r)) throw DomainError(rs.name() + ": non-integral weight");
    out.push_back(static_cast<int>(r.numerator()));
  }
  return out;
}

static void require_dominant(const RootSystem& rs, const Labels& l) {
  if (l.size() != static_cast<std::size_t>(rs.rank))
    throw DomainError(rs.name() + ": expected " + std::to_string(rs.rank) + " labels");
  for (int x : l)
    if (x < 0) throw DomainError(rs.name() + ": negative Dynkin label");
}

long weyl_dimension(const RootSystem& rs, const Labels& labels) {
  require_dominant(rs, labels);
  Weight lr = weight_of(rs, labels) + rs.rho0;
  Rational d = 1;
  for (auto& a : rs.positive_roots) d *= dot(lr, a) / dot(rs.rho0, a);
  if (!is_integral(d)) throw std::logic_error("Weyl dimension not integral");
  return static_cast<long>(d.numerator());
}

static FormalCharacter freudenthal(const RootSystem& rs, const Labels& labels) {
  Weight lam = weight_of(rs, labels);
  Weight lr = lam + rs.rho0;
  Rational n2 = dot(lr, lr);
  FormalCharacter mult{{lam, 1}};
  std::set<Weight> seen{lam};
  std::vector<Weight> frontier{lam};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto& w : frontier)
      for (auto& a : rs.simple_roots) {
        Weight u = w - a;
        if (seen.insert(u).second) next.push_back(u);
      }
    std::vector<Weight> kept;
    for (auto& u : next) {
      Rational s = 0;
      for (auto& a : rs.positive_roots) {
        for (long k = 1;; ++k) {
          Weight wk = u + Rational(k) * a;
          if (dot(wk - lam, rs.rho0) > 0) break;
          auto it = mult.find(wk);
          if (it != mult.end()) s += Rational(it->second) * dot(wk, a);
        }
      }
      Weight ur = u + rs.rho0;
      Rational den = n2 - dot(ur, ur);
      if (den == Rational(0)) continue;
      Rational m = 2 * s / den;
      if (!is_integral(m) || m < 0) throw std::logic_error("Freudenthal produced a bad multiplicity");
      if (m > 0) {
        mult[u] = static_cast<long>(m.numerator());
        kept.push_back(u);
      }
    }
    frontier = std::move(kept);
  }
  return mult;
}

FormalCharacter irrep_character(const RootSystem& rs, const Labels& labels) {
  require_dominant(rs, labels);
  // characters are requested over and over during chains; cache them
  static std::mutex mu;
  static std::map<std::pair<std::string, Labels>, FormalCharacter> cache;
  auto key = std::make_pair(rs.name(), labels);
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  FormalCharacter ch = freudenthal(rs, labels);
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(key, ch);
  return ch;
}

std::optional<std::pair<int, Labels>> virtual_character_decomp(const RootSystem& rs, const Weight& mu) {
  if (mu.size() != static_cast<std::size_t>(rs.dim)) throw DomainError(rs.name() + ": weight has wrong length");
  for (auto& r : rational_labels(rs, mu))
    if (!is_integral(r)) throw DomainError(rs.name() + ": non-integral weight");
  Weight v = mu + rs.rho0;
  int sign = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      if (dot(v, rs.simple_roots[i]) < 0) {
        v = reflect(rs, i, v);
        sign = -sign;
        moved = true;
        break;
      }
    }
  }
  for (auto& a : rs.positive_roots)
    if (dot(v, a) == Rational(0)) return std::nullopt;
  return std::make_pair(sign, integral_labels(rs, v - rs.rho0));
}

Rational casimir2(const RootSystem& rs, const Labels& labels) {
  require_dominant(rs, labels);
  Weight lam = weight_of(rs, labels);
  return dot(lam, lam + Rational(2) * rs.rho0);
}

Labels conjugate(const RootSystem& rs, const Labels& labels) {
  if (rs.series == Series::A && rs.rank > 1) return Labels(labels.rbegin(), labels.rend());
  return labels;
}

std::string format_labels(const Labels& l) {
  std::string s = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(l[i]);
  }
  return s + ")";
}

int SemisimpleAlgebra::weight_dim() const {
  int d = abelian_charges;
  for (auto& f : factors) d += f.dim;
  return d;
}

std::string SemisimpleAlgebra::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "+";
    s += factors[i].name();
  }
  return s.empty() ? "0" : s;
}

bool SemisimpleAlgebra::all_sl2() const {
  return std::all_of(factors.begin(), factors.end(), [](const RootSystem& r) { return r.is_sl2(); });
}

SemisimpleAlgebra make_algebra(std::vector<RootSystem> f) {
  SemisimpleAlgebra g;
  g.factors = std::move(f);
  return g;
}

SemisimpleAlgebra parse_algebra(const std::string& name) {
  SemisimpleAlgebra g;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part == "D2") {
      g.factors.push_back(build_root_system(Series::A, 1));
      g.factors.push_back(build_root_system(Series::A, 1));
    } else {
      g.factors.push_back(build_root_system(part));
    }
  }
  if (g.factors.empty()) throw ConfigError("empty algebra name");
  return g;
}

static void check_tuple(const SemisimpleAlgebra& g, const LabelTuple& t) {
  if (t.size() != g.factors.size())
    throw DomainError("label tuple " + format_tuple(t) + " does not match " + g.name());
}

long tuple_dimension(const SemisimpleAlgebra& g, const LabelTuple& t) {
  check_tuple(g, t);
  long d = 1;
  for (std::size_t i = 0; i < t.size(); ++i) d *= weyl_dimension(g.factors[i], t[i]);
  return d;
}

LabelTuple conjugate(const SemisimpleAlgebra& g, const LabelTuple& t) {
  check_tuple(g, t);
  LabelTuple out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(conjugate(g.factors[i], t[i]));
  return out;
}

FormalCharacter product_character(const SemisimpleAlgebra& g, const LabelTuple& t) {
  check_tuple(g, t);
  FormalCharacter out{{Weight{}, 1}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    FormalCharacter c = irrep_character(g.factors[i], t[i]);
    FormalCharacter next;
    for (auto& [w, m] : out)
      for (auto& [u, k] : c) {
        Weight wu = w;
        wu.insert(wu.end(), u.begin(), u.end());
        next[wu] += m * k;
      }
    out = std::move(next);
  }
  return out;
}

Multiset peel(const SemisimpleAlgebra& g, FormalCharacter ch) {
  Weight rho;
  for (auto& f : g.factors) rho.insert(rho.end(), f.rho0.begin(), f.rho0.end());
  Multiset out;
  while (!ch.empty()) {
    auto best = ch.begin();
    Rational bh = dot(best->first, rho);
    for (auto it = std::next(ch.begin()); it != ch.end(); ++it) {
      Rational h = dot(it->first, rho);
      if (h > bh) best = it, bh = h;
    }
    Weight w = best->first;
    long m = best->second;
    if (m < 0) throw std::runtime_error("peel: negative multiplicity at a highest weight");
    LabelTuple t;
    std::size_t off = 0;
    for (auto& f : g.factors) {
      Weight part(w.begin() + off, w.begin() + off + f.dim);
      off += f.dim;
      Labels l = integral_labels(f, part);
      for (int x : l)
        if (x < 0) throw std::runtime_error("peel: top weight is not dominant");
      t.push_back(l);
    }
    out[t] += m;
    for (auto& [u, k] : product_character(g, t)) {
      auto it = ch.find(u);
      long v = (it == ch.end() ? 0 : it->second) - m * k;
      if (v < 0) throw std::runtime_error("peel: negative multiplicity, input was not a true character");
      if (v == 0) {
        if (it != ch.end()) ch.erase(it);
      } else {
        ch[u] = v;
      }
    }
  }
  return out;
}

FormalCharacter character_of(const SemisimpleAlgebra& g, const Multiset& m) {
  FormalCharacter out;
  for (auto& [t, k] : m)
    for (auto& [w, c] : product_character(g, t)) out[w] += k * c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string format_tuple(const LabelTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "-";
    s += format_labels(t[i]);
  }
  return s;
}

LabelTuple parse_tuple(const std::string& raw) {
  LabelTuple out;
  std::string s;
  for (char c : raw)
    if (c != ' ') s += c;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '-') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("bad label tuple '" + raw + "'");
    auto j = s.find(')', i);
    if (j == std::string::npos) throw std::invalid_argument("bad label tuple '" + raw + "'");
    Labels l;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    std::string item;
    while (std::getline(ss, item, ',')) l.push_back(std::stoi(item));
    out.push_back(l);
    i = j + 1;
  }
  return out;
}

}  // namespace codonsym
