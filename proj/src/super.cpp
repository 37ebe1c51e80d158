#include "codonsym/super.hpp"

#include <regex>

namespace codonsym {

namespace {

const Rational half(1, 2);

Weight vec(std::size_t d, std::initializer_list<std::pair<std::size_t, Rational>> parts) {
  Weight v = zero_weight(d);
  for (auto& [k, c] : parts) v[k] += c;
  return v;
}

// sl(k) acting on coordinates [off, off+k): traceless projection, or the
// single A1 coordinate (x0 - x1)/2 when k == 2
EvenFactor sl_block(std::size_t d, std::size_t off, int k) {
  EvenFactor f;
  f.label = "sl(" + std::to_string(k) + ")";
  f.rs = build_root_system(Series::A, k - 1);
  if (k == 2) {
    f.rows.push_back(vec(d, {{off, half}, {off + 1, -half}}));
    return f;
  }
  for (int i = 0; i < k; ++i) {
    Weight r = zero_weight(d);
    for (int j = 0; j < k; ++j) r[off + j] = Rational(i == j ? k - 1 : -1, k);
    f.rows.push_back(r);
  }
  return f;
}

EvenFactor sp_block(std::size_t d, std::size_t off, int n) {
  EvenFactor f;
  f.label = "sp(" + std::to_string(2 * n) + ")";
  if (n == 1) {
    f.rs = build_root_system(Series::A, 1);
    f.rows.push_back(unit(d, off, half));
  } else {
    f.rs = build_root_system(Series::C, n);
    for (int i = 0; i < n; ++i) f.rows.push_back(unit(d, off + i));
  }
  return f;
}

}  // namespace

Weight EvenFactor::apply(const Weight& w) const {
  Weight out;
  for (auto& r : rows) out.push_back(dot(r, w));
  return out;
}

int SuperAlgebra::label_count() const {
  switch (kind) {
    case SuperKind::SL: return m + n - 1;
    case SuperKind::OSP_2: return n + 1;
    default: return n + m;
  }
}

SemisimpleAlgebra SuperAlgebra::even_ss() const {
  SemisimpleAlgebra g;
  for (auto& f : factors) g.factors.push_back(f.rs);
  return g;
}

Rational SuperAlgebra::ip(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < form.size(); ++i) s += form[i] * a[i] * b[i];
  return s;
}

std::string SuperAlgebra::even_name() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "+" : "") + factors[i].label;
  return s;
}

std::vector<std::string> supported_supers() {
  return {"sl(2|1)", "sl(3|1)", "sl(4|1)", "sl(6|1)", "sl(2|2)", "sl(3|2)",
          "osp(2|4)", "osp(2|6)", "osp(3|2)", "osp(3|4)", "osp(4|2)", "osp(5|2)"};
}

SuperAlgebra build_super(const std::string& kind) {
  static const std::regex re(R"(\s*(sl|osp)\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*)");
  std::smatch mt;
  if (!std::regex_match(kind, mt, re)) throw ConfigError("unsupported superalgebra '" + kind + "'");
  int a = std::stoi(mt[2]), b = std::stoi(mt[3]);
  std::string canon = mt[1].str() + "(" + std::to_string(a) + "|" + std::to_string(b) + ")";
  bool known = false;
  for (auto& s : supported_supers()) known = known || s == canon;
  if (!known) throw ConfigError("unsupported superalgebra '" + kind + "'");

  SuperAlgebra sa;
  sa.name = canon;
  if (mt[1] == "sl") {
    int m = a, n = b;
    std::size_t d = m + n;
    sa.kind = SuperKind::SL;
    sa.m = m;
    sa.n = n;
    sa.form.assign(m, 1);
    sa.form.insert(sa.form.end(), n, -1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) sa.odd_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)(m + j), -1}}));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) sa.even_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)j, -1}}));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sa.even_positive_roots.push_back(vec(d, {{(size_t)(m + i), 1}, {(size_t)(m + j), -1}}));
    if (m >= 2) sa.factors.push_back(sl_block(d, 0, m));
    if (n >= 2) sa.factors.push_back(sl_block(d, m, n));
    Weight c = zero_weight(d);
    for (int i = 0; i < m; ++i) c[i] = 1;
    sa.charge = c;
  } else if (a == 2) {
    // osp(2|2n): coordinates (δ_1..δ_n, ε)
    int n = b / 2;
    std::size_t d = n + 1;
    sa.kind = SuperKind::OSP_2;
    sa.m = 1;
    sa.n = n;
    sa.form.assign(n, -1);
    sa.form.push_back(1);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        sa.even_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)j, -1}}));
        sa.even_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)j, 1}}));
      }
      sa.even_positive_roots.push_back(unit(d, i, 2));
    }
    for (int j = 0; j < n; ++j) {
      sa.odd_positive_roots.push_back(vec(d, {{(size_t)n, 1}, {(size_t)j, -1}}));
      sa.odd_positive_roots.push_back(vec(d, {{(size_t)n, 1}, {(size_t)j, 1}}));
    }
    sa.factors.push_back(sp_block(d, 0, n));
    sa.charge = unit(d, n);
  } else {
    // osp(M|2n), M = 2m or 2m+1: coordinates (δ_1..δ_n, ε_1..ε_m)
    bool odd = a % 2 == 1;
    int m = a / 2, n = b / 2;
    std::size_t d = n + m;
    sa.kind = odd ? SuperKind::OSP_ODD : SuperKind::OSP_EVEN;
    sa.m = m;
    sa.n = n;
    sa.form.assign(n, 1);
    sa.form.insert(sa.form.end(), m, -1);
    auto E = [n](int i) { return (size_t)(n + i); };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        sa.even_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)j, -1}}));
        sa.even_positive_roots.push_back(vec(d, {{(size_t)i, 1}, {(size_t)j, 1}}));
      }
      sa.even_positive_roots.push_back(unit(d, i, 2));
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        sa.even_positive_roots.push_back(vec(d, {{E(i), 1}, {E(j), -1}}));
        sa.even_positive_roots.push_back(vec(d, {{E(i), 1}, {E(j), 1}}));
      }
      if (odd) sa.even_positive_roots.push_back(unit(d, E(i)));
    }
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) {
        sa.odd_positive_roots.push_back(vec(d, {{(size_t)j, 1}, {E(i), -1}}));
        sa.odd_positive_roots.push_back(vec(d, {{(size_t)j, 1}, {E(i), 1}}));
      }
      if (odd) sa.odd_positive_roots.push_back(unit(d, j));
    }
    sa.factors.push_back(sp_block(d, 0, n));
    if (odd && m == 1) {
      EvenFactor f;
      f.label = "so(3)";
      f.rs = build_root_system(Series::A, 1);
      f.rows.push_back(unit(d, E(0)));
      sa.factors.push_back(f);
    } else if (odd) {
      EvenFactor f;
      f.label = "so(" + std::to_string(a) + ")";
      f.rs = build_root_system(Series::B, m);
      for (int i = 0; i < m; ++i) f.rows.push_back(unit(d, E(i)));
      sa.factors.push_back(f);
    } else {
      // so(4) = sl(2)+sl(2)
      EvenFactor f1, f2;
      f1.label = f2.label = "sl(2)";
      f1.rs = f2.rs = build_root_system(Series::A, 1);
      f1.rows.push_back(vec(d, {{E(0), half}, {E(1), -half}}));
      f2.rows.push_back(vec(d, {{E(0), half}, {E(1), half}}));
      sa.factors.push_back(f1);
      sa.factors.push_back(f2);
    }
  }
  std::size_t d = sa.form.size();
  sa.rho0 = zero_weight(d);
  sa.rho1 = zero_weight(d);
  for (auto& r : sa.even_positive_roots) sa.rho0 = sa.rho0 + r;
  for (auto& r : sa.odd_positive_roots) sa.rho1 = sa.rho1 + r;
  sa.rho0 = half * sa.rho0;
  sa.rho1 = half * sa.rho1;
  sa.rho = sa.rho0 - sa.rho1;
  return sa;
}

Weight kac_weight(const SuperAlgebra& sa, const KacHighestWeight& l) {
  if (static_cast<int>(l.size()) != sa.label_count())
    throw DomainError(sa.name + ": expected " + std::to_string(sa.label_count()) + " Kac-Dynkin labels, got " +
                      std::to_string(l.size()));
  int m = sa.m, n = sa.n;
  Weight hw;
  if (sa.kind == SuperKind::SL) {
    Weight eps(m, Rational(0)), dl(n, Rational(0));
    for (int i = m - 2; i >= 0; --i) eps[i] = eps[i + 1] + l[i];
    dl[0] = l[m - 1] - eps[m - 1];
    for (int j = 1; j < n; ++j) dl[j] = dl[j - 1] - l[m - 1 + j];
    hw = eps;
    hw.insert(hw.end(), dl.begin(), dl.end());
  } else if (sa.kind == SuperKind::OSP_2) {
    Weight av(n, Rational(0));
    av[n - 1] = l[n];
    for (int i = n - 2; i >= 0; --i) av[i] = av[i + 1] + l[i + 1];
    hw = av;
    hw.push_back(l[0] - av[0]);
  } else {
    Weight bv(m, Rational(0)), av(n, Rational(0));
    if (sa.kind == SuperKind::OSP_ODD) {
      bv[m - 1] = l.back() / 2;
      for (int i = m - 2; i >= 0; --i) bv[i] = bv[i + 1] + l[n + i];
    } else {
      Rational x = l[l.size() - 2], y = l.back();
      bv[m - 1] = (y - x) / 2;
      bv[m - 2] = (x + y) / 2;
      for (int i = m - 3; i >= 0; --i) bv[i] = bv[i + 1] + l[n + i];
    }
    av[n - 1] = l[n - 1] - bv[0];
    for (int i = n - 2; i >= 0; --i) av[i] = av[i + 1] + l[i];
    hw = av;
    hw.insert(hw.end(), bv.begin(), bv.end());
  }
  for (auto& f : sa.factors)
    for (auto& x : rational_labels(f.rs, f.apply(hw)))
      if (x < 0 || !is_integral(x))
        throw DomainError(sa.name + " " + format_hw(l) + ": even labels must be non-negative integers");
  return hw;
}

bool is_typical(const SuperAlgebra& sa, const KacHighestWeight& hw) {
  Weight lr = kac_weight(sa, hw) + sa.rho;
  for (auto& b : sa.odd_positive_roots)
    if (sa.ip(b, b) == Rational(0) && sa.ip(lr, b) == Rational(0)) return false;
  return true;
}

EvenBranch branch_to_even(const SuperAlgebra& sa, const KacHighestWeight& hw) {
  if (!is_typical(sa, hw)) throw DomainError(sa.name + " " + format_hw(hw) + " is atypical");
  Weight lam = kac_weight(sa, hw);
  const auto& odd = sa.odd_positive_roots;
  EvenBranch out;
  out.charged = sa.charge.has_value();
  // Kac module character = ch V0(Λ) · Π(1 + e^{-β}); expand over subsets and
  // straighten each term with the dot action
  for (std::size_t mask = 0; mask < (std::size_t(1) << odd.size()); ++mask) {
    Weight mu = lam;
    for (std::size_t k = 0; k < odd.size(); ++k)
      if (mask >> k & 1) mu = mu - odd[k];
    int sign = 1;
    LabelTuple t;
    bool wall = false;
    for (auto& f : sa.factors) {
      auto r = virtual_character_decomp(f.rs, f.apply(mu));
      if (!r) {
        wall = true;
        break;
      }
      sign *= r->first;
      t.push_back(r->second);
    }
    if (wall) continue;
    ChargedTerm key{t, sa.charge ? dot(*sa.charge, mu) : Rational(0)};
    out.terms[key] += sign;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second < 0)
      throw std::runtime_error(sa.name + ": residual negative multiplicity in even branching");
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  }
  return out;
}

Multiset drop_abelian_charges(const EvenBranch& b) {
  Multiset out;
  for (auto& [k, v] : b.terms) out[k.labels] += v;
  return out;
}

long typical_dimension(const SuperAlgebra& sa, const KacHighestWeight& hw) {
  auto g = sa.even_ss();
  long d = 0;
  for (auto& [t, k] : drop_abelian_charges(branch_to_even(sa, hw))) d += k * tuple_dimension(g, t);
  return d;
}

std::string format_hw(const KacHighestWeight& hw) { return "(" + join_rationals(hw) + ")"; }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = [] {
    auto R = [](const std::string& s) { return parse_rational_list(s); };
    std::vector<CatalogEntry> c = {
        {"sl21", "sl(2|1)", R("15,1"), 2, 1, "", ""},
        {"sl31", "sl(3|1)", R("1,1,1"), 3, 1, "", ""},
        {"sl41", "sl(4|1)", R("1,0,0,1"), 4, 1, "", ""},
        {"sl61", "sl(6|1)", R("0,0,0,0,0,1"), 6, 1, "", ""},
        {"sl22a", "sl(2|2)", R("3,2,0"), 2, 2, "", ""},
        {"sl22b", "sl(2|2)", R("1,3,1"), 2, 2, "", ""},
        {"sl32", "sl(3|2)", R("0,0,2,0"), 3, 2, "", ""},
        {"osp24", "osp(2|4)", R("1,1,0"), 1, 2, "", ""},
        {"osp26", "osp(2|6)", R("3,0,0,0"), 1, 2, "", ""},
        {"osp32", "osp(3|2)", R("17/2,15"), 1, 3, "", ""},
        {"osp34", "osp(3|4)", R("0,5/2,3"), 2, 3, "", ""},
        {"osp52", "osp(5|2)", R("5/2,0,1"), 1, 3, "", ""},
        {"osp42a", "osp(4|2)", R("5,0,0"), 1, 3, "", ""},
        {"osp42b", "osp(4|2)", R("7/2,0,1"), 1, 3, "", ""},
        {"sl41c", "sl(4|1)", R("0,0,1,1"), 4, 0, "sl41", "complex conjugate"},
        {"sl22c", "sl(2|2)", R("0,2,3"), 2, 0, "sl22a", "complex conjugate"},
        {"osp42a-2", "osp(4|2)", R("7/2,3,0"), 1, 0, "osp42a", "same branching up to sl(2) order"},
        {"osp42a-3", "osp(4|2)", R("7/2,0,3"), 1, 0, "osp42a", "same branching up to sl(2) order"},
        {"osp42b-2", "osp(4|2)", R("3,1,1"), 1, 0, "osp42b", "same branching up to sl(2) order"},
        {"osp42b-3", "osp(4|2)", R("7/2,1,0"), 1, 0, "osp42b", "same branching up to sl(2) order"},
    };
    return c;
  }();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (auto& e : catalog())
    if (e.id == id) return e;
  std::string known;
  for (auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.id;
  throw ConfigError("unknown catalog id '" + id + "' (known: " + known + ")");
}

}  // namespace codonsym
