#include "codonsym/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace codonsym {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(v);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long p = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    long long q = std::stoll(b, &used);
    if (used != b.size() || q == 0) throw std::invalid_argument(s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + raw + "'");
  }
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty label list");
  return out;
}

std::string join_rationals(const std::vector<Rational>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

bool is_integral(const Rational& r) { return r.denominator() == 1; }

Rational dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::logic_error("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::logic_error("add: size mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::logic_error("sub: size mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(const Rational& c, const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Weight zero_weight(std::size_t n) { return Weight(n, Rational(0)); }

Weight unit(std::size_t n, std::size_t i, Rational c) {
  Weight w(n, Rational(0));
  w.at(i) = c;
  return w;
}

}  // namespace codonsym
