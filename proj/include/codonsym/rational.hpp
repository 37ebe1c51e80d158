#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace codonsym {

using Rational = boost::rational<std::int64_t>;
using Weight = std::vector<Rational>;

std::string to_string(const Rational& r);
// accepts "5/2", "-3", "0"
Rational parse_rational(const std::string& s);
std::vector<Rational> parse_rational_list(const std::string& csv);
std::string join_rationals(const std::vector<Rational>& v, const char* sep = ",");

bool is_integral(const Rational& r);

Rational dot(const Weight& a, const Weight& b);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& c, const Weight& a);
Weight zero_weight(std::size_t n);
Weight unit(std::size_t n, std::size_t i, Rational c = 1);

}  // namespace codonsym
