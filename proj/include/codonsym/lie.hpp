#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "codonsym/rational.hpp"

namespace codonsym {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Series { A, B, C, D };

using Labels = std::vector<int>;
// one Labels per simple factor
using LabelTuple = std::vector<Labels>;
// weight -> multiplicity; std::map keeps weights in lexicographic order
using FormalCharacter = std::map<Weight, long>;
using Multiset = std::map<LabelTuple, long>;

struct RootSystem {
  Series series = Series::A;
  int rank = 0;
  int dim = 0;  // number of ε coordinates
  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;
  std::vector<Weight> fundamental_weights;
  Weight rho0;
  long weyl_order = 0;

  std::string name() const;  // "A3", "B2", ...
  bool is_sl2() const { return series == Series::A && rank == 1; }
  bool operator==(const RootSystem& o) const { return series == o.series && rank == o.rank; }
};

// A1..A5, B2, C2, C3. A1 lives in one coordinate with root ε1 so that the
// label 2s has weight s and the Casimir comes out as s(s+1).
RootSystem build_root_system(Series s, int rank);
RootSystem build_root_system(const std::string& name);

Weight reflect(const RootSystem& rs, std::size_t simple_index, const Weight& v);
std::vector<Weight> all_roots(const RootSystem& rs);

Weight weight_of(const RootSystem& rs, const Labels& labels);
// 2(w,α)/(α,α) over simple roots; may be non-integral
std::vector<Rational> rational_labels(const RootSystem& rs, const Weight& w);
Labels integral_labels(const RootSystem& rs, const Weight& w);

long weyl_dimension(const RootSystem& rs, const Labels& labels);
FormalCharacter irrep_character(const RootSystem& rs, const Labels& labels);
// dot action: none when mu+rho0 is on a wall, otherwise (sign, dominant labels)
std::optional<std::pair<int, Labels>> virtual_character_decomp(const RootSystem& rs, const Weight& mu);
Rational casimir2(const RootSystem& rs, const Labels& labels);
Labels conjugate(const RootSystem& rs, const Labels& labels);

std::string format_labels(const Labels& l);  // "(1,0)"

struct SemisimpleAlgebra {
  std::vector<RootSystem> factors;
  int abelian_charges = 0;

  int weight_dim() const;
  std::string name() const;  // "A1+B2"
  bool all_sl2() const;
};

SemisimpleAlgebra make_algebra(std::vector<RootSystem> f);
// "A1+A1", "D2" (= A1+A1), "C2", ...
SemisimpleAlgebra parse_algebra(const std::string& name);

long tuple_dimension(const SemisimpleAlgebra& g, const LabelTuple& t);
LabelTuple conjugate(const SemisimpleAlgebra& g, const LabelTuple& t);
FormalCharacter product_character(const SemisimpleAlgebra& g, const LabelTuple& t);
Multiset peel(const SemisimpleAlgebra& g, FormalCharacter ch);
FormalCharacter character_of(const SemisimpleAlgebra& g, const Multiset& m);

std::string format_tuple(const LabelTuple& t);  // "(1)-(1,1)"
LabelTuple parse_tuple(const std::string& s);   // inverse of format_tuple; spaces ignored

}  // namespace codonsym
