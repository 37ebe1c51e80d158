#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codonsym/lie.hpp"

namespace codonsym {

enum class SuperKind { SL, OSP_ODD, OSP_EVEN, OSP_2 };

// one simple factor of the even part plus the linear map taking a
// superalgebra weight to that factor's ε coordinates (one row per coordinate)
struct EvenFactor {
  RootSystem rs;
  std::vector<Weight> rows;
  std::string label;  // "sp(2)", "so(5)", "sl(3)", ...
  Weight apply(const Weight& w) const;
};

struct SuperAlgebra {
  std::string name;  // "osp(5|2)"
  SuperKind kind = SuperKind::SL;
  int m = 0, n = 0;
  std::vector<Rational> form;  // diagonal invariant form
  std::vector<Weight> even_positive_roots;
  std::vector<Weight> odd_positive_roots;
  Weight rho0, rho1, rho;
  std::vector<EvenFactor> factors;
  std::optional<Weight> charge;  // u(1) functional for type I

  int label_count() const;
  SemisimpleAlgebra even_ss() const;
  Rational ip(const Weight& a, const Weight& b) const;
  std::string even_name() const;  // "sp(2)+so(5)"
};

using KacHighestWeight = std::vector<Rational>;

SuperAlgebra build_super(const std::string& kind);
std::vector<std::string> supported_supers();

Weight kac_weight(const SuperAlgebra& sa, const KacHighestWeight& hw);
bool is_typical(const SuperAlgebra& sa, const KacHighestWeight& hw);

struct ChargedTerm {
  LabelTuple labels;
  Rational charge;  // 0 when the algebra carries no u(1)
  bool operator<(const ChargedTerm& o) const {
    return labels < o.labels || (labels == o.labels && charge < o.charge);
  }
};

struct EvenBranch {
  std::map<ChargedTerm, long> terms;
  bool charged = false;
};

EvenBranch branch_to_even(const SuperAlgebra& sa, const KacHighestWeight& hw);
Multiset drop_abelian_charges(const EvenBranch& b);
long typical_dimension(const SuperAlgebra& sa, const KacHighestWeight& hw);

struct CatalogEntry {
  std::string id;
  std::string algebra;
  KacHighestWeight hw;
  int odd_node = 0;     // 1-based index of l_s
  int table = 0;        // 1..3, 0 for aliases
  std::string alias_of; // empty for table rows
  std::string relation; // why the alias is equivalent
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);
std::string format_hw(const KacHighestWeight& hw);  // "(5/2,0,1)"

}  // namespace codonsym
