#pragma once

#include <string>
#include <vector>

#include "codonsym/lie.hpp"
#include "codonsym/super.hpp"

namespace codonsym {

// Regular or principal embedding of a simple algebra. `images[k]` is where
// the k-th ε coordinate of the source lands in the concatenated target
// coordinates; it is read off from how the defining rep decomposes.
struct Embedding {
  std::string name;  // "A3>C2"
  SemisimpleAlgebra source, target;
  std::vector<Weight> images;
  std::string defining;  // e.g. "4 -> (1)-(0) + (0)-(1)"
  struct Check {
    Labels source;
    Multiset expected;
  };
  std::vector<Check> validation;

  Weight project(const Weight& w) const;
};

const std::vector<Embedding>& builtin_registry();
const Embedding& find_embedding(const std::string& name);

Multiset branch(const Embedding& e, const Labels& labels);
// throws ConfigError naming the first failing check
void validate_embedding(const Embedding& e);
std::string export_registry();  // JSON text

// {a+b, a+b-2, ..., |a-b|}
Multiset diagonal_clebsch(int a, int b);

struct DistEntry {
  LabelTuple labels;
  long mult = 1;
  std::vector<LabelTuple> ancestry;  // labels at every earlier stage, oldest first
};

struct Distribution {
  SemisimpleAlgebra algebra;
  std::vector<std::string> slot_names;  // "1", "2", "12", ...
  std::vector<DistEntry> entries;

  long count() const;
  long total_dim() const;
};

struct Step {
  enum class Kind { Embed, Diagonal } kind = Kind::Embed;
  int slot = 0;   // 0-based factor index
  int other = 0;  // second slot for Diagonal
  std::string embedding;
  std::string describe() const;  // "A3>C2@1", "diag(1,2)"
};

Step embed_step(int slot, const std::string& embedding);
Step diag_step(int i, int j);

Distribution start_distribution(const SuperAlgebra& sa, const KacHighestWeight& hw);
Distribution apply_step(const Distribution& d, const Step& s);
Distribution apply_chain(const CatalogEntry& rep, const std::vector<Step>& steps);

Multiset collapse(const Distribution& d);  // forget ancestry

}  // namespace codonsym
