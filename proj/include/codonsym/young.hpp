#pragma once

#include <string>
#include <vector>

#include "codonsym/lie.hpp"
#include "codonsym/super.hpp"

namespace codonsym {

struct IllegalDiagram : DomainError {
  using DomainError::DomainError;
};

struct YoungDiagram {
  std::vector<int> rows;  // b_1 >= ... >= b_r > 0

  int row(int i) const { return i < static_cast<int>(rows.size()) ? rows[i] : 0; }  // 0-based, 0 past the end
  int boxes() const;
};

// Plain superdiagrams keep columns == transpose(rows). The two osp forms
// carry rational column lengths c_j and half boxes below the first
// `top_rows` rows instead.
struct YoungSuperDiagram {
  std::vector<int> rows;
  std::vector<Rational> columns;
  bool spinor_row = false;
  int top_rows = 0;  // n for osp(M|2n) forms
};

YoungDiagram make_diagram(std::vector<int> rows);  // validates, drops trailing zeros
YoungSuperDiagram make_superdiagram(std::vector<int> rows);
YoungDiagram transpose_diagram(const YoungDiagram& d);

Labels sl_labels_from_diagram(const YoungDiagram& d, int n);
// theta0 is θ(0); the result must not depend on it
KacHighestWeight sl_super_labels_from_diagram(const YoungSuperDiagram& d, int m, int n, int theta0 = 0);
YoungSuperDiagram osp_superdiagram_from_labels(const std::string& kind, const KacHighestWeight& hw);

std::string render(const YoungDiagram& d);
std::string render(const YoungSuperDiagram& d);

// all partitions of size <= max_boxes (used by tests and the CLI listing)
std::vector<YoungDiagram> diagrams_up_to(int max_boxes);

}  // namespace codonsym
