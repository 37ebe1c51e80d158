#include "codonsym/young.hpp"

#include <algorithm>
#include <functional>

namespace codonsym {

int YoungDiagram::boxes() const {
  int s = 0;
  for (int b : rows) s += b;
  return s;
}

YoungDiagram make_diagram(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) throw IllegalDiagram("negative row length");
    if (i && rows[i] > rows[i - 1]) throw IllegalDiagram("row lengths must be non-increasing");
  }
  return {rows};
}

YoungDiagram transpose_diagram(const YoungDiagram& d) {
  std::vector<int> cols;
  for (int j = 0; j < d.row(0); ++j) {
    int c = 0;
    while (d.row(c) > j) ++c;
    cols.push_back(c);
  }
  return {cols};
}

YoungSuperDiagram make_superdiagram(std::vector<int> rows) {
  auto d = make_diagram(std::move(rows));
  YoungSuperDiagram s;
  s.rows = d.rows;
  for (int c : transpose_diagram(d).rows) s.columns.push_back(c);
  return s;
}

Labels sl_labels_from_diagram(const YoungDiagram& d, int n) {
  if (static_cast<int>(d.rows.size()) > n)
    throw IllegalDiagram("diagram with " + std::to_string(d.rows.size()) + " rows is not allowed for sl(" +
                         std::to_string(n) + ")");
  Labels l;
  for (int i = 0; i + 1 < n; ++i) l.push_back(d.row(i) - d.row(i + 1));
  return l;
}

KacHighestWeight sl_super_labels_from_diagram(const YoungSuperDiagram& s, int m, int n, int theta0) {
  if (s.spinor_row) throw IllegalDiagram("half boxes have no sl(m|n) meaning");
  YoungDiagram d{s.rows};
  if (d.row(m) > n)
    throw IllegalDiagram("b_" + std::to_string(m + 1) + " = " + std::to_string(d.row(m)) + " exceeds n = " +
                         std::to_string(n));
  auto col = [&](int j) { return j < static_cast<int>(s.columns.size()) ? s.columns[j] : Rational(0); };
  auto cred = [&](int j) {
    Rational x = col(j) - m;
    int th = x > 0 ? 1 : (x < 0 ? 0 : theta0);
    return x * th;
  };
  KacHighestWeight l;
  for (int i = 0; i + 1 < m; ++i) l.push_back(d.row(i) - d.row(i + 1));
  l.push_back(d.row(m - 1) + cred(0));
  for (int j = 0; j + 1 < n; ++j) l.push_back(cred(j) - cred(j + 1));
  return l;
}

YoungSuperDiagram osp_superdiagram_from_labels(const std::string& kind, const KacHighestWeight& hw) {
  auto sa = build_super(kind);
  if (sa.name != "osp(4|2)" && sa.name != "osp(5|2)")
    throw ConfigError("superdiagram conversion only implemented for osp(4|2) and osp(5|2), not " + sa.name);
  if (hw.size() != 3) throw DomainError(sa.name + " needs 3 labels, got " + std::to_string(hw.size()));
  const Rational n = sa.n;
  Rational b1, c1, c2;
  if (sa.name == "osp(4|2)") {
    b1 = hw[0] - (hw[1] + hw[2]) / 2;
    c1 = n + (hw[2] + hw[1]) / 2;
    c2 = n + (hw[2] - hw[1]) / 2;
  } else {
    b1 = hw[0] - hw[1] - hw[2] / 2;
    c1 = n + hw[1] + hw[2] / 2;
    c2 = n + hw[2] / 2;
  }
  if (!is_integral(b1) || b1 < 0 || c2 < 0 || c1 < c2)
    throw DomainError(sa.name + " " + format_hw(hw) + " gives no superdiagram");
  YoungSuperDiagram s;
  s.rows = {static_cast<int>(b1.numerator())};
  s.columns = {c1, c2};
  s.top_rows = sa.n;
  s.spinor_row = !is_integral(c1) || !is_integral(c2);
  return s;
}

std::string render(const YoungDiagram& d) {
  std::string out;
  for (int b : d.rows) out += std::string(b, '#') + "\n";
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render(const YoungSuperDiagram& s) {
  if (s.top_rows == 0) return render(YoungDiagram{s.rows});
  std::string out;
  for (int b : s.rows) out += std::string(b, '#') + "\n";
  // rows below the top block: column j reaches depth c_j - top_rows
  for (int k = 1;; ++k) {
    std::string line;
    for (auto& c : s.columns) {
      Rational extra = c - s.top_rows;
      if (extra >= k)
        line += '#';
      else if (extra >= Rational(2 * k - 1, 2))
        line += 's';
      else
        break;
    }
    if (line.empty()) break;
    out += line + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::vector<YoungDiagram> diagrams_up_to(int max_boxes) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    out.push_back({cur});
    for (int b = std::min(left, cap); b >= 1; --b) {
      cur.push_back(b);
      rec(left - b, b);
      cur.pop_back();
    }
  };
  rec(max_boxes, max_boxes);
  return out;
}

}  // namespace codonsym
