#include "doctest.h"

#include "codonsym/super.hpp"
#include "codonsym/young.hpp"

using namespace codonsym;

TEST_CASE("sl(n) labels from rows") {
  CHECK(sl_labels_from_diagram(make_diagram({3, 2, 1}), 3) == Labels{1, 1});
  CHECK(sl_labels_from_diagram(make_diagram({5}), 2) == Labels{5});
  CHECK(sl_labels_from_diagram(make_diagram({2, 2}), 2) == Labels{0});
  CHECK_THROWS_AS(sl_labels_from_diagram(make_diagram({1, 1, 1}), 2), IllegalDiagram);
  CHECK_THROWS_AS(make_diagram({1, 2}), IllegalDiagram);
  CHECK(make_diagram({2, 1, 0, 0}).rows == std::vector<int>{2, 1});
}

TEST_CASE("sl(m|n) labels from superdiagrams") {
  auto s = make_superdiagram({3, 2, 1});
  CHECK(s.columns == std::vector<Rational>{3, 2, 1});
  CHECK(sl_super_labels_from_diagram(s, 3, 1) == KacHighestWeight{1, 1, 1});
  CHECK(sl_super_labels_from_diagram(s, 2, 2) == KacHighestWeight{1, 3, 1});
  for (int k = 1; k <= 4; ++k)
    CHECK(sl_super_labels_from_diagram(make_superdiagram({k}), 2, 2) == KacHighestWeight{k, 0, 0});
  CHECK_THROWS_AS(sl_super_labels_from_diagram(make_superdiagram({2, 2, 2}), 2, 1), IllegalDiagram);
}

TEST_CASE("the theta(0) convention never changes a label") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (auto& d : diagrams_up_to(8)) {
        if (d.row(m) > n) continue;
        auto s = make_superdiagram(d.rows);
        CHECK(sl_super_labels_from_diagram(s, m, n, 0) == sl_super_labels_from_diagram(s, m, n, 1));
      }
}

TEST_CASE("property: legal sl(m|n) superdiagrams up to 8 boxes give usable highest weights") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    auto sa = build_super("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
    int legal = 0;
    for (auto& d : diagrams_up_to(8)) {
      if (d.row(m) > n) {
        CHECK_THROWS(sl_super_labels_from_diagram(make_superdiagram(d.rows), m, n));
        continue;
      }
      ++legal;
      auto hw = sl_super_labels_from_diagram(make_superdiagram(d.rows), m, n);
      REQUIRE(static_cast<int>(hw.size()) == m + n - 1);
      for (int i = 0; i < m + n - 1; ++i) {
        if (i == m - 1) continue;  // odd node
        CHECK(is_integral(hw[i]));
        CHECK(hw[i] >= 0);
      }
      CHECK_NOTHROW(kac_weight(sa, hw));
    }
    CHECK(legal > 0);
  }
}

TEST_CASE("transposition") {
  CHECK(transpose_diagram(make_diagram({3, 2, 1})).rows == std::vector<int>{3, 2, 1});
  CHECK(transpose_diagram(make_diagram({3})).rows == std::vector<int>{1, 1, 1});
  auto all = diagrams_up_to(8);
  // partitions of 0..8: 1+1+2+3+5+7+11+15+22
  CHECK(all.size() == 67);
  for (auto& d : all) {
    CHECK(transpose_diagram(transpose_diagram(d)).rows == d.rows);
    CHECK(transpose_diagram(d).boxes() == d.boxes());
  }
}

TEST_CASE("osp superdiagrams of the two catalog weights") {
  auto a = osp_superdiagram_from_labels("osp(4|2)", parse_rational_list("7/2,0,1"));
  CHECK(a.rows == std::vector<int>{3});
  CHECK(a.columns == std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
  CHECK(a.spinor_row);
  auto b = osp_superdiagram_from_labels("osp(5|2)", parse_rational_list("5/2,0,1"));
  CHECK(b.rows == std::vector<int>{2});
  CHECK(b.columns == std::vector<Rational>{Rational(3, 2), Rational(3, 2)});
  CHECK(render(a) == "###\nss");
  CHECK(render(b) == "##\nss");
  CHECK(render(make_diagram({2, 1})) == "##\n#");
  CHECK_THROWS(osp_superdiagram_from_labels("osp(5|2)", parse_rational_list("5/2,0")));
  CHECK_THROWS(osp_superdiagram_from_labels("osp(5|2)", parse_rational_list("5/2,0,1,1")));
  CHECK_THROWS_AS(osp_superdiagram_from_labels("osp(3|2)", parse_rational_list("17/2,15")), ConfigError);
}
