#include "doctest.h"

#include "checks.hpp"

using namespace codonsym;

namespace {
std::string joined(const checks::Failures& f) {
  std::string s;
  for (auto& x : f) s += x + "\n";
  return s;
}
}  // namespace

TEST_CASE("every registered embedding passes its own validation") {
  CHECK(builtin_registry().size() == 16);
  for (auto& e : builtin_registry()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(validate_embedding(e));
    CHECK_FALSE(e.validation.empty());
  }
  CHECK_THROWS_AS(find_embedding("A3>G2"), ConfigError);
}

TEST_CASE("branching conserves dimension for small irreps") {
  for (auto& e : builtin_registry()) {
    const auto& rs = e.source.factors.at(0);
    for (auto l : std::vector<Labels>{Labels(rs.rank, 0), Labels(rs.rank, 1)}) {
      long dim = 0;
      for (auto& [t, k] : branch(e, l)) dim += k * tuple_dimension(e.target, t);
      CAPTURE(e.name);
      CHECK(dim == weyl_dimension(rs, l));
    }
  }
}

TEST_CASE("defining representations branch as stated") {
  auto ms = [](std::vector<std::pair<std::string, long>> xs) {
    Multiset m;
    for (auto& [s, k] : xs) m[parse_tuple(s)] += k;
    return m;
  };
  CHECK(branch(find_embedding("A3>C2"), {1, 0, 0}) == ms({{"(1,0)", 1}}));
  CHECK(branch(find_embedding("C2>A1+A1"), {1, 0}) == ms({{"(1)-(0)", 1}, {"(0)-(1)", 1}}));
  CHECK(branch(find_embedding("C2>A1"), {1, 0}) == ms({{"(3)", 1}}));
  CHECK(branch(find_embedding("A5>C3"), {1, 0, 0, 0, 0}) == ms({{"(1,0,0)", 1}}));
  CHECK(branch(find_embedding("A2>A1(2)"), {1, 0}) == ms({{"(2)", 1}}));
  CHECK(branch(find_embedding("A2>A1(1)"), {1, 0}) == ms({{"(1)", 1}, {"(0)", 1}}));
  CHECK(branch(find_embedding("B2>A1+A1"), {0, 1}) == ms({{"(1)-(0)", 1}, {"(0)-(1)", 1}}));
}

TEST_CASE("diagonal products follow Clebsch-Gordan") {
  Multiset want = {{{{2}}, 1}, {{{0}}, 1}};
  CHECK(diagonal_clebsch(1, 1) == want);
  long dim = 0;
  for (auto& [t, k] : diagonal_clebsch(4, 3)) dim += k * (t[0][0] + 1);
  CHECK(dim == 20);
}

TEST_CASE("property: every embedding commutes with conjugation") {
  auto f = checks::conjugation_equivariance();
  CHECK_MESSAGE(f.empty(), joined(f));
}

TEST_CASE("property: dimension 64 is conserved through every chain step and first breaking") {
  auto f = checks::dimension_conservation();
  CHECK_MESSAGE(f.empty(), joined(f));
}

TEST_CASE("chain fixtures table4, table5, table9 match") {
  for (int i : {4, 5, 9}) {
    auto r = verify_fixture("table" + std::to_string(i) + ".json");
    std::string why;
    for (auto& d : r.diffs) why += d + "\n";
    CHECK_MESSAGE(r.ok, why);
  }
  auto subs = [](int id) { return generate_table(id)["subspaces"].get<std::vector<long>>(); };
  CHECK(subs(4) == std::vector<long>{5, 8, 9});
  CHECK(subs(5) == std::vector<long>{3, 10, 14});
  CHECK(subs(9) == std::vector<long>{6, 8});
}

TEST_CASE("steps that do not fit the algebra are refused") {
  auto d = start_distribution(build_super("osp(5|2)"), parse_rational_list("5/2,0,1"));
  CHECK_THROWS_AS(apply_step(d, embed_step(0, "B2>A1+A1")), ConfigError);
  CHECK_THROWS_AS(apply_step(d, diag_step(0, 1)), ConfigError);
  auto e = apply_step(d, embed_step(1, "B2>A1+A1"));
  CHECK(e.slot_names == std::vector<std::string>{"1", "2", "3"});
  auto f = apply_step(e, diag_step(0, 1));
  CHECK(f.slot_names == std::vector<std::string>{"12", "3"});
  CHECK(f.total_dim() == 64);
}

TEST_CASE("registry export is well-formed JSON") {
  auto j = nlohmann::json::parse(export_registry());
  CHECK(j.size() == 16);
  CHECK(j[0].contains("projection"));
}
