#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "checks.hpp"

using namespace codonsym;

TEST_CASE("all fixtures verify") {
  for (auto& r : verify_all()) {
    std::string why;
    for (auto& d : r.diffs) why += d + "\n";
    CAPTURE(r.fixture);
    CHECK_MESSAGE(r.ok, why);
  }
}

TEST_CASE("renderings are byte-stable") {
  for (int id = 1; id <= 9; ++id) {
    auto a = generate_table(id), b = generate_table(id);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_csv(a) == render_csv(b));
    CHECK(a.dump() == b.dump());
    CHECK(Doc::parse(a.dump()) == a);
  }
}

TEST_CASE("csv layout") {
  auto csv = render_csv(generate_table(3));
  CHECK(csv.rfind("stage,label,dim,multiplicity,d3_running\n", 0) == 0);
  CHECK(csv.find("\"osp(5|2) (5/2,0,1)\",\"(1)-(1,1)\",32,1,0") != std::string::npos);
  CHECK(csv.find("\"osp(5|2) (5/2,0,1)\",\"(2)-(0,1)\",12,1,12") != std::string::npos);
}

TEST_CASE("table6 marks exactly the solved frozen rows") {
  auto t = generate_table(6);
  std::multiset<std::string> frozen_parents;
  for (auto& p : t["paths"])
    if (p["frozen"].get<bool>()) frozen_parents.insert(p["cells"][2][0].get<std::string>() + "|" + p["cells"][1][0].get<std::string>());
  // 2-(±2), both copies of 2-0 and both copies of 2-(±1), each listed once per child
  CHECK(frozen_parents.count("2-(±2)|2-2") == 2);
  CHECK(frozen_parents.count("2-0|2-2") == 2);
  CHECK(frozen_parents.count("2-0|2-0") == 2);
  CHECK(frozen_parents.count("2-(±1)|2-1") == 4);
  CHECK(frozen_parents.size() == 10);
  CHECK(t["masks"] == 1);
}

TEST_CASE("label normalisation") {
  CHECK(normalize_pair_label("(1-1)") == "(1)-(1)");
  CHECK(normalize_pair_label("(1,1)") == "(1,1)");
  CHECK(normalize_pair_label("(1) - (0,3)") == "(1)-(0,3)");
  CHECK(strip_spaces(" a b ") == "ab");
}

TEST_CASE("a corrupted fixture is reported cell by cell") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "codonsym-fixtures-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (auto& e : fs::directory_iterator(fixture_dir())) fs::copy(e.path(), dir / e.path().filename());
  Doc t = load_fixture("table6.json");
  t["paths"][0]["cells"][3][1] = 5;
  t["paths"][0]["frozen"] = true;
  std::ofstream(dir / "table6.json") << t.dump();
  ::setenv("CODONSYM_FIXTURES", dir.c_str(), 1);
  auto r = verify_fixture("table6.json");
  ::unsetenv("CODONSYM_FIXTURES");
  CHECK_FALSE(r.ok);
  bool cell = false, marks = false;
  for (auto& d : r.diffs) {
    cell = cell || d.find("(±3)-(±1)[5]") != std::string::npos;
    marks = marks || d.find("marked rows") != std::string::npos;
  }
  CHECK(cell);
  CHECK(marks);
  CHECK(verify_fixture("table6.json").ok);
  fs::remove_all(dir);
}

TEST_CASE("unknown tables are refused") {
  CHECK_THROWS_AS(generate_table(10), ConfigError);
  CHECK_THROWS_AS(chain_table("osp99"), ConfigError);
}
