#pragma once

#include <string>
#include <vector>

#include "codonsym/search.hpp"
#include "json.hpp"

namespace codonsym {

using Doc = nlohmann::ordered_json;

// Documents use the fixture layout: kind "first-step" (tables 1-3),
// "chain" (4, 5, 9) or "phase2" (6-8).
Doc generate_table(int id);
Doc chain_table(const std::string& chain_id);
// mask_index picks among the freezing masks of the final operation
Doc phase2_table(const std::string& chain_id, const std::string& plan, std::size_t mask_index = 0);

std::string render_text(const Doc& d);
std::string render_csv(const Doc& d);  // stage,label,dim,multiplicity,d3_running

std::string fixture_dir();  // $CODONSYM_FIXTURES or the in-repo data directory
Doc load_fixture(const std::string& file);

struct GoldenResult {
  std::string fixture;
  bool ok = true;
  std::vector<std::string> diffs;
};

GoldenResult verify_fixture(const std::string& file);
std::vector<GoldenResult> verify_all();

std::string strip_spaces(std::string s);
// "(2-0)" -> "(2)-(0)"; other labels unchanged
std::string normalize_pair_label(const std::string& s);

}  // namespace codonsym
