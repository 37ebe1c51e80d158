#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "codonsym/phase2.hpp"

namespace codonsym {

enum class Violation {
  TotalPairing,
  TooManySinglets,
  TooManyOdd,
  D3TooSmall,
  OnlySingletsOrDoublets,
  TripletInfeasible,
  NoFreezingMatch,
};

std::string violation_name(Violation v);
Violation parse_violation(const std::string& s);

// phase 1: pairing, singlets, odd; phase 2 adds d3 >= 24
std::vector<Violation> prune(const Stats& s, int phase);

const Histogram& genetic_code_target();  // {6:3,4:5,3:2,2:9,1:2}
bool match_target(const Histogram& h, const Histogram& target);
bool match_target(const PhaseTwo& d, const Histogram& target);

// the stated outcome for a chain; checked against, never used to decide
struct Published {
  std::string reason;
  std::vector<Violation> expect;
  Histogram profile;  // stated counts for some dimensions
  long n = -1, d3 = -1;
  bool survives = false;
};

struct ChainSpec {
  std::string id;
  std::string catalog_id;
  std::string notation;
  std::vector<Step> steps;
  Published published;
};

const std::vector<ChainSpec>& chain_registry();
const ChainSpec& find_chain(const std::string& id);
// chains left out of the registry because a symmetry maps them onto a listed one
const std::vector<std::pair<std::string, std::string>>& omitted_chains();

Distribution run_chain(const ChainSpec& c);

// Phase-two search

struct FreezeGroup {
  std::vector<SlotState> slots;
  std::string label;
  long count = 0;
  long dim = 0;
  bool fixed = false;  // dim > 6, or the operation does nothing to it
  bool operator==(const FreezeGroup&) const = default;
};

struct FreezingSolution {
  std::vector<FreezeGroup> groups;
  std::vector<std::vector<long>> masks;  // frozen count per group
};

FreezingSolution solve_freezing(const PhaseTwo& before_last, const Op& final_op, const Histogram& target);
// expand a per-group mask into per-entry flags, freezing the first entries of each group
std::vector<bool> expand_mask(const PhaseTwo& d, const FreezingSolution& s, const std::vector<long>& mask);

struct Node {
  std::vector<Op> plan;
  const PhaseTwo* dist = nullptr;
  Stats stats;
  std::vector<Violation> violations;
};

// depth-first over uniform operation sequences; prefixes that are permutations
// of an already visited one are skipped; children of pruned nodes are not visited
void enumerate_phase2(const PhaseTwo& start, const std::function<void(const Node&)>& visit);

struct Scheme {
  std::vector<std::string> prefix;  // rendered ops, "Soft(3)"
  std::string final_op;
  long subspaces = 0;  // after the final op without freezing
  std::vector<FreezeGroup> groups;
  std::vector<std::vector<long>> masks;
  bool operator==(const Scheme&) const = default;
};

struct NearMiss {
  std::vector<std::string> plan;
  long n = 0;
  Histogram hist;
  bool operator==(const NearMiss&) const = default;
};

struct TripletYield {
  std::string label;
  long mult = 0;
  std::set<long> yields;  // triplets this multiplet can produce under uniform breaking
  bool operator==(const TripletYield&) const = default;
};

struct ChainVerdict {
  std::string chain_id, catalog_id, algebra, notation;
  std::vector<std::string> slot_names;
  long end_n = 0, end_d3 = 0, end_singlets = 0, end_odd = 0;
  bool end_pairing = false;
  Histogram end_hist;
  std::vector<Violation> violations;
  std::string published_reason;
  std::set<long> uniform_triplets;
  std::vector<TripletYield> triplet_yields;
  std::vector<Scheme> schemes;
  std::vector<NearMiss> near_misses;
  std::vector<Scheme> audit_schemes;  // matches the triplet argument rules out

  bool survives() const { return violations.empty() && !schemes.empty(); }
  bool operator==(const ChainVerdict&) const = default;
};

struct SearchReport {
  Histogram target;
  std::vector<ChainVerdict> chains;
  bool operator==(const SearchReport&) const = default;
};

std::set<long> uniform_triplets(const PhaseTwo& d);
std::vector<TripletYield> triplet_yields(const PhaseTwo& d);

struct ChainSearch {
  std::vector<Scheme> schemes;
  std::vector<NearMiss> near_misses;
};
ChainSearch search_phase2(const PhaseTwo& start, const Histogram& target);

ChainVerdict evaluate_chain(const ChainSpec& c, const Histogram& target);
// filter matches a catalog id, an algebra name or a chain id; empty = all
SearchReport full_search(const std::string& filter = "", bool parallel = true);

std::string report_to_json(const SearchReport& r);
SearchReport report_from_json(const std::string& text);
std::string text_summary(const SearchReport& r);

}  // namespace codonsym
