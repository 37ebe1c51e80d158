#include "codonsym/search.hpp"

namespace codonsym {

namespace {

using V = Violation;

Histogram H(std::initializer_list<std::pair<const long, long>> xs) { return Histogram(xs); }

Published pub(std::string reason, std::vector<V> expect, Histogram profile = {}, long n = -1, long d3 = -1) {
  return {std::move(reason), std::move(expect), std::move(profile), n, d3, false};
}

std::vector<ChainSpec> build() {
  auto E = embed_step;
  auto D = diag_step;
  const char* triplets = "no way to produce exactly two triplets";
  std::vector<ChainSpec> c = {
      // type I, excluded in the first phase
      {"sl21", "sl21", "sl(2|1) > sl(2)", {},
       pub("single sl(2), all multiplets above 6: only singlets or doublets can follow", {V::OnlySingletsOrDoublets})},
      {"sl31", "sl31", "sl(3|1) > sl(3)", {}, pub("total pairing", {V::TotalPairing})},
      {"sl41-a2", "sl41", "sl(4|1) > A3 > A2", {E(0, "A3>A2")},
       pub("10 triplets and 6 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{3, 10}, {1, 6}}))},
      {"sl41-c2-a1a1", "sl41", "sl(4|1) > A3 > C2 > A1+A1", {E(0, "A3>C2"), E(0, "C2>A1+A1")},
       pub("4 triplets and 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{3, 4}, {1, 4}}))},
      {"sl41-c2-a1", "sl41", "sl(4|1) > A3 > C2 > A1", {E(0, "A3>C2"), E(0, "C2>A1")},
       pub("2 septets, 2 quintets, 2 triplets, 2 singlets", {V::TooManyOdd}, H({{7, 2}, {5, 2}, {3, 2}, {1, 2}}))},
      {"sl41-a1a1", "sl41", "sl(4|1) > A3 > A1+A1", {E(0, "A3>A1+A1")},
       pub("2 nonets, 4 triplets, 2 singlets", {V::TooManyOdd}, H({{9, 2}, {3, 4}, {1, 2}}))},
      {"sl61-a4", "sl61", "sl(6|1) > A5 > A4", {E(0, "A5>A4")},
       pub("4 quintets, 4 singlets and total pairing", {V::TotalPairing, V::TooManySinglets},
           H({{5, 4}, {1, 4}}))},
      {"sl61-a3", "sl61", "sl(6|1) > A5 > A3", {E(0, "A5>A3")}, pub("total pairing", {V::TotalPairing})},
      {"sl61-c3", "sl61", "sl(6|1) > A5 > C3", {E(0, "A5>C3")}, pub("4 singlets", {V::TooManySinglets}, H({{1, 4}}))},
      {"sl61-a2", "sl61", "sl(6|1) > A5 > A2", {E(0, "A5>A2")}, pub("total pairing", {V::TotalPairing})},
      {"sl61-a1a3", "sl61", "sl(6|1) > A5 > A1+A3", {E(0, "A5>A1+A3")},
       pub("4 singlets", {V::TooManySinglets}, H({{1, 4}}))},
      {"sl61-a2a2", "sl61", "sl(6|1) > A5 > A2+A2", {E(0, "A5>A2+A2")},
       pub("4 nonets, 8 triplets, 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{9, 4}, {3, 8}, {1, 4}}))},
      {"sl61-a1a2-su2", "sl61", "sl(6|1) > A5 > A1+A2 > A1+A1 (su(3)>su(2))", {E(0, "A5>A1+A2"), E(1, "A2>A1(1)")},
       pub("4 triplets and 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{3, 4}, {1, 4}}))},
      {"sl61-a1a2-so3", "sl61", "sl(6|1) > A5 > A1+A2 > A1+A1 (su(3)>so(3))", {E(0, "A5>A1+A2"), E(1, "A2>A1(2)")},
       pub("2 nonets, 2 quintets, 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{9, 2}, {5, 2}, {1, 4}}))},
      {"sl22b", "sl22b", "sl(2|2) (1,3,1) > sl(2)+sl(2)", {}, pub("too many odd-dimensional multiplets", {V::TooManyOdd})},
      {"sl32-su2", "sl32", "sl(3|2) > A2+A1 > A1+A1 (su(3)>su(2))", {E(0, "A2>A1(1)")},
       pub("4 triplets and 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{3, 4}, {1, 4}}))},
      {"sl32-so3", "sl32", "sl(3|2) > A2+A1 > A1+A1 (su(3)>so(3))", {E(0, "A2>A1(2)")},
       pub("2 nonets, 2 quintets, 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{9, 2}, {5, 2}, {1, 4}}))},
      {"osp24-a1a1", "osp24", "osp(2|4) > C2 > A1+A1", {E(0, "C2>A1+A1")},
       pub("4 triplets and 4 singlets", {V::TooManyOdd, V::TooManySinglets}, H({{3, 4}, {1, 4}}))},
      {"osp24-a1", "osp24", "osp(2|4) > C2 > A1", {E(0, "C2>A1")},
       pub("2 septets, 2 quintets, 2 triplets, 2 singlets", {V::TooManyOdd}, H({{7, 2}, {5, 2}, {3, 2}, {1, 2}}))},
      {"osp26", "osp26", "osp(2|6) > C3", {}, pub("too many singlets", {V::TooManySinglets}, H({{1, 4}}))},
      // second phase
      {"osp32", "osp32", "osp(3|2) > sp(2)+so(3)", {}, pub("d3 = 18 from the start", {V::D3TooSmall}, {}, 3, 18)},
      {"sl22a", "sl22a", "sl(2|2) (3,l2,0) > sl(2)+sl(2)", {}, pub(triplets, {V::TripletInfeasible}, {}, 10, 30)},
      {"osp34-c1", "osp34", "osp(3|4) > sp(4)+so(3) > sl(2)^3", {E(0, "C2>A1+A1")},
       pub(triplets, {V::TripletInfeasible}, {}, 8, 24)},
      {"osp34-c2", "osp34", "osp(3|4) > sp(4)+so(3) > sl(2)+sl(2)", {E(0, "C2>A1")},
       pub(triplets, {V::TripletInfeasible}, {}, 5, 24)},
      {"osp34-c3", "osp34", "osp(3|4) > sp(4)+so(3) > sl(2)^3 > sl(2)_12+sl(2)", {E(0, "C2>A1+A1"), D(0, 1)},
       pub(triplets, {V::TripletInfeasible}, {}, 9, 36)},
      {"osp34-d13", "osp34", "osp(3|4) > sp(4)+so(3) > sl(2)^3 > sl(2)_13+sl(2)", {E(0, "C2>A1+A1"), D(0, 2)},
       pub("d3 already 21", {V::D3TooSmall}, {}, 11, 21)},
      {"osp34-d23", "osp34", "osp(3|4) > sp(4)+so(3) > sl(2)^3 > sl(2)+sl(2)_23", {E(0, "C2>A1+A1"), D(1, 2)},
       pub("d3 already 21", {V::D3TooSmall}, {}, 11, 21)},
      {"osp52-c1", "osp52", "osp(5|2) > sp(2)+so(5) > sl(2)^3", {E(1, "B2>A1+A1")},
       pub("no freezing reaches the code in any option", {V::NoFreezingMatch}, {}, 10, 48)},
      {"osp52-c2", "osp52", "osp(5|2) > sp(2)+so(5) > sl(2)+sl(2)", {E(1, "B2>A1")},
       pub(triplets, {V::TripletInfeasible}, {}, 7, 30)},
      {"osp52-c3", "osp52", "osp(5|2) > sp(2)+so(5) > sl(2)^3 > sl(2)_12+sl(2)", {E(1, "B2>A1+A1"), D(0, 1)},
       {"three freezing schemes reproduce the code", {}, {}, 14, 33, true}},
      {"osp52-d23", "osp52", "osp(5|2) > sp(2)+so(5) > sl(2)^3 > sl(2)+sl(2)_23", {E(1, "B2>A1+A1"), D(1, 2)},
       pub("d3 already 12", {V::D3TooSmall}, {}, 14, 12)},
      {"osp42a-c1", "osp42a", "osp(4|2) (5,0,0) > sl(2)^3", {}, pub(triplets, {V::TripletInfeasible}, {}, 6, 42)},
      {"osp42a-d12", "osp42a", "osp(4|2) (5,0,0) > sl(2)^3 > sl(2)_12+sl(2)", {D(0, 1)},
       pub(triplets, {V::TripletInfeasible}, {}, 10, 36)},
      {"osp42a-d23", "osp42a", "osp(4|2) (5,0,0) > sl(2)^3 > sl(2)+sl(2)_23", {D(1, 2)},
       pub("freezing gives at most 4 quartets", {V::NoFreezingMatch}, {}, 8, 57)},
      {"osp42b-c1", "osp42b", "osp(4|2) (7/2,0,1) > sl(2)^3", {},
       pub("no option of the breaking tree reaches the code", {V::NoFreezingMatch}, {}, 8, 42)},
      {"osp42b-d12", "osp42b", "osp(4|2) (7/2,0,1) > sl(2)^3 > sl(2)_12+sl(2)", {D(0, 1)},
       pub(triplets, {V::TripletInfeasible}, {}, 11, 24)},
      {"osp42b-d13", "osp42b", "osp(4|2) (7/2,0,1) > sl(2)^3 > sl(2)_13+sl(2)", {D(0, 2)},
       pub("1 nonet, 2 quintets, 4 triplets, 1 singlet", {V::TooManyOdd}, H({{9, 1}, {5, 2}, {3, 4}, {1, 1}}), 14)},
  };
  return c;
}

}  // namespace

const std::vector<ChainSpec>& chain_registry() {
  static const std::vector<ChainSpec> reg = build();
  return reg;
}

const ChainSpec& find_chain(const std::string& id) {
  for (auto& c : chain_registry())
    if (c.id == id) return c;
  std::string known;
  for (auto& c : chain_registry()) known += (known.empty() ? "" : ", ") + c.id;
  throw ConfigError("unknown chain id '" + id + "' (known: " + known + ")");
}

const std::vector<std::pair<std::string, std::string>>& omitted_chains() {
  static const std::vector<std::pair<std::string, std::string>> o = {
      {"osp42a-d13", "mirror of osp42a-d12 under exchange of the second and third sl(2)"},
      {"osp42b-d23", "mirror of osp42b-d12 under exchange of the first and third sl(2)"},
  };
  return o;
}

Distribution run_chain(const ChainSpec& c) { return apply_chain(catalog_entry(c.catalog_id), c.steps); }

}  // namespace codonsym
