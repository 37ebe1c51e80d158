#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "codonsym/embed.hpp"

namespace codonsym {

// values are doubled: Unbroken holds 2s, Soft holds 2|m|, Strong holds 2m
struct SlotState {
  enum class Kind { Unbroken, Soft, Strong };
  Kind kind = Kind::Unbroken;
  int value = 0;

  int dim() const;
  std::string render() const;  // "3", "(±3)", "(+3)", "(-3)", "0"
  auto operator<=>(const SlotState&) const = default;
};

SlotState unbroken(int two_s);
SlotState soft(int two_abs_m);
SlotState strong(int two_m);

struct Multiplet {
  std::vector<SlotState> slots;
  long mult = 1;
  std::vector<LabelTuple> ancestry;  // chain history including the chain-end labels

  long dim() const;
  std::string label(const char* sep = " - ") const;
};

enum class OpKind { Soft, Strong, StrongAfterSoft };

struct Op {
  int slot = 0;
  OpKind kind = OpKind::Soft;
  auto operator<=>(const Op&) const = default;
};

std::string op_name(OpKind k);  // "soft", "strong", "sas"
OpKind parse_op_kind(const std::string& s);

struct PhaseTwo {
  std::vector<std::string> slot_names;
  std::vector<Multiplet> entries;

  long count() const;
  long total_dim() const;
  int slot_index(const std::string& name) const;  // throws ConfigError
  std::string render_op(const Op& op) const;      // "Soft(12)"
};

PhaseTwo to_phase_two(const Distribution& d);  // needs every factor to be sl(2)

std::vector<SlotState> break_slot(const SlotState& s, OpKind k);
std::vector<Multiplet> soft_break(const Multiplet& m, int slot);
std::vector<Multiplet> strong_break(const Multiplet& m, int slot);  // Unbroken or Soft
// frozen[i] exempts entry i; only meaningful for a final operation
PhaseTwo apply_op(const PhaseTwo& d, const Op& op, const std::vector<bool>* frozen = nullptr);
// the operation kinds that apply uniformly to a slot
std::vector<OpKind> applicable(const PhaseTwo& d, int slot);
// "soft:3,strong:12" with slot names
std::vector<Op> parse_plan(const PhaseTwo& d, const std::string& plan);

using Histogram = std::map<long, long, std::greater<>>;  // dim -> count, largest first

struct Stats {
  long n = 0;
  long d3 = 0;
  long singlets = 0;
  long odd = 0;
  bool total_pairing = false;
  Histogram hist;
};

Stats stats(const Distribution& d);
Stats stats(const PhaseTwo& d);
std::string format_hist(const Histogram& h);  // "{6:3,4:5,...}"

struct Couplings {
  Rational H0 = 0, lambda = 0, alpha1 = 0, alpha2 = 0, alpha3 = 0, alpha12 = 0, beta3 = 0, gamma12 = 0;
};

Couplings couplings_from_vector(const std::vector<Rational>& v);  // order H0, λ, α1, α2, α3, α12, β3, γ12

// Eigenvalue for a multiplet of the sp(2)+so(5) > sl(2)^3 > sl(2)_12+sl(2)
// chain: ancestry[0] carries the so(5) label, ancestry[1] the three spins.
Rational hamiltonian_eigenvalue(const Multiplet& m, const Couplings& c);

}  // namespace codonsym
