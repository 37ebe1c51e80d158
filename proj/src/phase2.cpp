#include "codonsym/phase2.hpp"

#include <sstream>

namespace codonsym {

SlotState unbroken(int two_s) { return {SlotState::Kind::Unbroken, two_s}; }
SlotState soft(int two_abs_m) { return {SlotState::Kind::Soft, two_abs_m}; }
SlotState strong(int two_m) { return {SlotState::Kind::Strong, two_m}; }

int SlotState::dim() const {
  switch (kind) {
    case Kind::Unbroken: return value + 1;
    case Kind::Soft: return value == 0 ? 1 : 2;
    default: return 1;
  }
}

std::string SlotState::render() const {
  if (kind == Kind::Unbroken || value == 0) return std::to_string(value);
  if (kind == Kind::Soft) return "(±" + std::to_string(value) + ")";
  return value > 0 ? "(+" + std::to_string(value) + ")" : "(-" + std::to_string(-value) + ")";
}

long Multiplet::dim() const {
  long d = 1;
  for (auto& s : slots) d *= s.dim();
  return d;
}

std::string Multiplet::label(const char* sep) const {
  std::string out;
  for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? sep : "") + slots[i].render();
  return out;
}

std::string op_name(OpKind k) {
  switch (k) {
    case OpKind::Soft: return "soft";
    case OpKind::Strong: return "strong";
    default: return "sas";
  }
}

OpKind parse_op_kind(const std::string& s) {
  if (s == "soft") return OpKind::Soft;
  if (s == "strong") return OpKind::Strong;
  if (s == "sas" || s == "strong-after-soft") return OpKind::StrongAfterSoft;
  throw ConfigError("unknown operation '" + s + "' (soft, strong, sas)");
}

long PhaseTwo::count() const {
  long n = 0;
  for (auto& e : entries) n += e.mult;
  return n;
}

long PhaseTwo::total_dim() const {
  long n = 0;
  for (auto& e : entries) n += e.mult * e.dim();
  return n;
}

int PhaseTwo::slot_index(const std::string& name) const {
  for (std::size_t i = 0; i < slot_names.size(); ++i)
    if (slot_names[i] == name) return static_cast<int>(i);
  std::string known;
  for (auto& s : slot_names) known += (known.empty() ? "" : ", ") + s;
  throw ConfigError("no slot '" + name + "' (slots: " + known + ")");
}

std::string PhaseTwo::render_op(const Op& op) const {
  static const char* names[] = {"Soft", "Strong", "StrongAfterSoft"};
  return std::string(names[static_cast<int>(op.kind)]) + "(" + slot_names.at(op.slot) + ")";
}

PhaseTwo to_phase_two(const Distribution& d) {
  if (!d.algebra.all_sl2()) throw ConfigError("phase two needs a sum of sl(2)'s, got " + d.algebra.name());
  PhaseTwo p;
  p.slot_names = d.slot_names;
  for (auto& e : d.entries) {
    Multiplet m;
    for (auto& l : e.labels) m.slots.push_back(unbroken(l[0]));
    m.mult = e.mult;
    m.ancestry = e.ancestry;
    m.ancestry.push_back(e.labels);
    p.entries.push_back(std::move(m));
  }
  return p;
}

std::vector<SlotState> break_slot(const SlotState& s, OpKind k) {
  using K = SlotState::Kind;
  std::vector<SlotState> out;
  switch (k) {
    case OpKind::Soft:
      if (s.kind != K::Unbroken) throw DomainError("soft breaking needs an unbroken slot, got " + s.render());
      for (int m = s.value; m >= 0; m -= 2) out.push_back(soft(m));
      break;
    case OpKind::Strong:
      if (s.kind == K::Soft) return break_slot(s, OpKind::StrongAfterSoft);
      if (s.kind != K::Unbroken) throw DomainError("slot " + s.render() + " is already strongly broken");
      for (int m = s.value; m >= -s.value; m -= 2) out.push_back(strong(m));
      break;
    case OpKind::StrongAfterSoft:
      if (s.kind != K::Soft) throw DomainError("strong-after-soft needs a softly broken slot, got " + s.render());
      out.push_back(strong(s.value));
      if (s.value > 0) out.push_back(strong(-s.value));
      break;
  }
  return out;
}

namespace {

std::vector<Multiplet> break_at(const Multiplet& m, int slot, OpKind k) {
  if (slot < 0 || slot >= static_cast<int>(m.slots.size())) throw DomainError("no slot " + std::to_string(slot));
  std::vector<Multiplet> out;
  for (auto& s : break_slot(m.slots[slot], k)) {
    Multiplet c = m;
    c.slots[slot] = s;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Multiplet> soft_break(const Multiplet& m, int slot) { return break_at(m, slot, OpKind::Soft); }
std::vector<Multiplet> strong_break(const Multiplet& m, int slot) { return break_at(m, slot, OpKind::Strong); }

PhaseTwo apply_op(const PhaseTwo& d, const Op& op, const std::vector<bool>* frozen) {
  PhaseTwo out;
  out.slot_names = d.slot_names;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (frozen && i < frozen->size() && (*frozen)[i]) {
      out.entries.push_back(d.entries[i]);
      continue;
    }
    for (auto& c : break_at(d.entries[i], op.slot, op.kind)) out.entries.push_back(std::move(c));
  }
  return out;
}

std::vector<OpKind> applicable(const PhaseTwo& d, int slot) {
  if (d.entries.empty()) return {};
  auto kind = d.entries[0].slots.at(slot).kind;
  for (auto& e : d.entries)
    if (e.slots[slot].kind != kind) return {};  // mixed after freezing
  switch (kind) {
    case SlotState::Kind::Unbroken: return {OpKind::Soft, OpKind::Strong};
    case SlotState::Kind::Soft: return {OpKind::StrongAfterSoft};
    default: return {};
  }
}

std::vector<Op> parse_plan(const PhaseTwo& d, const std::string& plan) {
  std::vector<Op> ops;
  std::stringstream ss(plan);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto c = item.find(':');
    if (c == std::string::npos) throw ConfigError("plan item '" + item + "' is not op:slot");
    ops.push_back({d.slot_index(item.substr(c + 1)), parse_op_kind(item.substr(0, c))});
  }
  return ops;
}

namespace {

Stats finish(const std::vector<std::pair<long, long>>& dims, bool pairing) {
  Stats s;
  for (auto& [d, k] : dims) s.hist[d] += k;
  for (auto& [d, k] : s.hist) {
    s.n += k;
    if (d % 3 == 0) s.d3 += d * k;
    if (d % 2 == 1) s.odd += k;
    if (d == 1) s.singlets = k;
  }
  s.total_pairing = pairing;
  return s;
}

}  // namespace

Stats stats(const Distribution& d) {
  std::vector<std::pair<long, long>> dims;
  for (auto& e : d.entries) dims.push_back({tuple_dimension(d.algebra, e.labels), e.mult});
  // pairs of equal or mutually conjugate multiplets
  auto m = collapse(d);
  bool pairing = true;
  for (auto& [t, k] : m) {
    auto c = conjugate(d.algebra, t);
    if (c == t) {
      if (k % 2) pairing = false;
    } else {
      auto it = m.find(c);
      if (it == m.end() || it->second != k) pairing = false;
    }
  }
  return finish(dims, pairing);
}

Stats stats(const PhaseTwo& d) {
  std::vector<std::pair<long, long>> dims;
  std::map<std::vector<SlotState>, long> by;
  for (auto& e : d.entries) {
    dims.push_back({e.dim(), e.mult});
    by[e.slots] += e.mult;
  }
  // sl(2) irreps and their broken pieces are self-conjugate
  bool pairing = true;
  for (auto& [s, k] : by)
    if (k % 2) pairing = false;
  return finish(dims, pairing);
}

std::string format_hist(const Histogram& h) {
  std::string s = "{";
  for (auto& [d, k] : h) s += (s.size() > 1 ? "," : "") + std::to_string(d) + ":" + std::to_string(k);
  return s + "}";
}

Couplings couplings_from_vector(const std::vector<Rational>& v) {
  if (v.size() != 8) throw ConfigError("need 8 couplings (H0, lambda, a1, a2, a3, a12, b3, g12)");
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

Rational hamiltonian_eigenvalue(const Multiplet& m, const Couplings& c) {
  if (m.ancestry.size() < 3 || m.ancestry[0].size() != 2 || m.ancestry[0][1].size() != 2 ||
      m.ancestry[1].size() != 3 || m.slots.size() != 2)
    throw DomainError("multiplet lacks the sp(2)+so(5) > sl(2)^3 > sl(2)_12+sl(2) history");
  static const RootSystem b2 = build_root_system(Series::B, 2);
  auto spin = [](int two_s) { return Rational(two_s, 2); };
  auto cas = [](Rational s) { return s * (s + 1); };
  Rational s1 = spin(m.ancestry[1][0][0]), s2 = spin(m.ancestry[1][1][0]), s3 = spin(m.ancestry[1][2][0]);
  Rational s12 = spin(m.ancestry[2][0][0]);
  auto msq = [](const SlotState& s, const char* what) {
    if (s.kind == SlotState::Kind::Unbroken)
      throw DomainError(std::string("L_z term for unbroken slot ") + what + " has no eigenvalue");
    Rational x(s.value, 2);
    return x * x;
  };
  Rational e = c.H0 + c.lambda * casimir2(b2, m.ancestry[0][1]) + c.alpha1 * cas(s1) + c.alpha2 * cas(s2) +
               c.alpha3 * cas(s3) + c.alpha12 * cas(s12);
  if (c.beta3 != Rational(0)) e += c.beta3 * msq(m.slots[1], "3");
  Rational g = cas(s12) - 2;
  if (c.gamma12 != Rational(0) && g != Rational(0)) e += c.gamma12 * g * msq(m.slots[0], "12");
  return e;
}

}  // namespace codonsym
