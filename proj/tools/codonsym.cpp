#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "codonsym/tables.hpp"
#include "codonsym/young.hpp"

using namespace codonsym;

namespace {

void print_distribution(const Distribution& d) {
  std::cout << d.algebra.name() << "  slots";
  for (auto& s : d.slot_names) std::cout << " " << s;
  std::cout << "\n";
  for (auto& e : d.entries) {
    std::cout << "  " << (e.mult > 1 ? std::to_string(e.mult) + " x " : "") << format_tuple(e.labels) << "  d="
              << tuple_dimension(d.algebra, e.labels);
    if (!e.ancestry.empty()) {
      std::cout << "   <-";
      for (auto it = e.ancestry.rbegin(); it != e.ancestry.rend(); ++it) std::cout << " " << format_tuple(*it);
    }
    std::cout << "\n";
  }
  auto s = stats(d);
  std::cout << "n=" << s.n << " d3=" << s.d3 << " singlets=" << s.singlets << " odd=" << s.odd
            << " pairing=" << (s.total_pairing ? "yes" : "no") << " hist=" << format_hist(s.hist) << "\n";
}

void print_phase2(const PhaseTwo& p) {
  for (auto& m : p.entries)
    std::cout << "  " << (m.mult > 1 ? std::to_string(m.mult) + " x " : "") << m.label() << "  d=" << m.dim() << "\n";
  auto s = stats(p);
  std::cout << "n=" << s.n << " d3=" << s.d3 << " singlets=" << s.singlets << " hist=" << format_hist(s.hist)
            << (match_target(p, genetic_code_target()) ? "  MATCHES TARGET" : "") << "\n";
}

// "osp52" -> "osp(5|2)"; anything else is passed through
std::string long_name(const std::string& s) {
  std::smatch m;
  static const std::regex short_form(R"(^(sl|osp)(\d)(\d)$)");
  return std::regex_match(s, m, short_form) ? m[1].str() + "(" + m[2].str() + "|" + m[3].str() + ")" : s;
}

std::vector<int> parse_rows(const std::string& s) {
  std::vector<int> rows;
  for (auto& r : parse_rational_list(s)) {
    if (!is_integral(r)) throw ConfigError("diagram rows must be integers");
    rows.push_back(static_cast<int>(r.numerator()));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codon-symmetry toolkit: superalgebra branching and symmetry-breaking search"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-catalog", "list the codon representations");

  std::string algebra, hw;
  auto* br = app.add_subcommand("branch", "first-step branching to the even subalgebra");
  br->add_option("--algebra", algebra, "e.g. osp52 or osp(5|2)")->required();
  br->add_option("--hw", hw, "Kac-Dynkin labels, e.g. 5/2,0,1 (defaults to the catalog row)");

  std::string chain_id;
  auto* ch = app.add_subcommand("chain", "run a branching chain");
  ch->add_option("--chain-id", chain_id)->required();

  std::string plan;
  auto* p2 = app.add_subcommand("phase2", "apply a phase-two plan to a chain end");
  p2->add_option("--chain-id", chain_id)->required();
  p2->add_option("--plan", plan, "e.g. soft:3,strong:12")->required();

  std::string filter, json_out;
  bool sequential = false;
  auto* se = app.add_subcommand("search", "search all chains for the genetic-code histogram");
  se->add_option("--algebra", filter, "restrict to a catalog id, chain id or algebra");
  se->add_option("--json", json_out, "write the report as JSON to this file ('-' for stdout)");
  se->add_flag("--sequential", sequential, "do not run chains in parallel");

  auto* reg = app.add_subcommand("registry", "print the embedding registry as JSON");

  std::string kind, rows;
  int m = 0, n = 0, theta0 = 0;
  auto* yo = app.add_subcommand("young", "Young (super)diagrams and Dynkin labels");
  yo->add_option("--rows", rows, "diagram rows, e.g. 3,1");
  yo->add_option("--sl", m, "sl(m) labels from the rows (m = rank + 1)");
  yo->add_option("--super-m", m);
  yo->add_option("--super-n", n);
  yo->add_option("--theta0", theta0);
  yo->add_option("--osp", kind, "osp42 or osp52; needs --hw");
  yo->add_option("--hw", hw);

  int table_id = 0;
  std::string format = "text";
  std::size_t mask = 0;
  auto* tb = app.add_subcommand("tables", "regenerate a table");
  tb->add_option("--id", table_id)->required()->check(CLI::Range(1, 9));
  tb->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  tb->add_option("--mask", mask, "which freezing mask to mark (phase-two tables)");

  auto* vg = app.add_subcommand("verify-golden", "compare regenerated tables with the fixtures");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (auto& e : catalog()) {
        std::cout << e.id << "  " << e.algebra << " " << format_hw(e.hw) << "  dim "
                  << typical_dimension(build_super(e.algebra), e.hw);
        if (e.table) std::cout << "  table " << e.table;
        if (!e.alias_of.empty()) std::cout << "  alias of " << e.alias_of << " (" << e.relation << ")";
        std::cout << "\n";
      }
    } else if (br->parsed()) {
      std::string kind_name = algebra;
      KacHighestWeight w;
      bool found = false;
      for (auto& e : catalog())
        if (e.id == algebra && hw.empty()) {
          kind_name = e.algebra;
          w = e.hw;
          found = true;
        }
      if (!hw.empty()) w = parse_rational_list(hw);
      else if (!found) throw ConfigError("--hw is required unless --algebra names a catalog row");
      auto sa = build_super(long_name(kind_name));
      std::cout << sa.name << " " << format_hw(w) << (is_typical(sa, w) ? " typical" : " atypical") << "\n";
      print_distribution(start_distribution(sa, w));
    } else if (ch->parsed()) {
      auto& c = find_chain(chain_id);
      std::cout << c.id << "  " << c.notation << "\n";
      print_distribution(run_chain(c));
    } else if (p2->parsed()) {
      PhaseTwo d = to_phase_two(run_chain(find_chain(chain_id)));
      for (auto& op : parse_plan(d, plan)) {
        d = apply_op(d, op);
        std::cout << "after " << d.render_op(op) << "\n";
        print_phase2(d);
      }
    } else if (se->parsed()) {
      auto r = full_search(filter, !sequential);
      if (json_out == "-") {
        std::cout << report_to_json(r) << "\n";
      } else {
        if (!json_out.empty()) std::ofstream(json_out) << report_to_json(r) << "\n";
        std::cout << text_summary(r);
      }
    } else if (reg->parsed()) {
      std::cout << export_registry() << "\n";
    } else if (yo->parsed()) {
      if (!kind.empty()) {
        if (hw.empty()) throw ConfigError("--osp needs --hw");
        auto s = osp_superdiagram_from_labels(long_name(kind), parse_rational_list(hw));
        std::cout << render(s) << "\ncolumns " << join_rationals(s.columns) << "\n";
      } else {
        if (rows.empty()) throw ConfigError("--rows is required");
        if (n > 0) {
          auto s = make_superdiagram(parse_rows(rows));
          std::cout << render(s) << "\nlabels " << format_hw(sl_super_labels_from_diagram(s, m, n, theta0)) << "\n";
        } else {
          auto d = make_diagram(parse_rows(rows));
          std::cout << render(d) << "\n";
          if (m > 0) std::cout << "labels " << format_labels(sl_labels_from_diagram(d, m)) << "\n";
        }
      }
    } else if (tb->parsed()) {
      Doc d = generate_table(table_id);
      if (mask && d["kind"] == "phase2") {
        Doc e = {{"id", table_id}};
        Doc t = phase2_table(d["chain_id"], d["plan"], mask);
        for (auto& [k, v] : t.items()) e[k] = v;
        d = e;
      }
      if (format == "json") std::cout << d.dump(1) << "\n";
      else if (format == "csv") std::cout << render_csv(d);
      else std::cout << render_text(d);
    } else if (vg->parsed()) {
      bool ok = true;
      for (auto& r : verify_all()) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.fixture << "\n";
        for (auto& x : r.diffs) std::cout << "     " << x << "\n";
        ok = ok && r.ok;
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
