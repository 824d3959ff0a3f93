// Command-line driver: loads Lie-algebra / group / operator specs (builtin or
// JSON files), runs the requested construction or verification, and emits a
// deterministic text or JSON report.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 parse error,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rbhopf/acceptance.hpp"
#include "rbhopf/descendent.hpp"
#include "rbhopf/fixtures.hpp"
#include "rbhopf/json_io.hpp"

namespace {

using namespace rbhopf;

struct Options {
  std::string algebra;
  std::string group;
  std::string op_path;
  std::string g1_csv, g2_csv;
  int split_at = -1;
  std::string eval;
  int max_degree = 3;
  int cap = 8;
  std::string weight = "1";
  std::string format = "text";
  std::string out_path;
};

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("expected comma-separated integers, got '" + s + "'");
    }
  }
  if (out.empty()) throw ParseError("expected comma-separated integers, got '" + s + "'");
  return out;
}

LieAlgebra load_algebra(const std::string& spec) {
  if (spec.empty()) throw ParseError("--algebra is required");
  if (spec == "builtin:sl2") return sl2();
  if (spec.rfind("builtin:", 0) == 0) throw ParseError("unknown builtin algebra '" + spec + "'");
  return lie_from_json(load_json_file(spec));
}

FiniteGroup load_group(const std::string& spec) {
  if (spec.empty()) throw ParseError("--group is required");
  if (spec.rfind("builtin:", 0) == 0) {
    try {
      return builtin_group(spec.substr(8));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return group_from_json(load_json_file(spec));
}

LieOperator load_lie_operator(const std::string& spec, const LieAlgebra& l) {
  if (spec.empty()) throw ParseError("--operator is required");
  if (spec == "builtin:sl2") {
    if (l.dim() != 3) throw ParseError("builtin:sl2 operator needs the sl2 algebra");
    return sl2_standard_operator();
  }
  return lie_operator_from_json(load_json_file(spec), l);
}

// A group-carrier operator file is either a plain map {"image": [...]} or a
// tabulated action {"action": {...}}.
RBOperator<int> load_group_operator(const std::string& spec, const GroupAlgebra& h,
                                    std::optional<GroupMap>* map_out = nullptr) {
  if (spec.empty()) throw ParseError("--operator is required");
  nlohmann::json j = load_json_file(spec);
  if (j.contains("image")) {
    GroupMap m = group_map_from_json(j, h.group());
    if (map_out) *map_out = m;
    Report rep = check_rb_group(h.group(), m);
    if (!rep.ok())
      throw std::domain_error("group map fails the Rota-Baxter identity on " +
                              std::to_string(rep.violations.size()) + " pairs");
    return extend_group_rb(h, m);
  }
  return tabulated_operator_from_json(j, h);
}

struct Output {
  nlohmann::json json = nlohmann::json::object();
  std::vector<Report> reports;
  bool failed = false;

  void add_reports(const std::vector<Report>& rs) {
    reports.insert(reports.end(), rs.begin(), rs.end());
    if (!all_ok(rs)) failed = true;
  }
  void add_report(const Report& r) { add_reports({r}); }
};

int finish(const Options& opt, Output& out, const std::string& command) {
  out.json["command"] = command;
  out.json["ok"] = !out.failed;
  out.json["reports"] = reports_json(out.reports);
  std::string text;
  if (opt.format == "json") {
    text = out.json.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << reports_text(out.reports);
    for (const auto& [key, value] : out.json.items()) {
      if (key == "reports" || key == "command" || key == "ok") continue;
      os << key << ": " << value.dump() << "\n";
    }
    os << (out.failed ? "FAIL" : "OK") << " " << command << "\n";
    text = os.str();
  }
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) {
      std::cerr << "cannot write '" << opt.out_path << "'\n";
      return 2;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return out.failed ? 1 : 0;
}

int cmd_verify_lie(const Options& opt) {
  LieAlgebra l = load_algebra(opt.algebra);
  Output out;
  out.add_report(l.check_lie_axioms());
  return finish(opt, out, "verify-lie");
}

int cmd_verify_rb_lie(const Options& opt) {
  LieAlgebra l = load_algebra(opt.algebra);
  Output out;
  Report jac = l.check_lie_axioms();
  out.add_report(jac);
  if (jac.ok()) {
    LieOperator r = load_lie_operator(opt.op_path, l);
    out.add_report(check_rb_weight(l, r, Rational::from_string(opt.weight)));
  }
  return finish(opt, out, "verify-rb-lie");
}

int cmd_verify_group(const Options& opt) {
  Output out;
  if (opt.group.rfind("builtin:", 0) == 0) {
    FiniteGroup g = load_group(opt.group);
    out.add_report(validate_group_table(g.cayley()));
    if (!opt.op_path.empty()) {
      GroupMap m = group_map_from_json(load_json_file(opt.op_path), g);
      out.add_report(check_rb_group(g, m));
    }
  } else {
    nlohmann::json j = load_json_file(opt.group);
    auto jc = j.at("cayley").get<std::vector<std::vector<int>>>();
    Report table = validate_group_table(jc);
    out.add_report(table);
    if (table.ok() && !opt.op_path.empty()) {
      FiniteGroup g = group_from_json(j);
      GroupMap m = group_map_from_json(load_json_file(opt.op_path), g);
      out.add_report(check_rb_group(g, m));
    }
  }
  return finish(opt, out, "verify-group");
}

int cmd_enumerate(const Options& opt) {
  FiniteGroup g = load_group(opt.group);
  auto ops = enumerate_rb_group(g, opt.cap);
  Output out;
  out.json.update(enumeration_to_json(ops));
  return finish(opt, out, "enumerate-group-rb");
}

int cmd_extend_lie(const Options& opt) {
  LieAlgebra l = load_algebra(opt.algebra);
  UniversalEnveloping uea(l);
  LieOperator r = load_lie_operator(opt.op_path, l);
  Output out;
  Report weight = check_rb_weight(l, r, Rational(1));
  out.add_report(weight);
  if (!weight.ok()) return finish(opt, out, "extend-lie");
  auto b = extend_lie_rb(uea, r);
  auto sample = uea.basis_up_to(opt.max_degree);
  out.add_report(check_rb_hopf(uea, b, sample));
  out.add_report(check_coalgebra_map(uea, b, uea.basis_up_to(opt.max_degree + 1)));
  if (!opt.eval.empty()) {
    std::vector<int> exps = parse_csv_ints(opt.eval);
    if (static_cast<int>(exps.size()) != l.dim())
      throw ParseError("--eval needs one exponent per basis vector");
    PbwMonomial m{{}};
    for (int e : exps) {
      if (e < 0) throw ParseError("--eval exponents must be non-negative");
      m.exps.push_back(static_cast<std::uint32_t>(e));
    }
    nlohmann::json img = nlohmann::json::object();
    for (const auto& [lbl, c] : b.apply(m).sorted_terms()) img[uea.label_string(lbl)] = c.str();
    out.json["eval"] = std::move(img);
  }
  return finish(opt, out, "extend-lie");
}

int cmd_extend_group(const Options& opt) {
  GroupAlgebra h(load_group(opt.group));
  GroupMap m = group_map_from_json(load_json_file(opt.op_path), h.group());
  Output out;
  Report grp = check_rb_group(h.group(), m);
  out.add_report(grp);
  if (!grp.ok()) return finish(opt, out, "extend-group");
  auto b = extend_group_rb(h, m);
  out.add_report(check_rb_hopf(h, b, h.basis()));
  out.json["operator"] = tabulated_operator_to_json(h, b, "group:custom");
  return finish(opt, out, "extend-group");
}

int cmd_verify_rb_hopf(const Options& opt) {
  Output out;
  if (!opt.group.empty()) {
    GroupAlgebra h(load_group(opt.group));
    auto b = load_group_operator(opt.op_path, h);
    out.add_report(check_coalgebra_map(h, b, h.basis()));
    out.add_report(check_rb_hopf(h, b, h.basis()));
  } else {
    LieAlgebra l = load_algebra(opt.algebra);
    UniversalEnveloping uea(l);
    LieOperator r = load_lie_operator(opt.op_path, l);
    auto b = extend_lie_rb(uea, r);
    out.add_report(check_coalgebra_map(uea, b, uea.basis_up_to(opt.max_degree + 1)));
    out.add_report(check_rb_hopf(uea, b, uea.basis_up_to(opt.max_degree)));
  }
  return finish(opt, out, "verify-rb-hopf");
}

int cmd_tilde(const Options& opt) {
  Output out;
  if (!opt.group.empty()) {
    GroupAlgebra h(load_group(opt.group));
    auto b = load_group_operator(opt.op_path, h);
    auto tb = tilde_hopf(h, b);
    out.add_report(check_coalgebra_map(h, tb, h.basis()));
    out.add_report(check_rb_hopf(h, tb, h.basis()));
    out.json["tilde"] = tabulated_operator_to_json(h, tb, "group:custom");
  } else {
    LieAlgebra l = load_algebra(opt.algebra);
    UniversalEnveloping uea(l);
    LieOperator r = load_lie_operator(opt.op_path, l);
    auto tb = tilde_hopf(uea, extend_lie_rb(uea, r));
    out.add_report(check_coalgebra_map(uea, tb, uea.basis_up_to(opt.max_degree + 1)));
    out.add_report(check_rb_hopf(uea, tb, uea.basis_up_to(opt.max_degree)));
    out.json["tilde_restriction"] = lie_operator_to_json(restrict_to_primitives(uea, tb));
  }
  return finish(opt, out, "tilde");
}

int cmd_split(const Options& opt) {
  Output out;
  if (!opt.group.empty()) {
    GroupAlgebra h(load_group(opt.group));
    if (opt.g1_csv.empty() || opt.g2_csv.empty())
      throw ParseError("split on a group needs --g1 and --g2 index subsets");
    auto b = split_rb_hopf(h, parse_csv_ints(opt.g1_csv), parse_csv_ints(opt.g2_csv));
    out.add_report(check_rb_hopf(h, b, h.basis()));
    out.json["operator"] = tabulated_operator_to_json(h, b, "group:custom");
  } else {
    LieAlgebra l = load_algebra(opt.algebra);
    UniversalEnveloping uea(l);
    if (opt.split_at < 0) throw ParseError("split on an enveloping algebra needs --split-at");
    auto b = split_rb_hopf(uea, opt.split_at);
    auto sample = uea.basis_up_to(opt.max_degree);
    out.add_report(check_coalgebra_map(uea, b, sample));
    out.add_report(check_rb_hopf(uea, b, sample));
    nlohmann::json action = nlohmann::json::object();
    for (const auto& m : sample) {
      nlohmann::json img = nlohmann::json::object();
      for (const auto& [lbl, c] : b.apply(m).sorted_terms()) img[uea.label_string(lbl)] = c.str();
      action[uea.label_string(m)] = std::move(img);
    }
    out.json["action"] = std::move(action);
  }
  return finish(opt, out, "split");
}

template <HopfInstance H>
void emit_descendent(Output& out, const H& h, const RBOperator<LabelOf<H>>& b,
                     const std::vector<LabelOf<H>>& sample) {
  DescendentHopf d(h, b);
  out.add_reports(verify_descendent(d, sample));
  out.add_reports(check_b_homomorphism(d, sample));
  nlohmann::json star_table = nlohmann::json::object(), sb_table = nlohmann::json::object();
  for (const auto& x : sample) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& y : sample) {
      nlohmann::json cell = nlohmann::json::object();
      for (const auto& [lbl, c] : d.mul(x, y).sorted_terms()) cell[h.label_string(lbl)] = c.str();
      row[h.label_string(y)] = std::move(cell);
    }
    star_table[h.label_string(x)] = std::move(row);
    nlohmann::json img = nlohmann::json::object();
    for (const auto& [lbl, c] : d.antipode(x).sorted_terms()) img[h.label_string(lbl)] = c.str();
    sb_table[h.label_string(x)] = std::move(img);
  }
  out.json["star"] = std::move(star_table);
  out.json["antipode"] = std::move(sb_table);
}

int cmd_descendent(const Options& opt) {
  Output out;
  if (!opt.group.empty()) {
    GroupAlgebra h(load_group(opt.group));
    auto b = load_group_operator(opt.op_path, h);
    emit_descendent(out, h, b, h.basis());
  } else {
    LieAlgebra l = load_algebra(opt.algebra);
    UniversalEnveloping uea(l);
    LieOperator r = load_lie_operator(opt.op_path, l);
    emit_descendent(out, uea, extend_lie_rb(uea, r), uea.basis_up_to(opt.max_degree));
  }
  return finish(opt, out, "descendent");
}

int cmd_post_lie(const Options& opt) {
  LieAlgebra l = load_algebra(opt.algebra);
  LieOperator r = load_lie_operator(opt.op_path, l);
  Output out;
  Report weight = check_rb_weight(l, r, Rational(1));
  out.add_report(weight);
  if (!weight.ok()) return finish(opt, out, "post-lie");
  PostLieProduct p = post_lie_product(l, r);
  out.add_report(check_post_lie_axioms(l, p));
  nlohmann::json table = nlohmann::json::object();
  for (int i = 0; i < l.dim(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (int j = 0; j < l.dim(); ++j) {
      nlohmann::json cell = nlohmann::json::object();
      for (const auto& [k, c] : p.dot(i, j).sorted_terms()) cell[l.name(k)] = c.str();
      row[l.name(j)] = std::move(cell);
    }
    table[l.name(i)] = std::move(row);
  }
  out.json["dot_table"] = std::move(table);
  // Operator and recursive routes agree on monomial pairs up to max_degree.
  UniversalEnveloping uea(l);
  auto b = extend_lie_rb(uea, r);
  Report agree{"post-lie-oracle-agreement", {}};
  auto sample = uea.basis_up_to(opt.max_degree);
  for (const auto& m : sample)
    for (const auto& n : sample) {
      auto lhs = post_lie_dot(uea, b, LinComb<PbwMonomial>::basis(m),
                              LinComb<PbwMonomial>::basis(n));
      auto rhs = post_lie_dot_recursive(uea, r, LinComb<PbwMonomial>::basis(m),
                                        LinComb<PbwMonomial>::basis(n));
      if (lhs != rhs)
        agree.violations.push_back({{uea.label_string(m), uea.label_string(n)},
                                    render(uea, lhs),
                                    render(uea, rhs)});
    }
  out.add_report(agree);
  return finish(opt, out, "post-lie");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and checks for Rota-Baxter operators on "
               "cocommutative Hopf algebras (group algebras and universal "
               "enveloping algebras)"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opt.out_path, "Write the report to this path");

  auto add_common = [&](CLI::App* sub, bool algebra, bool group, bool oper) {
    if (algebra) sub->add_option("--algebra", opt.algebra, "builtin:sl2 or a JSON spec path");
    if (group) sub->add_option("--group", opt.group, "builtin:<C2..C6|V4|S3|D4|Q8> or a JSON spec path");
    if (oper) sub->add_option("--operator", opt.op_path, "Operator spec path (or builtin:sl2)");
    sub->add_option("--max-degree", opt.max_degree, "Degree cutoff for pairwise checks")
        ->check(CLI::PositiveNumber);
  };

  auto* s_vlie = app.add_subcommand("verify-lie", "Check the Jacobi identity of a Lie algebra spec");
  add_common(s_vlie, true, false, false);
  auto* s_vrb = app.add_subcommand("verify-rb-lie", "Check the weight-lambda identity of a Lie operator");
  add_common(s_vrb, true, false, true);
  s_vrb->add_option("--weight", opt.weight, "Weight lambda (rational, default 1)");
  auto* s_vg = app.add_subcommand("verify-group", "Validate a Cayley table; optionally check a group operator");
  add_common(s_vg, false, true, true);
  auto* s_enum = app.add_subcommand("enumerate-group-rb", "Enumerate all Rota-Baxter operators on a group");
  add_common(s_enum, false, true, false);
  s_enum->add_option("--cap", opt.cap, "Largest group order accepted");
  auto* s_extl = app.add_subcommand("extend-lie", "Extend a weight-1 Lie operator to the enveloping algebra");
  add_common(s_extl, true, false, true);
  s_extl->add_option("--eval", opt.eval, "Evaluate the extension on exponents i,j,...");
  auto* s_extg = app.add_subcommand("extend-group", "Extend a group operator to the group algebra");
  add_common(s_extg, false, true, true);
  auto* s_vh = app.add_subcommand("verify-rb-hopf", "Check the defining identity of a Hopf operator");
  add_common(s_vh, true, true, true);
  auto* s_tilde = app.add_subcommand("tilde", "Build and check the tilde operator");
  add_common(s_tilde, true, true, true);
  auto* s_split = app.add_subcommand("split", "Build and check the split operator of an exact factorization");
  add_common(s_split, true, true, false);
  s_split->add_option("--g1", opt.g1_csv, "First subgroup as element indices");
  s_split->add_option("--g2", opt.g2_csv, "Second subgroup as element indices");
  s_split->add_option("--split-at", opt.split_at, "Generator prefix length spanning the first subalgebra");
  auto* s_desc = app.add_subcommand("descendent", "Build and verify the descendent Hopf algebra");
  add_common(s_desc, true, true, true);
  auto* s_pl = app.add_subcommand("post-lie", "Post-Lie product: table, axioms, both routes");
  add_common(s_pl, true, false, true);
  auto* s_self = app.add_subcommand("selftest", "Run the full acceptance suite on built-in fixtures");
  (void)s_self;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("verify-lie")) return cmd_verify_lie(opt);
    if (app.got_subcommand("verify-rb-lie")) return cmd_verify_rb_lie(opt);
    if (app.got_subcommand("verify-group")) return cmd_verify_group(opt);
    if (app.got_subcommand("enumerate-group-rb")) return cmd_enumerate(opt);
    if (app.got_subcommand("extend-lie")) return cmd_extend_lie(opt);
    if (app.got_subcommand("extend-group")) return cmd_extend_group(opt);
    if (app.got_subcommand("verify-rb-hopf")) return cmd_verify_rb_hopf(opt);
    if (app.got_subcommand("tilde")) return cmd_tilde(opt);
    if (app.got_subcommand("split")) return cmd_split(opt);
    if (app.got_subcommand("descendent")) return cmd_descendent(opt);
    if (app.got_subcommand("post-lie")) return cmd_post_lie(opt);
    if (app.got_subcommand("selftest")) return rbhopf::acceptance::run_and_print(std::cout);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
