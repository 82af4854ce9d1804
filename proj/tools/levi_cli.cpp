#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levi/doubled.hpp"
#include "levi/monoid.hpp"
#include "levi/oracle.hpp"
#include "levi/realform.hpp"
#include "levi/verify.hpp"
#include "levi/younga.hpp"

using json = nlohmann::ordered_json;
using namespace levi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

ThetaSet parse_theta(const std::string& s) {
  ThetaSet th;
  size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) th.insert(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return th;
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  if (format == "tsv") {
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      (void)k;
      if (!first) std::cout << "\t";
      first = false;
      if (v.is_string())
        std::cout << v.get<std::string>();
      else
        std::cout << v.dump();
    }
    std::cout << "\n";
    return;
  }
  for (const auto& [k, v] : j.items())
    std::cout << k << ": "
              << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

// Plain-language membership rule for a real form, mirroring the closed-form
// classifier.
std::string membership_rule(const RealForm& f) {
  switch (f.kind) {
    case FormKind::sl_R:
    case FormKind::sp2_R:
    case FormKind::cx:
      return "every radical dominant lambda";
    case FormKind::su: {
      int p = f.p, n = f.p + f.q;
      if (2 * p == n) return "every radical dominant lambda";
      return "lambda_" + std::to_string(n - 2 * p) + " >= 0 >= lambda_" +
             std::to_string(2 * p + 1);
    }
    case FormKind::sl_H: {
      int m = f.p;
      return "lambda_2 + ... + lambda_" + std::to_string(m + 1) +
             " >= 0 >= lambda_" + std::to_string(m) + " + ... + lambda_" +
             std::to_string(2 * m - 1);
    }
    case FormKind::so_odd: {
      int r = complexified_type(f).rank, p = f.p;
      return "lambda_" + std::to_string(2 * p + 1) +
             " = 0, and lambda_" + std::to_string(2 * r - 2 * p + 1) +
             " > 0 whenever |lambda| is odd";
    }
    case FormKind::sp2:
      if (f.p == 1 && f.q == 1) return "lambda_2 even";
      return "lambda_" + std::to_string(4 * f.p + 1) + " = 0";
    case FormKind::so_even:
      return "lambda_" + std::to_string(2 * f.p + 1) + " = 0";
    case FormKind::so_star:
      if (f.q == 3) return "|lambda_3| <= lambda_1 - lambda_2";
      return "every radical dominant lambda";
    case FormKind::exceptional:
      if (is_compact_form(f)) return "lambda = 0";
      return "every radical dominant lambda";
  }
  return "?";
}

int cmd_classify(const RealForm& form, const Weight& lambda, bool oracle, bool rule,
                 long long budget, const std::string& format) {
  json out;
  out["form"] = form.str();
  out["lambda"] = weight_str(lambda);
  if (rule) out["rule"] = membership_rule(form);
  auto verdict = m_table_membership(form, lambda);
  out["in_table"] = verdict.in_table;
  if (verdict.failed_condition)
    out["failed_condition"] = *verdict.failed_condition;
  LieType t = complexified_type(form);
  bool budget_hit = false;
  if (t.fam == Fam::A || t.fam == Fam::B || t.fam == Fam::C || t.fam == Fam::D) {
    try {
      ThetaSet theta = theta_of(form);
      long long count = t.fam == Fam::A
                            ? count_null_dominant_a(lambda, t.rank + 1, theta, budget)
                            : count_invariants_bcd(lambda, t, theta, budget);
      out["dim_tableaux"] = count;
    } catch (const BudgetExceeded&) {
      out["dim_tableaux_skipped"] = true;
      budget_hit = true;
    }
  }
  if (oracle)
    out["dim_oracle"] = dim_invariants_oracle(lambda, t, theta_of(form));
  emit(out, format);
  return budget_hit ? kExitBudget : kExitOk;
}

int cmd_enumerate(const std::string& type_str, int n_opt, const std::string& shape_str,
                  bool null, bool balanced, bool dominant, bool codominant, int sign,
                  const ThetaSet& theta, long long budget, const std::string& format) {
  if (type_str == "A" || type_str.rfind("A", 0) == 0) {
    int n = type_str == "A" ? n_opt : parse_type(type_str).rank + 1;
    if (n < 2) throw CLI::ValidationError("--n", "type A needs a symbol count >= 2");
    Diagram shape = Diagram::parse(shape_str, n);
    FillingFilters filt;
    filt.balanced = balanced || null;
    filt.codominant = codominant || !theta.empty();
    filt.dominant = dominant;
    auto fillings = enumerate_fillings_a(shape, n, filt, theta, budget);
    for (const auto& f : fillings) {
      json j;
      j["rows"] = f.rows;
      emit(j, format);
    }
    return kExitOk;
  }
  LieType g = parse_type(type_str);
  Diagram shape = Diagram::parse(shape_str, g.rank);
  DoubledFilters filt;
  filt.null = null;
  filt.sign = sign;
  filt.codominant = codominant || !theta.empty();
  auto tabs = enumerate_doubled(shape, g, filt, theta, budget);
  for (const auto& t : tabs) {
    json j;
    j["columns"] = json::array();
    for (const auto& c : t.columns) j["columns"].push_back(c);
    TableauReport rep = evaluate_tableau(t, g, theta);
    j["weight"] = weight_str(rep.weight);
    j["sign"] = rep.sign;
    emit(j, format);
  }
  return kExitOk;
}

int cmd_character(const std::string& type_str, int n_opt, const Weight& lambda,
                  long long budget, const std::string& format) {
  std::map<Weight, long long> table;
  if (type_str == "A") {
    if (n_opt < 2) throw CLI::ValidationError("--n", "type A needs a symbol count >= 2");
    table = character_a(lambda, n_opt, budget);
  } else {
    LieType g = parse_type(type_str);
    table = g.fam == Fam::A ? character_a(lambda, g.rank + 1, budget)
                            : character_bcd(lambda, g, budget);
  }
  for (const auto& [w, m] : table) {
    json j;
    j["weight"] = weight_str(w);
    j["mult"] = m;
    emit(j, format);
  }
  return kExitOk;
}

int cmd_invariant_dim(const std::string& form_str, const std::string& type_str,
                      const ThetaSet& theta_opt, const Weight& lambda, bool oracle,
                      long long budget, const std::string& format) {
  LieType t;
  ThetaSet theta;
  json out;
  if (!form_str.empty()) {
    RealForm f = parse_form(form_str);
    t = complexified_type(f);
    theta = theta_of(f);
    out["form"] = f.str();
  } else {
    t = parse_type(type_str);
    theta = theta_opt;
    out["type"] = t.str();
  }
  out["theta"] = theta_str(theta);
  out["lambda"] = weight_str(lambda);
  bool combinatorial = t.fam == Fam::A || t.fam == Fam::B || t.fam == Fam::C ||
                       t.fam == Fam::D;
  bool budget_hit = false;
  if (combinatorial) {
    try {
      long long count = t.fam == Fam::A
                            ? count_null_dominant_a(lambda, t.rank + 1, theta, budget)
                            : count_invariants_bcd(lambda, t, theta, budget);
      out["dim_tableaux"] = count;
    } catch (const BudgetExceeded&) {
      out["dim_tableaux_skipped"] = true;
      budget_hit = true;
    }
  }
  if (oracle || !combinatorial)
    out["dim_oracle"] = dim_invariants_oracle(lambda, t, theta);
  emit(out, format);
  return budget_hit && !oracle && combinatorial ? kExitBudget : kExitOk;
}

int cmd_primitive_basis(const std::string& type_str, const std::string& format) {
  LieType t = parse_type(type_str);
  auto basis = primitive_basis(t);
  json out;
  out["type"] = t.str();
  out["count"] = basis.elements.size();
  out["elements"] = json::array();
  for (const auto& w : basis.elements) out["elements"].push_back(weight_str(w));
  emit(out, format);
  return kExitOk;
}

int report_and_exit(const SweepReport& rep) {
  for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
  for (const auto& s : rep.skipped) std::cout << "SKIP: " << s << "\n";
  std::cout << "checks=" << rep.checks << " failures=" << rep.failures.size()
            << " skipped=" << rep.skipped.size() << "\n";
  if (!rep.failures.empty()) return kExitVerifyFail;
  if (!rep.skipped.empty()) return kExitBudget;
  return kExitOk;
}

int cmd_verify(const std::string& scope, const std::string& type_str, int rmax,
               int lmax, int kmax, bool oracle, long long budget, int jobs) {
  if (scope == "form-sweep")
    return report_and_exit(verify_form_sweep(rmax, lmax, oracle, budget, jobs));
  if (scope == "character") {
    std::vector<std::pair<LieType, int>> suite;
    if (!type_str.empty()) {
      LieType t = parse_type(type_str);
      suite.push_back({t, lmax});
    } else {
      suite = {{{Fam::A, 1}, 6}, {{Fam::A, 2}, 6}, {{Fam::B, 2}, 3},
               {{Fam::B, 3}, 3}, {{Fam::C, 2}, 3}, {{Fam::C, 3}, 3},
               {{Fam::D, 3}, 3}, {{Fam::D, 4}, 3}};
    }
    return report_and_exit(verify_characters(suite, budget));
  }
  if (scope == "admissible") return report_and_exit(verify_admissible(rmax));
  if (scope == "families") return report_and_exit(verify_families(kmax));
  if (scope == "primitive-basis") {
    if (type_str.empty())
      throw CLI::ValidationError("--type", "primitive-basis verification needs a type");
    return report_and_exit(verify_primitive_basis(parse_type(type_str)));
  }
  throw CLI::ValidationError("scope", "unknown verification scope: " + scope);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi-invariant decision tool for classical simple real Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();

  std::string form_str, type_str, lambda_str, shape_str, theta_str_opt, scope;
  int n_opt = 0, sign = 2, rmax = 3, lmax = 2, kmax = 4, jobs = 1;
  long long budget = 64;
  bool oracle = false, rule = false, null = false, balanced = false;
  bool dominant = false, codominant = false;

  auto* classify = app.add_subcommand("classify",
                                      "Decide membership of a weight for a real form");
  std::string form_pos, lambda_pos;
  classify->add_option("form_arg", form_pos, "Real form, e.g. su(1,2)");
  classify->add_option("lambda_arg", lambda_pos, "Weight coordinates, e.g. 1,0,-1");
  classify->add_option("--form", form_str, "Real form");
  classify->add_option("--lambda", lambda_str, "Weight coordinates");
  classify->add_flag("--oracle", oracle, "Also compute the Freudenthal dimension");
  classify->add_flag("--rule", rule, "Print the evaluated membership rule");
  classify->add_option("--budget", budget, "Box budget for the tableau counters");

  auto* enumerate = app.add_subcommand("enumerate", "List tableaux of a shape");
  enumerate->add_option("--type", type_str, "Lie type, e.g. B2, or A with --n")
      ->required();
  enumerate->add_option("--n", n_opt, "Symbol count for type A");
  enumerate->add_option("--shape", shape_str, "Diagram row lengths")->required();
  enumerate->add_flag("--null", null, "Weight-zero tableaux only");
  enumerate->add_flag("--balanced", balanced, "Balanced fillings only (type A)");
  enumerate->add_flag("--dominant", dominant, "Dominant fillings only (type A)");
  enumerate->add_flag("--codominant", codominant, "Codominant tableaux only");
  enumerate->add_option("--sign", sign, "Sign filter for B/C/D (-1, 0, 1)");
  enumerate->add_option("--theta", theta_str_opt, "Simple root indices, e.g. 1,2");
  enumerate->add_option("--budget", budget, "Box budget");

  auto* character = app.add_subcommand("character", "Character as a weight multiset");
  character->add_option("--type", type_str, "Lie type")->required();
  character->add_option("--n", n_opt, "Symbol count for type A");
  character->add_option("--lambda", lambda_str, "Highest weight")->required();
  character->add_option("--budget", budget, "Box budget");

  auto* invdim = app.add_subcommand("invariant-dim",
                                    "Dimension of the invariant subspace");
  invdim->add_option("--form", form_str, "Real form");
  invdim->add_option("--type", type_str, "Lie type (with --theta)");
  invdim->add_option("--theta", theta_str_opt, "Simple root indices");
  invdim->add_option("--lambda", lambda_str, "Highest weight")->required();
  invdim->add_flag("--oracle", oracle, "Also compute the Freudenthal dimension");
  invdim->add_option("--budget", budget, "Box budget");

  auto* primbasis = app.add_subcommand("primitive-basis",
                                       "Primitive radical dominant weights");
  primbasis->add_option("--type", type_str, "Lie type")->required();

  auto* verify = app.add_subcommand("verify", "Run an invariant sweep");
  verify->add_option("scope", scope,
                     "form-sweep | character | admissible | families | "
                     "primitive-basis")
      ->required();
  verify->add_option("--type", type_str, "Restrict to one type where applicable");
  verify->add_option("--rmax", rmax, "Rank bound")->capture_default_str();
  verify->add_option("--lmax", lmax, "Weight bound")->capture_default_str();
  verify->add_option("--kmax", kmax, "Family parameter bound")->capture_default_str();
  verify->add_flag("--oracle", oracle, "Cross-check against Freudenthal");
  verify->add_option("--budget", budget, "Box budget");
  verify->add_option("--jobs", jobs, "Worker count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ThetaSet theta = parse_theta(theta_str_opt);
    if (classify->parsed()) {
      if (form_str.empty()) form_str = form_pos;
      if (lambda_str.empty()) lambda_str = lambda_pos;
      if (form_str.empty() || lambda_str.empty())
        throw std::invalid_argument("classify needs a form and a weight");
      return cmd_classify(parse_form(form_str), parse_weight(lambda_str), oracle, rule,
                          budget, format);
    }
    if (enumerate->parsed())
      return cmd_enumerate(type_str, n_opt, shape_str, null, balanced, dominant,
                           codominant, sign, theta, budget, format);
    if (character->parsed())
      return cmd_character(type_str, n_opt, parse_weight(lambda_str), budget, format);
    if (invdim->parsed()) {
      if (form_str.empty() && type_str.empty())
        throw std::invalid_argument("invariant-dim needs --form or --type");
      return cmd_invariant_dim(form_str, type_str, theta, parse_weight(lambda_str),
                               oracle, budget, format);
    }
    if (primbasis->parsed()) return cmd_primitive_basis(type_str, format);
    if (verify->parsed())
      return cmd_verify(scope, type_str, rmax, lmax, kmax, oracle, budget, jobs);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
