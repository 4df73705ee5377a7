/*
   Copyright 2026 The steenrod authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// steenrod: command-line front end for the mod 2 Steenrod algebra engine.
//
// Exit codes: 0 success, 1 a verification reported failures, 2 parse or
// usage error, 3 normalization step budget exceeded.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "steenrod/steenrod.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace steenrod;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;
constexpr int kBudgetExceeded = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json words_json(const AdemElement& e) {
  auto arr = json::array();
  for (const auto& w : e) arr.push_back(w.exponents());
  return arr;
}

GradedModule resolve_module(const std::string& spec) {
  try {
    return parse_module_spec(spec);
  } catch (const ParseError& builtin_error) {
    if (std::filesystem::exists(spec)) return load_module_file(spec);
    throw UsageError("'" + spec + "' is neither a builtin module (" + builtin_error.what() +
                     ") nor a readable file");
  }
}

int run_normalize(const std::string& expr, std::size_t budget, bool as_json) {
  const auto input = parse_sq(expr);
  const auto nf = normalize(input, NormalizeOptions{budget});
  if (as_json) {
    emit({{"command", "normalize"},
          {"input", expr},
          {"normal_form", to_string(nf)},
          {"words", words_json(nf)}});
  } else {
    std::cout << to_string(nf) << '\n';
  }
  return kOk;
}

int run_basis(std::uint32_t degree, bool as_json) {
  const auto basis = admissible_basis(degree);
  if (as_json) {
    auto arr = json::array();
    for (const auto& w : basis) arr.push_back(to_string(w));
    emit({{"command", "basis"}, {"degree", degree}, {"size", basis.size()}, {"basis", arr}});
  } else {
    for (const auto& w : basis) std::cout << to_string(w) << '\n';
  }
  return kOk;
}

int run_act(const std::string& op, const std::string& on, std::optional<std::uint32_t> vars, bool as_json) {
  const auto e = parse_sq(op);
  const auto p = parse_poly(on);
  if (vars && max_variable(p) > *vars)
    throw UsageError("polynomial uses t" + std::to_string(max_variable(p)) + " but --vars is " +
                     std::to_string(*vars));
  const auto result = act(e, p);
  if (as_json) {
    emit({{"command", "act"},
          {"op", to_string(e)},
          {"on", to_string(p)},
          {"vars", vars ? json(*vars) : json(nullptr)},
          {"result", to_string(result)}});
  } else {
    std::cout << to_string(result) << '\n';
  }
  return kOk;
}

int run_total_square(const std::string& on, const std::string& var_name, bool as_json) {
  const auto p = parse_poly(on);
  if (!is_homogeneous(p)) throw UsageError("total-square needs a homogeneous polynomial");
  if (var_name.empty()) throw UsageError("--var must be nonempty");
  const Var u = max_variable(p) + 1;
  for (Var v = 1; v < u; ++v)
    if (default_variable_name(v) == var_name)
      throw UsageError("--var " + var_name + " clashes with a variable of the input");
  const VariableNamer namer = [u, var_name](Var v) { return v == u ? var_name : default_variable_name(v); };

  const auto total = total_sq(p, u);
  const std::uint32_t m = p.is_zero() ? 0 : static_cast<std::uint32_t>(*homogeneous_degree(p));
  if (as_json) {
    auto coeffs = json::array();
    for (std::uint32_t i = 0; i <= m; ++i)
      coeffs.push_back({{"i", i}, {"power", m - i}, {"sq", to_string(extract_square(total, u, m, i))}});
    emit({{"command", "total-square"},
          {"on", to_string(p)},
          {"var", var_name},
          {"degree", m},
          {"total", to_string(total, namer)},
          {"coefficients", coeffs}});
  } else {
    std::cout << to_string(total, namer) << '\n';
  }
  return kOk;
}

int run_derive(std::uint32_t m, bool as_json) {
  if (m < 1) throw UsageError("derive-adem needs --degree >= 1");
  const auto rels = derive_adem_relations_with_witnesses(m);
  bool all_vanish = true;
  auto arr = json::array();
  for (const auto& r : rels) {
    const auto nf = normalize(r.relation);
    const auto nf_m = normalize_on_degree(r.relation, m);
    all_vanish = all_vanish && nf_m.is_zero();
    if (as_json) {
      arr.push_back({{"coefficient_of", to_string(r.witness, derivation_variable_name)},
                     {"relation", to_string(r.relation)},
                     {"degree", r.relation.begin()->degree()},
                     {"normal_form", to_string(nf)},
                     {"normal_form_on_degree", to_string(nf_m)},
                     {"stable", nf.is_zero()}});
    } else {
      std::cout << to_string(r.relation) << " = 0   [coefficient of "
                << to_string(r.witness, derivation_variable_name) << "; normal form " << to_string(nf);
      if (!nf.is_zero()) std::cout << ", vanishing on degree " << m << " by excess";
      std::cout << "]\n";
    }
  }
  if (as_json)
    emit({{"command", "derive-adem"}, {"degree", m}, {"count", rels.size()}, {"relations", arr},
          {"all_vanish_on_degree", all_vanish}});
  else
    std::cout << rels.size() << " relations on classes of degree " << m << '\n';
  return all_vanish ? kOk : kVerificationFailed;
}

int run_verify(const std::string& spec, std::uint32_t max_degree, bool as_json) {
  const auto M = resolve_module(spec);
  const auto rep = verify_axioms(M, max_degree);
  if (as_json) {
    json checks = json::object();
    for (const auto& [axiom, n] : rep.checks) checks[axiom] = n;
    auto fails = json::array();
    for (const auto& f : rep.failures) fails.push_back({{"axiom", f.axiom}, {"detail", f.detail}});
    emit({{"command", "verify"},
          {"module", rep.module},
          {"max_degree", rep.max_degree},
          {"passed", rep.passed()},
          {"checks", checks},
          {"failures", fails}});
  } else {
    for (const auto& [axiom, n] : rep.checks) std::cout << axiom << ": " << n << " checks\n";
    for (const auto& f : rep.failures) std::cout << "FAIL " << f.axiom << ": " << f.detail << '\n';
    std::cout << rep.module << " up to degree " << max_degree << ": "
              << (rep.passed() ? "all axioms hold" : std::to_string(rep.failures.size()) + " failures") << '\n';
  }
  return rep.passed() ? kOk : kVerificationFailed;
}

int run_faithful(std::uint32_t d, bool as_json) {
  const auto rank = faithful_rank(d);
  const auto size = admissible_basis(d).size();
  if (as_json)
    emit({{"command", "faithful"}, {"degree", d}, {"rank", rank}, {"basis_size", size}, {"faithful", rank == size}});
  else
    std::cout << "degree " << d << ": rank " << rank << " of " << size << " admissible words"
              << (rank == size ? " (independent)" : " (dependent)") << '\n';
  return rank == size ? kOk : kVerificationFailed;
}

json matrix_json(const F2Matrix& m) {
  auto rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).is_one() ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const F2Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + std::string(m.at(r, c).is_one() ? "1" : "0");
  }
  return s + "]";
}

int run_distinguish(bool as_json) {
  const auto r = distinguish_susp_cp2();
  if (as_json) {
    emit({{"command", "distinguish-pi4"},
          {"spaces",
           json::array({{{"module", r.first_name},
                         {"h3", r.first_h3},
                         {"h5", r.first_h5},
                         {"sq2_matrix", matrix_json(r.first_matrix)},
                         {"rank", r.first_rank}},
                        {{"module", r.second_name},
                         {"h3", r.second_h3},
                         {"h5", r.second_h5},
                         {"sq2_matrix", matrix_json(r.second_matrix)},
                         {"rank", r.second_rank}}})},
          {"distinct", r.distinct},
          {"conclusion", r.conclusion}});
  } else {
    std::cout << r.first_name << ": dim H3 = " << r.first_h3 << ", dim H5 = " << r.first_h5
              << ", Sq2 = " << matrix_text(r.first_matrix) << ", rank " << r.first_rank << '\n';
    std::cout << r.second_name << ": dim H3 = " << r.second_h3 << ", dim H5 = " << r.second_h5
              << ", Sq2 = " << matrix_text(r.second_matrix) << ", rank " << r.second_rank << '\n';
    for (const auto& line : r.conclusion) std::cout << line << '\n';
  }
  return r.distinct ? kOk : kVerificationFailed;
}

int run_export(const std::string& spec) {
  std::cout << write_module(resolve_module(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mod 2 Steenrod algebra: Adem normalization, Cartan action, module verification"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string expr, op, on, var_name = "u", module_spec;
  std::uint32_t degree = 0;
  std::size_t budget = NormalizeOptions{}.step_budget;
  std::optional<std::uint32_t> vars;

  auto* normalize_cmd = app.add_subcommand("normalize", "Reduce an expression to admissible form");
  normalize_cmd->add_option("expr", expr, "Expression such as \"Sq2 Sq2 + Sq4\"")->required();
  normalize_cmd->add_option("--budget", budget, "Maximum number of Adem rewrites");

  auto* basis_cmd = app.add_subcommand("basis", "List the admissible basis in one degree");
  basis_cmd->add_option("--degree", degree)->required();

  auto* act_cmd = app.add_subcommand("act", "Apply an operation to a polynomial in F2[t1..tK]");
  act_cmd->add_option("--op", op)->required();
  act_cmd->add_option("--on", on)->required();
  act_cmd->add_option("--vars", vars, "Number of variables K");

  auto* total_cmd = app.add_subcommand("total-square", "Total square sum_i Sq^i(p) u^(m-i)");
  total_cmd->add_option("--on", on)->required();
  total_cmd->add_option("--var", var_name, "Name of the fresh variable");

  auto* derive_cmd = app.add_subcommand("derive-adem", "Derive relations from the symmetry of iterated total squares");
  derive_cmd->add_option("--degree", degree, "Degree of the generic class")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the square axioms on a module");
  verify_cmd->add_option("--module", module_spec, "Builtin (s3, rp8, cp2, wedge(a,b), susp(a)) or file")->required();
  verify_cmd->add_option("--max-degree", degree)->required();

  auto* faithful_cmd = app.add_subcommand("faithful", "Rank of the admissible basis acting on t1...tD");
  faithful_cmd->add_option("--degree", degree)->required();

  auto* pi4_cmd = app.add_subcommand("distinguish-pi4", "Separate susp(CP^2) from S^5 v S^3 by Sq^2");

  auto* export_cmd = app.add_subcommand("export-module", "Write a module-definition file to stdout");
  export_cmd->add_option("--module", module_spec)->required();

  for (auto* cmd : {normalize_cmd, basis_cmd, act_cmd, total_cmd, derive_cmd, verify_cmd, faithful_cmd, pi4_cmd})
    cmd->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*normalize_cmd) return run_normalize(expr, budget, as_json);
    if (*basis_cmd) return run_basis(degree, as_json);
    if (*act_cmd) return run_act(op, on, vars, as_json);
    if (*total_cmd) return run_total_square(on, var_name, as_json);
    if (*derive_cmd) return run_derive(degree, as_json);
    if (*verify_cmd) return run_verify(module_spec, degree, as_json);
    if (*faithful_cmd) return run_faithful(degree, as_json);
    if (*pi4_cmd) return run_distinguish(as_json);
    if (*export_cmd) return run_export(module_spec);
  } catch (const StepBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << '\n';
    return kUsageError;
  } catch (const ModuleFormatError& e) {
    std::cerr << "module error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
