#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "grassmann/construction.hpp"
#include "grassmann/grading.hpp"
#include "grassmann/spec_io.hpp"

namespace grassmann::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string spec_path;
  std::optional<Index> bound;
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  bool json = false;
  std::uint64_t n = 0;
  std::string polynomial;
  bool exhaustive = false;
  std::vector<std::string> elements;
};

constexpr Index kDefaultBound = 20;
// Products of method C images have long monomials.
constexpr Index kDefaultEpsilonBound = 12;

Index effective_bound(const RunConfig& cfg, const AutomorphismSpec& spec) {
  if (cfg.bound) return *cfg.bound;
  return std::holds_alternative<EpsilonRule>(spec.rule) ? kDefaultEpsilonBound : kDefaultBound;
}

json certificate_json(const AutomorphismSpec& spec) {
  return {{"kind", to_string(spec.certified.kind)}, {"justification", spec.certified.justification}};
}

void print_header(std::ostream& out, const AutomorphismSpec& spec) {
  out << "spec: " << spec.name << " (" << rule_kind(spec) << " rule)\n";
  out << "certificate: " << to_string(spec.certified.kind);
  if (!spec.certified.justification.empty()) out << " - " << spec.certified.justification;
  out << "\n";
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  AutomorphismSpec spec = load_spec_file(cfg.spec_path);
  const Index bound = effective_bound(cfg, spec);
  std::vector<Verdict> results = {check_anticommute(spec, bound), check_involution(spec, bound),
                                  is_canonical_type(spec, bound)};
  bool all_hold = true;
  for (const auto& v : results) all_hold = all_hold && v.holds();
  if (cfg.json) {
    json j{{"spec", spec.name}, {"certificate", certificate_json(spec)}, {"results", json::array()}};
    for (const auto& v : results) j["results"].push_back(to_json(v));
    out << j.dump(2) << "\n";
  } else {
    print_header(out, spec);
    for (const auto& v : results) out << to_string(v) << "\n";
  }
  return all_hold ? kOk : kCounterexample;
}

// Runs check_involution and reports it when it fails.
bool require_involutive(const AutomorphismSpec& spec, Index bound, const RunConfig& cfg, std::ostream& out) {
  Verdict v = check_involution(spec, bound);
  if (v.holds()) return true;
  if (cfg.json) {
    out << json{{"spec", spec.name}, {"results", json::array({to_json(v)})}}.dump(2) << "\n";
  } else {
    out << "spec: " << spec.name << " is not verified involutive\n" << to_string(v) << "\n";
  }
  return false;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  AutomorphismSpec spec = load_spec_file(cfg.spec_path);
  const Index bound = effective_bound(cfg, spec);
  if (!require_involutive(spec, bound, cfg, out)) return kCounterexample;
  TypeReport report = classify(spec, bound);
  if (cfg.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_string(report) << "\n";
  }
  return kOk;
}

int cmd_epsilon(const RunConfig& cfg, std::ostream& out) {
  std::vector<int> values;
  for (std::uint64_t i = 1; i <= cfg.n; ++i) values.push_back(epsilon(i));
  if (cfg.json) {
    out << json{{"check", "epsilon"}, {"n", cfg.n}, {"values", values}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << "epsilon_" << i + 1 << " = " << values[i] << "\n";
  }
  return kOk;
}

int cmd_lemma13(const RunConfig& cfg, std::ostream& out) {
  Verdict v = verify_lemma13(cfg.n);
  out << (cfg.json ? to_json(v).dump(2) : to_string(v)) << "\n";
  return v.holds() ? kOk : kCounterexample;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out) {
  GradedPolynomial p = parse_graded_polynomial(cfg.polynomial);
  AutomorphismSpec spec = load_spec_file(cfg.spec_path);
  const Index bound = effective_bound(cfg, spec);
  if (!require_involutive(spec, bound, cfg, out)) return kCounterexample;
  Verdict v = cfg.exhaustive ? exhaustive_falsify(p, spec, bound, 1)
                             : falsify_identity(p, spec, bound, cfg.trials, cfg.seed);
  if (cfg.json) {
    json j = to_json(v);
    j["polynomial"] = to_string(p);
    j["spec"] = spec.name;
    out << j.dump(2) << "\n";
  } else {
    out << "identity: " << to_string(p) << " on " << spec.name << "\n" << to_string(v) << "\n";
  }
  return v.status == Status::Counterexample ? kCounterexample : kOk;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  AutomorphismSpec spec = load_spec_file(cfg.spec_path);
  std::vector<Element> elements;
  Index needed = cfg.bound.value_or(1);
  for (const auto& text : cfg.elements) {
    elements.push_back(parse_element(text));
    needed = std::max(needed, support_bound(elements.back()));
  }
  if (!require_involutive(spec, needed, cfg, out)) return kCounterexample;
  json j{{"spec", spec.name}, {"bound", needed}, {"components", json::array()}};
  if (!cfg.json) out << "spec: " << spec.name << "\n";
  for (const Element& a : elements) {
    Projection p = project(spec, a);
    if (cfg.json) {
      j["components"].push_back({{"element", to_string(a)}, {"a0", to_string(p.a0)}, {"a1", to_string(p.a1)}});
    } else {
      out << to_string(a) << "\n  degree 0: " << to_string(p.a0) << "\n  degree 1: " << to_string(p.a1) << "\n";
    }
  }
  if (cfg.json) out << j.dump(2) << "\n";
  return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--json", cfg.json, "Emit a JSON report");
}

void add_spec(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--spec", cfg.spec_path, "Automorphism spec file (JSON)")->required();
  cmd->add_option("--bound", cfg.bound, "Largest generator index checked (default 20, 12 for method C)")
      ->check(CLI::Range(Index{1}, Index{100000}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Grassmann algebra automorphism workbench"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "Anticommutation, involution and canonical-type checks");
  add_spec(check, cfg);
  add_common(check, cfg);

  auto* classify_cmd = app.add_subcommand("classify", "Type report: I_beta, fixed-line kernels, verdict");
  add_spec(classify_cmd, cfg);
  add_common(classify_cmd, cfg);

  auto* epsilon_cmd = app.add_subcommand("epsilon", "Table of epsilon_1..epsilon_n");
  epsilon_cmd->add_option("--n,n", cfg.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  add_common(epsilon_cmd, cfg);

  auto* lemma = app.add_subcommand("lemma13", "Check epsilon_1...epsilon_{2n+1} = -epsilon_n for n <= nmax");
  lemma->add_option("--nmax,nmax", cfg.n, "Largest n")->required()->check(CLI::PositiveNumber);
  add_common(lemma, cfg);

  auto* identity = app.add_subcommand("identity", "Search for a substitution falsifying a graded identity");
  add_spec(identity, cfg);
  identity->add_option("--poly,poly", cfg.polynomial, "Graded polynomial, e.g. \"[z1,z2]\"")->required();
  identity->add_option("--trials", cfg.trials, "Random substitutions (default 200)")->check(CLI::PositiveNumber);
  identity->add_option("--seed", cfg.seed, "Random seed (default 0)");
  identity->add_flag("--exhaustive", cfg.exhaustive,
                     "Enumerate all homogeneous values in e_1..e_bound with coefficients in {-1,0,1}");
  add_common(identity, cfg);

  auto* decompose = app.add_subcommand("decompose", "Print the degree-0 and degree-1 components of elements");
  add_spec(decompose, cfg);
  decompose->add_option("elements", cfg.elements, "Elements, e.g. \"e2 + e1e3\"")->required();
  add_common(decompose, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*check) return cmd_check(cfg, out);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*epsilon_cmd) return cmd_epsilon(cfg, out);
    if (*lemma) return cmd_lemma13(cfg, out);
    if (*identity) return cmd_identity(cfg, out);
    if (*decompose) return cmd_decompose(cfg, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    // Includes ConstructionError, reported verbatim.
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace grassmann::cli
