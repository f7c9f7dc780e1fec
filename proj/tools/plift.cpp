// plift: lifted constraint checking for model product lines.
//
// Exit codes: 0 ok, 1 violation, 2 usage or input error, 3 solver failure
// (including --oracle disagreement).

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "plift/binding.hpp"
#include "plift/bundle.hpp"
#include "plift/check.hpp"
#include "plift/lifting.hpp"
#include "plift/oracle.hpp"
#include "plift/smt.hpp"
#include "plift/synthetic.hpp"

using namespace plift;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kSolver = 3 };

struct Inputs {
  std::string bundle, metamodel, model, features, presence, constraints;
  std::vector<std::string> names;

  void attach(CLI::App* cmd, bool constraint_flag = true) {
    cmd->add_option("--bundle", bundle, "bundle document");
    cmd->add_option("--metamodel", metamodel, "metamodel file");
    cmd->add_option("--model", model, "model file");
    cmd->add_option("--features", features, "feature model file");
    cmd->add_option("--presence", presence, "presence condition file");
    cmd->add_option("--constraints", constraints, "constraint file");
    if (constraint_flag) cmd->add_option("--constraint", names, "constraint name (repeatable)");
  }

  Bundle load() const {
    if (!bundle.empty()) {
      if (!metamodel.empty() || !model.empty())
        throw Error(ErrorKind::FormatError, "--bundle cannot be combined with --metamodel/--model");
      return load_bundle(std::filesystem::path(bundle));
    }
    return load_bundle(BundleSources{metamodel, model, features, presence, constraints});
  }

  std::vector<const NamedConstraint*> selected(const Bundle& b) const {
    std::vector<const NamedConstraint*> out;
    if (names.empty())
      for (const auto& c : b.constraints) out.push_back(&c);
    for (const auto& n : names) out.push_back(&b.constraint(n));
    return out;
  }

  const NamedConstraint& single(const Bundle& b) const {
    if (names.size() == 1) return b.constraint(names.front());
    if (names.empty() && b.constraints.size() == 1) return b.constraints.front();
    throw Error(ErrorKind::FormatError, "select exactly one constraint with --constraint");
  }
};

json config_json(const Configuration& k) { return json::parse(configuration_to_json(k)); }

int run_check(const Inputs& in, const SolverOptions& solver, bool oracle, const std::string& format) {
  Bundle b = in.load();
  json report = json::array();
  int code = kOk;
  for (const NamedConstraint* c : in.selected(b)) {
    json entry{{"constraint", c->name}};
    Verdict verdict;
    if (oracle) {
      EquivalenceReport r = equivalence_test(b.product_line, c->typed, solver);
      verdict = r.smt;
      entry["oracle"] = verdict_kind(r.oracle);
      if (const auto* s = std::get_if<OracleSatisfied>(&r.oracle)) {
        entry["variants"] = s->count;
        if (s->vacuous()) entry["warning"] = "feature model is unsatisfiable";
      } else {
        entry["oracle_config"] = config_json(std::get<OracleViolation>(r.oracle).config);
      }
      entry["agree"] = r.agree;
      if (!r.agree) {
        entry["script"] = r.script_path;
        code = kSolver;
      }
    } else {
      verdict = check(b.product_line, c->typed, solver);
    }
    entry["verdict"] = verdict_kind(verdict);
    if (const auto* v = std::get_if<Violation>(&verdict)) {
      entry["config"] = config_json(v->config);
      entry["confirmed"] = v->confirmed;
      if (code == kOk) code = kViolation;
    } else if (const auto* u = std::get_if<SolverUnknown>(&verdict)) {
      entry["reason"] = u->reason;
      code = kSolver;
    }
    report.push_back(entry);
  }

  if (format == "json") {
    std::cout << report.dump(2) << "\n";
    return code;
  }
  for (const auto& e : report) {
    std::cout << e["constraint"].get<std::string>() << ": " << e["verdict"].get<std::string>();
    if (e.contains("config")) {
      std::cout << " under";
      for (const auto& [f, v] : e["config"].items()) std::cout << " " << f << "=" << (v.get<bool>() ? 1 : 0);
      std::cout << (e["confirmed"].get<bool>() ? " (confirmed)" : " (NOT confirmed)");
    }
    if (e.contains("reason")) std::cout << " (" << e["reason"].get<std::string>() << ")";
    std::cout << "\n";
    if (e.contains("oracle")) {
      std::cout << "  oracle: " << e["oracle"].get<std::string>();
      if (e.contains("variants")) std::cout << " over " << e["variants"].get<std::size_t>() << " variants";
      if (e.contains("warning")) std::cout << "; warning: " << e["warning"].get<std::string>();
      std::cout << (e["agree"].get<bool>() ? "; agree\n" : "; DISAGREE, script " + e["script"].get<std::string>() + "\n");
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifted constraint checking for model product lines"};
  app.require_subcommand(1);

  Inputs in;
  SolverOptions solver;
  std::string solver_cmd, format = "text", out_path, config_path;
  int timeout = 60;
  bool oracle = false;
  SyntheticOptions synth;

  auto solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--solver", solver_cmd, "solver command (default: $PLIFT_SOLVER or z3 -in)");
    cmd->add_option("--timeout", timeout, "solver timeout in seconds")->check(CLI::PositiveNumber);
  };

  auto* check_cmd = app.add_subcommand("check", "check constraints on all variants");
  in.attach(check_cmd);
  solver_flags(check_cmd);
  check_cmd->add_flag("--oracle", oracle, "cross-check against variant enumeration");
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lift_cmd = app.add_subcommand("lift", "print a lifted constraint");
  in.attach(lift_cmd);

  auto* bind_cmd = app.add_subcommand("bind", "derive the variant for a configuration");
  in.attach(bind_cmd, false);
  bind_cmd->add_option("--config", config_path, "configuration file")->required();
  bind_cmd->add_option("--out", out_path);

  auto* emit_cmd = app.add_subcommand("emit-smt", "write the SMT-LIB script for a constraint");
  in.attach(emit_cmd);
  emit_cmd->add_option("--out", out_path);
  SmtOptions smt;
  std::string lists = "auto";
  emit_cmd->add_flag("--all-slots", smt.all_slots, "emit slot functions the constraint does not use");
  emit_cmd->add_option("--lists", lists, "list encoding")->check(CLI::IsMember({"auto", "concat", "membership"}));
  std::string quantifiers = "auto";
  emit_cmd->add_option("--quantifiers", quantifiers, "quantifier encoding")
      ->check(CLI::IsMember({"auto", "native", "expand"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "list valid configurations");
  in.attach(enum_cmd, false);
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic product-line bundle");
  gen_cmd->add_option("--objects", synth.objects);
  gen_cmd->add_option("--features", synth.features);
  gen_cmd->add_option("--optional", synth.optional_features);
  gen_cmd->add_option("--presence-conditions", synth.presence_conditions);
  gen_cmd->add_option("--machines", synth.machines);
  gen_cmd->add_option("--seed", synth.seed);
  gen_cmd->add_flag("--fault", synth.fault);
  gen_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  solver.command = solver_cmd;
  solver.timeout = std::chrono::seconds(timeout);

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) throw Error(ErrorKind::FormatError, "cannot write " + out_path);
  };

  try {
    if (*check_cmd) return run_check(in, solver, oracle, format);
    if (*lift_cmd) {
      Bundle b = in.load();
      for (const NamedConstraint* c : in.selected(b)) {
        if (in.names.empty() && b.constraints.size() > 1) std::cout << c->name << ": ";
        std::cout << print_lifted(lift(c->typed)) << "\n";
      }
      return kOk;
    }
    if (*bind_cmd) {
      Bundle b = in.load();
      Configuration k = configuration_from_json(read_file(config_path), b.product_line.feature_model);
      emit(model_to_json(bind(b.product_line, k).graph, b.product_line.metamodel));
      return kOk;
    }
    if (*emit_cmd) {
      Bundle b = in.load();
      smt.lists = lists == "concat"       ? ListEncoding::Concat
                  : lists == "membership" ? ListEncoding::Membership
                                          : ListEncoding::Auto;
      smt.quantifiers = quantifiers == "native"   ? QuantifierEncoding::Native
                        : quantifiers == "expand" ? QuantifierEncoding::Expand
                                                  : QuantifierEncoding::Auto;
      emit(emit_smt(b.product_line, lift(in.single(b).typed), smt).text());
      return kOk;
    }
    if (*enum_cmd) {
      Bundle b = in.load();
      auto configs = enumerate_configurations(b.product_line.feature_model);
      if (format == "json") {
        json all = json::array();
        for (const auto& k : configs) all.push_back(config_json(k));
        std::cout << all.dump(2) << "\n";
      } else {
        for (const auto& k : configs) std::cout << k.to_string() << "\n";
      }
      if (configs.empty()) std::cerr << "warning: feature model is unsatisfiable\n";
      return kOk;
    }
    if (*gen_cmd) {
      emit(bundle_to_json(generate_synthetic(synth)));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "plift: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::SolverProcessError:
      case ErrorKind::SolverParseError:
      case ErrorKind::DecodeError:
        return kSolver;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "plift: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
