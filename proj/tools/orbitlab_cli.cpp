// orbitlab: validate, run and inspect orbit-averaging experiments.
//
//   orbitlab validate --config exp.json
//   orbitlab run      --config exp.json [--out DIR] [--seed N] [--budget N] [--threads N]
//   orbitlab oracle   --config exp.json
//   orbitlab report   --out DIR
//
// Exit codes: 0 success, 2 config error, 3 budget exceeded, 4 invariant
// violation (certificate breach or oracle disagreement).

#include <CLI11.hpp>
#include <iostream>

#include "orbitlab/errors.hpp"
#include "orbitlab/expcli/config.hpp"
#include "orbitlab/expcli/record.hpp"
#include "orbitlab/expcli/runner.hpp"

namespace ex = orbitlab::expcli;

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<int> threads;
  bool json = false;
};

void add_common(CLI::App* cmd, Options& o, bool with_overrides) {
  cmd->add_option("--config", o.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  if (!with_overrides) return;
  cmd->add_option("--out", o.out, "output directory (overrides output_dir)");
  cmd->add_option("--seed", o.seed, "seed (overrides the config)");
  cmd->add_option("--budget", o.budget, "element budget (overrides budget.max_elements)")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
}

ex::Json load(const Options& o) {
  ex::Overrides ov;
  ov.seed = o.seed;
  ov.budget = o.budget;
  ov.threads = o.threads;
  if (!o.out.empty()) ov.output_dir = o.out;
  return ex::apply_overrides(ex::load_json(o.config), ov);
}

int cmd_validate(const Options& o) {
  const auto doc = load(o);
  const auto diags = ex::validate(doc);
  if (o.json) {
    ex::Json out = ex::Json::array();
    for (const auto& d : diags) out.push_back({{"severity", ex::to_string(d.severity)}, {"path", d.path}, {"message", d.message}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& d : diags)
      std::cout << ex::to_string(d.severity) << ' ' << (d.path.empty() ? "/" : d.path) << ": " << d.message << '\n';
    std::cout << (ex::has_errors(diags) ? "invalid" : "valid") << '\n';
  }
  return ex::has_errors(diags) ? ex::exit_config : ex::exit_ok;
}

int cmd_run(const Options& o) {
  const auto cfg = ex::parse_config(load(o));
  const auto rec = ex::run(cfg);
  ex::write_record(rec, cfg.output_dir);
  std::cout << ex::report(cfg.output_dir);
  if (rec.status == "budget_exceeded") return ex::exit_budget;
  if (rec.status == "invariant_violation") return ex::exit_invariant;
  return ex::exit_ok;
}

int cmd_oracle(const Options& o) {
  const auto cfg = ex::parse_config(load(o));
  const auto result = ex::run_oracles(cfg);
  std::cout << result.dump(2) << '\n';
  return result.at("all_agree").get<bool>() ? ex::exit_ok : ex::exit_invariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitlab: exact orbit averages of lattice and free-group actions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ORBITLAB_VERSION);
  Options o;
  auto* validate = app.add_subcommand("validate", "check a config and predict element counts");
  add_common(validate, o, true);
  validate->add_flag("--json", o.json, "machine-readable diagnostics");
  auto* run = app.add_subcommand("run", "run an experiment and write its record");
  add_common(run, o, true);
  auto* oracle = app.add_subcommand("oracle", "run the brute-force cross-checks for a config");
  add_common(oracle, o, true);
  auto* report = app.add_subcommand("report", "summarize a record directory");
  report->add_option("--out,dir", o.out, "record directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ex::exit_config;
  }
  try {
    if (*validate) return cmd_validate(o);
    if (*run) return cmd_run(o);
    if (*oracle) return cmd_oracle(o);
    std::cout << ex::report(o.out);
    return ex::exit_ok;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ex::exit_code_for(e);
  }
}
