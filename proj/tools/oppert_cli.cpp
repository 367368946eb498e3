// Command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oppert/oppert.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ProblemOptions {
  std::string preset;
  std::string config_path;
  int order = 0;
  std::string format;
  std::string params;
  std::string states;
};

int report(oppert_status status) {
  std::cerr << "error: " << oppert_last_error() << "\n";
  return status == OPPERT_ERR_INTERNAL ? kExitCheckFailed : kExitUsage;
}

void add_problem_options(CLI::App* cmd, ProblemOptions& opts) {
  auto* preset = cmd->add_option("--preset", opts.preset, "Built-in problem: stark or zeeman")
                     ->check(CLI::IsMember({"stark", "zeeman"}));
  auto* config = cmd->add_option("--config", opts.config_path, "Problem configuration file")
                     ->check(CLI::ExistingFile);
  preset->excludes(config);
  cmd->add_option("--order", opts.order, "Maximum perturbation order")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  cmd->add_option("--params", opts.params, "Parameter values, e.g. hbar=1,kappa=5");
  cmd->add_option("--states", opts.states, "States, e.g. 0,1,2 or 1:1,1:-1");
}

// Builds the series described by the options; returns an exit code on failure.
int build_series(const ProblemOptions& opts, oppert_series** series) {
  oppert_config* config = nullptr;
  oppert_status status;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << opts.config_path << "\n";
      return kExitUsage;
    }
    std::ostringstream text;
    text << in.rdbuf();
    status = oppert_config_parse(text.str().c_str(), &config);
    if (status != OPPERT_OK) {
      std::cerr << opts.config_path << ": ";
      return report(status);
    }
  } else if (!opts.preset.empty()) {
    status = oppert_config_from_preset(opts.preset.c_str(), opts.order > 0 ? opts.order : 4, &config);
    if (status != OPPERT_OK) return report(status);
  } else {
    std::cerr << "error: one of --preset or --config is required\n";
    return kExitUsage;
  }

  status = OPPERT_OK;
  if (opts.order > 0) status = oppert_config_set_order(config, opts.order);
  if (status == OPPERT_OK && !opts.format.empty()) status = oppert_config_set_format(config, opts.format.c_str());
  if (status == OPPERT_OK && !opts.params.empty()) status = oppert_config_set_params(config, opts.params.c_str());
  if (status == OPPERT_OK && !opts.states.empty()) status = oppert_config_set_states(config, opts.states.c_str());
  if (status == OPPERT_OK) status = oppert_series_compute(config, series);
  oppert_config_free(config);
  return status == OPPERT_OK ? kExitOk : report(status);
}

int emit(oppert_status status, char* text) {
  if (status != OPPERT_OK) return report(status);
  std::fputs(text, stdout);
  oppert_string_free(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator perturbation theory via superoperator iteration"};
  app.set_version_flag("--version", std::string(oppert_version()));
  app.require_subcommand(1);

  ProblemOptions run_opts;
  auto* run = app.add_subcommand("run", "Compute A_n, W_n, G_n up to the given order");
  add_problem_options(run, run_opts);

  ProblemOptions spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Evaluate perturbed energies for given states");
  add_problem_options(spectrum, spectrum_opts);

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "Run the built-in self-checks");
  verify->add_option("--scope", scope, "all, superops, structure, goldens or oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (run->parsed() || spectrum->parsed()) {
    const bool is_run = run->parsed();
    const ProblemOptions& opts = is_run ? run_opts : spectrum_opts;
    oppert_series* series = nullptr;
    if (int code = build_series(opts, &series); code != kExitOk) return code;
    char* text = nullptr;
    const oppert_status status = is_run ? oppert_series_render(series, nullptr, &text)
                                        : oppert_spectrum_render(series, nullptr, &text);
    const int code = emit(status, text);
    oppert_series_free(series);
    return code;
  }

  int failures = 0;
  char* text = nullptr;
  const oppert_status status = oppert_verify(scope.c_str(), &failures, &text);
  if (status != OPPERT_OK) return report(status);
  std::fputs(text, stdout);
  oppert_string_free(text);
  if (failures > 0) {
    std::cerr << failures << " check(s) failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
