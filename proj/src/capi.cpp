#include "oppert/oppert.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "oppert/commands.h"
#include "oppert/config.h"
#include "oppert/errors.h"
#include "oppert/verify.h"

struct oppert_config {
  oppert::ProblemConfig config;
};

struct oppert_series {
  oppert::ProblemConfig config;
  oppert::PerturbationProblem problem;
  oppert::SeriesResult result;
};

namespace {

thread_local std::string last_error;

oppert_status fail(oppert_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
oppert_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return OPPERT_OK;
  } catch (const oppert::ParseError& e) {
    return fail(OPPERT_ERR_PARSE, e.what());
  } catch (const oppert::MissingValue& e) {
    return fail(OPPERT_ERR_MISSING_VALUE, e.what());
  } catch (const oppert::ValidationError& e) {
    return fail(OPPERT_ERR_VALIDATION, e.what());
  } catch (const oppert::AlgebraMismatch& e) {
    return fail(OPPERT_ERR_ALGEBRA, e.what());
  } catch (const std::exception& e) {
    return fail(OPPERT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(OPPERT_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

oppert::OutputFormat pick_format(const oppert_series* series, const char* format) {
  return format ? oppert::parse_format(format) : series->config.format;
}

}  // namespace

extern "C" {

const char* oppert_version(void) { return "1.0.0"; }

const char* oppert_last_error(void) { return last_error.c_str(); }

void oppert_string_free(char* s) { std::free(s); }

oppert_status oppert_config_from_preset(const char* name, int order, oppert_config** out) {
  if (!name || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new oppert_config{oppert::preset_config(name, order)}; });
}

oppert_status oppert_config_parse(const char* text, oppert_config** out) {
  if (!text || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new oppert_config{oppert::parse_config(text)}; });
}

void oppert_config_free(oppert_config* config) { delete config; }

oppert_status oppert_config_set_order(oppert_config* config, int order) {
  if (!config) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  if (order < 1) return fail(OPPERT_ERR_VALIDATION, "order must be >= 1");
  config->config.max_order = order;
  last_error.clear();
  return OPPERT_OK;
}

oppert_status oppert_config_set_format(oppert_config* config, const char* format) {
  if (!config || !format) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] { config->config.format = oppert::parse_format(format); });
}

oppert_status oppert_config_set_params(oppert_config* config, const char* params) {
  if (!config || !params) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    oppert::ParamValues merged = config->config.values;
    for (const auto& [name, value] : oppert::parse_param_values(params)) merged[name] = value;
    oppert::check_param_values(merged);
    config->config.values = std::move(merged);
  });
}

oppert_status oppert_config_set_states(oppert_config* config, const char* states) {
  if (!config || !states) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    oppert::ProblemConfig trial = config->config;
    trial.states_text = states;
    trial.states();
    config->config = std::move(trial);
  });
}

const char* oppert_config_format(const oppert_config* config) {
  if (!config) return "text";
  switch (config->config.format) {
    case oppert::OutputFormat::Json: return "json";
    case oppert::OutputFormat::Latex: return "latex";
    default: return "text";
  }
}

oppert_status oppert_series_compute(const oppert_config* config, oppert_series** out) {
  if (!config || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    oppert::PerturbationProblem problem = config->config.problem();
    oppert::SeriesResult result = oppert::iterate(problem);
    *out = new oppert_series{config->config, std::move(problem), std::move(result)};
  });
}

void oppert_series_free(oppert_series* series) { delete series; }

int oppert_series_max_order(const oppert_series* series) {
  return series ? series->problem.max_order : 0;
}

oppert_status oppert_series_order_is_zero(const oppert_series* series, int order, int* out) {
  if (!series || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  if (order < 1 || order > series->problem.max_order) {
    return fail(OPPERT_ERR_ARGUMENT, "order out of range");
  }
  *out = series->result.orders[static_cast<std::size_t>(order - 1)].a.is_zero() ? 1 : 0;
  last_error.clear();
  return OPPERT_OK;
}

oppert_status oppert_series_render(const oppert_series* series, const char* format, char** out) {
  if (!series || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(oppert::render_run(series->problem, series->result, pick_format(series, format)));
  });
}

oppert_status oppert_spectrum_render(const oppert_series* series, const char* format, char** out) {
  if (!series || !out) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(oppert::render_spectrum(series->problem, series->result,
                                               series->config.states(), series->config.values,
                                               pick_format(series, format)));
  });
}

oppert_status oppert_verify(const char* scope, int* failures, char** report) {
  if (!scope || !failures || !report) return fail(OPPERT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    oppert::VerifyReport r = oppert::run_verify(scope);
    *failures = r.failures();
    *report = copy_string(r.render());
  });
}

}  // extern "C"
