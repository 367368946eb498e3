#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "oppert/oppert.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  oppert_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("preset series renders through the C API") {
  oppert_config* config = nullptr;
  REQUIRE(oppert_config_from_preset("stark", 4, &config) == OPPERT_OK);
  oppert_series* series = nullptr;
  REQUIRE(oppert_series_compute(config, &series) == OPPERT_OK);
  oppert_config_free(config);

  CHECK(oppert_series_max_order(series) == 4);
  int zero = -1;
  CHECK(oppert_series_order_is_zero(series, 3, &zero) == OPPERT_OK);
  CHECK(zero == 1);
  CHECK(oppert_series_order_is_zero(series, 2, &zero) == OPPERT_OK);
  CHECK(zero == 0);
  CHECK(oppert_series_order_is_zero(series, 9, &zero) == OPPERT_ERR_ARGUMENT);

  char* text = nullptr;
  REQUIRE(oppert_series_render(series, "text", &text) == OPPERT_OK);
  CHECK(take(text).find("W = −(1/2)·e²·𝓔²·m⁻¹·ω₀⁻²·1") != std::string::npos);
  CHECK(oppert_series_render(series, "yaml", &text) == OPPERT_ERR_PARSE);
  CHECK(std::string(oppert_last_error()).find("yaml") != std::string::npos);
  oppert_series_free(series);
}

TEST_CASE("config text, params and states") {
  oppert_config* config = nullptr;
  REQUIRE(oppert_config_parse("preset = zeeman\nformat = json\n", &config) == OPPERT_OK);
  CHECK(std::string(oppert_config_format(config)) == "json");
  CHECK(oppert_config_set_params(config, "hbar=1,kappa=5,u=1,eps_R=0,alpha_over_r2=0") == OPPERT_OK);
  CHECK(oppert_config_set_params(config, "u=3") == OPPERT_ERR_VALIDATION);
  CHECK(oppert_config_set_states(config, "1:1,1:-1") == OPPERT_OK);
  CHECK(oppert_config_set_states(config, "1:5") != OPPERT_OK);
  CHECK(oppert_config_set_order(config, 0) == OPPERT_ERR_VALIDATION);

  oppert_series* series = nullptr;
  REQUIRE(oppert_series_compute(config, &series) == OPPERT_OK);
  char* table = nullptr;
  REQUIRE(oppert_spectrum_render(series, "text", &table) == OPPERT_OK);
  const std::string t = take(table);
  CHECK(t.find("l=1,m=1") != std::string::npos);
  CHECK(t.find("5.099") != std::string::npos);
  oppert_series_free(series);
  oppert_config_free(config);
}

TEST_CASE("errors map to status codes") {
  oppert_config* config = nullptr;
  CHECK(oppert_config_parse("preset = stark\nbogus = 1\n", &config) == OPPERT_ERR_PARSE);
  CHECK(std::string(oppert_last_error()).find("line 2") != std::string::npos);
  CHECK(oppert_config_parse("algebra = su2\ngap = hbar*kappa\nv = 1*L+\n", &config) == OPPERT_ERR_VALIDATION);
  CHECK(oppert_config_from_preset("helium", 2, &config) == OPPERT_ERR_VALIDATION);
  CHECK(oppert_config_from_preset(nullptr, 2, &config) == OPPERT_ERR_ARGUMENT);

  REQUIRE(oppert_config_from_preset("zeeman", 2, &config) == OPPERT_OK);
  REQUIRE(oppert_config_set_states(config, "1:0") == OPPERT_OK);
  oppert_series* series = nullptr;
  REQUIRE(oppert_series_compute(config, &series) == OPPERT_OK);
  char* table = nullptr;
  CHECK(oppert_spectrum_render(series, nullptr, &table) == OPPERT_ERR_MISSING_VALUE);
  oppert_series_free(series);
  oppert_config_free(config);
}

TEST_CASE("verify through the C API") {
  int failures = -1;
  char* report = nullptr;
  REQUIRE(oppert_verify("goldens", &failures, &report) == OPPERT_OK);
  CHECK(failures == 0);
  CHECK(take(report).find("0 failed") != std::string::npos);
  CHECK(oppert_verify("nope", &failures, &report) == OPPERT_ERR_VALIDATION);
}
