#include <cstring>
#include <string>

#include "doctest.h"
#include "quotkit.h"

TEST_CASE("suite runs through opaque handles") {
  qk_config* config = nullptr;
  REQUIRE(qk_config_new("counts", &config) == QK_OK);
  CHECK(qk_config_set_range(config, "r", "2") == QK_OK);
  CHECK(qk_config_set_range(config, "d", "2") == QK_OK);
  CHECK(qk_config_set_threads(config, 2) == QK_OK);
  qk_results* results = nullptr;
  REQUIRE(qk_run_counts(config, &results) == QK_OK);
  REQUIRE(qk_results_count(results) == 1);
  CHECK(std::string(qk_result_expected(results, 0)) == "10");
  CHECK(std::string(qk_result_computed(results, 0)) == "10");
  CHECK(qk_results_all_pass(results) == 1);
  CHECK(std::string(qk_result_csv(results, 0)) == "2,2,counts,10,10,true,0");
  CHECK(std::string(qk_result_json(results, 0, 0)).find("\"elapsed_ms\":0") != std::string::npos);
  CHECK(qk_result_check(results, 5) == nullptr);
  qk_results_free(results);
  qk_config_free(config);
}

TEST_CASE("errors come back as status codes") {
  qk_config* config = nullptr;
  REQUIRE(qk_config_new("nope", &config) == QK_OK);
  qk_results* results = nullptr;
  CHECK(qk_run_suite(config, &results) == QK_BAD_CONFIG);
  CHECK(results == nullptr);
  CHECK(std::string(qk_last_error()).find("nope") != std::string::npos);
  CHECK(qk_config_set_range(config, "r", "5..2") == QK_BAD_CONFIG);
  CHECK(qk_config_set_threads(config, 0) == QK_BAD_CONFIG);
  qk_config_free(config);

  char* text = nullptr;
  CHECK(qk_explain("nonexistent", &text) == QK_UNKNOWN_CHECK);
  CHECK(std::string(qk_status_name(QK_UNKNOWN_CHECK)) == "UnknownCheck");
  CHECK(qk_explain(nullptr, &text) == QK_INVALID_ARGUMENT);
  CHECK(qk_normal_form(2, "e[0]*e[", &text) == QK_PARSE_ERROR);
  CHECK(qk_normal_form(0, "e[0]", &text) == QK_INVALID_ARGUMENT);
  CHECK(qk_run_batch("[1]", 1, &results) == QK_BAD_CONFIG);
}

TEST_CASE("chi, explain and normal forms") {
  qk_results* results = nullptr;
  REQUIRE(qk_chi(2, 2, nullptr, 0, "wedge[1](0)^v*wedge[2](1)", &results) == QK_OK);
  CHECK(std::string(qk_result_computed(results, 0)) == "8");
  qk_results_free(results);
  const int split[] = {1, 0};
  REQUIRE(qk_chi(2, 1, split, 2, "1", &results) == QK_OK);
  CHECK(qk_result_pass(results, 0) == 1);
  qk_results_free(results);

  char* text = nullptr;
  REQUIRE(qk_explain("h-series", &text) == QK_OK);
  CHECK(std::strstr(text, "expand them in opposite powers") != nullptr);
  qk_string_free(text);
  REQUIRE(qk_normal_form(1, "e[0]*e[0] - e[0]*e[0]", &text) == QK_OK);
  CHECK(std::string(text) == "0");
  qk_string_free(text);
  CHECK(qk_suite_count() == 7);
  CHECK(std::string(qk_suite_name(0)) == "pushforward");
  CHECK(qk_suite_name(7) == nullptr);
}
