#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "monodromy/monodromy.h"

TEST_CASE("c api: experiment listing") {
    CHECK(md_experiment_count() == 17);
    CHECK(std::string(md_experiment_name(0)) == "eq1-residual");
    CHECK(md_experiment_name(100) == nullptr);
    CHECK(std::strlen(md_experiment_description(0)) > 0);
}

TEST_CASE("c api: unknown experiment") {
    md_config* c = nullptr;
    REQUIRE(md_config_new("nope", &c) == MD_OK);
    md_report* r = nullptr;
    CHECK(md_run(c, &r) == MD_UNKNOWN_EXPERIMENT);
    CHECK(r == nullptr);
    CHECK(std::string(md_last_error()).find("polylog-monodromy") != std::string::npos);
    CHECK(std::string(md_status_name(MD_UNKNOWN_EXPERIMENT)) == "unknown-experiment");
    md_config_free(c);
}

TEST_CASE("c api: run and render") {
    md_config* c = nullptr;
    REQUIRE(md_config_new("polylog-monodromy", &c) == MD_OK);
    CHECK(md_config_set_samples(c, 2) == MD_OK);
    CHECK(md_config_set_samples(c, 0) == MD_INVALID_ARGUMENT);
    CHECK(md_config_set_tol(c, "residual", 1e-8) == MD_OK);
    CHECK(md_config_merge_json(c, "{\"seed\": 4}") == MD_OK);
    CHECK(md_config_merge_json(c, "{oops") == MD_PARSE);
    md_report* r = nullptr;
    REQUIRE(md_run(c, &r) == MD_OK);
    CHECK(md_report_pass(r) == 1);
    CHECK(md_report_case_count(r) == 8);
    CHECK(md_report_failed_count(r) == 0);
    const char* text = nullptr;
    REQUIRE(md_report_render(r, MD_FORMAT_JSON, &text) == MD_OK);
    auto j = nlohmann::json::parse(text);
    CHECK(j["experiment"] == "polylog-monodromy");
    CHECK(j["config"]["seed"] == 4);
    CHECK(md_report_render(r, static_cast<md_format>(7), &text) == MD_INVALID_ARGUMENT);
    md_report_free(r);
    md_config_free(c);
}

TEST_CASE("c api: null handles") {
    CHECK(md_config_new("x", nullptr) == MD_INVALID_ARGUMENT);
    CHECK(md_config_set_seed(nullptr, 1) == MD_INVALID_ARGUMENT);
    CHECK(md_run(nullptr, nullptr) == MD_INVALID_ARGUMENT);
    CHECK(md_report_pass(nullptr) == 0);
    md_report_free(nullptr);
    md_series_free(nullptr);
}

TEST_CASE("c api: series") {
    md_series *a = nullptr, *h = nullptr;
    REQUIRE(md_series_binomial({0.5, 0.0}, 64, &a) == MD_OK);
    REQUIRE(md_series_hadamard(a, a, &h) == MD_OK);
    CHECK(md_series_size(h) == 64);
    md_complex c2;
    REQUIRE(md_series_coeff(h, 2, &c2) == MD_OK);
    CHECK(std::abs(c2.re - 9.0 / 64) < 1e-15);
    CHECK(md_series_coeff(h, 64, &c2) == MD_INVALID_ARGUMENT);
    md_complex v;
    REQUIRE(md_series_eval(a, {0.25, 0.0}, &v) == MD_OK);
    CHECK(std::abs(v.re - 1.0 / std::sqrt(0.75)) < 1e-12);
    CHECK(md_series_eval(a, {1.5, 0.0}, &v) == MD_OUT_OF_DISK);
    md_series_free(a);
    md_series_free(h);
}

TEST_CASE("c api: scalars") {
    md_complex g;
    REQUIRE(md_gamma({5.0, 0.0}, &g) == MD_OK);
    CHECK(std::abs(g.re - 24.0) < 1e-12);
    md_complex f;
    REQUIRE(md_hyp2f1({1, 0}, {1, 0}, {2, 0}, {0.5, 0}, &f) == MD_OK);
    CHECK(std::abs(f.re - 2 * std::log(2.0)) < 1e-14);
    md_complex l;
    REQUIRE(md_polylog(1, {0.5, 0}, &l) == MD_OK);
    CHECK(std::abs(l.re - std::log(2.0)) < 1e-15);
    double k;
    REQUIRE(md_elliptic_k_norm(0.0, &k) == MD_OK);
    CHECK(std::abs(k - 1.0) < 1e-15);
    CHECK(md_elliptic_k_norm(2.0, &k) != MD_OK);
    CHECK(std::strlen(md_last_error()) > 0);
}
