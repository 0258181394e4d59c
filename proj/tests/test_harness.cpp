#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "monodromy/error.hpp"
#include "monodromy/harness/experiments.hpp"
#include "monodromy/harness/registry.hpp"

using namespace monodromy;
using namespace monodromy::harness;
using nlohmann::json;

namespace {

Report sample_report() {
    Report r;
    r.experiment = "demo";
    r.config = {{"seed", 3}};
    r.add("a", {{"z", {0.5, 0.25}}}, cplx(1.0, 2.0), cplx(1.0, 2.0 + 1e-9), 1e-9, 1e-6);
    r.add("b", {{"z", {0.1, 0.0}}}, cplx(-3.0, 0.0), cplx(-3.5, 0.0), 0.5, 1e-6, "rel1");
    r.add_error("c", {{"k", 2}}, "boom", 1e-4);
    r.finalize();
    r.duration_ms = 12.5;
    return r;
}

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("registry lists every experiment once") {
    auto names = experiment_names();
    const char* want[] = {"eq1-residual",        "multiplicity-superposition", "morphism",
                          "multi-factor-n3",     "fundamental-3-1",            "barstar-cor-3-4",
                          "polylog-monodromy",   "recurrence-algebraic",       "birkhoff-limit",
                          "dn-adic-n2",          "recurrence-detect-suite",    "elliptic-identity",
                          "modular-monodromy",   "hypergeometric-identity",    "euler-integral",
                          "hyp2f1-monodromy",    "fractional-semigroup"};
    REQUIRE(names.size() == std::size(want));
    for (size_t i = 0; i < names.size(); ++i) CHECK(names[i] == want[i]);
}

TEST_CASE("unknown experiment lists the available names") {
    try {
        find_experiment("nope");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownExperiment);
        CHECK(std::string(e.what()).find("eq1-residual") != std::string::npos);
    }
    ExperimentConfig c;
    c.experiment = "nope";
    CHECK_THROWS_AS(run_experiment(c), Error);
}

TEST_CASE("verdict follows the residuals") {
    auto r = sample_report();
    CHECK(r.cases[0].pass);
    CHECK_FALSE(r.cases[1].pass);
    CHECK_FALSE(r.cases[2].pass);
    CHECK_FALSE(r.pass);
    Report ok;
    ok.add("x", json::object(), 1.0, 1.0, 0.0, 0.0);
    ok.add("nan", json::object(), 1.0, 1.0, NAN, 1.0);
    ok.finalize();
    CHECK_FALSE(ok.pass);
}

TEST_CASE("json round trip") {
    auto r = sample_report();
    auto j = r.to_json();
    CHECK(j["cases"][0]["lhs"]["re"] == 1.0);
    CHECK(j["cases"][0]["lhs"]["im"] == 2.0);
    auto back = Report::from_json(json::parse(render_report(r, Format::Json)));
    CHECK(back.to_json() == j);
    CHECK(back.cases.size() == 3);
    CHECK(back.cases[2].error == "boom");
    CHECK_THROWS_AS(Report::from_json(json::parse("{\"cases\": 3}")), Error);
}

TEST_CASE("csv has one row per case") {
    auto r = sample_report();
    std::string csv = render_report(r, Format::Csv);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == r.cases.size() + 1);
    CHECK(csv.rfind("id,lhs_re,lhs_im,rhs_re,rhs_im,residual,tol,pass", 0) == 0);
}

TEST_CASE("human table marks failures") {
    auto r = sample_report();
    std::string h = render_report(r, Format::Human);
    std::istringstream in(h);
    std::string line;
    int marked = 0;
    while (std::getline(in, line))
        if (line.find("FAIL <<<") != std::string::npos) ++marked;
    CHECK(marked == 2);
    CHECK(h.find("verdict: FAIL") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("human") == Format::Human);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("atomic emission") {
    auto dir = std::filesystem::temp_directory_path() / "md_harness_test";
    std::filesystem::create_directories(dir);
    auto p = (dir / "r.json").string();
    emit_report(sample_report(), Format::Json, p);
    CHECK(json::parse(slurp(p))["experiment"] == "demo");
    CHECK_FALSE(std::filesystem::exists(p + ".tmp"));
    CHECK_THROWS_AS(emit_report(sample_report(), Format::Json, (dir / "missing" / "r.json").string()), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config merge and validation") {
    ExperimentConfig c;
    c.experiment = "polylog-monodromy";
    c.merge_json({{"seed", 9}, {"tolerances", {{"residual", 1e-3}}}, {"samples", 2}});
    CHECK(c.seed == 9);
    CHECK(c.samples == 2);
    CHECK(c.tol("residual", 1.0) == 1e-3);
    CHECK(c.tol("other", 0.5) == 0.5);
    CHECK_NOTHROW(c.validate());
    ExperimentConfig d = c;
    d.merge_json(c.to_json());
    CHECK(d.to_json() == c.to_json());
    CHECK_THROWS_AS(c.merge_json(json::array()), Error);
    CHECK_THROWS_AS(c.merge_json({{"seed", "x"}}), Error);
    c.tolerances["residual"] = -1;
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("polylog experiment with defaults passes") {
    ExperimentConfig c;
    c.experiment = "polylog-monodromy";
    auto r = run_experiment(c);
    CHECK(r.pass);
    CHECK(r.cases.size() == 20);
    for (const auto& cs : r.cases) CHECK(cs.residual < 1e-8);
    CHECK(r.config["experiment"] == "polylog-monodromy");
}

TEST_CASE("same seed gives identical inputs and residuals") {
    ExperimentConfig c;
    c.experiment = "eq1-residual";
    c.samples = 3;
    c.seed = 17;
    auto a = run_experiment(c), b = run_experiment(c);
    REQUIRE(a.cases.size() == b.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].inputs.dump() == b.cases[i].inputs.dump());
        CHECK(std::abs(a.cases[i].residual - b.cases[i].residual) <= 1e-12);
    }
    c.seed = 18;
    auto d = run_experiment(c);
    CHECK(d.cases[0].inputs.dump() != a.cases[0].inputs.dump());
}

TEST_CASE("tolerance override changes the verdict") {
    ExperimentConfig c;
    c.experiment = "hyp2f1-monodromy";
    c.samples = 2;
    c.tolerances["residual"] = 0.0;
    auto r = run_experiment(c);
    CHECK_FALSE(r.pass);
}

TEST_CASE("binomial coefficient cache") {
    auto dir = std::filesystem::temp_directory_path() / "md_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ExperimentConfig c;
    c.out = (dir / "report.json").string();
    auto a = cached_binomial(c, 0.5, 100);
    size_t files = std::distance(std::filesystem::directory_iterator(dir), {});
    CHECK(files == 1);
    auto b = cached_binomial(c, 0.5, 100);
    for (size_t n = 0; n < 100; ++n) CHECK(a.a[n] == b.a[n]);
    std::filesystem::remove_all(dir);
}
