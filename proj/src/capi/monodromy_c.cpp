#include "monodromy/monodromy.h"

#include <string>

#include "monodromy/error.hpp"
#include "monodromy/germs/coeff_csv.hpp"
#include "monodromy/germs/series.hpp"
#include "monodromy/harness/registry.hpp"
#include "monodromy/numerics/gamma.hpp"
#include "monodromy/zoo/elliptic.hpp"
#include "monodromy/zoo/hypergeometric.hpp"
#include "monodromy/zoo/polylog.hpp"

using monodromy::cplx;
using monodromy::Error;
namespace h = monodromy::harness;
namespace g = monodromy::germs;

struct md_config {
    h::ExperimentConfig cfg;
};

struct md_report {
    h::Report report;
    std::string rendered;
};

struct md_series {
    g::CoeffSeries s;
};

namespace {

thread_local std::string last_error;

md_status fail(md_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class Fn>
md_status guard(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return MD_OK;
    } catch (const Error& e) {
        return fail(static_cast<md_status>(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(MD_INTERNAL, e.what());
    } catch (...) {
        return fail(MD_INTERNAL, "unknown exception");
    }
}

cplx to_c(md_complex z) { return {z.re, z.im}; }
md_complex from_c(cplx z) { return {z.real(), z.imag()}; }

h::Format to_format(md_format f) {
    switch (f) {
        case MD_FORMAT_JSON: return h::Format::Json;
        case MD_FORMAT_CSV: return h::Format::Csv;
        case MD_FORMAT_HUMAN: return h::Format::Human;
    }
    throw Error(monodromy::ErrorCode::InvalidArgument, "unknown format");
}

#define MD_REQUIRE(p)                                                   \
    do {                                                                \
        if (!(p)) return fail(MD_INVALID_ARGUMENT, "null argument: " #p); \
    } while (0)

}  // namespace

extern "C" {

const char* md_last_error(void) { return last_error.c_str(); }

const char* md_status_name(md_status s) {
    if (s == MD_OK) return "ok";
    if (s == MD_INTERNAL) return "internal";
    if (s < MD_INVALID_ARGUMENT || s > MD_PARSE) return "unknown";
    return monodromy::error_code_name(static_cast<monodromy::ErrorCode>(s));
}

const char* md_version(void) { return "1.0.0"; }

size_t md_experiment_count(void) { return h::registry().size(); }

const char* md_experiment_name(size_t i) {
    const auto& r = h::registry();
    return i < r.size() ? r[i].name.c_str() : nullptr;
}

const char* md_experiment_description(size_t i) {
    const auto& r = h::registry();
    return i < r.size() ? r[i].description.c_str() : nullptr;
}

md_status md_config_new(const char* experiment, md_config** out) {
    MD_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto c = new md_config;
        if (experiment) c->cfg.experiment = experiment;
        *out = c;
    });
}

void md_config_free(md_config* c) { delete c; }

md_status md_config_set_seed(md_config* c, uint64_t seed) {
    MD_REQUIRE(c);
    c->cfg.seed = seed;
    return MD_OK;
}

md_status md_config_set_samples(md_config* c, int samples) {
    MD_REQUIRE(c);
    if (samples <= 0) return fail(MD_INVALID_ARGUMENT, "samples must be positive");
    c->cfg.samples = samples;
    return MD_OK;
}

md_status md_config_set_coeffs(md_config* c, size_t m) {
    MD_REQUIRE(c);
    if (m == 0) return fail(MD_INVALID_ARGUMENT, "coeffs must be positive");
    c->cfg.coeffs = m;
    return MD_OK;
}

md_status md_config_set_tol(md_config* c, const char* key, double value) {
    MD_REQUIRE(c);
    MD_REQUIRE(key);
    if (!(value >= 0)) return fail(MD_INVALID_ARGUMENT, "tolerance must be non-negative");
    c->cfg.tolerances[key] = value;
    return MD_OK;
}

md_status md_config_set_out(md_config* c, const char* path) {
    MD_REQUIRE(c);
    c->cfg.out = path ? path : "";
    return MD_OK;
}

md_status md_config_merge_json(md_config* c, const char* json_text) {
    MD_REQUIRE(c);
    MD_REQUIRE(json_text);
    return guard([&] {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(json_text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(monodromy::ErrorCode::Parse, e.what());
        }
        c->cfg.merge_json(j);
    });
}

md_status md_run(const md_config* c, md_report** out) {
    MD_REQUIRE(c);
    MD_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto r = new md_report;
        try {
            r->report = h::run_experiment(c->cfg);
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
    });
}

void md_report_free(md_report* r) { delete r; }

int md_report_pass(const md_report* r) { return r && r->report.pass ? 1 : 0; }

size_t md_report_case_count(const md_report* r) { return r ? r->report.cases.size() : 0; }

size_t md_report_failed_count(const md_report* r) {
    if (!r) return 0;
    size_t n = 0;
    for (const auto& c : r->report.cases) n += c.pass ? 0 : 1;
    return n;
}

double md_report_duration_ms(const md_report* r) { return r ? r->report.duration_ms : 0.0; }

md_status md_report_render(md_report* r, md_format f, const char** text) {
    MD_REQUIRE(r);
    MD_REQUIRE(text);
    return guard([&] {
        r->rendered = h::render_report(r->report, to_format(f));
        *text = r->rendered.c_str();
    });
}

md_status md_report_write(const md_report* r, md_format f, const char* path) {
    MD_REQUIRE(r);
    MD_REQUIRE(path);
    return guard([&] { h::emit_report(r->report, to_format(f), path); });
}

md_status md_series_binomial(md_complex a, size_t m, md_series** out) {
    MD_REQUIRE(out);
    *out = nullptr;
    return guard([&] { *out = new md_series{g::binomial_series(to_c(a), m)}; });
}

md_status md_series_hadamard(const md_series* a, const md_series* b, md_series** out) {
    MD_REQUIRE(a);
    MD_REQUIRE(b);
    MD_REQUIRE(out);
    *out = nullptr;
    return guard([&] { *out = new md_series{g::hadamard_coeffs(a->s, b->s)}; });
}

md_status md_series_load_csv(const char* path, md_series** out) {
    MD_REQUIRE(path);
    MD_REQUIRE(out);
    *out = nullptr;
    return guard([&] { *out = new md_series{g::load_coeffs_csv(path)}; });
}

md_status md_series_save_csv(const md_series* s, const char* path) {
    MD_REQUIRE(s);
    MD_REQUIRE(path);
    return guard([&] { g::save_coeffs_csv(path, s->s); });
}

void md_series_free(md_series* s) { delete s; }

size_t md_series_size(const md_series* s) { return s ? s->s.size() : 0; }

md_status md_series_coeff(const md_series* s, size_t n, md_complex* out) {
    MD_REQUIRE(s);
    MD_REQUIRE(out);
    if (n >= s->s.size()) return fail(MD_INVALID_ARGUMENT, "coefficient index out of range");
    *out = from_c(s->s.a[n]);
    return MD_OK;
}

md_status md_series_eval(const md_series* s, md_complex z, md_complex* out) {
    MD_REQUIRE(s);
    MD_REQUIRE(out);
    return guard([&] { *out = from_c(g::germ_eval(g::germ_from_series(s->s), to_c(z)).value); });
}

md_status md_gamma(md_complex z, md_complex* out) {
    MD_REQUIRE(out);
    return guard([&] { *out = from_c(monodromy::numerics::complex_gamma(to_c(z))); });
}

md_status md_hyp2f1(md_complex a, md_complex b, md_complex c, md_complex z, md_complex* out) {
    MD_REQUIRE(out);
    return guard([&] { *out = from_c(monodromy::zoo::hyp2f1(to_c(a), to_c(b), to_c(c), to_c(z))); });
}

md_status md_polylog(int k, md_complex z, md_complex* out) {
    MD_REQUIRE(out);
    return guard([&] { *out = from_c(monodromy::zoo::polylog_eval(k, monodromy::Point(to_c(z)))); });
}

md_status md_elliptic_k_norm(double ksq, double* out) {
    MD_REQUIRE(out);
    return guard([&] { *out = monodromy::zoo::elliptic_K_norm(ksq); });
}

}  // extern "C"
