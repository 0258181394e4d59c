#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodromy/monodromy.h"

namespace {

struct Handle {
    md_config* cfg = nullptr;
    md_report* rep = nullptr;
    ~Handle() {
        md_report_free(rep);
        md_config_free(cfg);
    }
};

int die(md_status s) {
    std::cerr << "error [" << md_status_name(s) << "]: " << md_last_error() << "\n";
    return 2;
}

bool parse_format(const std::string& s, md_format& f) {
    if (s == "json") f = MD_FORMAT_JSON;
    else if (s == "csv") f = MD_FORMAT_CSV;
    else if (s == "human") f = MD_FORMAT_HUMAN;
    else return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy verification lab"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List registered experiments");

    auto* run = app.add_subcommand("run", "Run one experiment");
    std::string name, out, format = "human", config_path;
    std::uint64_t seed = 1;
    int samples = 0;
    std::size_t coeffs = 0;
    std::vector<std::string> tols;
    run->add_option("experiment", name, "Experiment name")->required();
    auto* o_seed = run->add_option("--seed", seed, "Random seed");
    auto* o_samples = run->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
    auto* o_coeffs = run->add_option("--coeffs", coeffs, "Series truncation M")->check(CLI::PositiveNumber);
    run->add_option("--tol", tols, "Tolerance override KEY=VAL (repeatable)");
    auto* o_out = run->add_option("--out", out, "Report path (stdout when absent)");
    auto* o_format = run->add_option("--format", format, "json|csv|human")
                         ->check(CLI::IsMember({"json", "csv", "human"}));
    run->add_option("--config", config_path, "JSON config file; flags override it");

    CLI11_PARSE(app, argc, argv);

    if (*list) {
        for (std::size_t i = 0; i < md_experiment_count(); ++i)
            std::printf("%-28s %s\n", md_experiment_name(i), md_experiment_description(i));
        return 0;
    }

    Handle h;
    if (md_status s = md_config_new(name.c_str(), &h.cfg)) return die(s);

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error [io]: cannot read " << config_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        if (md_status s = md_config_merge_json(h.cfg, ss.str().c_str())) return die(s);
        auto j = nlohmann::json::parse(ss.str(), nullptr, false);
        if (!o_format->count() && j.is_object() && j.contains("format") && j["format"].is_string())
            format = j["format"].get<std::string>();
        if (!o_out->count() && j.is_object() && j.contains("out") && j["out"].is_string())
            out = j["out"].get<std::string>();
    }
    if (o_seed->count())
        if (md_status s = md_config_set_seed(h.cfg, seed)) return die(s);
    if (o_samples->count())
        if (md_status s = md_config_set_samples(h.cfg, samples)) return die(s);
    if (o_coeffs->count())
        if (md_status s = md_config_set_coeffs(h.cfg, coeffs)) return die(s);
    for (const auto& kv : tols) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error [invalid-argument]: --tol expects KEY=VAL, got " << kv << "\n";
            return 2;
        }
        double v = 0;
        try {
            v = std::stod(kv.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "error [invalid-argument]: bad tolerance value in " << kv << "\n";
            return 2;
        }
        if (md_status s = md_config_set_tol(h.cfg, kv.substr(0, eq).c_str(), v)) return die(s);
    }
    if (md_status s = md_config_set_out(h.cfg, out.c_str())) return die(s);

    md_format fmt;
    if (!parse_format(format, fmt)) {
        std::cerr << "error [invalid-argument]: unknown format " << format << "\n";
        return 2;
    }

    if (md_status s = md_run(h.cfg, &h.rep)) return die(s);

    if (out.empty()) {
        const char* text = nullptr;
        if (md_status s = md_report_render(h.rep, fmt, &text)) return die(s);
        std::fputs(text, stdout);
    } else {
        if (md_status s = md_report_write(h.rep, fmt, out.c_str())) return die(s);
        std::fprintf(stderr, "%s: %zu cases, %zu failed, %.0f ms -> %s\n", name.c_str(), md_report_case_count(h.rep),
                     md_report_failed_count(h.rep), md_report_duration_ms(h.rep), out.c_str());
    }
    return md_report_pass(h.rep) ? 0 : 1;
}
