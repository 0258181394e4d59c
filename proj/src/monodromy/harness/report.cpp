#include "monodromy/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monodromy/error.hpp"
#include "monodromy/zoo/descriptor.hpp"

namespace monodromy::harness {

using nlohmann::json;

double ExperimentConfig::tol(const std::string& key, double def) const {
    auto it = tolerances.find(key);
    return it == tolerances.end() ? def : it->second;
}

json ExperimentConfig::to_json() const {
    json t = json::object();
    for (const auto& [k, v] : tolerances) t[k] = v;
    return {{"experiment", experiment}, {"tolerances", t}, {"samples", samples}, {"seed", seed},
            {"coeffs", coeffs},         {"out", out},      {"format", format}};
}

void ExperimentConfig::merge_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "config must be a JSON object");
    try {
        if (j.contains("experiment")) experiment = j.at("experiment").get<std::string>();
        if (j.contains("tolerances"))
            for (const auto& [k, v] : j.at("tolerances").items()) tolerances[k] = v.get<double>();
        if (j.contains("samples")) samples = j.at("samples").get<int>();
        if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("coeffs")) coeffs = j.at("coeffs").get<std::size_t>();
        if (j.contains("out")) out = j.at("out").get<std::string>();
        if (j.contains("format")) format = j.at("format").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad config field: ") + e.what());
    }
}

void ExperimentConfig::validate() const {
    if (samples < 0) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
    for (const auto& [k, v] : tolerances)
        if (!(v >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance " + k + " must be non-negative");
    parse_format(format);
}

CaseRecord& Report::add(std::string id, json inputs, cplx lhs, cplx rhs, double residual, double tol,
                        std::string metric) {
    CaseRecord c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.lhs = lhs;
    c.rhs = rhs;
    c.residual = residual;
    c.tol = tol;
    c.pass = residual <= tol;
    c.metric = std::move(metric);
    cases.push_back(std::move(c));
    return cases.back();
}

CaseRecord& Report::add_error(std::string id, json inputs, const std::string& message, double tol) {
    CaseRecord c;
    c.id = std::move(id);
    c.inputs = std::move(inputs);
    c.residual = std::numeric_limits<double>::infinity();
    c.tol = tol;
    c.pass = false;
    c.error = message;
    cases.push_back(std::move(c));
    return cases.back();
}

void Report::finalize() {
    pass = !cases.empty();
    for (const auto& c : cases) pass = pass && c.pass;
}

namespace {

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }
cplx from_cjson(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

// JSON has no infinity; store it as a string.
json num(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}
double from_num(const json& j) {
    if (j.is_number()) return j.get<double>();
    auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

json Report::to_json() const {
    json cs = json::array();
    for (const auto& c : cases) {
        json o = {{"id", c.id},
                  {"inputs", c.inputs},
                  {"lhs", cjson(c.lhs)},
                  {"rhs", cjson(c.rhs)},
                  {"residual", num(c.residual)},
                  {"tol", num(c.tol)},
                  {"pass", c.pass},
                  {"metric", c.metric},
                  {"err_estimates", c.err_estimates}};
        if (!c.error.empty()) o["error"] = c.error;
        cs.push_back(std::move(o));
    }
    return {{"experiment", experiment}, {"config", config}, {"cases", cs}, {"pass", pass},
            {"duration_ms", duration_ms}};
}

Report Report::from_json(const json& j) {
    Report r;
    try {
        r.experiment = j.at("experiment").get<std::string>();
        r.config = j.at("config");
        r.pass = j.at("pass").get<bool>();
        r.duration_ms = j.at("duration_ms").get<double>();
        for (const auto& o : j.at("cases")) {
            CaseRecord c;
            c.id = o.at("id").get<std::string>();
            c.inputs = o.at("inputs");
            c.lhs = from_cjson(o.at("lhs"));
            c.rhs = from_cjson(o.at("rhs"));
            c.residual = from_num(o.at("residual"));
            c.tol = from_num(o.at("tol"));
            c.pass = o.at("pass").get<bool>();
            c.metric = o.value("metric", "abs");
            c.err_estimates = o.value("err_estimates", json::object());
            c.error = o.value("error", "");
            r.cases.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
    }
    return r;
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "human") return Format::Human;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "' (json, csv, human)");
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string o = "\"";
    for (char ch : s) {
        if (ch == '"') o += '"';
        o += ch;
    }
    return o + "\"";
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    os << "id,lhs_re,lhs_im,rhs_re,rhs_im,residual,tol,pass,metric,inputs,error\n";
    for (const auto& c : r.cases) {
        os << csv_quote(c.id) << ',' << fmt("%.17g", c.lhs.real()) << ',' << fmt("%.17g", c.lhs.imag()) << ','
           << fmt("%.17g", c.rhs.real()) << ',' << fmt("%.17g", c.rhs.imag()) << ',' << fmt("%.6e", c.residual)
           << ',' << fmt("%.6e", c.tol) << ',' << (c.pass ? "true" : "false") << ',' << c.metric << ','
           << csv_quote(c.inputs.dump()) << ',' << csv_quote(c.error) << '\n';
    }
    return os.str();
}

std::string render_human(const Report& r) {
    size_t w = 4;
    for (const auto& c : r.cases) w = std::max(w, c.id.size());
    std::ostringstream os;
    os << "experiment: " << r.experiment << "\n";
    char line[512];
    std::snprintf(line, sizeof line, "%-*s  %-12s  %-7s  %-12s  %-6s  %s\n", int(w), "case", "residual", "log10",
                  "tol", "metric", "mark");
    os << line;
    for (const auto& c : r.cases) {
        double e = c.residual > 0 ? std::log10(c.residual) : -INFINITY;
        std::string ex = std::isfinite(e) ? fmt("%+.1f", e) : (c.residual == 0 ? "-inf" : "inf");
        std::snprintf(line, sizeof line, "%-*s  %-12.3e  %-7s  %-12.3e  %-6s  %s", int(w), c.id.c_str(),
                      c.residual, ex.c_str(), c.tol, c.metric.c_str(), c.pass ? "ok" : "FAIL <<<");
        os << line;
        if (!c.error.empty()) os << "  (" << c.error << ")";
        os << "\n";
    }
    os << "verdict: " << (r.pass ? "PASS" : "FAIL") << "  cases: " << r.cases.size()
       << "  duration: " << fmt("%.0f", r.duration_ms) << " ms\n";
    return os.str();
}

}  // namespace

std::string render_report(const Report& r, Format f) {
    switch (f) {
        case Format::Json: return r.to_json().dump(2) + "\n";
        case Format::Csv: return render_csv(r);
        case Format::Human: return render_human(r);
    }
    return {};
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path p(path);
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
        f << content;
        f.flush();
        if (!f) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::Io, "cannot rename onto " + p.string());
    }
}

void emit_report(const Report& r, Format f, const std::string& path) {
    write_file_atomic(path, render_report(r, f));
}

}  // namespace monodromy::harness
