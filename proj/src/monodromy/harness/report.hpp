#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "monodromy/types.hpp"

namespace monodromy::harness {

struct ExperimentConfig {
    std::string experiment;
    std::map<std::string, double> tolerances;
    int samples = 0;  // 0: experiment default
    std::uint64_t seed = 1;
    std::size_t coeffs = 0;  // 0: experiment default
    std::string out;
    std::string format = "human";

    double tol(const std::string& key, double def) const;
    int samples_or(int def) const { return samples > 0 ? samples : def; }
    std::size_t coeffs_or(std::size_t def) const { return coeffs > 0 ? coeffs : def; }

    nlohmann::json to_json() const;
    // Missing keys keep their current values.
    void merge_json(const nlohmann::json& j);
    void validate() const;
};

struct CaseRecord {
    std::string id;
    nlohmann::json inputs = nlohmann::json::object();
    cplx lhs{}, rhs{};
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string metric = "abs";  // abs: |lhs - rhs|; rel1: |lhs - rhs| / (1 + |lhs|); or experiment-specific
    nlohmann::json err_estimates = nlohmann::json::object();
    std::string error;
};

struct Report {
    std::string experiment;
    nlohmann::json config = nlohmann::json::object();
    std::vector<CaseRecord> cases;
    bool pass = false;
    double duration_ms = 0.0;

    // Adds a case; pass iff residual <= tol (NaN fails).
    CaseRecord& add(std::string id, nlohmann::json inputs, cplx lhs, cplx rhs, double residual, double tol,
                    std::string metric = "abs");
    CaseRecord& add_error(std::string id, nlohmann::json inputs, const std::string& message, double tol);
    void finalize();

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

enum class Format { Json, Csv, Human };
Format parse_format(const std::string& s);

std::string render_report(const Report& r, Format f);
// Writes through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);
void emit_report(const Report& r, Format f, const std::string& path);

}  // namespace monodromy::harness
