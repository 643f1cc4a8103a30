#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pncode/predictions.hpp"
#include "pncode/weight_dist.hpp"

namespace pncode {

inline constexpr const char* kArtifactVersion = "1.0.0";

/*
 * One experiment: a field, a function from the catalog, and a set of checks
 * to run. Loadable from a flat key-value file, overridable from the command
 * line. Known check names: verify_pn, det_relation, enumerate, predict,
 * puncture, dual, pless, bounds, nu ("all" expands to every check that
 * applies to the chosen family).
 */
struct ExperimentConfig {
    std::uint32_t p = 3;
    std::uint32_t m = 2;
    std::string family = "f1";
    std::map<std::string, std::string> params;  // k, t, r, beta, scale, c, w, poly
    std::vector<std::string> checks;
    std::string emit = "text";  // text | json | csv
    std::uint64_t budget = 100'000'000;
    std::uint64_t field_ceiling = 2187;
    std::string name;  // optional tag, echoed in reports

    bool has_check(const std::string& c) const;           // listed, or covered by "all"
    bool has_explicit_check(const std::string& c) const;  // listed verbatim
};

ExperimentConfig load_config_file(const std::string& path);
// key=value override, same keys as the config file (param.X addresses params).
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct MatchResult {
    bool exact = false;
    std::optional<std::uint32_t> first_mismatch_weight;
};

struct BoundEntry {
    std::string label;
    std::string bound;    // "SpherePacking" | "GraphTheory"
    std::uint32_t n = 0, k = 0, d = 0, q = 0;
    std::string verdict;
    std::string witness;  // the compared exact quantities, printable
    bool ok = false;      // matches the claim the theory makes for this experiment
};

enum class ReportStatus { Ok, Mismatch, InvalidConfig, BudgetExceeded, InternalError };

struct Report {
    ExperimentConfig config;
    std::string version = kArtifactVersion;
    std::string modulus;
    std::string family_label;
    std::uint32_t q = 0;

    std::optional<bool> pn_verified;
    std::optional<int> epsilon;
    std::optional<int> det_class;
    std::optional<bool> det_relation_ok;

    std::optional<WeightDistribution> enumerated, predicted, punctured, punctured_predicted;
    std::optional<std::string> predicted_source, punctured_predicted_source;
    std::optional<CodeParams> enum_params, punctured_params;
    std::optional<MatchResult> match, punctured_match;

    std::optional<WeightDistribution> dual, punctured_dual;
    std::optional<CodeParams> dual_params, punctured_dual_params;
    std::array<Int, 4> dual_a{Int(0), Int(0), Int(0), Int(0)};
    std::optional<bool> dual_claim_ok;            // [p^m+1, p^m-2m, 4] (+ A4 for cm)
    std::optional<bool> punctured_dual_claim_ok;  // punctured dual claims, DO kinds only

    std::optional<PlessCheck> pless;
    std::vector<BoundEntry> bounds;
    std::optional<bool> nu_ok;

    bool complete = true;
    std::string failed_stage;
    std::string error;
    std::int64_t elapsed_ms = 0;

    bool all_pass() const;
    ReportStatus status() const;
};

Report run_experiment(const ExperimentConfig& cfg);

// format: "text" (human, includes timing), "json" / "csv" (byte-deterministic).
std::string emit_report(const Report& rep, const std::string& format);

// 0 = all checks pass, 1 = mismatch/failed check, 2 = invalid config,
// 3 = budget exceeded.
int report_exit_code(const Report& rep);

}  // namespace pncode
