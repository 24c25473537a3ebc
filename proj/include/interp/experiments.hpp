#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interp/config.hpp"
#include "interp/csv.hpp"

namespace interp {

inline constexpr int kRecordsSchemaVersion = 1;

// One row per (trial, variant, estimator, n, d). Metrics that do not apply are empty.
struct MetricsRecord {
    std::string scenario;
    std::string variant;
    std::string estimator;
    Index n = 0;
    Index d = 0;
    Index trial = 0;
    std::uint64_t seed = 0;
    std::optional<double> test_mse;
    std::optional<double> ideal_mse;
    std::optional<double> survival;
    std::optional<double> contamination;
    std::optional<double> support_size;
    std::optional<double> wall_time_ms;
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

struct SummaryRow {
    std::string scenario;
    std::string variant;
    std::string estimator;
    Index n = 0;
    Index d = 0;
    double sigma2 = 0.0;
    Index count = 0;
    Index failures = 0;
    std::optional<double> median, mean, p075, p925;
    std::optional<double> ideal_median;
    std::optional<double> support_median;
};

struct ExperimentResult {
    std::vector<MetricsRecord> records;
    std::vector<SummaryRow> summary;
    Index failures = 0;

    double failure_rate() const {
        return records.empty() ? 0.0 : static_cast<double>(failures) / static_cast<double>(records.size());
    }
};

// Runs every (trial, n, d) cell on `threads` workers. Each cell derives its own
// stream from (master_seed, trial); rows are sorted before they are returned, so
// the output does not depend on the thread count. Solver errors are recorded per row.
ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned threads = 1);

// Throws ConfigError if an estimator name is unknown or does not apply to the scenario.
void check_estimators(const ExperimentConfig& cfg);

std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records, double sigma2);

std::string records_csv(const std::vector<MetricsRecord>& records, const ExperimentConfig& cfg);
std::string summary_csv(const std::vector<SummaryRow>& rows, const ExperimentConfig& cfg);
std::vector<MetricsRecord> parse_records(const csv::Table& table);

// Writes records.csv and summary.csv under dir (created if needed).
void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg, const std::string& dir);

}  // namespace interp
