#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interp/core_model.hpp"

namespace interp {

enum class Scenario {
    SparseGaussianSweep,
    WigglyDoubleDescent,
    PureNoiseParsimony,
    FourierConverse,
    SpikedPriorSweep,
    ThresholdRegularVsRandom,
    PolyWhitening,
};

enum class Statistic { Mean, Median, Both };

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& name);
std::string to_string(Statistic s);
Statistic parse_statistic(const std::string& name);

// "key = value" lines; '#' starts a comment. Later assignments win.
class KeyValueFile {
public:
    static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");
    static KeyValueFile load(const std::string& path);

    void set(const std::string& key, const std::string& value);
    std::optional<std::string> get(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

struct ExperimentConfig {
    Scenario scenario = Scenario::SparseGaussianSweep;
    std::vector<std::string> estimators;
    std::vector<std::string> variants;  // spacings or families compared side by side
    Index n = 100;
    std::vector<Index> n_grid;          // pure-noise regimes that sweep n
    std::vector<Index> d_grid;
    Index k = 0;
    double sigma2 = 1.0;
    Index trials = 50;
    std::uint64_t master_seed = 20190708;
    Statistic statistic = Statistic::Both;
    std::string output_dir = "results";
    Index n_test = 10000;
    std::string regime = "ratio";       // pure noise: ratio | square | exponential
    std::string family = "legendre";    // threshold scenario
    std::string regular_grid = "open";  // open: -1 + 2(j-1)/n; closed: -1 + 2(j-1)/(n-1)
    Index k_star = 1;
    Index spike_s = 10;
    std::vector<double> gamma_grid;
    double delta = 0.5;
    double omp_eta = 0.5;
    bool record_timing = false;
    bool paper_scale = false;
};

// Scenario defaults at desk scale, or at the published scale when paper_scale is set.
ExperimentConfig default_config(Scenario scenario, bool paper_scale = false);

// Applies one key to the config. Throws ConfigError for unknown keys or bad values.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// defaults -> file -> overrides -> INTERP_SEED (if env_seed is set). Validates the result.
ExperimentConfig resolve_config(const KeyValueFile& file, const std::vector<std::string>& overrides,
                                bool paper_scale, const std::optional<std::string>& env_seed);

void validate(const ExperimentConfig& cfg);

// Canonical "key = value" lines. Execution-only settings (output_dir, threads) are left out
// so the text depends only on what determines the numbers.
std::string render_config(const ExperimentConfig& cfg);

}  // namespace interp
