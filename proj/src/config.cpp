#include "interp/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace interp {

namespace {

constexpr std::pair<Scenario, const char*> kScenarioNames[] = {
    {Scenario::SparseGaussianSweep, "sparse_gaussian_sweep"},
    {Scenario::WigglyDoubleDescent, "wiggly_double_descent"},
    {Scenario::PureNoiseParsimony, "pure_noise_parsimony"},
    {Scenario::FourierConverse, "fourier_converse"},
    {Scenario::SpikedPriorSweep, "spiked_prior_sweep"},
    {Scenario::ThresholdRegularVsRandom, "threshold_regular_vs_random"},
    {Scenario::PolyWhitening, "poly_whitening"},
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Index parse_index(const std::string& key, const std::string& v) {
    Index x = 0;
    const auto t = trim(v);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    return x;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    std::uint64_t x = 0;
    const auto t = trim(v);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw ConfigError("key '" + key + "': expected an unsigned integer, got '" + v + "'");
    return x;
}

double parse_double(const std::string& key, const std::string& v) {
    const auto t = trim(v);
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(x))
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
    const auto t = trim(v);
    if (t == "true" || t == "1" || t == "yes") return true;
    if (t == "false" || t == "0" || t == "no") return false;
    throw ConfigError("key '" + key + "': expected true/false, got '" + v + "'");
}

std::vector<Index> parse_index_list(const std::string& key, const std::string& v) {
    std::vector<Index> out;
    for (const auto& item : split_list(v)) out.push_back(parse_index(key, item));
    return out;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
    return out;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F f) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += f(xs[i]);
    }
    return out;
}

}  // namespace

std::string to_string(Scenario s) {
    for (const auto& [k, name] : kScenarioNames)
        if (k == s) return name;
    return "unknown";
}

Scenario parse_scenario(const std::string& name) {
    for (const auto& [k, n] : kScenarioNames)
        if (name == n) return k;
    throw ConfigError("unknown scenario '" + name + "'");
}

std::string to_string(Statistic s) {
    switch (s) {
    case Statistic::Mean: return "mean";
    case Statistic::Median: return "median";
    case Statistic::Both: return "both";
    }
    return "both";
}

Statistic parse_statistic(const std::string& name) {
    if (name == "mean") return Statistic::Mean;
    if (name == "median") return Statistic::Median;
    if (name == "both") return Statistic::Both;
    throw ConfigError("unknown statistic '" + name + "'");
}

KeyValueFile KeyValueFile::parse(const std::string& text, const std::string& origin) {
    KeyValueFile f;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        f.set(key, trim(line.substr(eq + 1)));
    }
    return f;
}

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

void KeyValueFile::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries_)
        if (k == key) {
            v = value;
            return;
        }
    entries_.emplace_back(key, value);
}

std::optional<std::string> KeyValueFile::get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return v;
    return std::nullopt;
}

ExperimentConfig default_config(Scenario scenario, bool paper_scale) {
    ExperimentConfig c;
    c.scenario = scenario;
    c.paper_scale = paper_scale;
    switch (scenario) {
    case Scenario::SparseGaussianSweep:
        c.estimators = {"ideal", "min_l2", "omp", "bp"};
        c.variants = {"gaussian"};
        c.n = 500;
        c.k = 50;
        c.sigma2 = 0.01;
        c.d_grid = {250, 400, 500, 600, 1000, 2000, 4000, 8000};
        c.trials = 20;
        if (paper_scale) {
            c.n = 5000;
            c.k = 500;
            c.d_grid = {2500, 4000, 5000, 6000, 10000, 20000, 30000};
        }
        break;
    case Scenario::WigglyDoubleDescent:
        c.estimators = {"min_l2"};
        c.variants = {"gaussian_shifted"};
        c.n = 10;
        c.sigma2 = 0.01;
        c.d_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 20, 30, 50, 100, 200, 500, 1000};
        break;
    case Scenario::PureNoiseParsimony:
        c.estimators = {"ideal", "min_l2", "omp", "bp"};
        c.variants = {"gaussian"};
        c.n = 50;
        c.sigma2 = 1.0;
        c.d_grid = {50, 100, 200, 400, 800, 1600, 3200};
        c.n_grid = {5, 10, 15, 20, 30, 40};
        if (paper_scale) c.d_grid.push_back(6400);
        break;
    case Scenario::FourierConverse:
        c.estimators = {"ideal", "min_l2"};
        c.variants = {"regular", "random"};
        c.n = 15;
        c.sigma2 = 1.0;
        c.d_grid = {15, 16, 18, 20, 25, 30, 45, 60, 90, 150, 300, 600, 1500};
        break;
    case Scenario::SpikedPriorSweep:
        c.estimators = {"min_l2", "weighted_l2"};
        c.variants = {"regular"};
        c.n = 50;
        c.sigma2 = 0.0;
        c.k_star = 1;
        c.spike_s = 10;
        c.gamma_grid = {0.99, 0.9, 0.5};
        c.d_grid = {50, 100, 250, 550, 1100};
        c.trials = 1;
        if (paper_scale) {
            c.n = 500;
            c.spike_s = 100;
            c.d_grid = {500, 1000, 2500, 5500, 11000};
        }
        break;
    case Scenario::ThresholdRegularVsRandom:
        c.estimators = {"ideal", "min_l2"};
        c.variants = {"regular", "random"};
        c.family = "legendre";
        c.regular_grid = "closed";
        c.n = 10;
        c.sigma2 = 0.01;
        c.d_grid = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 20, 30, 50, 100};
        break;
    case Scenario::PolyWhitening:
        c.estimators = {"ideal", "min_l2"};
        c.variants = {"vandermonde", "legendre", "gaussian"};
        c.n = 10;
        c.k = 2;
        c.sigma2 = 1e-4;
        c.d_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 20, 30, 50, 100};
        break;
    }
    return c;
}

void apply_setting(ExperimentConfig& c, const std::string& key, const std::string& raw) {
    const std::string v = trim(raw);
    if (key == "scenario") {
        if (parse_scenario(v) != c.scenario) throw ConfigError("scenario cannot change after defaults are applied");
    } else if (key == "estimators") c.estimators = split_list(v);
    else if (key == "variants") c.variants = split_list(v);
    else if (key == "n") c.n = parse_index(key, v);
    else if (key == "n_grid") c.n_grid = parse_index_list(key, v);
    else if (key == "d_grid") c.d_grid = parse_index_list(key, v);
    else if (key == "k") c.k = parse_index(key, v);
    else if (key == "sigma2") c.sigma2 = parse_double(key, v);
    else if (key == "trials") c.trials = parse_index(key, v);
    else if (key == "master_seed") c.master_seed = parse_u64(key, v);
    else if (key == "statistic") c.statistic = parse_statistic(v);
    else if (key == "output_dir") c.output_dir = v;
    else if (key == "n_test") c.n_test = parse_index(key, v);
    else if (key == "regime") c.regime = v;
    else if (key == "family") c.family = v;
    else if (key == "regular_grid") c.regular_grid = v;
    else if (key == "k_star") c.k_star = parse_index(key, v);
    else if (key == "spike_s") c.spike_s = parse_index(key, v);
    else if (key == "gamma_grid") c.gamma_grid = parse_double_list(key, v);
    else if (key == "delta") c.delta = parse_double(key, v);
    else if (key == "omp_eta") c.omp_eta = parse_double(key, v);
    else if (key == "record_timing") c.record_timing = parse_bool(key, v);
    else throw ConfigError("unknown config key '" + key + "'");
}

void validate(const ExperimentConfig& c) {
    if (c.trials < 1) throw ConfigError("trials must be at least 1");
    if (c.estimators.empty()) throw ConfigError("no estimators selected");
    if (c.variants.empty()) throw ConfigError("no variants selected");
    if (c.d_grid.empty()) throw ConfigError("d_grid is empty");
    for (std::size_t i = 0; i < c.d_grid.size(); ++i) {
        if (c.d_grid[i] < 1) throw ConfigError("d_grid entries must be positive");
        if (i && c.d_grid[i] <= c.d_grid[i - 1]) throw ConfigError("d_grid must be strictly increasing");
    }
    for (std::size_t i = 0; i < c.n_grid.size(); ++i)
        if (c.n_grid[i] < 1 || (i && c.n_grid[i] <= c.n_grid[i - 1]))
            throw ConfigError("n_grid must be positive and strictly increasing");
    if (c.n < 1) throw ConfigError("n must be positive");
    if (c.k < 0) throw ConfigError("k must be nonnegative");
    if (c.sigma2 < 0.0) throw ConfigError("sigma2 must be nonnegative");
    if (c.n_test < 1) throw ConfigError("n_test must be positive");
    if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
    if (!(c.omp_eta > 0.0)) throw ConfigError("omp_eta must be positive");
    if (c.regime != "ratio" && c.regime != "square" && c.regime != "exponential")
        throw ConfigError("regime must be ratio, square or exponential");
    if (c.regular_grid != "open" && c.regular_grid != "closed") throw ConfigError("regular_grid must be open or closed");
    if (c.family != "legendre" && c.family != "fourier") throw ConfigError("family must be legendre or fourier");
    if (c.regime != "ratio" && c.n_grid.empty()) throw ConfigError("regime " + c.regime + " needs n_grid");
    if (c.scenario == Scenario::SpikedPriorSweep) {
        if (c.gamma_grid.empty()) throw ConfigError("gamma_grid is empty");
        for (double g : c.gamma_grid)
            if (!(g > 0.0 && g < 1.0)) throw ConfigError("gamma_grid entries must lie in (0, 1)");
        for (Index d : c.d_grid)
            if (d % c.n != 0) throw ConfigError("spiked sweep needs every d to be a multiple of n");
        if (c.spike_s < 1 || c.spike_s >= c.d_grid.front()) throw ConfigError("spike_s must lie in [1, min d)");
        if (c.k_star < 0 || c.k_star >= c.n) throw ConfigError("k_star must lie in [0, n)");
    }
    if (c.scenario == Scenario::SparseGaussianSweep && c.k > c.d_grid.front())
        throw ConfigError("k exceeds the smallest d");
    if (c.scenario == Scenario::PolyWhitening && c.k < 1) throw ConfigError("poly_whitening needs k >= 1");
}

ExperimentConfig resolve_config(const KeyValueFile& file, const std::vector<std::string>& overrides, bool paper_scale,
                                const std::optional<std::string>& env_seed) {
    KeyValueFile merged = file;
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + ov + "' is not of the form key=value");
        merged.set(trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
    }
    const auto scenario = merged.get("scenario");
    if (!scenario) throw ConfigError("config does not name a scenario");
    ExperimentConfig cfg = default_config(parse_scenario(*scenario), paper_scale);
    for (const auto& [k, v] : merged.entries()) apply_setting(cfg, k, v);
    if (env_seed && !env_seed->empty()) cfg.master_seed = parse_u64("INTERP_SEED", *env_seed);
    validate(cfg);
    return cfg;
}

std::string render_config(const ExperimentConfig& c) {
    auto idx = [](Index x) { return std::to_string(x); };
    auto str = [](const std::string& s) { return s; };
    std::ostringstream o;
    o << "scenario = " << to_string(c.scenario) << "\n"
      << "estimators = " << join(c.estimators, str) << "\n"
      << "variants = " << join(c.variants, str) << "\n"
      << "n = " << c.n << "\n"
      << "n_grid = " << join(c.n_grid, idx) << "\n"
      << "d_grid = " << join(c.d_grid, idx) << "\n"
      << "k = " << c.k << "\n"
      << "sigma2 = " << fmt_double(c.sigma2) << "\n"
      << "trials = " << c.trials << "\n"
      << "master_seed = " << c.master_seed << "\n"
      << "statistic = " << to_string(c.statistic) << "\n"
      << "n_test = " << c.n_test << "\n"
      << "regime = " << c.regime << "\n"
      << "family = " << c.family << "\n"
      << "regular_grid = " << c.regular_grid << "\n"
      << "k_star = " << c.k_star << "\n"
      << "spike_s = " << c.spike_s << "\n"
      << "gamma_grid = " << join(c.gamma_grid, fmt_double) << "\n"
      << "delta = " << fmt_double(c.delta) << "\n"
      << "omp_eta = " << fmt_double(c.omp_eta) << "\n"
      << "record_timing = " << (c.record_timing ? "true" : "false") << "\n";
    return o.str();
}

}  // namespace interp
