#include "interp/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <thread>
#include <tuple>

#include "interp/features.hpp"
#include "interp/fourier_theory.hpp"
#include "interp/interpolators.hpp"
#include "interp/metrics.hpp"
#include "interp/sparse.hpp"

namespace interp {

namespace {

struct Cell {
    Index trial;
    Index n;
    Index d;
};

const std::set<std::string> kRealEstimators = {"ideal",      "min_l2",        "omp",          "omp_threshold",
                                               "bp",         "lasso",         "sqrt_lasso",   "hybrid_lasso",
                                               "hybrid_omp", "hybrid_sqrt_lasso"};
const std::set<std::string> kComplexEstimators = {"ideal", "min_l2", "weighted_l2"};

std::vector<Cell> make_cells(const ExperimentConfig& cfg) {
    std::vector<std::pair<Index, Index>> sizes;
    if (cfg.scenario == Scenario::PureNoiseParsimony && cfg.regime != "ratio") {
        for (Index n : cfg.n_grid) {
            const double dn = cfg.regime == "square" ? static_cast<double>(n) * static_cast<double>(n)
                                                     : std::ceil(std::exp(static_cast<double>(n)));
            sizes.emplace_back(n, static_cast<Index>(dn));
        }
    } else {
        for (Index d : cfg.d_grid) sizes.emplace_back(cfg.n, d);
    }
    std::vector<Cell> cells;
    for (Index t = 0; t < cfg.trials; ++t)
        for (const auto& [n, d] : sizes) cells.push_back({t, n, d});
    return cells;
}

bool complex_scenario(const ExperimentConfig& cfg) {
    return cfg.scenario == Scenario::FourierConverse || cfg.scenario == Scenario::SpikedPriorSweep ||
           (cfg.scenario == Scenario::ThresholdRegularVsRandom && cfg.family == "fourier");
}

Vector pad(const Vector& v, Index size) {
    Vector out = Vector::Zero(size);
    out.head(std::min(size, v.size())) = v.head(std::min(size, v.size()));
    return out;
}

CVector pad(const CVector& v, Index size) {
    CVector out = CVector::Zero(size);
    out.head(std::min(size, v.size())) = v.head(std::min(size, v.size()));
    return out;
}

// A fitted coefficient vector with the solver's own support count.
struct RealFit {
    Vector alpha;
    Index support = 0;
};

// Dispatches a named estimator on a real training set. Below the interpolation
// threshold every estimator reports the unique least-squares fit.
RealFit fit_real(const std::string& name, const TrainingSet<double>& ts, const ExperimentConfig& cfg,
                 const Vector* alpha_star) {
    const Index n = ts.n(), d = ts.d();
    RealFit f;
    if (d < n) {
        f.alpha = least_squares_solve(ts.A, ts.Y);
        f.support = static_cast<Index>(support_of<double>(f.alpha).size());
        return f;
    }
    const double sigma = std::sqrt(cfg.sigma2);
    LassoConfig lasso;
    lasso.lambda = default_lasso_lambda(sigma, n, d);
    lasso.gamma = default_sqrt_lasso_gamma(n, d);
    if (name == "min_l2") {
        f.alpha = min_l2_interpolate(ts).alpha_hat;
    } else if (name == "omp") {
        f.alpha = omp(ts).fit.alpha_hat;
    } else if (name == "omp_threshold") {
        f.alpha = omp(ts, OmpConfig::residual_threshold(sigma, cfg.omp_eta)).fit.alpha_hat;
    } else if (name == "bp") {
        f.alpha = basis_pursuit(ts).fit.alpha_hat;
    } else if (name == "lasso") {
        f.alpha = lasso_cd(ts, lasso).alpha;
    } else if (name == "sqrt_lasso") {
        f.alpha = sqrt_lasso(ts, lasso).alpha;
    } else if (name == "hybrid_lasso") {
        f.alpha = hybrid_interpolate(ts, [&](const TrainingSet<double>& t) { return lasso_cd(t, lasso).alpha; },
                                     alpha_star).alpha_hat;
    } else if (name == "hybrid_omp") {
        const Index steps = std::max<Index>(1, cfg.k);
        f.alpha = hybrid_interpolate(
                      ts, [&](const TrainingSet<double>& t) { return omp(t, OmpConfig::fixed_steps(steps)).fit.alpha_hat; },
                      alpha_star).alpha_hat;
    } else if (name == "hybrid_sqrt_lasso") {
        f.alpha = hybrid_interpolate(ts, [&](const TrainingSet<double>& t) { return sqrt_lasso(t, lasso).alpha; },
                                     alpha_star).alpha_hat;
    } else {
        throw ConfigError("estimator '" + name + "' is not available here");
    }
    f.support = static_cast<Index>(support_of<double>(f.alpha).size());
    return f;
}

class CellRunner {
public:
    CellRunner(const ExperimentConfig& cfg, const Cell& cell) : cfg_(cfg), cell_(cell) {
        seed_ = mix_seed(cfg.master_seed, static_cast<std::uint64_t>(cell.trial));
    }

    std::vector<MetricsRecord> run() {
        for (std::size_t v = 0; v < cfg_.variants.size(); ++v) {
            Rng rng(mix_seed(seed_, v));
            try {
                run_variant(cfg_.variants[v], rng);
            } catch (const std::exception& e) {
                // Data generation itself failed; mark every estimator of this variant.
                for (const auto& est : cfg_.estimators) {
                    MetricsRecord r = base(cfg_.variants[v], est);
                    r.status = e.what();
                    rows_.push_back(r);
                }
            }
        }
        return std::move(rows_);
    }

private:
    MetricsRecord base(const std::string& variant, const std::string& estimator) const {
        MetricsRecord r;
        r.scenario = to_string(cfg_.scenario);
        r.variant = variant;
        r.estimator = estimator;
        r.n = cell_.n;
        r.d = cell_.d;
        r.trial = cell_.trial;
        r.seed = seed_;
        return r;
    }

    // Times `body`, which fills the record; errors become the row status.
    template <class F>
    void record(const std::string& variant, const std::string& estimator, F&& body) {
        MetricsRecord r = base(variant, estimator);
        const auto start = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.status = e.what();
            r.test_mse.reset();
            r.support_size.reset();
        }
        if (cfg_.record_timing)
            r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        rows_.push_back(std::move(r));
    }

    std::optional<double> safe_ideal(const Matrix& B, const Vector& W) {
        if (B.cols() < B.rows()) return std::nullopt;
        try {
            return oracle::ideal_mse<double>(B, W);
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    // Real-valued scenarios with a linear ground truth and whitened (or analytic) test error.
    void run_real_linear(const std::string& variant, const TrainingSet<double>& ts, const Vector& alpha_star,
                         const std::function<double(const Vector&)>& test_mse, const std::optional<double>& ideal) {
        for (const auto& est : cfg_.estimators) {
            record(variant, est, [&](MetricsRecord& r) {
                r.ideal_mse = ideal;
                if (est == "ideal") {
                    // Undefined below the interpolation threshold: an explicit null, not a failure.
                    r.test_mse = ideal;
                    return;
                }
                const Vector* truth = alpha_star.size() == ts.d() ? &alpha_star : nullptr;
                const RealFit f = fit_real(est, ts, cfg_, truth);
                r.test_mse = test_mse(f.alpha);
                r.support_size = static_cast<double>(f.support);
            });
        }
    }

    void run_variant(const std::string& variant, Rng& rng) {
        const Index n = cell_.n, d = cell_.d;
        switch (cfg_.scenario) {
        case Scenario::SparseGaussianSweep:
        case Scenario::PureNoiseParsimony: {
            const Index k = cfg_.scenario == Scenario::PureNoiseParsimony ? 0 : cfg_.k;
            const Vector W = sample_noise(rng, n, cfg_.sigma2);
            IndexSet support;
            for (Index j = 0; j < k; ++j) support.push_back(j);
            const SparseLinearInstance inst = make_unit_instance(d, support, cfg_.sigma2);
            const TrainingSet<double> ts = make_training_set<double>(gaussian_iid_features(n, d, rng), inst, W);
            run_real_linear(variant, ts, inst.alpha_star,
                            [&](const Vector& a) { return test_mse_analytic(a, inst.alpha_star); },
                            safe_ideal(ts.A, W));
            break;
        }
        case Scenario::WigglyDoubleDescent: {
            const Vector W = sample_noise(rng, n, cfg_.sigma2);
            const FeatureFamily fam = FeatureFamily::shifted_mean(d);
            TrainingSet<double> ts;
            ts.A = std::get<Design<double>>(build_design(fam, natural_scheme(fam, Spacing::UniformRandom), n, rng)).A;
            ts.Y = Vector::Ones(n) + W;
            ts.W = W;
            const std::uint64_t test_seed = mix_seed(seed_, 0x7e57);
            for (const auto& est : cfg_.estimators)
                record(variant, est, [&](MetricsRecord& r) {
                    const RealFit f = fit_real(est, ts, cfg_, nullptr);
                    Rng test_rng(test_seed);
                    r.test_mse = test_mse_empirical<double>(f.alpha, ConstantTarget{1.0}, cfg_.sigma2, fam, test_rng,
                                                            cfg_.n_test).mean;
                    r.support_size = static_cast<double>(f.support);
                });
            break;
        }
        case Scenario::ThresholdRegularVsRandom:
            if (cfg_.family == "fourier")
                run_fourier(variant, rng, 2, false);
            else
                run_threshold_legendre(variant, rng);
            break;
        case Scenario::FourierConverse:
            run_fourier(variant, rng, -1, false);
            break;
        case Scenario::SpikedPriorSweep:
            run_fourier(variant, rng, cfg_.k_star, true);
            break;
        case Scenario::PolyWhitening:
            run_poly_whitening(variant, rng);
            break;
        }
    }

    Spacing spacing_of(const std::string& variant) const {
        if (variant == "regular") return Spacing::Regular;
        if (variant == "random") return Spacing::UniformRandom;
        throw ConfigError("variant '" + variant + "' is not a spacing (regular or random)");
    }

    Vector polynomial_covariates(Spacing spacing, Index n, Rng& rng) const {
        if (spacing == Spacing::Regular && cfg_.regular_grid == "closed") {
            Vector x(n);
            for (Index j = 0; j < n; ++j)
                x(j) = n == 1 ? -1.0 : -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(n - 1);
            return x;
        }
        return sample_covariates({spacing, Domain::Symmetric}, n, rng);
    }

    void run_threshold_legendre(const std::string& variant, Rng& rng) {
        const Index n = cell_.n, d = cell_.d;
        const Vector W = sample_noise(rng, n, cfg_.sigma2);
        const Vector x = polynomial_covariates(spacing_of(variant), n, rng);
        // Degree-2 target: the normalized Legendre polynomial of degree 2.
        const Index width = std::max<Index>(d, 3);
        Vector alpha_star = Vector::Zero(width);
        alpha_star(2) = 1.0;
        TrainingSet<double> ts;
        ts.A = legendre_features(x, d);
        ts.Y = legendre_features(x, 3).col(2) + W;
        ts.W = W;
        const std::optional<double> ideal = d >= 3 ? safe_ideal(ts.A, W) : std::nullopt;
        run_real_linear(variant, ts, alpha_star,
                        [&](const Vector& a) { return (pad(a, width) - alpha_star).squaredNorm(); }, ideal);
    }

    // Fourier features; target e_{k*} when k_star >= 0, pure noise otherwise.
    void run_fourier(const std::string& variant, Rng& rng, Index k_star, bool spiked) {
        const Index n = cell_.n, d = cell_.d;
        const Vector W = sample_noise(rng, n, cfg_.sigma2);
        const Vector x = sample_covariates({spacing_of(variant), Domain::UnitInterval}, n, rng);
        const Index width = std::max(d, k_star + 1);
        Vector alpha_star = Vector::Zero(width);
        if (k_star >= 0) alpha_star(k_star) = 1.0;
        TrainingSet<cplx> ts;
        ts.A = fourier_features(x, d);
        ts.Y = fourier_features(x, width) * alpha_star.cast<cplx>() + W.cast<cplx>();
        ts.W = W;
        std::optional<double> ideal;
        if (d >= n && d >= k_star + 1) {
            try {
                ideal = oracle::ideal_mse(ts.A, W);
            } catch (const Error&) {
            }
        }
        auto fill = [&](MetricsRecord& r, const CVector& alpha) {
            const CVector a = pad(alpha, width);
            r.test_mse = (a - alpha_star.cast<cplx>()).squaredNorm();
            r.support_size = static_cast<double>(support_of<cplx>(alpha).size());
            if (k_star >= 0 && k_star < d) {
                const auto emp = fourier::empirical_survival_contamination(alpha, k_star);
                r.survival = emp.survival;
                r.contamination = emp.contamination;
            }
        };
        auto solve = [&](const Vector* weights) -> CVector {
            if (d < n) return least_squares_solve(ts.A, ts.Y);
            return weights ? weighted_min_l2_interpolate(ts, *weights).alpha_hat : min_l2_interpolate(ts).alpha_hat;
        };
        for (const auto& est : cfg_.estimators) {
            if (est == "ideal") {
                record(variant, est, [&](MetricsRecord& r) {
                    r.ideal_mse = ideal;
                    // Undefined below the interpolation threshold: an explicit null, not a failure.
                    r.test_mse = ideal;
                });
            } else if (est == "min_l2") {
                record(variant, est, [&](MetricsRecord& r) {
                    r.ideal_mse = ideal;
                    fill(r, solve(nullptr));
                });
            } else if (est == "weighted_l2") {
                if (!spiked) throw ConfigError("weighted_l2 needs the spiked prior scenario");
                for (double g : cfg_.gamma_grid) {
                    record(variant, "weighted_l2[gamma=" + csv::format_double(g) + "]", [&](MetricsRecord& r) {
                        r.ideal_mse = ideal;
                        const Vector w = fourier::spiked_weights(d, cfg_.spike_s, g);
                        fill(r, solve(&w));
                    });
                }
            } else {
                throw ConfigError("estimator '" + est + "' does not support complex features");
            }
        }
    }

    void run_poly_whitening(const std::string& variant, Rng& rng) {
        const Index n = cell_.n, d = cell_.d, k = cfg_.k;
        const Vector W = sample_noise(rng, n, cfg_.sigma2);
        if (variant == "gaussian") {
            const Index width = std::max(d, k);
            const Matrix full = gaussian_iid_features(n, width, rng);
            Vector alpha_star = Vector::Zero(width);
            alpha_star.head(k).setOnes();
            TrainingSet<double> ts;
            ts.A = full.leftCols(d);
            ts.Y = full * alpha_star + W;
            ts.W = W;
            const std::optional<double> ideal = d >= k ? safe_ideal(ts.A, W) : std::nullopt;
            run_real_linear(variant, ts, alpha_star,
                            [&](const Vector& a) { return (pad(a, width) - alpha_star).squaredNorm(); }, ideal);
            return;
        }
        if (variant != "vandermonde" && variant != "legendre")
            throw ConfigError("poly_whitening variants are vandermonde, legendre and gaussian");
        // The same polynomial target, sum_{m<k} x^m, expressed in either basis.
        const Vector x = sample_covariates({Spacing::UniformRandom, Domain::Symmetric}, n, rng);
        const Index width = std::max(d, k);
        const Vector mono = pad(Vector(Vector::Ones(k)), width);
        const Vector target_values = vandermonde_features(x, k) * Vector::Ones(k);
        // Monomials to orthonormal Legendre coefficients via an exact square solve at k nodes.
        Vector nodes(k);
        for (Index j = 0; j < k; ++j) nodes(j) = k == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(k - 1);
        const Vector leg_head = legendre_features(nodes, k).fullPivLu().solve(vandermonde_features(nodes, k) * Vector::Ones(k));
        const Vector leg = pad(leg_head, width);
        const bool vander = variant == "vandermonde";
        TrainingSet<double> ts;
        ts.A = vander ? vandermonde_features(x, d) : legendre_features(x, d);
        ts.Y = target_values + W;
        ts.W = W;
        // Both bases span the same polynomials, so the whitened problem is the Legendre one.
        const std::optional<double> ideal = d >= k ? safe_ideal(Matrix(legendre_features(x, d)), W) : std::nullopt;
        if (vander) {
            FeatureFamily fam = FeatureFamily::vandermonde(width);
            const Matrix moments = second_moment(fam);
            run_real_linear(variant, ts, mono,
                            [&](const Vector& a) { return test_mse_quadratic(pad(a, width), mono, moments); }, ideal);
        } else {
            run_real_linear(variant, ts, leg, [&](const Vector& a) { return (pad(a, width) - leg).squaredNorm(); },
                            ideal);
        }
    }

    const ExperimentConfig& cfg_;
    Cell cell_;
    std::uint64_t seed_;
    std::vector<MetricsRecord> rows_;
};

auto sort_key(const MetricsRecord& r) { return std::tie(r.variant, r.estimator, r.n, r.d, r.trial); }

std::vector<std::string> record_fields(const MetricsRecord& r) {
    return {r.scenario,
            r.variant,
            r.estimator,
            std::to_string(r.n),
            std::to_string(r.d),
            std::to_string(r.trial),
            std::to_string(r.seed),
            csv::format_optional(r.test_mse),
            csv::format_optional(r.ideal_mse),
            csv::format_optional(r.survival),
            csv::format_optional(r.contamination),
            csv::format_optional(r.support_size),
            csv::format_optional(r.wall_time_ms),
            r.status};
}

const std::vector<std::string> kRecordHeader = {"scenario",     "variant",      "estimator", "n",         "d",
                                                "trial",        "seed",         "test_mse",  "ideal_mse", "survival",
                                                "contamination", "support_size", "wall_time_ms", "status"};

const std::vector<std::string> kSummaryHeader = {"scenario",        "variant",       "estimator",     "n",
                                                 "d",               "sigma2",        "count",         "failures",
                                                 "test_mse_median", "test_mse_mean", "test_mse_p075", "test_mse_p925",
                                                 "ideal_mse_median", "support_size_median"};

std::string header_comments(const ExperimentConfig& cfg, const std::string& kind) {
    std::string out = "# interp " + kind + " schema " + std::to_string(kRecordsSchemaVersion) + "\r\n";
    std::string text = render_config(cfg);
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        out += "# " + text.substr(pos, eol - pos) + "\r\n";
        pos = eol + 1;
    }
    return out;
}

}  // namespace

void check_estimators(const ExperimentConfig& cfg) {
    const bool cx = complex_scenario(cfg);
    for (const auto& e : cfg.estimators) {
        const auto& allowed = cx ? kComplexEstimators : kRealEstimators;
        if (!allowed.count(e)) throw ConfigError("estimator '" + e + "' is not available for " + to_string(cfg.scenario));
        if (e == "weighted_l2" && cfg.scenario != Scenario::SpikedPriorSweep)
            throw ConfigError("weighted_l2 runs only in spiked_prior_sweep");
        if (e == "ideal" && cfg.scenario == Scenario::WigglyDoubleDescent)
            throw ConfigError("the ideal interpolator needs a target expressible in the features");
    }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, unsigned threads) {
    validate(cfg);
    check_estimators(cfg);
    const std::vector<Cell> cells = make_cells(cfg);
    std::vector<std::vector<MetricsRecord>> per_cell(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) per_cell[i] = CellRunner(cfg, cells[i]).run();
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    ExperimentResult result;
    for (auto& rows : per_cell)
        for (auto& r : rows) result.records.push_back(std::move(r));
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const MetricsRecord& a, const MetricsRecord& b) { return sort_key(a) < sort_key(b); });
    for (const auto& r : result.records)
        if (!r.ok()) ++result.failures;
    result.summary = summarize(result.records, cfg.sigma2);
    return result;
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRecord>& records, double sigma2) {
    std::map<std::tuple<std::string, std::string, Index, Index>, std::vector<const MetricsRecord*>> groups;
    for (const auto& r : records) groups[{r.variant, r.estimator, r.n, r.d}].push_back(&r);
    std::vector<SummaryRow> out;
    for (const auto& [key, rows] : groups) {
        SummaryRow s;
        s.scenario = rows.front()->scenario;
        std::tie(s.variant, s.estimator, s.n, s.d) = key;
        s.sigma2 = sigma2;
        std::vector<double> mse, ideal, support;
        for (const auto* r : rows) {
            if (!r->ok()) {
                ++s.failures;
                continue;
            }
            if (r->test_mse) mse.push_back(*r->test_mse);
            if (r->ideal_mse) ideal.push_back(*r->ideal_mse);
            if (r->support_size) support.push_back(*r->support_size);
        }
        s.count = static_cast<Index>(mse.size());
        if (!mse.empty()) {
            s.median = median(mse);
            s.mean = mean(mse);
            s.p075 = quantile(mse, 0.075);
            s.p925 = quantile(mse, 0.925);
        }
        if (!ideal.empty()) s.ideal_median = median(ideal);
        if (!support.empty()) s.support_median = median(support);
        out.push_back(std::move(s));
    }
    return out;
}

std::string records_csv(const std::vector<MetricsRecord>& records, const ExperimentConfig& cfg) {
    std::string out = header_comments(cfg, "records");
    out += csv::join_row(kRecordHeader);
    for (const auto& r : records) out += csv::join_row(record_fields(r));
    return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows, const ExperimentConfig& cfg) {
    std::string out = header_comments(cfg, "summary");
    out += csv::join_row(kSummaryHeader);
    for (const auto& s : rows)
        out += csv::join_row({s.scenario, s.variant, s.estimator, std::to_string(s.n), std::to_string(s.d),
                              csv::format_double(s.sigma2), std::to_string(s.count), std::to_string(s.failures),
                              csv::format_optional(s.median), csv::format_optional(s.mean),
                              csv::format_optional(s.p075), csv::format_optional(s.p925),
                              csv::format_optional(s.ideal_median), csv::format_optional(s.support_median)});
    return out;
}

std::vector<MetricsRecord> parse_records(const csv::Table& t) {
    std::vector<std::size_t> col;
    for (const auto& h : kRecordHeader) col.push_back(t.column(h));
    std::vector<MetricsRecord> out;
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size()) throw InvalidArgument("records row has the wrong number of fields");
        MetricsRecord r;
        r.scenario = row[col[0]];
        r.variant = row[col[1]];
        r.estimator = row[col[2]];
        r.n = std::stoll(row[col[3]]);
        r.d = std::stoll(row[col[4]]);
        r.trial = std::stoll(row[col[5]]);
        r.seed = std::stoull(row[col[6]]);
        r.test_mse = csv::parse_optional_double(row[col[7]]);
        r.ideal_mse = csv::parse_optional_double(row[col[8]]);
        r.survival = csv::parse_optional_double(row[col[9]]);
        r.contamination = csv::parse_optional_double(row[col[10]]);
        r.support_size = csv::parse_optional_double(row[col[11]]);
        r.wall_time_ms = csv::parse_optional_double(row[col[12]]);
        r.status = row[col[13]];
        out.push_back(std::move(r));
    }
    return out;
}

void write_outputs(const ExperimentResult& result, const ExperimentConfig& cfg, const std::string& dir) {
    std::filesystem::create_directories(dir);
    auto write = [](const std::filesystem::path& p, const std::string& text) {
        std::ofstream out(p, std::ios::binary);
        if (!out) throw InvalidArgument("cannot write '" + p.string() + "'");
        out << text;
    };
    write(std::filesystem::path(dir) / "records.csv", records_csv(result.records, cfg));
    write(std::filesystem::path(dir) / "summary.csv", summary_csv(result.summary, cfg));
}

}  // namespace interp
