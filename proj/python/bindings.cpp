#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "interp/bounds.hpp"
#include "interp/config.hpp"
#include "interp/experiments.hpp"
#include "interp/fourier_theory.hpp"
#include "interp/interpolators.hpp"
#include "interp/sparse.hpp"

namespace py = pybind11;
using namespace interp;

namespace {

TrainingSet<double> training_set(const Matrix& A, const Vector& Y) {
    TrainingSet<double> ts;
    ts.A = A;
    ts.Y = Y;
    ts.W = Vector::Zero(Y.size());
    return ts;
}

bounds::BoundParams params(Index n, Index d, double sigma2, double delta) {
    bounds::BoundParams p;
    p.n = n;
    p.d = d;
    p.sigma2 = sigma2;
    p.delta = delta;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interpolating estimators for overparameterized linear regression";

    py::register_exception<Error>(m, "InterpError", PyExc_RuntimeError);

    m.def("min_norm_solve", py::overload_cast<const Matrix&, const Vector&, double>(&min_norm_solve),
          py::arg("M"), py::arg("y"), py::arg("rank_tol") = kDefaultRankTol);

    m.def("min_l2_interpolate", [](const Matrix& A, const Vector& Y) {
        return min_l2_interpolate(training_set(A, Y)).alpha_hat;
    }, py::arg("A"), py::arg("Y"));

    m.def("omp", [](const Matrix& A, const Vector& Y, std::optional<Index> steps) {
        const auto cfg = steps ? OmpConfig::fixed_steps(*steps) : OmpConfig::to_completion();
        auto r = omp(training_set(A, Y), cfg);
        return py::make_tuple(r.fit.alpha_hat, r.selection_order);
    }, py::arg("A"), py::arg("Y"), py::arg("steps") = py::none(),
       "Returns (coefficients, selection order). Runs to completion unless steps is given.");

    m.def("basis_pursuit", [](const Matrix& A, const Vector& Y) {
        return basis_pursuit(training_set(A, Y)).fit.alpha_hat;
    }, py::arg("A"), py::arg("Y"));

    m.def("lasso", [](const Matrix& A, const Vector& Y, double lam) {
        LassoConfig cfg;
        cfg.lambda = lam;
        return lasso_cd(training_set(A, Y), cfg).alpha;
    }, py::arg("A"), py::arg("Y"), py::arg("lam"));

    m.def("sqrt_lasso", [](const Matrix& A, const Vector& Y, double gamma) {
        LassoConfig cfg;
        cfg.gamma = gamma;
        return sqrt_lasso(training_set(A, Y), cfg).alpha;
    }, py::arg("A"), py::arg("Y"), py::arg("gamma"));

    m.def("hybrid_lasso", [](const Matrix& A, const Vector& Y, double lam) {
        LassoConfig cfg;
        cfg.lambda = lam;
        return hybrid_interpolate(training_set(A, Y), [&](const TrainingSet<double>& t) {
            return lasso_cd(t, cfg).alpha;
        }).alpha_hat;
    }, py::arg("A"), py::arg("Y"), py::arg("lam"));

    m.def("survival", &fourier::survival, py::arg("k_star"), py::arg("n"), py::arg("d"), py::arg("w"));
    m.def("contamination", &fourier::contamination, py::arg("k_star"), py::arg("n"), py::arg("d"), py::arg("w"));
    m.def("closed_form_weighted_solution", &fourier::closed_form_weighted_solution, py::arg("k_star"),
          py::arg("n"), py::arg("d"), py::arg("w"));

    m.def("ideal_mse_lower_gaussian", [](Index n, Index d, double sigma2, double delta) {
        return bounds::ideal_mse_lower_gaussian(params(n, d, sigma2, delta));
    }, py::arg("n"), py::arg("d"), py::arg("sigma2") = 1.0, py::arg("delta") = 0.5);
    m.def("ideal_mse_upper_gaussian", [](Index n, Index d, double sigma2, double delta) {
        const auto b = bounds::ideal_mse_upper_gaussian(params(n, d, sigma2, delta));
        return py::make_tuple(b.value, b.flagged);
    }, py::arg("n"), py::arg("d"), py::arg("sigma2") = 1.0, py::arg("delta") = 0.5,
       "Returns (value, flagged); flagged means the curve is outside its validity range.");

    m.def("run_experiment", [](const std::string& config_text, const std::vector<std::string>& overrides,
                               unsigned threads) {
        const auto cfg = resolve_config(KeyValueFile::parse(config_text), overrides, false, std::nullopt);
        ExperimentResult r;
        {
            py::gil_scoped_release release;
            r = run_experiment(cfg, threads);
        }
        return py::make_tuple(records_csv(r.records, cfg), summary_csv(r.summary, cfg));
    }, py::arg("config_text"), py::arg("overrides") = std::vector<std::string>{}, py::arg("threads") = 1u,
       "Runs a scenario and returns (records_csv, summary_csv) as text.");
}
