#include <algorithm>
#include <cmath>

#include "interp/sparse.hpp"

namespace interp {

OmpResult omp(const TrainingSet<double>& ts, const OmpConfig& cfg) {
    const Matrix& A = ts.A;
    const Vector& Y = ts.Y;
    const Index n = A.rows(), d = A.cols();
    if (Y.size() != n) throw DimensionMismatch("output length differs from row count");
    const Vector col_norm = A.colwise().norm().transpose();
    for (Index j = 0; j < d; ++j)
        if (col_norm(j) == 0.0) throw ZeroColumn("column " + std::to_string(j) + " is zero");

    Index max_steps = std::min(n, d);
    double threshold = 0.0;
    switch (cfg.stopping) {
    case OmpConfig::Stopping::ToCompletion:
        break;
    case OmpConfig::Stopping::FixedSteps:
        if (cfg.steps < 1) throw InvalidArgument("fixed-step OMP needs k0 >= 1");
        max_steps = std::min(max_steps, cfg.steps);
        break;
    case OmpConfig::Stopping::ResidualThreshold:
        if (!(cfg.eta > 0.0) || cfg.sigma < 0.0) throw InvalidArgument("threshold OMP needs eta > 0, sigma >= 0");
        threshold = cfg.sigma * std::sqrt(2.0 * (1.0 + cfg.eta) * std::log(static_cast<double>(d)));
        break;
    }

    const double y_norm = Y.norm();
    Matrix Q(n, max_steps);
    Matrix R = Matrix::Zero(max_steps, max_steps);
    Vector qty(max_steps);
    std::vector<char> chosen(static_cast<std::size_t>(d), 0);
    IndexSet order;
    Vector r = Y;
    double r_norm = y_norm;

    for (Index t = 0; t < max_steps; ++t) {
        if (r_norm == 0.0) break;
        const Vector corr = A.transpose() * r;
        if (cfg.stopping == OmpConfig::Stopping::ResidualThreshold && corr.cwiseAbs().maxCoeff() <= threshold) break;

        Index pick = -1;
        double best = -1.0;
        for (Index j = 0; j < d; ++j) {
            if (chosen[static_cast<std::size_t>(j)]) continue;
            const double c = std::abs(corr(j));
            if (c > best) {
                best = c;
                pick = j;
            }
        }
        if (pick < 0 || best == 0.0) break;

        // Classical Gram-Schmidt with one reorthogonalization pass.
        Vector v = A.col(pick);
        Vector h = Vector::Zero(t);
        for (int pass = 0; pass < 2 && t > 0; ++pass) {
            const Vector hp = Q.leftCols(t).transpose() * v;
            v.noalias() -= Q.leftCols(t) * hp;
            h += hp;
        }
        const double rtt = v.norm();
        if (rtt <= 1e-13 * col_norm(pick)) break;  // column already in the selected span
        Q.col(t) = v / rtt;
        R.col(t).head(t) = h;
        R(t, t) = rtt;
        qty(t) = Q.col(t).dot(Y);
        chosen[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);

        r = Y - Q.leftCols(t + 1) * qty.head(t + 1);
        const double new_norm = r.norm();
        if (new_norm > r_norm * (1.0 + 1e-8) + 1e-14 * y_norm)
            throw NumericalBreakdown("OMP residual grew after projection update");
        r_norm = new_norm;
    }

    const Index s = static_cast<Index>(order.size());
    Vector alpha = Vector::Zero(d);
    if (s > 0) {
        const Vector coef = R.topLeftCorner(s, s).triangularView<Eigen::Upper>().solve(qty.head(s));
        for (Index i = 0; i < s; ++i) alpha(order[static_cast<std::size_t>(i)]) = coef(i);
    }
    OmpResult out;
    out.fit = make_result<double>(A, Y, std::move(alpha), 0.0);
    out.fit.objective = out.fit.residual_norm;
    out.fit.diagnostics["steps"] = static_cast<double>(s);
    // Late pure-noise picks can carry tiny coefficients; the support is the selected set.
    out.fit.support = order;
    std::sort(out.fit.support.begin(), out.fit.support.end());
    out.selection_order = std::move(order);
    return out;
}

}  // namespace interp
