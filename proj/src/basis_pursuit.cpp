#include <algorithm>
#include <cmath>
#include <limits>

#include "interp/sparse.hpp"

namespace interp {

namespace {

// Revised simplex on  min 1^T x  s.t.  [A, -A] x = Y, x >= 0.
// Variable j < d is u_j (column a_j); variable d + j is v_j (column -a_j).
// The basis inverse is held explicitly and updated by rank-one pivots,
// with a fresh LU refactorization every refactor_every iterations.
class SplitSimplex {
public:
    SplitSimplex(const Matrix& A, const Vector& Y, const SimplexOptions& opts)
        : A_(A), Y_(Y), opts_(opts), n_(A.rows()), d_(A.cols()),
          is_basic_(static_cast<std::size_t>(2 * A.cols()), 0) {}

    LpSolution solve(const IndexSet& preferred) {
        crash_basis(preferred);
        const Index max_iter = opts_.max_iterations > 0 ? opts_.max_iterations : 50 * (n_ + 2 * d_);
        bool bland = opts_.pricing == PricingRule::Bland;
        Index degenerate_run = 0;
        Index since_refactor = 0;
        Index iter = 0;
        for (;;) {
            if (since_refactor >= opts_.refactor_every) {
                refactor();
                since_refactor = 0;
            }
            const Vector dual = binv_.transpose() * Vector::Ones(n_);
            const Index enter = bland ? choose_bland(dual) : choose_dantzig(dual);
            if (enter < 0) {
                // Confirm optimality on a fresh factorization before stopping.
                if (since_refactor == 0) break;
                refactor();
                since_refactor = 0;
                continue;
            }
            if (++iter > max_iter) throw SimplexCycling("simplex exceeded its iteration budget");

            const Vector dir = binv_ * column(enter);
            const Index leave = choose_leaving(dir);
            if (leave < 0) throw NumericalBreakdown("simplex found an unbounded direction");
            const double theta = std::max(0.0, xb_(leave)) / dir(leave);
            const double scale = std::max(1.0, xb_.cwiseAbs().maxCoeff());
            const bool degenerate = theta <= 1e-13 * scale;

            xb_ -= theta * dir;
            xb_(leave) = theta;
            for (Index i = 0; i < n_; ++i)
                if (xb_(i) < 0.0 && xb_(i) > -1e-12 * scale) xb_(i) = 0.0;

            const Vector pivot_row = binv_.row(leave) / dir(leave);
            binv_.noalias() -= dir * pivot_row.transpose();
            binv_.row(leave) = pivot_row.transpose();

            is_basic_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(leave)])] = 0;
            basis_[static_cast<std::size_t>(leave)] = enter;
            is_basic_[static_cast<std::size_t>(enter)] = 1;
            ++since_refactor;

            if (opts_.pricing == PricingRule::DantzigWithBland) {
                degenerate_run = degenerate ? degenerate_run + 1 : 0;
                bland = degenerate_run >= opts_.degenerate_run_limit;
            }
        }

        const double scale = std::max(1.0, Y_.cwiseAbs().maxCoeff());
        if (xb_.size() && xb_.minCoeff() < -1e-9 * scale)
            throw NumericalBreakdown("simplex basis lost primal feasibility");

        LpSolution sol;
        sol.u = Vector::Zero(d_);
        sol.v = Vector::Zero(d_);
        for (Index i = 0; i < n_; ++i) {
            const Index var = basis_[static_cast<std::size_t>(i)];
            const double val = std::max(0.0, xb_(i));
            if (var < d_)
                sol.u(var) = val;
            else
                sol.v(var - d_) = val;
        }
        sol.basis = basis_;
        std::sort(sol.basis.begin(), sol.basis.end());
        sol.objective = sol.u.sum() + sol.v.sum();
        sol.iterations = iter;
        return sol;
    }

private:
    Vector column(Index var) const {
        return var < d_ ? Vector(A_.col(var)) : Vector(-A_.col(var - d_));
    }

    static bool well_conditioned(const Matrix& b) { return Eigen::PartialPivLU<Matrix>(b).rcond() > 1e-8; }

    void crash_basis(const IndexSet& preferred) {
        IndexSet cols;
        if (static_cast<Index>(preferred.size()) == n_) {
            Matrix b(n_, n_);
            for (Index i = 0; i < n_; ++i) b.col(i) = A_.col(preferred[static_cast<std::size_t>(i)]);
            if (well_conditioned(b)) cols = preferred;
        }
        if (cols.empty() && n_ <= d_) {
            if (well_conditioned(A_.leftCols(n_)))
                for (Index j = 0; j < n_; ++j) cols.push_back(j);
        }
        if (cols.empty()) {
            Eigen::ColPivHouseholderQR<Matrix> qr(A_);
            qr.setThreshold(1e-10);
            if (qr.rank() < n_) throw Infeasible("constraint matrix does not have full row rank");
            for (Index j = 0; j < n_; ++j) cols.push_back(qr.colsPermutation().indices()(j));
        }
        Matrix b(n_, n_);
        for (Index i = 0; i < n_; ++i) b.col(i) = A_.col(cols[static_cast<std::size_t>(i)]);
        const Vector x = b.partialPivLu().solve(Y_);
        basis_.resize(static_cast<std::size_t>(n_));
        for (Index i = 0; i < n_; ++i) {
            const Index j = cols[static_cast<std::size_t>(i)];
            basis_[static_cast<std::size_t>(i)] = x(i) >= 0.0 ? j : d_ + j;
            is_basic_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = 1;
        }
        refactor();
    }

    void refactor() {
        Matrix b(n_, n_);
        for (Index i = 0; i < n_; ++i) b.col(i) = column(basis_[static_cast<std::size_t>(i)]);
        Eigen::PartialPivLU<Matrix> lu(b);
        binv_ = lu.inverse();
        xb_ = lu.solve(Y_);
        const double scale = std::max(1.0, xb_.cwiseAbs().maxCoeff());
        for (Index i = 0; i < n_; ++i)
            if (xb_(i) < 0.0 && xb_(i) > -1e-10 * scale) xb_(i) = 0.0;
    }

    // Reduced costs are 1 - g_j for u_j and 1 + g_j for v_j, where g = A^T dual.
    Index choose_bland(const Vector& dual) const {
        const double tol = opts_.optimality_tol;
        const Vector g = A_.transpose() * dual;
        for (Index j = 0; j < d_; ++j)
            if (!is_basic_[static_cast<std::size_t>(j)] && 1.0 - g(j) < -tol) return j;
        for (Index j = 0; j < d_; ++j)
            if (!is_basic_[static_cast<std::size_t>(d_ + j)] && 1.0 + g(j) < -tol) return d_ + j;
        return -1;
    }

    // Most negative reduced cost within the first block, starting from the block
    // after the last entry, that has any; -1 only after every column was priced.
    Index choose_dantzig(const Vector& dual) {
        const Index blocks = std::clamp<Index>(opts_.price_blocks, 1, std::max<Index>(1, d_ / std::max<Index>(1, n_)));
        const Index width = (d_ + blocks - 1) / blocks;
        for (Index step = 0; step < blocks; ++step) {
            const Index b = (next_block_ + step) % blocks;
            const Index lo = b * width, len = std::min(width, d_ - lo);
            if (len <= 0) continue;
            const Vector g = A_.middleCols(lo, len).transpose() * dual;
            Index best = -1;
            double most = opts_.optimality_tol;
            for (Index t = 0; t < len; ++t) {
                const double violation = std::abs(g(t)) - 1.0;
                if (violation <= most) continue;
                const Index var = g(t) > 0.0 ? lo + t : d_ + lo + t;
                if (is_basic_[static_cast<std::size_t>(var)]) continue;
                most = violation;
                best = var;
            }
            if (best >= 0) {
                next_block_ = (b + 1) % blocks;
                return best;
            }
        }
        return -1;
    }

    // Minimum ratio test; ties go to the lowest-indexed basic variable.
    Index choose_leaving(const Vector& dir) const {
        const double piv_tol = opts_.pivot_tol * std::max(1.0, dir.cwiseAbs().maxCoeff());
        Index leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < n_; ++i) {
            if (dir(i) <= piv_tol) continue;
            const double ratio = std::max(0.0, xb_(i)) / dir(i);
            const double slack = 1e-12 * std::max(1.0, std::abs(best));
            if (leave < 0 || ratio < best - slack) {
                best = ratio;
                leave = i;
            } else if (ratio <= best + slack &&
                       basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)]) {
                leave = i;
            }
        }
        return leave;
    }

    const Matrix& A_;
    const Vector& Y_;
    SimplexOptions opts_;
    Index n_, d_;
    IndexSet basis_;
    std::vector<char> is_basic_;
    Matrix binv_;
    Vector xb_;
    Index next_block_ = 0;
};

}  // namespace

BasisPursuitResult basis_pursuit(const TrainingSet<double>& ts, const SimplexOptions& opts) {
    if (ts.Y.size() != ts.n()) throw DimensionMismatch("output length differs from row count");
    if (ts.n() > ts.d()) throw DimensionMismatch("basis pursuit needs n <= d");
    BasisPursuitResult out;
    IndexSet preferred;
    if (opts.crash == CrashRule::Greedy) preferred = omp(ts, OmpConfig::fixed_steps(ts.n())).selection_order;
    out.lp = SplitSimplex(ts.A, ts.Y, opts).solve(preferred);
    Vector alpha = out.lp.u - out.lp.v;
    out.fit = make_result<double>(ts.A, ts.Y, std::move(alpha), out.lp.objective);
    out.fit.diagnostics["simplex_iterations"] = static_cast<double>(out.lp.iterations);
    return out;
}

}  // namespace interp
