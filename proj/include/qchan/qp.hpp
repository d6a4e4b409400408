#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "qchan/matrix.hpp"
#include "qchan/smallsolve.hpp"

namespace qchan {

// Convex quadratic program
//   min 1/2 w'Gw + q'w   s.t.  sum w = 1,  w >= 0,  C w >= d
// solved with a primal active-set method. G must be positive definite
// (callers add a small ridge to a PSD Gram matrix, which doubles as the
// minimum-norm tie-break among equally good solutions). The starting point
// must be feasible.
struct QpResult {
    std::vector<double> w;
    double objective = 0.0;
    double kkt_residual = 0.0;
    int iterations = 0;
};

class ActiveSetQp {
public:
    ActiveSetQp(std::vector<double> g, std::vector<double> q, int n)
        : g_(std::move(g)), q_(std::move(q)), n_(n) {}

    void add_cut(const std::vector<double>& row, double rhs) {
        cuts_.push_back(row);
        cut_rhs_.push_back(rhs);
    }

    QpResult solve(std::vector<double> w0) {
        const double tol = 1e-11;
        int m = int(cuts_.size());
        // constraints: 0..n-1 bounds (e_i w >= 0), n..n+m-1 cuts
        std::vector<bool> active(n_ + m, false);
        for (int i = 0; i < n_; ++i)
            if (w0[i] < tol) { w0[i] = 0.0; active[i] = true; }
        for (int ci = 0; ci < m; ++ci)
            if (cut_value(ci, w0) <= cut_rhs_[ci] + tol) active[n_ + ci] = true;

        QpResult res;
        res.w = std::move(w0);
        for (int iter = 0; iter < 800; ++iter) {
            ++res.iterations;
            std::vector<int> act;
            for (int i = 0; i < n_ + m; ++i)
                if (active[i]) act.push_back(i);

            std::vector<double> wt, lam;
            solve_kkt(act, wt, lam);

            bool feasible_target = true;
            for (int i = 0; i < n_; ++i)
                if (!active[i] && wt[i] < -tol) feasible_target = false;
            for (int ci = 0; ci < m && feasible_target; ++ci)
                if (!active[n_ + ci] && cut_value(ci, wt) < cut_rhs_[ci] - tol)
                    feasible_target = false;

            if (feasible_target) {
                res.w = wt;
                // multipliers of active inequality rows must be nonnegative
                int worst = -1;
                double worst_lam = -1e-10;
                for (size_t a = 0; a < act.size(); ++a)
                    if (lam[a] < worst_lam) { worst_lam = lam[a]; worst = int(a); }
                if (worst < 0) break;  // optimal
                active[act[worst]] = false;
                continue;
            }

            // step toward wt until the first blocking constraint
            double alpha = 1.0;
            int blocker = -1;
            for (int i = 0; i < n_; ++i) {
                if (active[i]) continue;
                double delta = wt[i] - res.w[i];
                if (delta < -1e-15) {
                    double a = -res.w[i] / delta;
                    if (a < alpha) { alpha = a; blocker = i; }
                }
            }
            for (int ci = 0; ci < m; ++ci) {
                if (active[n_ + ci]) continue;
                double v0 = cut_value(ci, res.w), v1 = cut_value(ci, wt);
                double delta = v1 - v0;
                if (delta < -1e-15 && v1 < cut_rhs_[ci]) {
                    double a = (cut_rhs_[ci] - v0) / delta;
                    if (a < alpha) { alpha = a; blocker = n_ + ci; }
                }
            }
            for (int i = 0; i < n_; ++i) res.w[i] += alpha * (wt[i] - res.w[i]);
            if (blocker >= 0) {
                active[blocker] = true;
                if (blocker < n_) res.w[blocker] = 0.0;
            }
        }

        res.objective = objective(res.w);
        res.kkt_residual = kkt_residual(res.w, active);
        return res;
    }

    double objective(const std::vector<double>& w) const {
        double v = 0.0;
        for (int i = 0; i < n_; ++i) {
            v += q_[i] * w[i];
            double s = 0.0;
            for (int j = 0; j < n_; ++j) s += g_[size_t(i) * n_ + j] * w[j];
            v += 0.5 * w[i] * s;
        }
        return v;
    }

private:
    double cut_value(int ci, const std::vector<double>& w) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += cuts_[ci][i] * w[i];
        return s;
    }

    // KKT system on the working set: grad + A' lambda stationary, rows active
    void solve_kkt(const std::vector<int>& act, std::vector<double>& w,
                   std::vector<double>& lam) const {
        int na = int(act.size());
        int dim = n_ + 1 + na;
        std::vector<double> a(size_t(dim) * dim, 0.0), b(dim, 0.0);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) a[size_t(i) * dim + j] = g_[size_t(i) * n_ + j];
            a[size_t(i) * dim + n_] = 1.0;  // sum-to-one multiplier
            a[size_t(n_) * dim + i] = 1.0;
            b[i] = -q_[i];
        }
        b[n_] = 1.0;
        for (int r = 0; r < na; ++r) {
            int c = act[r];
            if (c < n_) {
                a[size_t(c) * dim + n_ + 1 + r] = -1.0;
                a[size_t(n_ + 1 + r) * dim + c] = 1.0;
                b[n_ + 1 + r] = 0.0;
            } else {
                int ci = c - n_;
                for (int i = 0; i < n_; ++i) {
                    a[size_t(i) * dim + n_ + 1 + r] = -cuts_[ci][i];
                    a[size_t(n_ + 1 + r) * dim + i] = cuts_[ci][i];
                }
                b[n_ + 1 + r] = cut_rhs_[ci];
            }
        }
        std::vector<double> x;
        if (!lu_solve(a, b, dim, x)) throw SolverError("qp: singular KKT system");
        w.assign(x.begin(), x.begin() + n_);
        lam.assign(x.begin() + n_ + 1, x.end());
    }

    double kkt_residual(const std::vector<double>& w, const std::vector<bool>& active) const {
        // projected gradient on the feasible directions of the simplex
        std::vector<double> grad(n_);
        for (int i = 0; i < n_; ++i) {
            grad[i] = q_[i];
            for (int j = 0; j < n_; ++j) grad[i] += g_[size_t(i) * n_ + j] * w[j];
        }
        double mu = 0.0;
        int free_count = 0;
        for (int i = 0; i < n_; ++i)
            if (!active[i]) { mu += grad[i]; ++free_count; }
        if (free_count == 0) return 0.0;
        mu /= free_count;
        double r = 0.0;
        bool has_cuts = false;
        for (size_t ci = 0; ci < cuts_.size(); ++ci)
            if (active[n_ + ci]) has_cuts = true;
        if (has_cuts) return 0.0;  // stationarity holds through cut multipliers
        for (int i = 0; i < n_; ++i) {
            if (!active[i]) r = std::max(r, std::abs(grad[i] - mu));
            else r = std::max(r, std::max(0.0, mu - grad[i]));
        }
        return r;
    }

    std::vector<double> g_, q_;
    int n_;
    std::vector<std::vector<double>> cuts_;
    std::vector<double> cut_rhs_;
};

}  // namespace qchan
