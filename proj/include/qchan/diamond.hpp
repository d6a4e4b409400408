#pragma once

#include <array>
#include <cmath>
#include <string>

#include "qchan/kraus.hpp"
#include "qchan/matrix.hpp"
#include "qchan/smallsolve.hpp"

namespace qchan {

// Diamond distance to the identity, 0.5*||E - Id||_diamond, via the
// semidefinite pair
//   primal: max <J, W>  s.t.  0 <= W <= rho (x) I,  rho a density matrix
//   dual:   min mu      s.t.  Z >= J, Z >= 0, Tr_out Z <= mu I
// where J is the Choi matrix of E - Id (input factor first). The dual is
// followed down the central path with a log-det barrier; a feasible primal
// pair is recovered from the barrier gradients at every step, so the
// reported duality gap is a true certificate.
struct DiamondResult {
    double value = 0.0;
    double gap = 0.0;      // certified duality gap (absolute)
    int newton_steps = 0;
};

namespace detail {

inline Mat ptrace_out4(const Mat& j) {
    Mat m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            m(i, k) = j(2 * i, 2 * k) + j(2 * i + 1, 2 * k + 1);
    return m;
}

inline Mat lift_in4(const Mat& g) {
    // adjoint of ptrace_out4: G -> G (x) I_2
    Mat m(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int b = 0; b < 2; ++b) m(2 * i + b, 2 * k + b) = g(i, k);
    return m;
}

// orthonormal Hermitian basis of 4x4 matrices (16 elements)
inline const std::array<Mat, 16>& herm_basis4() {
    static const std::array<Mat, 16> basis = [] {
        std::array<Mat, 16> b;
        int idx = 0;
        const double s = 1.0 / std::sqrt(2.0);
        for (int i = 0; i < 4; ++i) {
            Mat e(4, 4);
            e(i, i) = 1.0;
            b[idx++] = e;
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                Mat e(4, 4);
                e(i, j) = s;
                e(j, i) = s;
                b[idx++] = e;
                Mat f(4, 4);
                f(i, j) = cplx(0, -s);
                f(j, i) = cplx(0, s);
                b[idx++] = f;
            }
        return b;
    }();
    return basis;
}

struct BarrierEval {
    bool ok = false;
    double value = 0.0;
    Mat inv_zj, inv_z;  // 4x4 inverses
    Mat g;              // 2x2 inverse of (mu I - Tr_out Z)
};

inline BarrierEval eval_barrier(const Mat& j, const Mat& z, double mu, bool need_inv) {
    BarrierEval e;
    Mat l;
    Mat zj = z - j;
    if (!cholesky(zj, l)) return e;
    e.value = -cholesky_logdet(l);
    if (need_inv) e.inv_zj = cholesky_inverse(l);
    if (!cholesky(z, l)) return e;
    e.value -= cholesky_logdet(l);
    if (need_inv) e.inv_z = cholesky_inverse(l);
    Mat c = Mat::identity(2) * cplx(mu) - ptrace_out4(z);
    if (!cholesky(c, l)) return e;
    e.value -= cholesky_logdet(l);
    if (need_inv) e.g = cholesky_inverse(l);
    e.ok = true;
    return e;
}

struct PrimalCert {
    double value = 0.0;
    double gap = 0.0;
};

inline PrimalCert certify(const Mat& j, const Mat& z, double mu, double t) {
    Mat l;
    Mat zj = z - j;
    cholesky(zj, l);
    Mat w = cholesky_inverse(l) * cplx(1.0 / t);
    Mat c = Mat::identity(2) * cplx(mu) - ptrace_out4(z);
    cholesky(c, l);
    Mat rho = cholesky_inverse(l) * cplx(1.0 / t);
    // repair: shift rho until rho (x) I - W is PSD, then normalize
    Mat d = lift_in4(rho) - w;
    double shift = std::max(0.0, -min_eigenvalue(d));
    double tr = rho.trace().real() + 2.0 * shift;
    PrimalCert p;
    p.value = hs_inner(j, w).real() / tr;
    p.gap = mu - p.value;
    return p;
}

}  // namespace detail

inline Mat choi_minus_identity(const KrausChannel& k) {
    Mat j = choi_of(k);
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) j(2 * i + i, 2 * jj + jj) -= 1.0;
    return j;
}

inline DiamondResult diamond_distance_certified(const KrausChannel& k,
                                                double gap_target = 3e-8) {
    using namespace detail;
    Mat j = choi_minus_identity(k);
    double scale = std::sqrt(std::max(0.0, eig_hermitian(j.dagger() * j).values.back()));
    DiamondResult res;
    if (scale < 1e-15) return res;  // channel equals the identity
    j *= cplx(1.0 / scale);

    const auto& basis = herm_basis4();
    Mat z = Mat::identity(4) * cplx(3.0);
    double mu = 8.0;
    double t = 1.0;
    double best_gap = 1e300, best_val = 0.0;

    for (int phase = 0; phase < 64; ++phase) {
        for (int iter = 0; iter < 60; ++iter) {
            BarrierEval e = eval_barrier(j, z, mu, true);
            if (!e.ok) throw SolverError("diamond: iterate left the cone");
            Mat grad_z = lift_in4(e.g) - e.inv_zj - e.inv_z;
            double grad_mu = t - e.g.trace().real();

            std::vector<double> h(17 * 17), rhs(17);
            for (int a = 0; a < 16; ++a) rhs[a] = -hs_inner(basis[a], grad_z).real();
            rhs[16] = -grad_mu;
            Mat gg = e.g * e.g;
            for (int a = 0; a < 16; ++a) {
                const Mat& ea = basis[a];
                Mat ha = e.inv_zj * ea * e.inv_zj + e.inv_z * ea * e.inv_z +
                         lift_in4(e.g * ptrace_out4(ea) * e.g);
                for (int b = a; b < 16; ++b) {
                    double v = hs_inner(basis[b], ha).real();
                    h[size_t(a) * 17 + b] = v;
                    h[size_t(b) * 17 + a] = v;
                }
                double cross = -hs_inner(ea, lift_in4(gg)).real();
                h[size_t(a) * 17 + 16] = cross;
                h[size_t(16) * 17 + a] = cross;
            }
            h[size_t(16) * 17 + 16] = gg.trace().real();

            std::vector<double> dir;
            if (!lu_solve(h, rhs, 17, dir)) break;
            double decrement = 0.0;
            for (int a = 0; a < 17; ++a) decrement += rhs[a] * dir[a];
            if (!std::isfinite(decrement) || decrement <= 0.0) break;

            Mat dz(4, 4);
            for (int a = 0; a < 16; ++a) dz += basis[a] * cplx(dir[a]);
            double dmu = dir[16];

            double f0 = t * mu + e.value;
            double slope = 0.0;
            for (int a = 0; a < 17; ++a) slope -= rhs[a] * dir[a];
            double step = 1.0;
            bool moved = false;
            while (step > 1e-13) {
                Mat z2 = z + dz * cplx(step);
                double mu2 = mu + step * dmu;
                BarrierEval e2 = eval_barrier(j, z2, mu2, false);
                if (e2.ok && t * mu2 + e2.value <= f0 + 0.25 * step * slope) {
                    z = std::move(z2);
                    mu = mu2;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            ++res.newton_steps;
            if (!moved || decrement < 1e-11) break;
        }
        if (t >= 1e7) {
            detail::PrimalCert c = detail::certify(j, z, mu, t);
            if (c.gap < best_gap) {
                best_gap = c.gap;
                best_val = c.value;
            }
            if (best_gap * scale <= gap_target) break;
        }
        if (t >= 1e13) break;
        t = std::min(t * (t < 1e8 ? 10.0 : 3.0), 1e13);
    }

    res.value = best_val * scale;
    res.gap = best_gap * scale;
    if (res.gap > 1e-7)
        throw SolverError("diamond: solver did not certify (gap " + std::to_string(res.gap) + ")");
    return res;
}

inline double diamond_distance(const KrausChannel& k) {
    return diamond_distance_certified(k).value;
}

}  // namespace qchan
