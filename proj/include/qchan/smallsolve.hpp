#pragma once

#include <cmath>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

// Dense real linear solve with partial pivoting; A is n x n row-major.
// Returns false if the system is numerically singular.
inline bool lu_solve(std::vector<double> a, std::vector<double> b, int n,
                     std::vector<double>& x) {
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        double bv = std::abs(a[size_t(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a[size_t(r) * n + col]);
            if (v > bv) { bv = v; best = r; }
        }
        if (bv < 1e-300) return false;
        if (best != col) {
            for (int c = 0; c < n; ++c) std::swap(a[size_t(col) * n + c], a[size_t(best) * n + c]);
            std::swap(b[col], b[best]);
        }
        double pivot = a[size_t(col) * n + col];
        for (int r = col + 1; r < n; ++r) {
            double f = a[size_t(r) * n + col] / pivot;
            if (f == 0.0) continue;
            a[size_t(r) * n + col] = 0.0;
            for (int c = col + 1; c < n; ++c) a[size_t(r) * n + c] -= f * a[size_t(col) * n + c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[size_t(r) * n + c] * x[c];
        x[r] = s / a[size_t(r) * n + r];
    }
    return true;
}

// Cholesky of a Hermitian positive definite complex matrix (lower factor).
// Returns false if the matrix is not positive definite.
inline bool cholesky(const Mat& a, Mat& l) {
    int n = a.rows();
    l = Mat(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            cplx s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            if (i == j) {
                double d = s.real();
                if (d <= 0.0 || !std::isfinite(d)) return false;
                l(i, i) = std::sqrt(d);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return true;
}

inline double cholesky_logdet(const Mat& l) {
    double s = 0.0;
    for (int i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
    return 2.0 * s;
}

// Inverse from the Cholesky factor: A^{-1} = L^{-dag} L^{-1}.
inline Mat cholesky_inverse(const Mat& l) {
    int n = l.rows();
    Mat linv(n, n);
    for (int c = 0; c < n; ++c) {
        linv(c, c) = 1.0 / l(c, c);
        for (int r = c + 1; r < n; ++r) {
            cplx s = 0.0;
            for (int k = c; k < r; ++k) s += l(r, k) * linv(k, c);
            linv(r, c) = -s / l(r, r);
        }
    }
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int k = std::max(i, j); k < n; ++k) s += std::conj(linv(k, i)) * linv(k, j);
            inv(i, j) = s;
        }
    return inv;
}

}  // namespace qchan
