#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchan {

using cplx = std::complex<double>;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major complex matrix. Everything in this project is small
// (at most 2^7 x 2^7), so simplicity and determinism win over speed.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    Mat(int rows, int cols, std::initializer_list<cplx> vals)
        : rows_(rows), cols_(cols), a_(vals) {
        if (a_.size() != size_t(rows) * cols)
            throw ValidationError("Mat: initializer size mismatch");
    }

    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Mat& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, cplx s) { return a *= s; }
    friend Mat operator*(cplx s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ValidationError("Mat: matmul shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                cplx aik = a(i, k);
                if (aik == cplx(0.0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    Mat dagger() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    cplx trace() const {
        require_square("trace");
        cplx t = 0.0;
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_hermitian(double tol) const {
        if (!square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i; j < cols_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

    bool all_finite() const {
        for (const auto& v : a_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    void require_square(const char* what) const {
        if (!square()) throw ValidationError(std::string(what) + ": matrix must be square");
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ValidationError("Mat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<cplx> a_;
};

inline cplx hs_inner(const Mat& a, const Mat& b) {
    // Tr(a^dag b)
    cplx s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
    return s;
}

inline Mat tensor(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            cplx aij = a(i, j);
            if (aij == cplx(0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

struct EigResult {
    std::vector<double> values;  // ascending
    Mat vectors;                 // columns are eigenvectors
};

// Cyclic Jacobi eigendecomposition for Hermitian matrices.
inline EigResult eig_hermitian(const Mat& m_in) {
    m_in.require_square("eig_hermitian");
    int n = m_in.rows();
    Mat a = m_in;
    // symmetrize away roundoff so the rotations stay unitary
    for (int i = 0; i < n; ++i) {
        a(i, i) = cplx(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Mat v = Mat::identity(n);
    double scale = std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double m = std::abs(a(p, q));
                if (m <= 1e-300) continue;
                cplx u = a(p, q) / m;  // unit phase
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * m);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // columns: col_p' = c col_p - s u col_q ; col_q' = s u* col_p + c col_q
                for (int k = 0; k < n; ++k) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * u * akq;
                    a(k, q) = s * std::conj(u) * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * std::conj(u) * aqk;
                    a(q, k) = s * u * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * u * vkq;
                    v(k, q) = s * std::conj(u) * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult r;
    r.values.resize(n);
    r.vectors = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        r.values[j] = a(idx[j], idx[j]).real();
        for (int i = 0; i < n; ++i) r.vectors(i, j) = v(i, idx[j]);
    }
    return r;
}

// Tr sqrt(A^dag A): sum of singular values.
inline double trace_norm(const Mat& a) {
    a.require_square("trace_norm");
    EigResult e = eig_hermitian(a.dagger() * a);
    double s = 0.0;
    for (double lam : e.values) s += std::sqrt(std::max(0.0, lam));
    return s;
}

inline double min_eigenvalue(const Mat& hermitian) {
    return eig_hermitian(hermitian).values.front();
}

inline bool psd_check(const Mat& hermitian, double slack = 1e-10) {
    return min_eigenvalue(hermitian) >= -slack;
}

// Partial trace over the listed qubits (qubit 0 is the leftmost / most
// significant bit of the register index).
inline Mat partial_trace(const Mat& rho, int n_qubits, const std::vector<int>& traced) {
    if (rho.rows() != (1 << n_qubits) || !rho.square())
        throw ValidationError("partial_trace: dimension mismatch");
    for (int q : traced)
        if (q < 0 || q >= n_qubits) throw ValidationError("partial_trace: qubit out of range");

    std::vector<int> keep;
    for (int q = 0; q < n_qubits; ++q)
        if (std::find(traced.begin(), traced.end(), q) == traced.end()) keep.push_back(q);

    int nk = int(keep.size());
    int nt = n_qubits - nk;
    Mat out(1 << nk, 1 << nk);

    auto assemble = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        int ki = 0, ti = 0;
        for (int q = 0; q < n_qubits; ++q) {
            idx <<= 1;
            if (ki < nk && keep[ki] == q) {
                idx |= (kept_bits >> (nk - 1 - ki)) & 1;
                ++ki;
            } else {
                idx |= (traced_bits >> (nt - 1 - ti)) & 1;
                ++ti;
            }
        }
        return idx;
    };

    for (int i = 0; i < (1 << nk); ++i)
        for (int j = 0; j < (1 << nk); ++j) {
            cplx s = 0.0;
            for (int t = 0; t < (1 << nt); ++t) s += rho(assemble(i, t), assemble(j, t));
            out(i, j) = s;
        }
    return out;
}

}  // namespace qchan
