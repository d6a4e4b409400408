#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qchan/matrix.hpp"
#include "qchan/state.hpp"

namespace qchan {

// Completely positive trace-preserving map as a list of Kraus operators.
struct KrausChannel {
    std::vector<Mat> ops;
    std::string label;

    KrausChannel() = default;
    KrausChannel(std::vector<Mat> k, std::string lbl = "")
        : ops(std::move(k)), label(std::move(lbl)) {}

    int dim() const { return ops.empty() ? 0 : ops.front().rows(); }

    Mat apply1(const Mat& rho) const {
        Mat out(rho.rows(), rho.cols());
        for (const Mat& k : ops) out += k * rho * k.dagger();
        return out;
    }
};

inline KrausChannel unitary_channel(Mat u, std::string label = "") {
    return KrausChannel({std::move(u)}, std::move(label));
}

inline bool validate_cptp(const KrausChannel& k, double tol = 1e-10) {
    if (k.ops.empty()) return false;
    int d = k.dim();
    Mat s(d, d);
    for (const Mat& op : k.ops) {
        if (op.rows() != d || op.cols() != d) return false;
        if (!op.all_finite()) return false;
        s += op.dagger() * op;
    }
    s -= Mat::identity(d);
    return s.max_abs() <= tol;
}

// second channel runs after the first
inline KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
    KrausChannel r;
    r.label = second.label + "*" + first.label;
    for (const Mat& b : second.ops)
        for (const Mat& a : first.ops) r.ops.push_back(b * a);
    return r;
}

// Probabilistic mixture: apply channel i with probability w[i].
inline KrausChannel mixture(const std::vector<KrausChannel>& channels,
                            const std::vector<double>& w, std::string label = "mix") {
    if (channels.size() != w.size())
        throw ValidationError("mixture: weight count mismatch");
    KrausChannel r;
    r.label = std::move(label);
    for (size_t i = 0; i < channels.size(); ++i) {
        if (w[i] < -1e-14) throw ValidationError("mixture: negative weight");
        if (w[i] <= 0.0) continue;
        double s = std::sqrt(w[i]);
        for (const Mat& k : channels[i].ops) r.ops.push_back(k * cplx(s));
    }
    return r;
}

// Apply a single-qubit channel to one qubit of an n-qubit density matrix.
// Qubit 0 is the most significant bit of the register index.
inline Mat apply_on_qubit(const KrausChannel& k, const Mat& rho, int n_qubits, int target) {
    if (target < 0 || target >= n_qubits)
        throw ValidationError("apply_on_qubit: target out of range");
    if (k.dim() != 2) throw ValidationError("apply_on_qubit: channel must be single-qubit");
    int dim = 1 << n_qubits;
    unsigned mask = 1u << (n_qubits - 1 - target);
    Mat out(dim, dim);
    Mat tmp(dim, dim);
    for (const Mat& op : k.ops) {
        // tmp = (K on target) * rho
        for (int i = 0; i < dim; ++i) {
            int bi = (i & mask) ? 1 : 0;
            int i0 = i & ~mask, i1 = i | mask;
            cplx k0 = op(bi, 0), k1 = op(bi, 1);
            for (int j = 0; j < dim; ++j)
                tmp(i, j) = k0 * rho(i0, j) + k1 * rho(i1, j);
        }
        // out += tmp * (K on target)^dag
        for (int j = 0; j < dim; ++j) {
            int bj = (j & mask) ? 1 : 0;
            int j0 = j & ~mask, j1 = j | mask;
            cplx c0 = std::conj(op(bj, 0)), c1 = std::conj(op(bj, 1));
            for (int i = 0; i < dim; ++i)
                out(i, j) += tmp(i, j0) * c0 + tmp(i, j1) * c1;
        }
    }
    return out;
}

inline DensityMatrix apply(const KrausChannel& k, const DensityMatrix& rho, int target) {
    return DensityMatrix(rho.n_qubits, apply_on_qubit(k, rho.rho, rho.n_qubits, target));
}

// Choi matrix J = sum_ij |i><j| (x) E(|i><j|), input factor first.
// For trace-preserving E: partial trace over the output factor gives I.
inline Mat choi_of(const KrausChannel& k) {
    if (k.dim() != 2) throw ValidationError("choi_of: single-qubit channels only");
    Mat j(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) {
            Mat e(2, 2);
            e(i, jj) = 1.0;
            Mat out = k.apply1(e);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) j(2 * i + r, 2 * jj + c) = out(r, c);
        }
    return j;
}

}  // namespace qchan
