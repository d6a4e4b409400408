#pragma once

#include <array>
#include <string>

#include "qchan/kraus.hpp"
#include "qchan/matrix.hpp"
#include "qchan/state.hpp"

namespace qchan {

// Process matrix in the normalized Pauli basis sigma_i/sqrt(2). Trace 2 for
// trace-preserving channels; identity channel is diag(2,0,0,0).
struct ChiMatrix {
    Mat m{4, 4};

    ChiMatrix() { m(0, 0) = 2.0; }
    explicit ChiMatrix(Mat mm) : m(std::move(mm)) {
        if (m.rows() != 4 || m.cols() != 4) throw ValidationError("ChiMatrix: must be 4x4");
    }

    cplx operator()(int i, int j) const { return m(i, j); }

    void validate(double herm_tol = 1e-12, double trace_tol = 1e-10,
                  double cp_slack = 1e-9) const {
        if (!m.all_finite()) throw ValidationError("ChiMatrix: non-finite entries");
        if (!m.is_hermitian(herm_tol)) throw ValidationError("ChiMatrix: not Hermitian");
        if (std::abs(m.trace().real() - 2.0) > trace_tol || std::abs(m.trace().imag()) > trace_tol)
            throw ValidationError("ChiMatrix: trace != 2");
        // the Choi matrix is unitarily equivalent to chi, so CP <=> chi PSD
        double lam = min_eigenvalue(m);
        if (lam < -cp_slack)
            throw ValidationError("ChiMatrix: not completely positive (eigenvalue " +
                                  std::to_string(lam) + ")");
    }
};

inline ChiMatrix chi_from_kraus(const KrausChannel& k) {
    if (k.dim() != 2) throw ValidationError("chi_from_kraus: single-qubit channels only");
    Mat chi(4, 4);
    for (const Mat& op : k.ops) {
        std::array<cplx, 4> a;
        for (int m = 0; m < 4; ++m) a[m] = hs_inner(pauli_basis(m), op);
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) chi(m, n) += a[m] * std::conj(a[n]);
    }
    return ChiMatrix(std::move(chi));
}

inline KrausChannel kraus_from_chi(const ChiMatrix& chi, double cp_slack = 1e-9) {
    EigResult e = eig_hermitian(chi.m);
    if (e.values.front() < -cp_slack)
        throw ValidationError("kraus_from_chi: chi is not CP (eigenvalue " +
                              std::to_string(e.values.front()) + ")");
    KrausChannel k;
    k.label = "from_chi";
    for (int j = 3; j >= 0; --j) {
        double lam = e.values[j];
        if (lam <= 1e-14) continue;
        Mat op(2, 2);
        for (int m = 0; m < 4; ++m) op += pauli_basis(m) * (std::sqrt(lam) * e.vectors(m, j));
        k.ops.push_back(std::move(op));
    }
    if (k.ops.empty()) k.ops.push_back(Mat(2, 2));
    return k;
}

// Pauli twirl: keep the diagonal. The result is the chi matrix of a Pauli
// channel with the same average fidelity.
inline ChiMatrix twirl(const ChiMatrix& chi) {
    Mat t(4, 4);
    for (int i = 0; i < 4; ++i) t(i, i) = chi.m(i, i).real();
    return ChiMatrix(std::move(t));
}

// Bloch picture r -> T r + c of a channel given its chi matrix.
struct BlochAffine {
    double t[3][3] = {};
    double c[3] = {};

    BlochVector apply(const BlochVector& r) const {
        return {t[0][0] * r.x + t[0][1] * r.y + t[0][2] * r.z + c[0],
                t[1][0] * r.x + t[1][1] * r.y + t[1][2] * r.z + c[1],
                t[2][0] * r.x + t[2][1] * r.y + t[2][2] * r.z + c[2]};
    }

    // exact qubit trace distance between output and input for a pure state
    double displacement(const BlochVector& r) const {
        BlochVector o = apply(r);
        double dx = o.x - r.x, dy = o.y - r.y, dz = o.z - r.z;
        return 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
    }
};

inline Mat chi_apply(const ChiMatrix& chi, const Mat& rho) {
    Mat out(2, 2);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            if (chi.m(m, n) == cplx(0.0)) continue;
            out += chi.m(m, n) * (pauli_basis(m) * rho * pauli_basis(n).dagger());
        }
    return out;
}

inline BlochAffine bloch_affine_of(const ChiMatrix& chi) {
    BlochAffine b;
    for (int j = 0; j < 3; ++j) {
        Mat out = chi_apply(chi, pauli(j + 1) * cplx(0.5));
        for (int k = 0; k < 3; ++k) b.t[k][j] = (pauli(k + 1) * out).trace().real();
    }
    Mat out = chi_apply(chi, Mat::identity(2) * cplx(0.5));
    for (int k = 0; k < 3; ++k) b.c[k] = (pauli(k + 1) * out).trace().real();
    return b;
}

inline BlochAffine bloch_affine_of(const KrausChannel& k) {
    return bloch_affine_of(chi_from_kraus(k));
}

}  // namespace qchan
