#pragma once

#include <cmath>

#include "qchan/matrix.hpp"

namespace qchan {

inline const Mat& pauli(int i) {
    static const Mat sigma[4] = {
        Mat(2, 2, {1, 0, 0, 1}),
        Mat(2, 2, {0, 1, 1, 0}),
        Mat(2, 2, {0, cplx(0, -1), cplx(0, 1), 0}),
        Mat(2, 2, {1, 0, 0, -1}),
    };
    if (i < 0 || i > 3) throw ValidationError("pauli: index out of range");
    return sigma[i];
}

// sigma_i / sqrt(2): Hilbert-Schmidt orthonormal operator basis.
inline Mat pauli_basis(int i) {
    return pauli(i) * cplx(1.0 / std::sqrt(2.0));
}

struct BlochVector {
    double x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

struct PureState {
    int n_qubits = 1;
    std::vector<cplx> amps;

    PureState() : amps{1.0, 0.0} {}
    PureState(int n, std::vector<cplx> a) : n_qubits(n), amps(std::move(a)) {
        if (amps.size() != size_t(1) << n_qubits)
            throw ValidationError("PureState: amplitude count mismatch");
        double nrm = 0.0;
        for (const auto& v : amps) nrm += std::norm(v);
        if (std::abs(nrm - 1.0) > 1e-12)
            throw ValidationError("PureState: not normalized");
    }
};

struct DensityMatrix {
    int n_qubits = 1;
    Mat rho;

    DensityMatrix() : rho(Mat::identity(2) * cplx(0.5)) {}
    DensityMatrix(int n, Mat m) : n_qubits(n), rho(std::move(m)) {
        if (rho.rows() != (1 << n_qubits) || !rho.square())
            throw ValidationError("DensityMatrix: dimension mismatch");
    }

    void validate(double herm_tol = 1e-12, double psd_slack = 1e-10) const {
        if (!rho.all_finite()) throw ValidationError("DensityMatrix: non-finite entries");
        if (!rho.is_hermitian(herm_tol)) throw ValidationError("DensityMatrix: not Hermitian");
        if (std::abs(rho.trace().real() - 1.0) > herm_tol ||
            std::abs(rho.trace().imag()) > herm_tol)
            throw ValidationError("DensityMatrix: trace != 1");
        if (!psd_check(rho, psd_slack)) throw ValidationError("DensityMatrix: negative eigenvalue");
    }
};

inline DensityMatrix density_of(const PureState& psi) {
    int dim = 1 << psi.n_qubits;
    Mat rho(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) rho(i, j) = psi.amps[i] * std::conj(psi.amps[j]);
    return DensityMatrix(psi.n_qubits, std::move(rho));
}

inline BlochVector bloch_of(const DensityMatrix& rho) {
    if (rho.n_qubits != 1) throw ValidationError("bloch_of: single qubit only");
    BlochVector v;
    v.x = (pauli(1) * rho.rho).trace().real();
    v.y = (pauli(2) * rho.rho).trace().real();
    v.z = (pauli(3) * rho.rho).trace().real();
    return v;
}

inline DensityMatrix density_of(const BlochVector& v) {
    if (v.norm() > 1.0 + 1e-10) throw ValidationError("density_of: Bloch vector outside ball");
    Mat m = Mat::identity(2);
    m += pauli(1) * cplx(v.x);
    m += pauli(2) * cplx(v.y);
    m += pauli(3) * cplx(v.z);
    m *= 0.5;
    return DensityMatrix(1, std::move(m));
}

inline PureState pure_of(const BlochVector& v) {
    double n = v.norm();
    if (std::abs(n - 1.0) > 1e-10) throw ValidationError("pure_of: Bloch vector must be unit");
    double theta = std::acos(std::clamp(v.z / n, -1.0, 1.0));
    double phi = std::atan2(v.y, v.x);
    return PureState(1, {std::cos(theta / 2.0),
                         std::exp(cplx(0, phi)) * std::sin(theta / 2.0)});
}

inline PureState ket0() { return PureState(1, {1, 0}); }
inline PureState ket1() { return PureState(1, {0, 1}); }
inline PureState ket_plus() { return PureState(1, {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}); }
inline PureState ket_plus_i() {
    return PureState(1, {1.0 / std::sqrt(2.0), cplx(0, 1.0 / std::sqrt(2.0))});
}

// Deterministic near-uniform spherical sample (golden-angle lattice with the
// midpoint latitude rule). Used everywhere a "uniform state sample" is needed.
inline std::vector<BlochVector> fibonacci_states(int n) {
    if (n < 1) throw ValidationError("fibonacci_states: need n >= 1");
    std::vector<BlochVector> pts(n);
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        double z = 1.0 - (2.0 * k + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        pts[k] = {r * std::cos(ga * k), r * std::sin(ga * k), z};
    }
    return pts;
}

}  // namespace qchan
