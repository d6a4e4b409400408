#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qchan/chi.hpp"
#include "qchan/kraus.hpp"
#include "qchan/state.hpp"

namespace qchan {

// 1 - <psi| E(|psi><psi|) |psi>
inline double error_rate_state(const KrausChannel& k, const PureState& psi) {
    if (psi.n_qubits != 1 || k.dim() != 2)
        throw ValidationError("error_rate_state: single qubit only");
    Mat rho = density_of(psi).rho;
    Mat out = k.apply1(rho);
    cplx f = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) f += std::conj(psi.amps[i]) * out(i, j) * psi.amps[j];
    return std::clamp(1.0 - f.real(), 0.0, 1.0);
}

inline double error_rate_state(const BlochAffine& map, const BlochVector& r) {
    // 1 - F = (1 - r . E(r)) / 2 for pure input r
    BlochVector o = map.apply(r);
    return 0.5 * (1.0 - (r.x * o.x + r.y * o.y + r.z * o.z));
}

// Half trace norm of E(rho)-rho; for a qubit this is half the Euclidean
// Bloch displacement.
inline double trace_distance_state(const KrausChannel& k, const PureState& psi) {
    if (psi.n_qubits != 1 || k.dim() != 2)
        throw ValidationError("trace_distance_state: single qubit only");
    DensityMatrix rho = density_of(psi);
    BlochVector in = bloch_of(rho);
    BlochVector out = bloch_of(DensityMatrix(1, k.apply1(rho.rho)));
    double dx = out.x - in.x, dy = out.y - in.y, dz = out.z - in.z;
    return 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

inline MeanStd mean_std(const std::vector<double>& v) {
    MeanStd r;
    if (v.empty()) return r;
    for (double x : v) r.mean += x;
    r.mean /= double(v.size());
    if (v.size() > 1) {
        double s = 0.0;
        for (double x : v) s += (x - r.mean) * (x - r.mean);
        r.std = std::sqrt(s / double(v.size() - 1));  // sample normalization
    }
    return r;
}

// Average error rate over pure states. The mean has the closed form
// (2 - chi_II)/3; the standard deviation comes from the deterministic
// state sample.
inline MeanStd avg_error_rate(const KrausChannel& k, int n_states = 150) {
    ChiMatrix chi = chi_from_kraus(k);
    BlochAffine map = bloch_affine_of(chi);
    std::vector<double> vals;
    vals.reserve(n_states);
    for (const BlochVector& r : fibonacci_states(n_states))
        vals.push_back(error_rate_state(map, r));
    MeanStd ms = mean_std(vals);
    ms.mean = (2.0 - chi.m(0, 0).real()) / 3.0;
    return ms;
}

inline MeanStd avg_trace_distance(const KrausChannel& k, const std::vector<BlochVector>& states) {
    if (states.empty()) throw ValidationError("avg_trace_distance: empty sample");
    BlochAffine map = bloch_affine_of(k);
    std::vector<double> vals;
    vals.reserve(states.size());
    for (const BlochVector& r : states) vals.push_back(map.displacement(r));
    return mean_std(vals);
}

inline MeanStd avg_trace_distance(const KrausChannel& k, int n_states = 150) {
    return avg_trace_distance(k, fibonacci_states(n_states));
}

}  // namespace qchan
