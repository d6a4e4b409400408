#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qchan/kraus.hpp"
#include "qchan/matrix.hpp"
#include "qchan/state.hpp"

namespace qchan {

// Rotation exp(-i angle (n.sigma)/2) about a (not necessarily unit) axis.
inline Mat rotation(double nx, double ny, double nz, double angle) {
    double nn = std::sqrt(nx * nx + ny * ny + nz * nz);
    Mat s = pauli(1) * cplx(nx / nn) + pauli(2) * cplx(ny / nn) + pauli(3) * cplx(nz / nn);
    Mat u = Mat::identity(2) * cplx(std::cos(angle / 2.0));
    u -= s * cplx(0, std::sin(angle / 2.0));
    return u;
}

// Eigenstates of the Pauli axes, ordered +x,-x,+y,-y,+z,-z.
inline PureState pauli_eigenstate(int idx) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (idx) {
        case 0: return PureState(1, {s, s});
        case 1: return PureState(1, {s, -s});
        case 2: return PureState(1, {s, cplx(0, s)});
        case 3: return PureState(1, {s, cplx(0, -s)});
        case 4: return PureState(1, {1, 0});
        case 5: return PureState(1, {0, 1});
        default: throw ValidationError("pauli_eigenstate: index out of range");
    }
}

// The stabilizer-simulable building blocks used for channel approximation:
// either the four Pauli unitaries only, or the full set of 24 single-qubit
// Clifford unitaries plus the 18 measurement-induced translations
// {measure axis a, send outcome +/- to eigenstate b} with Kraus pair
// {|b><+a|, |b><-a|}.
struct ElementaryChannelSet {
    std::vector<KrausChannel> members;
    bool pauli_only = false;
};

inline std::vector<Mat> clifford_unitaries() {
    std::vector<Mat> us;
    us.push_back(Mat::identity(2));
    // principal axes, quarter and half turns
    const double axes3[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& ax : axes3)
        for (double ang : {M_PI / 2, M_PI, 3 * M_PI / 2})
            us.push_back(rotation(ax[0], ax[1], ax[2], ang));
    // body diagonals, third turns
    const double diag4[4][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    for (const auto& ax : diag4)
        for (double ang : {2 * M_PI / 3, 4 * M_PI / 3})
            us.push_back(rotation(ax[0], ax[1], ax[2], ang));
    // edge axes, half turns
    const double edge6[6][3] = {{1, 1, 0}, {1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}};
    for (const auto& ax : edge6) us.push_back(rotation(ax[0], ax[1], ax[2], M_PI));
    return us;
}

inline ElementaryChannelSet elementary_set(bool pauli_only) {
    ElementaryChannelSet set;
    set.pauli_only = pauli_only;
    if (pauli_only) {
        const char* names[4] = {"I", "X", "Y", "Z"};
        for (int i = 0; i < 4; ++i)
            set.members.push_back(unitary_channel(pauli(i), names[i]));
        return set;
    }
    auto us = clifford_unitaries();
    for (size_t i = 0; i < us.size(); ++i)
        set.members.push_back(unitary_channel(us[i], "C" + std::to_string(i)));
    const char* axis_names = "XYZ";
    for (int a = 0; a < 3; ++a) {
        PureState plus = pauli_eigenstate(2 * a);
        PureState minus = pauli_eigenstate(2 * a + 1);
        for (int b = 0; b < 6; ++b) {
            PureState tgt = pauli_eigenstate(b);
            Mat k1(2, 2), k2(2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    k1(r, c) = tgt.amps[r] * std::conj(plus.amps[c]);
                    k2(r, c) = tgt.amps[r] * std::conj(minus.amps[c]);
                }
            std::string lbl = std::string("M") + axis_names[a] + "->" + std::to_string(b);
            set.members.push_back(KrausChannel({k1, k2}, lbl));
        }
    }
    return set;
}

}  // namespace qchan
