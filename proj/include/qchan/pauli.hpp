#pragma once

#include <string>

#include "qchan/matrix.hpp"
#include "qchan/state.hpp"

namespace qchan {

// Pauli operator on a register, e.g. "ZZI". Letter k acts on qubit k, and
// qubit 0 is the most significant bit of the register index. Phase is a
// power of i (0..3 -> +1, +i, -1, -i).
struct PauliString {
    std::string letters;
    int phase_power = 0;

    PauliString() = default;
    PauliString(std::string s, int ph = 0) : letters(std::move(s)), phase_power(((ph % 4) + 4) % 4) {
        for (char c : letters)
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
                throw ValidationError("PauliString: invalid letter");
    }

    int size() const { return int(letters.size()); }

    int weight() const {
        int w = 0;
        for (char c : letters)
            if (c != 'I') ++w;
        return w;
    }

    cplx phase() const {
        static const cplx ph[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
        return ph[phase_power];
    }

    bool commutes_with(const PauliString& o) const {
        if (size() != o.size()) throw ValidationError("PauliString: size mismatch");
        int anti = 0;
        for (int i = 0; i < size(); ++i) {
            char a = letters[i], b = o.letters[i];
            if (a != 'I' && b != 'I' && a != b) ++anti;
        }
        return anti % 2 == 0;
    }

    PauliString times(const PauliString& o) const {
        if (size() != o.size()) throw ValidationError("PauliString: size mismatch");
        PauliString r;
        r.letters.resize(letters.size());
        int ph = phase_power + o.phase_power;
        for (int i = 0; i < size(); ++i) {
            char a = letters[i], b = o.letters[i];
            if (a == 'I') { r.letters[i] = b; continue; }
            if (b == 'I') { r.letters[i] = a; continue; }
            if (a == b) { r.letters[i] = 'I'; continue; }
            // XY=iZ, YZ=iX, ZX=iY and the reverses pick up -i
            auto rank = [](char c) { return c == 'X' ? 0 : (c == 'Y' ? 1 : 2); };
            char prod = 'X' + 0;
            static const char table[3][3] = {{'I', 'Z', 'Y'}, {'Z', 'I', 'X'}, {'Y', 'X', 'I'}};
            prod = table[rank(a)][rank(b)];
            r.letters[i] = prod;
            int diff = (rank(b) - rank(a) + 3) % 3;
            ph += (diff == 1) ? 1 : 3;  // cyclic order gains +i, anticyclic -i
        }
        r.phase_power = ((ph % 4) + 4) % 4;
        return r;
    }

    Mat matrix() const {
        Mat m = Mat::identity(1);
        for (char c : letters) {
            int idx = c == 'I' ? 0 : (c == 'X' ? 1 : (c == 'Y' ? 2 : 3));
            m = tensor(m, pauli(idx));
        }
        m *= phase();
        return m;
    }

    // Symplectic masks (qubit 0 = most significant bit). The operator acts on
    // basis states as letters-wise X^x Z^z with an extra i per Y.
    struct Masks {
        unsigned x = 0, z = 0;
        int y_count = 0;
    };
    Masks masks() const {
        Masks mk;
        int n = size();
        for (int i = 0; i < n; ++i) {
            unsigned bit = 1u << (n - 1 - i);
            char c = letters[i];
            if (c == 'X' || c == 'Y') mk.x |= bit;
            if (c == 'Z' || c == 'Y') mk.z |= bit;
            if (c == 'Y') ++mk.y_count;
        }
        return mk;
    }
};

}  // namespace qchan
