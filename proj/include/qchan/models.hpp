#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qchan/elementary.hpp"
#include "qchan/kraus.hpp"

namespace qchan {

enum class ChannelTag { Identity, ADC, PolPi8, RZ, RH, DC, Pauli, CMCMixture };

inline std::string tag_name(ChannelTag t) {
    switch (t) {
        case ChannelTag::Identity: return "identity";
        case ChannelTag::ADC: return "adc";
        case ChannelTag::PolPi8: return "pol";
        case ChannelTag::RZ: return "rz";
        case ChannelTag::RH: return "rh";
        case ChannelTag::DC: return "dc";
        case ChannelTag::Pauli: return "pauli";
        case ChannelTag::CMCMixture: return "cmc";
    }
    return "?";
}

inline ChannelTag tag_from_name(const std::string& s) {
    if (s == "identity" || s == "id") return ChannelTag::Identity;
    if (s == "adc") return ChannelTag::ADC;
    if (s == "pol" || s == "polpi8") return ChannelTag::PolPi8;
    if (s == "rz") return ChannelTag::RZ;
    if (s == "rh") return ChannelTag::RH;
    if (s == "dc") return ChannelTag::DC;
    if (s == "pauli") return ChannelTag::Pauli;
    if (s == "cmc") return ChannelTag::CMCMixture;
    throw ValidationError("unknown channel tag: " + s);
}

// Tagged parametric noise family. strength is gamma for ADC, p for Pol/DC,
// theta (radians) for RZ/RH. extra holds (p_x,p_y,p_z) for Pauli and the
// member weights for CMCMixture.
struct ChannelModel {
    ChannelTag tag = ChannelTag::Identity;
    double strength = 0.0;
    std::vector<double> extra;

    ChannelModel() = default;
    ChannelModel(ChannelTag t, double s, std::vector<double> e = {})
        : tag(t), strength(s), extra(std::move(e)) {
        validate();
    }

    ChannelModel with_strength(double s) const { return ChannelModel(tag, s, extra); }

    void validate() const {
        switch (tag) {
            case ChannelTag::Identity:
                break;
            case ChannelTag::ADC:
            case ChannelTag::PolPi8:
            case ChannelTag::DC:
                if (strength < 0.0 || strength > 1.0)
                    throw ValidationError(tag_name(tag) + ": strength must be in [0,1]");
                break;
            case ChannelTag::RZ:
            case ChannelTag::RH:
                if (strength < 0.0 || strength >= M_PI)
                    throw ValidationError(tag_name(tag) + ": angle must be in [0, pi)");
                break;
            case ChannelTag::Pauli: {
                if (extra.size() != 3)
                    throw ValidationError("pauli: extra must hold (p_x,p_y,p_z)");
                double s = 0.0;
                for (double p : extra) {
                    if (p < 0.0 || p > 1.0) throw ValidationError("pauli: probability outside [0,1]");
                    s += p;
                }
                if (s > 1.0 + 1e-12) throw ValidationError("pauli: probabilities sum above 1");
                break;
            }
            case ChannelTag::CMCMixture: {
                double s = 0.0;
                for (double w : extra) {
                    if (w < -1e-12) throw ValidationError("cmc: negative weight");
                    s += w;
                }
                if (std::abs(s - 1.0) > 1e-10)
                    throw ValidationError("cmc: weights must sum to 1");
                break;
            }
        }
    }
};

inline KrausChannel kraus_of_model(const ChannelModel& m) {
    m.validate();
    switch (m.tag) {
        case ChannelTag::Identity:
            return unitary_channel(Mat::identity(2), "identity");
        case ChannelTag::ADC: {
            double g = m.strength;
            Mat k0(2, 2, {1, 0, 0, std::sqrt(1.0 - g)});
            Mat k1(2, 2, {0, std::sqrt(g), 0, 0});
            return KrausChannel({k0, k1}, "adc");
        }
        case ChannelTag::PolPi8: {
            double p = m.strength;
            Mat a = pauli(1) * cplx(std::cos(M_PI / 8)) + pauli(2) * cplx(std::sin(M_PI / 8));
            return KrausChannel({Mat::identity(2) * cplx(std::sqrt(1.0 - p)),
                                 a * cplx(std::sqrt(p))},
                                "pol");
        }
        case ChannelTag::RZ:
            return unitary_channel(rotation(0, 0, 1, m.strength), "rz");
        case ChannelTag::RH:
            return unitary_channel(rotation(1, 0, 1, m.strength), "rh");
        case ChannelTag::DC: {
            double p = m.strength;
            KrausChannel k;
            k.label = "dc";
            k.ops.push_back(Mat::identity(2) * cplx(std::sqrt(1.0 - p)));
            for (int i = 1; i <= 3; ++i) k.ops.push_back(pauli(i) * cplx(std::sqrt(p / 3.0)));
            return k;
        }
        case ChannelTag::Pauli: {
            double pi0 = 1.0 - m.extra[0] - m.extra[1] - m.extra[2];
            KrausChannel k;
            k.label = "pauli";
            k.ops.push_back(Mat::identity(2) * cplx(std::sqrt(std::max(0.0, pi0))));
            for (int i = 1; i <= 3; ++i)
                if (m.extra[i - 1] > 0.0)
                    k.ops.push_back(pauli(i) * cplx(std::sqrt(m.extra[i - 1])));
            return k;
        }
        case ChannelTag::CMCMixture: {
            ElementaryChannelSet set = elementary_set(false);
            if (m.extra.size() != set.members.size())
                throw ValidationError("cmc: expected one weight per elementary member");
            return mixture(set.members, m.extra, "cmc");
        }
    }
    throw ValidationError("kraus_of_model: unhandled tag");
}

}  // namespace qchan
