#pragma once

#include <cmath>
#include <stdexcept>

#include "qwell/model.hpp"

// Two-level superposition bookkeeping along the isothermal legs. The state is
// a mix of the n=1 and n=2 levels; the occupation probabilities adjust with L
// so that the expectation energy stays pinned to the leg's anchor value.

namespace qwell::superposition {

struct TwoLevelMix {
    double a1sq = 1.0; // ground-state occupation |a1|^2
    double a2sq = 0.0; // excited-state occupation |a2|^2
};

inline void validate(const TwoLevelMix& mix) {
    if (mix.a1sq < 0.0 || mix.a1sq > 1.0 || mix.a2sq < 0.0 || mix.a2sq > 1.0)
        throw std::domain_error("occupation probabilities must lie in [0, 1]");
    if (std::abs(mix.a1sq + mix.a2sq - 1.0) > 1e-12)
        throw std::domain_error("mix not normalized: |a1|^2 + |a2|^2 != 1");
}

inline double mix_energy(const TwoLevelMix& mix, double L,
                         const model::LambdaSpec& spec,
                         const model::PhysicalParams& p) {
    validate(mix);
    return mix.a1sq * model::energy_level(1, L, spec, p) +
           mix.a2sq * model::energy_level(2, L, spec, p);
}

namespace detail {

// Snap fp-noise overshoot at the leg endpoints back onto {0, 1}; anything
// further out signals a caller bug and is rejected.
inline double clamp_probability(double q, const char* what) {
    constexpr double slack = 1e-12;
    if (q < -slack || q > 1.0 + slack) throw std::out_of_range(what);
    if (std::abs(q) <= slack) return 0.0;
    if (std::abs(q - 1.0) <= slack) return 1.0;
    return q;
}

} // namespace detail

// Occupations on the hot isotherm, obtained by inverting
//   E_H = W(L)[4 + 5 lambda - (3 + 2 lambda)|a1|^2]
// for |a1|^2, with E_H = W(L1)[1 + 3 lambda]. Valid for L in [L1, L2].
inline TwoLevelMix hot_isotherm_mix(double L, double L1,
                                    const model::LambdaSpec& spec,
                                    const model::PhysicalParams& p) {
    model::require_positive_width(L);
    model::require_positive_width(L1);
    const double lambda = model::lambda_of(L, spec);
    const double lambda1 = model::lambda_of(L1, spec);
    const double ratio = (L * L) / (L1 * L1);
    const double a1sq = detail::clamp_probability(
        (4.0 + 5.0 * lambda - ratio * (1.0 + 3.0 * lambda1)) / (3.0 + 2.0 * lambda),
        "hot isotherm: L outside [L1, L2]");
    return {a1sq, 1.0 - a1sq};
}

// Occupations on the cold isotherm, inverting
//   E_C = W(L)[1 + 3 lambda + (3 + 2 lambda)|b2|^2]
// for |b2|^2, with E_C = W(L3)[4 + 5 lambda]. Valid for L in [L4, L3].
// Returned as a TwoLevelMix with a1sq = |b1|^2, a2sq = |b2|^2.
inline TwoLevelMix cold_isotherm_mix(double L, double L3,
                                     const model::LambdaSpec& spec,
                                     const model::PhysicalParams& p) {
    model::require_positive_width(L);
    model::require_positive_width(L3);
    const double lambda = model::lambda_of(L, spec);
    const double lambda3 = model::lambda_of(L3, spec);
    const double ratio = (L * L) / (L3 * L3);
    const double b2sq = detail::clamp_probability(
        (ratio * (4.0 + 5.0 * lambda3) - (1.0 + 3.0 * lambda)) / (3.0 + 2.0 * lambda),
        "cold isotherm: L outside [L4, L3]");
    return {1.0 - b2sq, b2sq};
}

} // namespace qwell::superposition
