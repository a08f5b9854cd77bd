#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qwell/model.hpp"
#include "qwell/numerics.hpp"
#include "qwell/superposition.hpp"

// The four process curves P(L) of the cycle and the endpoint relations
// L2(L1), L4(L3). Leg order: hot isotherm L1->L2, adiabatic expansion L2->L3,
// cold isotherm L3->L4, adiabatic compression L4->L1.

namespace qwell::processes {

enum class LegKind { hot_isotherm, adiabat_expand, cold_isotherm, adiabat_compress };

struct LegSample {
    double L = 0.0;
    double P = 0.0;
    double E = 0.0;
    double a1sq = 0.0; // 1 or 0 on the adiabats
};

namespace detail {

// L-range check with a few-ulp slack so analytically computed endpoints pass.
inline void require_in_leg(double L, double lo, double hi, const char* what) {
    const double slack = 1e-12 * hi;
    if (L < lo - slack || L > hi + slack) throw std::out_of_range(what);
}

inline double endpoint_ratio(double lambda) {
    return (4.0 + 5.0 * lambda) / (1.0 + 3.0 * lambda);
}

} // namespace detail

// L2 = L1 sqrt((4 + 5 lambda)/(1 + 3 lambda)); the width at which the hot
// isotherm has fully promoted the state to n = 2. In from_zeta mode the
// relation is transcendental and solved by bisection on E_2(L2) = E_H.
inline double l2_of(double L1, const model::LambdaSpec& spec,
                    const model::PhysicalParams& p = {}) {
    model::require_positive_width(L1);
    if (spec.lambda_fixed_in_length())
        return L1 * std::sqrt(detail::endpoint_ratio(model::lambda_of(L1, spec)));
    const double e_hot = model::energy_level(1, L1, spec, p);
    auto gap = [&](double l) { return model::energy_level(2, l, spec, p) - e_hot; };
    double hi = 2.0 * L1;
    while (gap(hi) > 0.0) hi *= 2.0;
    return numerics::bisect(gap, L1, hi, {1e-13 * L1, 200});
}

// L4 = L3 sqrt((1 + 3 lambda)/(4 + 5 lambda)); inverse of l2_of in frozen mode.
inline double l4_of(double L3, const model::LambdaSpec& spec,
                    const model::PhysicalParams& p = {}) {
    model::require_positive_width(L3);
    if (spec.lambda_fixed_in_length())
        return L3 / std::sqrt(detail::endpoint_ratio(model::lambda_of(L3, spec)));
    const double e_cold = model::energy_level(2, L3, spec, p);
    auto gap = [&](double l) { return model::energy_level(1, l, spec, p) - e_cold; };
    double lo = 0.5 * L3;
    while (gap(lo) < 0.0) lo *= 0.5;
    return numerics::bisect(gap, lo, L3, {1e-13 * L3, 200});
}

// P1(L) = 2 E_H / L with E_H = W(L1)(1 + 3 lambda); L P constant on the leg.
inline double hot_isotherm_pressure(double L, double L1,
                                    const model::LambdaSpec& spec,
                                    const model::PhysicalParams& p) {
    detail::require_in_leg(L, L1, l2_of(L1, spec, p), "hot isotherm: L outside [L1, L2]");
    return 2.0 * model::energy_level(1, L1, spec, p) / L;
}

// P3(L) = 2 E_C / L with E_C = W(L3)(4 + 5 lambda).
inline double cold_isotherm_pressure(double L, double L3,
                                     const model::LambdaSpec& spec,
                                     const model::PhysicalParams& p) {
    detail::require_in_leg(L, l4_of(L3, spec, p), L3, "cold isotherm: L outside [L4, L3]");
    return 2.0 * model::energy_level(2, L3, spec, p) / L;
}

// Adiabat pressure 2 E_n(L)/L; L^3 P constant in frozen mode.
inline double adiabat_pressure(double L, int n, const model::LambdaSpec& spec,
                               const model::PhysicalParams& p) {
    if (n != 1 && n != 2)
        throw std::domain_error("adiabat legs use n = 1 or n = 2 only");
    return 2.0 * model::energy_level(n, L, spec, p) / L;
}

struct CycleGeometry {
    double L1 = 0.0, L2 = 0.0, L3 = 0.0, L4 = 0.0;
};

inline CycleGeometry make_geometry(double L1, double L3,
                                   const model::LambdaSpec& spec,
                                   const model::PhysicalParams& p = {}) {
    const double L2 = l2_of(L1, spec, p);
    if (!(L3 > L2))
        throw std::domain_error("degenerate cycle: L3 must exceed L2(L1)");
    return {L1, L2, L3, l4_of(L3, spec, p)};
}

// `count` samples uniform in L over the leg interval, in traversal order
// (compression legs run from larger to smaller L).
inline std::vector<LegSample> sample_leg(LegKind kind, const CycleGeometry& g,
                                         const model::LambdaSpec& spec,
                                         const model::PhysicalParams& p, int count) {
    if (count < 2) throw std::invalid_argument("sample count must be >= 2");
    double from = 0.0, to = 0.0;
    switch (kind) {
        case LegKind::hot_isotherm: from = g.L1; to = g.L2; break;
        case LegKind::adiabat_expand: from = g.L2; to = g.L3; break;
        case LegKind::cold_isotherm: from = g.L3; to = g.L4; break;
        case LegKind::adiabat_compress: from = g.L4; to = g.L1; break;
    }
    std::vector<LegSample> samples;
    samples.reserve(size_t(count));
    for (int i = 0; i < count; ++i) {
        const double t = double(i) / double(count - 1);
        const double L = (i == count - 1) ? to : from + t * (to - from);
        LegSample s;
        s.L = L;
        switch (kind) {
            case LegKind::hot_isotherm: {
                const auto mix = superposition::hot_isotherm_mix(L, g.L1, spec, p);
                s.P = hot_isotherm_pressure(L, g.L1, spec, p);
                s.E = superposition::mix_energy(mix, L, spec, p);
                s.a1sq = mix.a1sq;
                break;
            }
            case LegKind::adiabat_expand:
                s.P = adiabat_pressure(L, 2, spec, p);
                s.E = model::energy_level(2, L, spec, p);
                s.a1sq = 0.0;
                break;
            case LegKind::cold_isotherm: {
                const auto mix = superposition::cold_isotherm_mix(L, g.L3, spec, p);
                s.P = cold_isotherm_pressure(L, g.L3, spec, p);
                s.E = superposition::mix_energy(mix, L, spec, p);
                s.a1sq = mix.a1sq;
                break;
            }
            case LegKind::adiabat_compress:
                s.P = adiabat_pressure(L, 1, spec, p);
                s.E = model::energy_level(1, L, spec, p);
                s.a1sq = 1.0;
                break;
        }
        samples.push_back(s);
    }
    return samples;
}

// All four legs with `count` samples each; corner samples are copied from the
// preceding leg so adjacent legs share them bit-identically.
inline std::vector<std::vector<LegSample>> sample_cycle(const CycleGeometry& g,
                                                        const model::LambdaSpec& spec,
                                                        const model::PhysicalParams& p,
                                                        int count) {
    std::vector<std::vector<LegSample>> legs;
    legs.push_back(sample_leg(LegKind::hot_isotherm, g, spec, p, count));
    legs.push_back(sample_leg(LegKind::adiabat_expand, g, spec, p, count));
    legs.push_back(sample_leg(LegKind::cold_isotherm, g, spec, p, count));
    legs.push_back(sample_leg(LegKind::adiabat_compress, g, spec, p, count));
    for (size_t i = 1; i < legs.size(); ++i)
        legs[i].front() = legs[i - 1].back();
    return legs;
}

} // namespace qwell::processes
