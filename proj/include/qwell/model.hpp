#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qwell/numerics.hpp"

// Poschl-Teller and free-particle energy spectra as functions of the wall
// separation L, and the wall pressure by three routes: the literal textbook
// pressure formula, the exact 2E/L law (valid when lambda is held fixed in L),
// and a finite-difference Hellmann-Feynman estimate.
//
// Spectrum: E_n(L) = W(L) [n^2 + lambda (2n+1)],  W(L) = pi^2 hbar^2 / (2 m L^2).

namespace qwell::model {

enum class Units { natural, si };

struct PhysicalParams {
    double hbar = 1.0;
    double mass = 1.0;
    Units units = Units::natural;

    static PhysicalParams natural() { return {}; }
    static PhysicalParams si(double hbar, double mass) {
        return {hbar, mass, Units::si};
    }
};

inline void validate(const PhysicalParams& p) {
    if (!(p.hbar > 0.0)) throw std::domain_error("hbar must be > 0");
    if (!(p.mass > 0.0)) throw std::domain_error("mass must be > 0");
}

// How the anharmonicity parameter lambda is obtained.
//   frozen:        lambda held constant in L (the mode all closed forms assume)
//   free_particle: lambda = 0, the infinite-square-well limit
//   from_zeta:     lambda(L) from zeta(L) = c/L; experimental, only the
//                  finite-difference pressure is authoritative here
struct LambdaSpec {
    enum class Mode { frozen, free_particle, from_zeta };
    Mode mode = Mode::free_particle;
    double value = 0.0; // frozen: lambda >= 0; from_zeta: c > 0

    static LambdaSpec frozen(double lambda) {
        if (!(lambda >= 0.0)) throw std::domain_error("frozen lambda must be >= 0");
        return {Mode::frozen, lambda};
    }
    static LambdaSpec free_particle() { return {Mode::free_particle, 0.0}; }
    static LambdaSpec from_zeta(double c) {
        if (!(c > 0.0)) throw std::domain_error("from_zeta c must be > 0");
        return {Mode::from_zeta, c};
    }

    bool lambda_fixed_in_length() const { return mode != Mode::from_zeta; }
};

inline void require_positive_width(double L) {
    if (!(L > 0.0)) throw std::domain_error("well width L must be > 0");
}

inline void require_level(int n) {
    if (n < 1) throw std::domain_error("quantum number n must be >= 1");
}

// W(L) = pi^2 hbar^2 / (2 m L^2)
inline double scale_energy(double L, const PhysicalParams& p) {
    require_positive_width(L);
    validate(p);
    const double pi = std::numbers::pi;
    return pi * pi * p.hbar * p.hbar / (2.0 * p.mass * L * L);
}

inline double lambda_of(double L, const LambdaSpec& spec) {
    require_positive_width(L);
    switch (spec.mode) {
        case LambdaSpec::Mode::frozen:
            return spec.value;
        case LambdaSpec::Mode::free_particle:
            return 0.0;
        case LambdaSpec::Mode::from_zeta: {
            const double zeta = spec.value / L;
            const double r = 2.0 / (std::numbers::pi * zeta);
            return std::sqrt(r * r + 1.0) - 1.0;
        }
    }
    throw std::logic_error("unreachable lambda mode");
}

// mu = 1 - (lambda - 1)/(2 lambda - 1); pole at lambda = 1/2.
inline double mu_of(double lambda) {
    const double denom = 2.0 * lambda - 1.0;
    if (denom == 0.0)
        throw std::domain_error("mu(lambda) singular at lambda = 1/2");
    return 1.0 - (lambda - 1.0) / denom;
}

inline double energy_level(int n, double L, const LambdaSpec& spec,
                           const PhysicalParams& p) {
    require_level(n);
    const double lambda = lambda_of(L, spec);
    return scale_energy(L, p) * (double(n) * double(n) + lambda * (2.0 * n + 1.0));
}

// Literal textbook pressure P_n = (2W/L)[n^2 + 2 lambda (n + 1/2){1 - mu}].
// The {1 - mu} factor kills the lambda term at lambda = 1, so this route is
// kept out of the cycle computation and only surfaced by the verify report.
inline double pressure_paper(int n, double L, const LambdaSpec& spec,
                             const PhysicalParams& p) {
    require_level(n);
    const double lambda = lambda_of(L, spec);
    const double mu = mu_of(lambda);
    const double w = scale_energy(L, p);
    return 2.0 * w / L *
           (double(n) * double(n) + 2.0 * lambda * (n + 0.5) * (1.0 - mu));
}

// Exact Hellmann-Feynman pressure under L-independent lambda: E ~ 1/L^2 gives
// P = -dE/dL = 2E/L.
inline double pressure_exact(int n, double L, const LambdaSpec& spec,
                             const PhysicalParams& p) {
    if (!spec.lambda_fixed_in_length())
        throw std::invalid_argument(
            "pressure_exact requires a frozen lambda; use pressure_hf for from_zeta");
    return 2.0 * energy_level(n, L, spec, p) / L;
}

// Numeric Hellmann-Feynman pressure, -dE_n/dL by central difference with one
// Richardson step. Valid in every lambda mode.
inline double pressure_hf(int n, double L, const LambdaSpec& spec,
                          const PhysicalParams& p, double rel_step = 1e-6) {
    require_level(n);
    require_positive_width(L);
    if (rel_step > 1e-2)
        throw std::invalid_argument("pressure_hf rel_step must be <= 1e-2");
    auto energy = [&](double l) { return energy_level(n, l, spec, p); };
    return -numerics::derivative(energy, L, rel_step);
}

} // namespace qwell::model
