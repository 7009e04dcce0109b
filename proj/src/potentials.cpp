#include "gravicol/potentials.hpp"

#include <cmath>

namespace gravicol {

namespace {
constexpr double sqrt_2_over_pi = 0.79788456080286535587989211986876;

void check(const ParticleSpec& p, double r) {
    validate(p);
    if (r < 0.0) throw NegativeRadius();
}
} // namespace

double quantum_potential(const ParticleSpec& p, double r, const UnitSystem& u) {
    check(p, r);
    const double hbar = u.constants.hbar;
    const double s2 = p.sigma0 * p.sigma0;
    return hbar * hbar * (6.0 * s2 - r * r) / (8.0 * p.mass * s2 * s2);
}

double grav_potential(const ParticleSpec& p, double r, const UnitSystem& u) {
    check(p, r);
    const double s2 = p.sigma0 * p.sigma0;
    return sqrt_2_over_pi * u.constants.G * p.mass * p.mass / p.sigma0 *
           (1.0 - std::exp(-r * r / (2.0 * s2)));
}

double quantum_force(const ParticleSpec& p, double r, const UnitSystem& u) {
    check(p, r);
    const double hbar = u.constants.hbar;
    const double s2 = p.sigma0 * p.sigma0;
    // Exact gradient of Q; the paper prints sigma0^2 in the denominator, which
    // is a slip (it is not -dQ/dr of its own Q).
    return hbar * hbar * r / (4.0 * p.mass * s2 * s2);
}

double grav_force(const ParticleSpec& p, double r, const UnitSystem& u) {
    check(p, r);
    const double s2 = p.sigma0 * p.sigma0;
    return -sqrt_2_over_pi * u.constants.G * p.mass * p.mass * r *
           std::exp(-r * r / (2.0 * s2)) / (s2 * p.sigma0);
}

RadialField make_radial_field(const ParticleSpec& p, const UnitSystem& u, RadialFieldKind kind) {
    switch (kind) {
    case RadialFieldKind::QuantumPotential:
        return {kind, [p, u](double r) { return quantum_potential(p, r, u); }};
    case RadialFieldKind::GravPotential:
        return {kind, [p, u](double r) { return grav_potential(p, r, u); }};
    case RadialFieldKind::QuantumForce:
        return {kind, [p, u](double r) { return quantum_force(p, r, u); }};
    case RadialFieldKind::GravForce:
        return {kind, [p, u](double r) { return grav_force(p, r, u); }};
    }
    throw DomainError("unknown radial field kind");
}

} // namespace gravicol
