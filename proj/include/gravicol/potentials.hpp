#pragma once

#include <functional>

#include "gravicol/units.hpp"

namespace gravicol {

// Closed-form fields of the short-time spherical Gaussian distribution.
// Potentials are energies relative to r = 0; forces carry explicit sign with
// outward positive, so the quantum force is positive and self-gravity negative.

// Q(r) = hbar^2 (6 sigma0^2 - r^2) / (8 m sigma0^4); maximum at r = 0.
double quantum_potential(const ParticleSpec& p, double r, const UnitSystem& u);

// U(r) = sqrt(2/pi) (G m^2 / sigma0) (1 - exp(-r^2 / (2 sigma0^2))).
// Monotone increasing from U(0) = 0: the well an attractive self-gravity digs.
double grav_potential(const ParticleSpec& p, double r, const UnitSystem& u);

// f_q(r) = -dQ/dr = hbar^2 r / (4 m sigma0^4), outward.
double quantum_force(const ParticleSpec& p, double r, const UnitSystem& u);

// f_g(r) = -dU/dr = -sqrt(2/pi) G m^2 r exp(-r^2/(2 sigma0^2)) / sigma0^3, inward.
double grav_force(const ParticleSpec& p, double r, const UnitSystem& u);

enum class RadialFieldKind { QuantumPotential, GravPotential, QuantumForce, GravForce };

struct RadialField {
    RadialFieldKind kind;
    std::function<double(double)> value_at;
};

RadialField make_radial_field(const ParticleSpec& p, const UnitSystem& u, RadialFieldKind kind);

} // namespace gravicol
