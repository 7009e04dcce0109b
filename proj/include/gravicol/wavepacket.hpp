#pragma once

#include "gravicol/units.hpp"
#include "gravicol/vec3.hpp"

namespace gravicol {

// Gaussian packet of a particle falling in the homogeneous field g with zero
// initial velocity. The center follows -g t^2 / 2 and the width spreads like
// the free packet.
struct PacketState {
    ParticleSpec spec;
    double t = 0.0;
    Vec3 g{};
    double sigma_t = 0.0; // width at t, set by make_packet_state
};

PacketState make_packet_state(const ParticleSpec& spec, double t, const Vec3& g,
                              const UnitSystem& u);

// Polar form psi = R exp(i S / hbar). Phase is S/hbar, dimensionless.
struct ComplexAmplitude {
    double modulus;
    double phase;
};

// sigma(t) = sigma0 sqrt(1 + hbar^2 t^2 / (4 m^2 sigma0^4)); even in t.
double width_at(const ParticleSpec& spec, double t, const UnitSystem& u);

// d sigma / dt.
double width_rate(const ParticleSpec& spec, double t, const UnitSystem& u);

// R(x, t): normalized Gaussian of width sigma(t) centered at -g t^2 / 2.
double amplitude(const PacketState& state, const Vec3& x, const UnitSystem& u);

// Action S(x, t) of the falling packet:
//   S = hbar tau |x + g t^2/2|^2 / (4 sigma^2) - m g.x t - m g^2 t^3 / 6
//       - (3/2) hbar atan(tau),          tau = hbar t / (2 m sigma0^2).
// The x-independent atan term is the spreading phase of the normalization
// factor; it matters for -dS/dt but not for the guidance field.
double packet_phase(const PacketState& state, const Vec3& x, const UnitSystem& u);

ComplexAmplitude packet_polar(const PacketState& state, const Vec3& x, const UnitSystem& u);

// grad S / m. Zero everywhere at t = 0; the packet center moves at -g t.
Vec3 guidance_velocity(const PacketState& state, const Vec3& x, const UnitSystem& u);

// Short-time spherical density rho(r) = R(r)^2 with sigma frozen at sigma0.
double density_spherical(const ParticleSpec& spec, double r);

// Short-time spherical amplitude R(r) = (2 pi sigma0^2)^(-3/4) exp(-r^2/(4 sigma0^2)).
double amplitude_spherical(const ParticleSpec& spec, double r);

} // namespace gravicol
