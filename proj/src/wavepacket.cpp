#include "gravicol/wavepacket.hpp"

#include <cmath>

namespace gravicol {

namespace {
constexpr double two_pi = 6.283185307179586476925286766559;

// tau = hbar t / (2 m sigma0^2), the dimensionless spreading parameter.
double spreading_parameter(const ParticleSpec& spec, double t, const UnitSystem& u) {
    return u.constants.hbar * t / (2.0 * spec.mass * spec.sigma0 * spec.sigma0);
}
} // namespace

double width_at(const ParticleSpec& spec, double t, const UnitSystem& u) {
    validate(spec);
    const double tau = spreading_parameter(spec, t, u);
    return spec.sigma0 * std::sqrt(1.0 + tau * tau);
}

double width_rate(const ParticleSpec& spec, double t, const UnitSystem& u) {
    validate(spec);
    const double tau = spreading_parameter(spec, t, u);
    const double dtau_dt = u.constants.hbar / (2.0 * spec.mass * spec.sigma0 * spec.sigma0);
    return spec.sigma0 * tau * dtau_dt / std::sqrt(1.0 + tau * tau);
}

PacketState make_packet_state(const ParticleSpec& spec, double t, const Vec3& g,
                              const UnitSystem& u) {
    validate(spec);
    return {spec, t, g, width_at(spec, t, u)};
}

double amplitude(const PacketState& state, const Vec3& x, const UnitSystem& u) {
    const double sigma = width_at(state.spec, state.t, u);
    const Vec3 offset = x + state.g * (0.5 * state.t * state.t);
    return std::pow(two_pi * sigma * sigma, -0.75) *
           std::exp(-offset.norm2() / (4.0 * sigma * sigma));
}

double packet_phase(const PacketState& state, const Vec3& x, const UnitSystem& u) {
    const double hbar = u.constants.hbar;
    const double m = state.spec.mass;
    const double t = state.t;
    const double tau = spreading_parameter(state.spec, t, u);
    const double sigma = width_at(state.spec, t, u);
    const Vec3 offset = x + state.g * (0.5 * t * t);
    const double g2 = state.g.norm2();
    return hbar * tau * offset.norm2() / (4.0 * sigma * sigma) - m * state.g.dot(x) * t -
           m * g2 * t * t * t / 6.0 - 1.5 * hbar * std::atan(tau);
}

ComplexAmplitude packet_polar(const PacketState& state, const Vec3& x, const UnitSystem& u) {
    return {amplitude(state, x, u), packet_phase(state, x, u) / u.constants.hbar};
}

Vec3 guidance_velocity(const PacketState& state, const Vec3& x, const UnitSystem& u) {
    const double hbar = u.constants.hbar;
    const double m = state.spec.mass;
    const double t = state.t;
    const double tau = spreading_parameter(state.spec, t, u);
    const double sigma = width_at(state.spec, t, u);
    const Vec3 offset = x + state.g * (0.5 * t * t);
    // grad S / m; the offset coefficient equals sigma_dot / sigma.
    return offset * (hbar * tau / (2.0 * m * sigma * sigma)) - state.g * t;
}

double amplitude_spherical(const ParticleSpec& spec, double r) {
    validate(spec);
    if (r < 0.0) throw NegativeRadius();
    const double s2 = spec.sigma0 * spec.sigma0;
    return std::pow(two_pi * s2, -0.75) * std::exp(-r * r / (4.0 * s2));
}

double density_spherical(const ParticleSpec& spec, double r) {
    const double R = amplitude_spherical(spec, r);
    return R * R;
}

} // namespace gravicol
