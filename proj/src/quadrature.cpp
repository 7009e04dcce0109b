#include "gravicol/quadrature.hpp"

#include <cmath>

#include "gravicol/potentials.hpp"
#include "gravicol/wavepacket.hpp"

namespace gravicol {

namespace {
constexpr double sqrt_2_over_pi = 0.79788456080286535587989211986876;
constexpr double one_over_pi = 0.31830988618379067153776752674503;

double require_converged(const QuadratureResult& r, const char* what) {
    if (!r.converged)
        throw MaxSubdivisionsExceeded(std::string(what) + ": quadrature did not converge");
    return r.value;
}
} // namespace

double mean_quantum_acceleration(const ParticleSpec& p, const UnitSystem& u,
                                 const QuadratureSpec& q) {
    validate(p);
    auto integrand = [&](double r) {
        return density_spherical(p, r) * 4.0 * M_PI * r * r *
               std::fabs(quantum_force(p, r, u));
    };
    const auto res = integrate_radial(integrand, p.sigma0, q);
    return require_converged(res, "mean_quantum_acceleration") / p.mass;
}

double mean_grav_acceleration(const ParticleSpec& p, const UnitSystem& u,
                              const QuadratureSpec& q) {
    validate(p);
    auto integrand = [&](double r) {
        return density_spherical(p, r) * 4.0 * M_PI * r * r * std::fabs(grav_force(p, r, u));
    };
    const auto res = integrate_radial(integrand, p.sigma0, q);
    return require_converged(res, "mean_grav_acceleration") / p.mass;
}

AveragedForces averaged_forces(const ParticleSpec& p, const UnitSystem& u,
                               const QuadratureSpec& q) {
    validate(p);
    auto fq = [&](double r) {
        return density_spherical(p, r) * 4.0 * M_PI * r * r *
               std::fabs(quantum_force(p, r, u));
    };
    auto fg = [&](double r) {
        return density_spherical(p, r) * 4.0 * M_PI * r * r * std::fabs(grav_force(p, r, u));
    };
    const auto rq = integrate_radial(fq, p.sigma0, q);
    const auto rg = integrate_radial(fg, p.sigma0, q);
    require_converged(rq, "averaged_forces.quantum");
    require_converged(rg, "averaged_forces.grav");

    const double hbar = u.constants.hbar;
    const double s3 = p.sigma0 * p.sigma0 * p.sigma0;
    AveragedForces out;
    out.mean_quantum_accel = rq.value / p.mass;
    out.mean_grav_accel = rg.value / p.mass;
    out.closed_form_quantum = sqrt_2_over_pi * hbar * hbar / (2.0 * p.mass * p.mass * s3);
    out.closed_form_grav = one_over_pi * u.constants.G * p.mass / (p.sigma0 * p.sigma0);
    out.quantum_error = rq.error_estimate / p.mass;
    out.grav_error = rg.error_estimate / p.mass;
    return out;
}

double enclosed_probability(const ParticleSpec& p, double R, const QuadratureSpec& q) {
    validate(p);
    if (R < 0.0) throw NegativeRadius();
    if (R == 0.0) return 0.0;
    auto integrand = [&](double r) { return density_spherical(p, r) * 4.0 * M_PI * r * r; };
    const auto res = integrate_interval(integrand, 0.0, R, q);
    return require_converged(res, "enclosed_probability");
}

double mean_square_velocity(const ParticleSpec& p, double g, double tau, PrefactorMode mode,
                            const QuadratureSpec& q) {
    validate(p);
    if (tau < 0.0) throw NonPositiveInput("tau");
    const double base = g * g * tau * tau;
    if (mode == PrefactorMode::PaperOrderOfMagnitude) return base;
    return base * enclosed_probability(p, p.sigma0, q);
}

} // namespace gravicol
