#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gravicol/errors.hpp"
#include "gravicol/units.hpp"

namespace gravicol {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_subdivisions = 2000;
    double truncation_radius = 12.0; // multiples of sigma0; Gaussian tail mass < 1e-30
};

inline void validate(const QuadratureSpec& q) {
    if (q.rel_tol < 1e-14) throw DomainError("rel_tol must be >= 1e-14");
    if (q.truncation_radius < 8.0) throw DomainError("truncation_radius must be >= 8 sigma0");
    if (q.max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
}

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int subdivisions = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK dqk15).
inline constexpr double kronrod_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kronrod_weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gauss_weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
    double a, b;
    double value;
    double error;
};

// One G7/K15 evaluation on [a, b] with the QUADPACK error heuristic.
template <class F>
PanelEstimate g7k15_panel(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    const double fc = f(center);
    fv[14] = fc;
    double k15 = kronrod_weights[7] * fc;
    double g7 = gauss_weights[3] * fc;
    double resabs = kronrod_weights[7] * std::fabs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod_nodes[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[2 * i] = f1;
        fv[2 * i + 1] = f2;
        k15 += kronrod_weights[i] * (f1 + f2);
        resabs += kronrod_weights[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) g7 += gauss_weights[i / 2] * (f1 + f2);
    }

    const double mean = 0.5 * k15;
    double resasc = kronrod_weights[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kronrod_weights[i] *
                  (std::fabs(fv[2 * i] - mean) + std::fabs(fv[2 * i + 1] - mean));

    const double value = k15 * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((k15 - g7) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * 2.220446049250313e-16 * resabs;
    err = std::max(err, round_floor);
    return {a, b, value, err};
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The worst panel is
// bisected until the summed error estimate drops below
// max(abs_tol, rel_tol * |result|) or the panel budget runs out; in the
// latter case the best estimate is returned with converged = false.
// Refinement order is fixed, so identical inputs give bit-identical output.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    validate(spec);
    if (a == b) return {0.0, 0.0, true, 0};

    std::vector<detail::PanelEstimate> panels;
    panels.reserve(64);
    panels.push_back(detail::g7k15_panel(f, a, b));

    double total = panels[0].value;
    double total_err = panels[0].error;
    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (splits >= spec.max_subdivisions) {
            return {total, total_err, false, splits};
        }
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;

        const detail::PanelEstimate old = panels[worst];
        const double mid = 0.5 * (old.a + old.b);
        if (!(old.a < mid && mid < old.b)) break; // interval exhausted at machine precision
        const auto left = detail::g7k15_panel(f, old.a, mid);
        const auto right = detail::g7k15_panel(f, mid, old.b);
        total += left.value + right.value - old.value;
        total_err += left.error + right.error - old.error;
        panels[worst] = left;
        panels.push_back(right);
        ++splits;
    }
    const bool ok = total_err <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
    return {total, total_err, ok, splits};
}

// Radial integral of f over (0, truncation_radius * sigma0].
template <class F>
QuadratureResult integrate_radial(F&& f, double sigma0, const QuadratureSpec& spec = {}) {
    if (!(sigma0 > 0.0)) throw NonPositiveLength();
    return integrate_interval(f, 0.0, spec.truncation_radius * sigma0, spec);
}

// Ensemble averages over the short-time spherical Gaussian distribution.
// Each numeric member is an adaptive quadrature of rho |grad potential| / m;
// the closed_form members are the same quantities integrated analytically.
struct AveragedForces {
    double mean_quantum_accel;  // m s^-2, quadrature
    double mean_grav_accel;     // m s^-2, quadrature
    double closed_form_quantum; // sqrt(2/pi) hbar^2 / (2 m^2 sigma0^3)
    double closed_form_grav;    // (1/pi) G m / sigma0^2
    double quantum_error;       // achieved quadrature error estimates
    double grav_error;
};

double mean_quantum_acceleration(const ParticleSpec& p, const UnitSystem& u,
                                 const QuadratureSpec& q = {});
double mean_grav_acceleration(const ParticleSpec& p, const UnitSystem& u,
                              const QuadratureSpec& q = {});
AveragedForces averaged_forces(const ParticleSpec& p, const UnitSystem& u,
                               const QuadratureSpec& q = {});

// Probability mass inside radius R of the sigma0 Gaussian. Closed form:
// erf(R/(sqrt(2) sigma0)) - sqrt(2/pi) (R/sigma0) exp(-R^2/(2 sigma0^2));
// evaluated here by quadrature so it can serve as the numeric route.
double enclosed_probability(const ParticleSpec& p, double R, const QuadratureSpec& q = {});

// Mean square velocity over the reduction interval. The paper keeps g^2 tau^2
// and drops the enclosed-probability factor; ExactPrefactor restores it.
double mean_square_velocity(const ParticleSpec& p, double g, double tau, PrefactorMode mode,
                            const QuadratureSpec& q = {});

} // namespace gravicol
