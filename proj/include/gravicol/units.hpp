#pragma once

#include "gravicol/errors.hpp"

namespace gravicol {

// CODATA 2018 values, fixed here so that every emitted number is reproducible
// bit for bit. c enters only the relativistic Unruh comparison.
struct PhysicalConstants {
    double hbar; // J s
    double G;    // m^3 kg^-1 s^-2
    double kB;   // J K^-1
    double c;    // m s^-1
};

namespace codata2018 {
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double G = 6.67430e-11;
inline constexpr double kB = 1.380649e-23;
inline constexpr double c = 299792458.0;
inline constexpr double planck_mass = 2.176434e-8; // kg, used in tests and docs
} // namespace codata2018

enum class UnitKind { SI, NaturalTest };

struct UnitSystem {
    UnitKind kind;
    PhysicalConstants constants;
};

// SI: CODATA 2018. NaturalTest: hbar = G = kB = 1 exactly, c kept at its SI
// value (it never cancels against the other constants in this model).
UnitSystem make_units(UnitKind kind);

// For tests that need to move a single constant (e.g. the c -> infinity trend).
UnitSystem make_units_custom(const PhysicalConstants& constants);

// The paper states its criteria with "~" and drops O(1) factors.
// PaperOrderOfMagnitude reproduces the printed formulas; ExactPrefactor keeps
// every constant that the averaging integrals actually produce. Every derived
// criterion, time and temperature records which mode produced it.
enum class PrefactorMode { PaperOrderOfMagnitude, ExactPrefactor };

// Mass plus initial packet width: the two free physical inputs everywhere.
struct ParticleSpec {
    double mass;   // kg
    double sigma0; // m
};

inline void validate(const ParticleSpec& p) {
    if (!(p.mass > 0.0)) throw NonPositiveMass();
    if (!(p.sigma0 > 0.0)) throw NonPositiveLength();
}

// Length/time/energy scales that reduce the self-gravitating Schrodinger
// system to unit coefficients:
//   L* = hbar^2/(G m^3),  T* = hbar^3/(G^2 m^5),  E* = hbar/T*.
// L* is the stationary-width criterion and T* the reduction time, so the
// rescaled problem has the transition at width 1 and collapse at time 1.
struct ScaleFactors {
    double length;
    double time;
    double energy;
};

ScaleFactors sn_dimensionless_scale(const ParticleSpec& p, const UnitSystem& u);

} // namespace gravicol
