#include "gravicol/units.hpp"

namespace gravicol {

UnitSystem make_units(UnitKind kind) {
    switch (kind) {
    case UnitKind::SI:
        return {UnitKind::SI,
                {codata2018::hbar, codata2018::G, codata2018::kB, codata2018::c}};
    case UnitKind::NaturalTest:
        return {UnitKind::NaturalTest, {1.0, 1.0, 1.0, codata2018::c}};
    }
    throw DomainError("unsupported unit kind");
}

UnitSystem make_units_custom(const PhysicalConstants& constants) {
    if (!(constants.hbar > 0.0 && constants.G > 0.0 && constants.kB > 0.0 && constants.c > 0.0))
        throw NonPositiveInput("every physical constant");
    return {UnitKind::SI, constants};
}

ScaleFactors sn_dimensionless_scale(const ParticleSpec& p, const UnitSystem& u) {
    if (!(p.mass > 0.0)) throw NonPositiveMass();
    const double hbar = u.constants.hbar;
    const double G = u.constants.G;
    const double m = p.mass;
    const double length = hbar * hbar / (G * m * m * m);
    const double time = hbar * hbar * hbar / (G * G * m * m * m * m * m);
    return {length, time, hbar / time};
}

} // namespace gravicol
