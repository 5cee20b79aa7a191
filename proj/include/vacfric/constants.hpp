#pragma once

#include <cmath>

#include "vacfric/errors.hpp"

namespace vacfric {

//
// Physical constants, CODATA 2018.
//
// The speed of light is the defined SI value and is not configurable.
// The remaining constants are frozen so that golden-number tests stay
// bit-stable; tests that need different values go through for_testing().
//
struct PhysicalConstants {
    // m/s, exact by SI definition
    static constexpr double c = 299792458.0;

    double hbar = 1.054571817e-34;     // J s
    double eps0 = 8.8541878128e-12;    // F/m
    double amu  = 1.66053906660e-27;   // kg

    constexpr PhysicalConstants() = default;

    // Test-only: override the measured constants (c stays fixed).
    static PhysicalConstants for_testing(double hbar_, double eps0_, double amu_) {
        if (!(hbar_ > 0.0) || !(eps0_ > 0.0) || !(amu_ > 0.0)) {
            throw ValidationError("PhysicalConstants: all constants must be positive");
        }
        PhysicalConstants pc;
        pc.hbar = hbar_;
        pc.eps0 = eps0_;
        pc.amu = amu_;
        return pc;
    }
};

inline constexpr PhysicalConstants kConst{};

inline constexpr double kSpeedOfLight = PhysicalConstants::c;

}  // namespace vacfric
