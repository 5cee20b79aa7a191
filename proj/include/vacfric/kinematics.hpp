#pragma once

#include <cmath>
#include <string>

#include "vacfric/constants.hpp"
#include "vacfric/errors.hpp"
#include "vacfric/vec3.hpp"

//
// Doppler shift, aberration and the wavevector transform between the rest
// frame of an emitter and a frame in which it moves.
//
// Conventions: unprimed angles are measured in the emitter rest frame,
// primed angles in the frame where the emitter moves with velocity v;
// theta is the angle between the emission direction and v. beta = v/c may
// be negative, which gives the inverse transform.
//
// Two accuracy tiers run through the whole library: first_order is the
// working order of all closed forms; exact keeps full relativistic
// expressions and serves as the error yardstick.
//

namespace vacfric {

enum class Tier { first_order, exact };

inline std::string to_string(Tier t) {
    return t == Tier::first_order ? "first_order" : "exact";
}

namespace detail {
inline void check_beta(double beta) {
    if (!(std::abs(beta) < 1.0)) {
        throw ValidationError("beta must satisfy |beta| < 1, got " + std::to_string(beta));
    }
}
inline void check_cos(double c) {
    if (!(std::abs(c) <= 1.0)) {
        throw ValidationError("cos(theta) must lie in [-1,1], got " + std::to_string(c));
    }
}
inline void check_theta(double theta) {
    if (!(theta >= 0.0) || !(theta <= 3.14159265358979323847)) {
        throw ValidationError("theta must lie in [0,pi], got " + std::to_string(theta));
    }
}
}  // namespace detail

// gamma = (1 - beta^2)^(-1/2)
inline double lorentz_factor(double beta) {
    detail::check_beta(beta);
    return 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
}

// First-order observed frequency omega0*(1 + beta*cos(theta)).
inline double doppler_frequency(double omega0, double beta, double cos_theta) {
    if (!(omega0 >= 0.0)) throw ValidationError("doppler_frequency: omega0 must be >= 0");
    detail::check_beta(beta);
    detail::check_cos(cos_theta);
    return omega0 * (1.0 + beta * cos_theta);
}

// Exact relativistic shift gamma*omega0*(1 + beta*cos(theta)); the angle is
// the rest-frame emission angle. Only the exact tier uses this form.
inline double doppler_frequency_exact(double omega0, double beta, double cos_theta) {
    return lorentz_factor(beta) * doppler_frequency(omega0, beta, cos_theta);
}

// cos(theta') = (cos(theta) + beta) / (1 + beta*cos(theta))
inline double aberrate_exact_cos(double cos_theta, double beta) {
    detail::check_beta(beta);
    detail::check_cos(cos_theta);
    return (cos_theta + beta) / (1.0 + beta * cos_theta);
}

// Exact aberration, theta in [0,pi] -> theta' in [0,pi]. Computed from both
// the cosine and the gamma-containing sine line so the two stay consistent.
inline double aberrate_exact(double theta, double beta) {
    detail::check_theta(theta);
    detail::check_beta(beta);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double denom = 1.0 + beta * ct;
    const double cp = (ct + beta) / denom;
    const double sp = st / (lorentz_factor(beta) * denom);
    return std::atan2(sp, cp);
}

// Aberration in the 1729 form sin(theta - theta') = beta*sin(theta'),
// solved by fixed-point iteration theta' <- theta - asin(beta*sin(theta')).
// The iteration contracts for moderate beta; it is documented as a
// first-order-in-beta device and refuses to pretend otherwise: if the
// residual has not dropped below 1e-14 after 100 rounds we throw.
inline double aberrate_bradley(double theta, double beta) {
    detail::check_theta(theta);
    detail::check_beta(beta);
    const double st_cap = 1e-14;
    double tp = theta;
    for (int it = 0; it < 100; ++it) {
        const double next = theta - std::asin(beta * std::sin(tp));
        tp = next;
        const double residual = std::sin(theta - tp) - beta * std::sin(tp);
        if (std::abs(residual) < st_cap) return tp;
    }
    throw ConvergenceError("aberrate_bradley: no convergence at beta = " +
                           std::to_string(beta) + " (beta too large for this branch)");
}

// dOmega/dOmega' = (1 + beta*cos(theta))^2, to first order in beta.
inline double solid_angle_jacobian(double cos_theta, double beta) {
    detail::check_beta(beta);
    detail::check_cos(cos_theta);
    const double f = 1.0 + beta * cos_theta;
    return f * f;
}

// |v| < c enforced on construction.
class Velocity {
public:
    Velocity() = default;
    Velocity(double vx, double vy, double vz) : v_{vx, vy, vz} {
        if (!(norm(v_) < PhysicalConstants::c)) {
            throw ValidationError("Velocity: |v| must be < c");
        }
    }
    static Velocity zero() { return Velocity(); }

    double vx() const { return v_.x; }
    double vy() const { return v_.y; }
    double vz() const { return v_.z; }
    Vec3 vec() const { return v_; }
    double speed() const { return norm(v_); }
    double beta() const { return speed() / PhysicalConstants::c; }
    double gamma() const { return lorentz_factor(beta()); }

private:
    Vec3 v_{};
};

// Unit vector; normalized on construction, |n| = 1 within 1e-12.
class Direction {
public:
    Direction(double nx, double ny, double nz) : n_{nx, ny, nz} {
        const double len = norm(n_);
        if (!(len > 0.0) || !std::isfinite(len)) {
            throw ValidationError("Direction: zero or non-finite vector");
        }
        n_ = n_ / len;
    }
    explicit Direction(Vec3 v) : Direction(v.x, v.y, v.z) {}

    static Direction x_axis() { return Direction(1, 0, 0); }
    static Direction y_axis() { return Direction(0, 1, 0); }
    static Direction z_axis() { return Direction(0, 0, 1); }

    // Polar angle theta from +z, azimuth phi from +x.
    static Direction from_angles(double cos_theta, double phi) {
        detail::check_cos(cos_theta);
        const double st = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
        return Direction(st * std::cos(phi), st * std::sin(phi), cos_theta);
    }

    double nx() const { return n_.x; }
    double ny() const { return n_.y; }
    double nz() const { return n_.z; }
    Vec3 vec() const { return n_; }
    Direction operator-() const { Direction d = *this; d.n_ = -d.n_; return d; }

private:
    Vec3 n_;
};

// Free-space photon wavevector; omega = c|k|.
class WaveVector {
public:
    WaveVector() = default;
    WaveVector(double kx, double ky, double kz) : k_{kx, ky, kz} {}
    explicit WaveVector(Vec3 k) : k_{k} {}

    // k = (omega0/c) * n
    static WaveVector from_direction(double omega0, const Direction& n) {
        if (!(omega0 >= 0.0)) throw ValidationError("WaveVector: omega0 must be >= 0");
        return WaveVector((omega0 / PhysicalConstants::c) * n.vec());
    }

    double kx() const { return k_.x; }
    double ky() const { return k_.y; }
    double kz() const { return k_.z; }
    Vec3 vec() const { return k_; }
    double omega() const { return PhysicalConstants::c * norm(k_); }

private:
    Vec3 k_{};
};

// Wavevector seen in a frame where the emitter moves with velocity v.
// first_order: k' = k + omega*v/c^2 (the additive form).
// exact:       parallel component gamma*(k_par + beta*omega/c), transverse
//              unchanged.
inline WaveVector transform_wavevector(const WaveVector& k, const Velocity& v,
                                       Tier tier = Tier::first_order) {
    const double c = PhysicalConstants::c;
    const Vec3 kv = k.vec();
    const double speed = v.speed();
    if (speed == 0.0) return k;
    if (tier == Tier::first_order) {
        const double omega = k.omega();
        return WaveVector(kv + (omega / (c * c)) * v.vec());
    }
    const double omega = k.omega();
    const double beta = speed / c;
    const Vec3 vhat = v.vec() / speed;
    const double kpar = dot(kv, vhat);
    const Vec3 kperp = kv - kpar * vhat;
    const double g = lorentz_factor(beta);
    return WaveVector(kperp + (g * (kpar + beta * omega / c)) * vhat);
}

}  // namespace vacfric
