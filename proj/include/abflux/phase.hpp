#pragma once

// Holonomy phase of a charged wave function carried around the solenoid.
// A phase theta stands for the factor exp(-i theta); only theta mod 2 pi is
// stored.

#include <abflux/error.hpp>
#include <abflux/fields.hpp>
#include <abflux/geometry.hpp>
#include <abflux/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace abflux {

class PhaseFactor {
public:
    PhaseFactor() = default;

    /// Reduces an arbitrary real angle onto [0, 2pi).
    static PhaseFactor from_angle(double theta) { return PhaseFactor(reduce(theta)); }

    /// theta = 2 pi * turns, reducing the number of turns before scaling.
    static PhaseFactor from_turns(double turns) {
        double frac = turns - std::floor(turns);
        if (frac >= 1.0) frac = 0.0;
        return PhaseFactor(reduce(two_pi * frac));
    }

    double angle() const { return angle_; }

    /// Shortest distance between the two angles on the circle, in [0, pi].
    double distance(const PhaseFactor& o) const {
        const double d = std::abs(angle_ - o.angle_);
        return std::min(d, two_pi - d);
    }

    bool equals(const PhaseFactor& o, double tol = 1e-9) const { return distance(o) <= tol; }

    PhaseFactor operator-() const { return from_angle(-angle_); }
    PhaseFactor operator+(const PhaseFactor& o) const { return from_angle(angle_ + o.angle_); }

private:
    explicit PhaseFactor(double a) : angle_(a) {}

    static double reduce(double theta) {
        double a = std::fmod(theta, two_pi);
        if (a < 0.0) a += two_pi;
        if (a >= two_pi) a = 0.0;
        return a;
    }

    double angle_ = 0.0;
};

/// Phase picked up by a charge q transported around the path.
inline PhaseFactor holonomy(const SolenoidField& f, const ClosedPath& path, double q,
                            const QuadratureSpec& spec = {}) {
    if (!std::isfinite(q)) throw Error(ErrorCode::InvalidField, "charge must be finite");
    check_clearance(f, path);
    if (!is_exterior(f, path))
        throw Error(ErrorCode::PathNotExterior, "holonomy path must stay outside the solenoid");
    return PhaseFactor::from_angle(q * circulation(f, path, spec));
}

/// 2 pi q gamma w reduced mod 2 pi, without quadrature.
inline PhaseFactor phase_closed_form(double q, double gamma, int w) {
    return PhaseFactor::from_turns(q * gamma * static_cast<double>(w));
}

/// True when q (gamma1 - gamma2) is within tol of an integer, i.e. the two
/// exterior potentials give the same holonomy for charge q.
inline bool phases_equivalent(double q, double gamma1, double gamma2, double tol = 1e-9) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidTolerance, "tolerance must be positive");
    const double x = q * (gamma1 - gamma2);
    return std::abs(x - std::round(x)) <= tol;
}

/// The closed-form phase is periodic in gamma with period 1/q.
inline bool periodicity_check(double q, double gamma) {
    if (q == 0.0) throw Error(ErrorCode::ZeroCharge, "period 1/q is undefined for q = 0");
    return phase_closed_form(q, gamma + 1.0 / q, 1).equals(phase_closed_form(q, gamma, 1), 1e-12);
}

struct InterferometerGeometry {
    double slit_separation = 1.0;
    double screen_distance = 1000.0;
    double wavenumber = 1000.0;
    double half_extent = 10.0;
    int samples = 401;

    void validate() const {
        const bool ok = slit_separation > 0.0 && screen_distance > 0.0 && wavenumber > 0.0 && half_extent > 0.0 &&
                        std::isfinite(slit_separation) && std::isfinite(screen_distance) &&
                        std::isfinite(wavenumber) && std::isfinite(half_extent) && samples >= 2;
        if (!ok) throw Error(ErrorCode::InvalidGeometry, "interferometer parameters must be positive, samples >= 2");
    }
};

struct FringeSample {
    double x;
    double intensity;
};

/// Far-field two-beam pattern I(x) = 1 + cos(k d x / D - dphi) with the
/// solenoid between the beams, dphi = 2 pi q gamma mod 2 pi.
inline std::vector<FringeSample> interference(const SolenoidField& f, double q, const InterferometerGeometry& g) {
    g.validate();
    const double shift = phase_closed_form(q, f.gamma(), 1).angle();
    const double scale = g.wavenumber * g.slit_separation / g.screen_distance;
    const double step = 2.0 * g.half_extent / static_cast<double>(g.samples - 1);

    std::vector<FringeSample> out;
    out.reserve(static_cast<std::size_t>(g.samples));
    for (int i = 0; i < g.samples; ++i) {
        // Symmetric about the centre so x = 0 is hit exactly for odd sample counts.
        const double x = (i - 0.5 * (g.samples - 1)) * step;
        out.push_back({x, 1.0 + std::cos(scale * x - shift)});
    }
    return out;
}

}  // namespace abflux
