#pragma once

// Solenoid field configuration: uniform B inside a cylinder of radius R,
// zero outside, with vector potential B*rho/2 (inside) and gamma/rho
// (outside), both azimuthal. Natural units, hbar = c = 1.

#include <abflux/error.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace abflux {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

    constexpr double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

/// A point in space, stored in Cartesian form. Cylindrical coordinates are
/// derived on demand so no chart ambiguity ever enters the stored data.
class Point {
public:
    constexpr Point() = default;
    Point(double x, double y, double z = 0.0) : x_(x), y_(y), z_(z) {
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw Error(ErrorCode::InvalidField, "point coordinates must be finite");
    }

    static Point cylindrical(double rho, double phi, double z = 0.0) {
        return {rho * std::cos(phi), rho * std::sin(phi), z};
    }

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }
    Vec3 vec() const { return {x_, y_, z_}; }

    double rho() const { return std::hypot(x_, y_); }

    /// Azimuth in [0, 2pi). Undefined on the z-axis.
    double phi() const {
        if (x_ == 0.0 && y_ == 0.0)
            throw Error(ErrorCode::AzimuthUndefined, "azimuth is undefined on the z-axis");
        double a = std::atan2(y_, x_);
        if (a < 0.0) a += 2.0 * std::numbers::pi;
        if (a >= 2.0 * std::numbers::pi) a = 0.0;
        return a;
    }

    Point shifted(Vec3 d) const { return {x_ + d.x, y_ + d.y, z_ + d.z}; }

private:
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 0.0;
};

/// Which C^1 piece of the configuration a point belongs to.
enum class Region { interior, exterior };

class SolenoidField {
public:
    SolenoidField(double B, double R, double gamma) : B_(B), R_(R), gamma_(gamma) {
        if (!std::isfinite(B) || !std::isfinite(R) || !std::isfinite(gamma))
            throw Error(ErrorCode::InvalidField, "field parameters must be finite");
        if (!(R > 0.0))
            throw Error(ErrorCode::InvalidRadius, "solenoid radius must be positive, got " + std::to_string(R));
    }

    double B() const { return B_; }
    double R() const { return R_; }
    double gamma() const { return gamma_; }

    /// Deviation of gamma from the continuous choice B R^2 / 2.
    double kappa() const { return gamma_ - 0.5 * B_ * R_ * R_; }

    /// Half-width of the band around rho = R where nothing is defined.
    double boundary_band() const { return 1e-9 * R_; }

    /// Flux of B through the solenoid cross-section, pi B R^2.
    double enclosed_flux() const { return std::numbers::pi * B_ * R_ * R_; }

    Region region_of(const Point& p) const {
        const double rho = p.rho();
        if (std::abs(rho - R_) <= boundary_band())
            throw Error(ErrorCode::FieldUndefinedOnSolenoid,
                        "point at rho = " + std::to_string(rho) + " lies on the solenoid surface");
        return rho < R_ ? Region::interior : Region::exterior;
    }

    friend bool operator==(const SolenoidField&, const SolenoidField&) = default;

private:
    double B_;
    double R_;
    double gamma_;
};

/// Magnetic field of a single C^1 piece, evaluated without a region check.
inline Vec3 eval_B_in(const SolenoidField& f, Region region, const Point&) {
    return region == Region::interior ? Vec3{0.0, 0.0, f.B()} : Vec3{};
}

/// Vector potential of a single C^1 piece, in Cartesian components.
/// The exterior branch is singular on the axis; callers keep rho > 0.
inline Vec3 eval_A_in(const SolenoidField& f, Region region, const Point& p) {
    // phi_hat * rho = (-y, x, 0)
    if (region == Region::interior) {
        const double s = 0.5 * f.B();
        return {-s * p.y(), s * p.x(), 0.0};
    }
    const double rho2 = p.x() * p.x() + p.y() * p.y();
    const double s = f.gamma() / rho2;
    return {-s * p.y(), s * p.x(), 0.0};
}

inline Vec3 eval_B(const SolenoidField& f, const Point& p) {
    return eval_B_in(f, f.region_of(p), p);
}

inline Vec3 eval_A(const SolenoidField& f, const Point& p) {
    return eval_A_in(f, f.region_of(p), p);
}

/// Central-difference curl of the vector potential with step h. All six
/// stencil points must sit in the same region, clear of the boundary band.
inline Vec3 curl_fd(const SolenoidField& f, const Point& p, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw Error(ErrorCode::InvalidTolerance, "finite-difference step must be positive");

    const std::array<Vec3, 3> axes{Vec3{h, 0, 0}, Vec3{0, h, 0}, Vec3{0, 0, h}};
    std::array<Vec3, 3> plus{};
    std::array<Vec3, 3> minus{};

    auto region_at = [&](const Point& q) {
        try {
            return f.region_of(q);
        } catch (const Error&) {
            throw Error(ErrorCode::StencilCrossesSolenoid, "stencil point falls inside the boundary band");
        }
    };

    const Region region = region_at(p);
    for (std::size_t i = 0; i < 3; ++i) {
        const Point qp = p.shifted(axes[i]);
        const Point qm = p.shifted(-1.0 * axes[i]);
        if (region_at(qp) != region || region_at(qm) != region)
            throw Error(ErrorCode::StencilCrossesSolenoid, "stencil straddles rho = R");
        plus[i] = eval_A_in(f, region, qp);
        minus[i] = eval_A_in(f, region, qm);
    }

    // d[i] = dA/dx_i
    std::array<Vec3, 3> d{};
    for (std::size_t i = 0; i < 3; ++i) d[i] = (0.5 / h) * (plus[i] - minus[i]);

    return {d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
}

/// Continuous choice gamma = B R^2 / 2 (kappa = 0).
inline SolenoidField ab_standard(double B, double R) {
    if (!(R > 0.0))
        throw Error(ErrorCode::InvalidRadius, "solenoid radius must be positive, got " + std::to_string(R));
    return {B, R, 0.5 * B * R * R};
}

/// Adds kappa_delta / rho along phi_hat to the exterior potential.
inline SolenoidField gauge_shift(const SolenoidField& f, double kappa_delta) {
    return {f.B(), f.R(), f.gamma() + kappa_delta};
}

/// Field with a given kappa offset from the continuous choice.
inline SolenoidField with_kappa(double B, double R, double kappa) {
    return gauge_shift(ab_standard(B, R), kappa);
}

}  // namespace abflux
