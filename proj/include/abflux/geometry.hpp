#pragma once

// Closed planar paths, circulation of the vector potential, winding numbers
// about the z-axis and direct flux integrals over discs and sectors.

#include <abflux/error.hpp>
#include <abflux/fields.hpp>
#include <abflux/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace abflux {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Circle {
    Point center;
    double radius = 1.0;
    int turns = 1;  ///< signed; negative traverses clockwise
};

struct Polyline {
    std::vector<Point> vertices;  ///< implicitly closed, last back to first
};

class ClosedPath {
public:
    static ClosedPath circle(Point center, double radius, int turns = 1) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw Error(ErrorCode::InvalidPath, "circle radius must be positive");
        if (turns == 0) throw Error(ErrorCode::InvalidPath, "circle turns must be nonzero");
        return ClosedPath(Circle{center, radius, turns});
    }

    static ClosedPath circle(double radius, int turns = 1) { return circle(Point{}, radius, turns); }

    static ClosedPath polyline(std::vector<Point> vertices) {
        if (vertices.size() < 3)
            throw Error(ErrorCode::InvalidPath, "polyline needs at least 3 vertices");
        return ClosedPath(Polyline{std::move(vertices)});
    }

    bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
    const Circle& as_circle() const { return std::get<Circle>(shape_); }
    const Polyline& as_polyline() const { return std::get<Polyline>(shape_); }
    const std::variant<Circle, Polyline>& shape() const { return shape_; }

    /// Same curve traversed in the opposite direction.
    ClosedPath reversed() const {
        if (is_circle()) {
            Circle c = as_circle();
            c.turns = -c.turns;
            return ClosedPath(c);
        }
        std::vector<Point> v(as_polyline().vertices.rbegin(), as_polyline().vertices.rend());
        return ClosedPath(Polyline{std::move(v)});
    }

private:
    explicit ClosedPath(std::variant<Circle, Polyline> s) : shape_(std::move(s)) {}
    std::variant<Circle, Polyline> shape_;
};

/// Minimum distance kept between any path and the solenoid surface.
inline double path_clearance(const SolenoidField& f) { return 1e-6 * f.R(); }

namespace detail {

struct RhoRange {
    double lo;
    double hi;
};

inline RhoRange segment_rho_range(const Point& a, const Point& b) {
    const double dx = b.x() - a.x();
    const double dy = b.y() - a.y();
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(-(a.x() * dx + a.y() * dy) / len2, 0.0, 1.0);
    const double lo = std::hypot(a.x() + t * dx, a.y() + t * dy);
    return {lo, std::max(a.rho(), b.rho())};
}

inline RhoRange circle_rho_range(const Circle& c) {
    const double d = c.center.rho();
    return {std::abs(d - c.radius), d + c.radius};
}

inline Region region_of_range(const SolenoidField& f, RhoRange r) {
    const double eps = path_clearance(f);
    if (r.lo <= f.R() + eps && r.hi >= f.R() - eps)
        throw Error(ErrorCode::PathCrossesSolenoid, "path comes within the clearance band of rho = R");
    return r.hi < f.R() ? Region::interior : Region::exterior;
}

inline Point lerp(const Point& a, const Point& b, double t) {
    return {a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y()), a.z() + t * (b.z() - a.z())};
}

}  // namespace detail

/// Line integral of A along the straight segment a -> b.
inline double segment_integral(const SolenoidField& f, const Point& a, const Point& b, const QuadratureSpec& spec) {
    const Region region = detail::region_of_range(f, detail::segment_rho_range(a, b));
    const Vec3 d = b.vec() - a.vec();
    auto integrand = [&](double t) { return eval_A_in(f, region, detail::lerp(a, b, t)).dot(d); };
    return integrate(integrand, 0.0, 1.0, spec);
}

/// Line integral of A along the arc of radius r about the z-axis from
/// azimuth theta0 to theta1 (counterclockwise when theta1 > theta0).
inline double arc_integral(const SolenoidField& f, double radius, double theta0, double theta1, double z,
                           const QuadratureSpec& spec) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidPath, "arc radius must be positive");
    const Region region = detail::region_of_range(f, {radius, radius});
    auto integrand = [&](double th) {
        const Point p = Point::cylindrical(radius, th, z);
        const Vec3 tangent{-radius * std::sin(th), radius * std::cos(th), 0.0};
        return eval_A_in(f, region, p).dot(tangent);
    };
    return integrate(integrand, theta0, theta1, spec);
}

/// Throws PathCrossesSolenoid unless the whole path keeps its clearance.
inline void check_clearance(const SolenoidField& f, const ClosedPath& path) {
    if (path.is_circle()) {
        detail::region_of_range(f, detail::circle_rho_range(path.as_circle()));
        return;
    }
    const auto& v = path.as_polyline().vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
        detail::region_of_range(f, detail::segment_rho_range(v[i], v[(i + 1) % v.size()]));
}

/// True if every point of the path lies outside the solenoid with clearance.
inline bool is_exterior(const SolenoidField& f, const ClosedPath& path) {
    const double limit = f.R() + path_clearance(f);
    if (path.is_circle()) return detail::circle_rho_range(path.as_circle()).lo > limit;
    const auto& v = path.as_polyline().vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (detail::segment_rho_range(v[i], v[(i + 1) % v.size()]).lo <= limit) return false;
    return true;
}

/// Circulation of A around the path.
inline double circulation(const SolenoidField& f, const ClosedPath& path, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (path.is_circle()) {
        const Circle& c = path.as_circle();
        const Region region = detail::region_of_range(f, detail::circle_rho_range(c));
        auto integrand = [&](double th) {
            const Point p{c.center.x() + c.radius * std::cos(th), c.center.y() + c.radius * std::sin(th),
                          c.center.z()};
            const Vec3 tangent{-c.radius * std::sin(th), c.radius * std::cos(th), 0.0};
            return eval_A_in(f, region, p).dot(tangent);
        };
        // Every turn retraces the same curve.
        return c.turns * integrate(integrand, 0.0, two_pi, spec);
    }
    const auto& v = path.as_polyline().vertices;
    check_clearance(f, path);
    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) total += segment_integral(f, v[i], v[(i + 1) % v.size()], spec);
    return total;
}

/// Signed number of times the path encircles the z-axis, from the
/// accumulated unwrapped azimuth.
inline int winding_number(const ClosedPath& path) {
    if (path.is_circle()) {
        const Circle& c = path.as_circle();
        const double d = c.center.rho();
        if (std::abs(d - c.radius) <= 1e-15 * std::max(d, c.radius))
            throw Error(ErrorCode::PathTouchesAxis, "circle passes through the z-axis");
        return d < c.radius ? c.turns : 0;
    }
    const auto& v = path.as_polyline().vertices;
    for (const auto& p : v)
        if (p.x() == 0.0 && p.y() == 0.0) throw Error(ErrorCode::PathTouchesAxis, "vertex on the z-axis");

    double total = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double cross = a.x() * b.y() - a.y() * b.x();
        const double dot = a.x() * b.x() + a.y() * b.y();
        const double dphi = std::atan2(cross, dot);
        if (std::abs(dphi) >= std::numbers::pi)
            throw Error(ErrorCode::WindingUnresolvable,
                        "segment " + std::to_string(i) + " sweeps an azimuth of pi or more");
        total += dphi;
    }
    return static_cast<int>(std::lround(total / two_pi));
}

/// Flux of B through the annular sector rho0 < rho < rho1, phi0 < phi < phi1
/// that lies inside one region, by a polar tensor-product rule.
inline double sector_flux(const SolenoidField& f, Region region, double rho0, double rho1, double phi0, double phi1,
                          const QuadratureSpec& spec) {
    auto radial = [&](double rho) {
        auto angular = [&](double phi) { return eval_B_in(f, region, Point::cylindrical(rho, phi)).z; };
        return rho * integrate(angular, phi0, phi1, spec);
    };
    return integrate(radial, rho0, rho1, spec);
}

/// Flux of B through the disc of radius L centred on the solenoid axis,
/// split at rho = R into the interior disc and the exterior annulus.
inline double flux_direct(const SolenoidField& f, double L, const QuadratureSpec& spec = {}) {
    spec.validate();
    if (!(L > 0.0) || !std::isfinite(L)) throw Error(ErrorCode::InvalidRadius, "disc radius must be positive");
    if (std::abs(L - f.R()) <= f.boundary_band())
        throw Error(ErrorCode::FieldUndefinedOnSolenoid, "disc edge lies on the solenoid surface");
    const double inner = std::min(L, f.R());
    double flux = sector_flux(f, Region::interior, 0.0, inner, 0.0, two_pi, spec);
    if (L > f.R()) flux += sector_flux(f, Region::exterior, f.R(), L, 0.0, two_pi, spec);
    return flux;
}

}  // namespace abflux
