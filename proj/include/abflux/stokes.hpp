#pragma once

// Stokes' theorem on the disc of radius L, split into the solenoid
// cross-section D1 (rho < R) and the annulus D2 (R < rho < L) so that the
// potential is C^1 on each piece. Boundary circles at rho = R sit where the
// field is undefined; they are evaluated as one-sided limits.

#include <abflux/error.hpp>
#include <abflux/fields.hpp>
#include <abflux/geometry.hpp>
#include <abflux/quadrature.hpp>

#include <array>
#include <cmath>
#include <functional>

namespace abflux {

struct StokesReport {
    double phi_1 = 0.0;        ///< flux through D1, from the circulation of A_I on its boundary
    double phi_2 = 0.0;        ///< flux through D2, outer minus inner boundary circulation
    double phi_total = 0.0;    ///< phi_1 + phi_2
    double circ_outer = 0.0;   ///< circulation on rho = L
    double circ_inner = 0.0;   ///< circulation of A_E on rho = R, exterior limit
    double discrepancy = 0.0;  ///< circ_outer - phi_total, equals 2 pi kappa
};

/// Relative offsets from rho = R at which the one-sided limits are sampled.
inline constexpr std::array<double, 3> limit_offsets{1e-4, 5e-5, 2.5e-5};

/// Extrapolates g(delta) to delta -> 0 from samples at limit_offsets
/// (each half the previous), eliminating the O(delta) and O(delta^2) terms.
inline double richardson_limit(const std::function<double(double)>& g) {
    const double g1 = g(limit_offsets[0]);
    const double g2 = g(limit_offsets[1]);
    const double g3 = g(limit_offsets[2]);
    const double r12 = 2.0 * g2 - g1;
    const double r23 = 2.0 * g3 - g2;
    return (4.0 * r23 - r12) / 3.0;
}

/// Circulation of A_I around rho = R, approached from inside.
inline double interior_boundary_circulation(const SolenoidField& f, const QuadratureSpec& spec) {
    return richardson_limit(
        [&](double d) { return circulation(f, ClosedPath::circle(f.R() * (1.0 - d)), spec); });
}

/// Circulation of A_E around rho = R, approached from outside.
inline double exterior_boundary_circulation(const SolenoidField& f, const QuadratureSpec& spec) {
    return richardson_limit(
        [&](double d) { return circulation(f, ClosedPath::circle(f.R() * (1.0 + d)), spec); });
}

namespace detail {

inline void check_outer_radius(const SolenoidField& f, double L) {
    if (!std::isfinite(L) || !(L > f.R() + 10.0 * f.boundary_band()))
        throw Error(ErrorCode::InvalidRadius, "outer radius L must exceed the solenoid radius");
}

}  // namespace detail

inline StokesReport verify_stokes(const SolenoidField& f, double L, const QuadratureSpec& spec = {}) {
    spec.validate();
    detail::check_outer_radius(f, L);

    // D1: Stokes holds on the C^1 interior piece, checked against the area integral.
    const double phi_1_area = sector_flux(f, Region::interior, 0.0, f.R(), 0.0, two_pi, spec);
    const double phi_1_loop = interior_boundary_circulation(f, spec);
    const double agree = 10.0 * std::max(spec.abs_tol, spec.rel_tol * std::max(std::abs(phi_1_area), std::abs(phi_1_loop)));
    if (std::abs(phi_1_area - phi_1_loop) > agree)
        throw Error(ErrorCode::StokesCrossCheckFailed, "interior flux by area (" + std::to_string(phi_1_area) +
                                                           ") and by circulation (" + std::to_string(phi_1_loop) +
                                                           ") disagree");

    StokesReport r;
    r.phi_1 = phi_1_loop;
    r.circ_outer = circulation(f, ClosedPath::circle(L), spec);
    r.circ_inner = exterior_boundary_circulation(f, spec);
    r.phi_2 = r.circ_outer - r.circ_inner;
    r.phi_total = r.phi_1 + r.phi_2;
    r.discrepancy = r.circ_outer - r.phi_total;
    return r;
}

/// Per-sector breakdown of the annulus D2 cut along phi = 0 and phi = pi.
struct ChartAudit {
    std::array<double, 2> sector_flux{};    ///< direct surface integral of B per half-annulus
    std::array<double, 2> sector_circ{};    ///< boundary circulation per half-annulus, cuts included
    std::array<double, 4> cut_integrals{};  ///< upper@pi (in), upper@0 (out), lower@2pi (in), lower@pi (out)
    double sector_sum = 0.0;                ///< phi_2 rebuilt from the two sectors
    double phi_2 = 0.0;                     ///< phi_2 from verify_stokes
    double deviation = 0.0;                 ///< |sector_sum - phi_2|
};

inline ChartAudit chart_audit_detail(const SolenoidField& f, double L, const QuadratureSpec& spec = {}) {
    spec.validate();
    detail::check_outer_radius(f, L);

    constexpr double pi = std::numbers::pi;
    const std::array<std::array<double, 2>, 2> sectors{{{0.0, pi}, {pi, two_pi}}};

    ChartAudit out;
    for (std::size_t s = 0; s < 2; ++s) {
        const auto [a, b] = sectors[s];
        out.sector_flux[s] = sector_flux(f, Region::exterior, f.R(), L, a, b, spec);

        // Counterclockwise: outer arc a->b, cut inward at b, inner arc b->a, cut outward at a.
        auto boundary = [&, a = a, b = b](double d) {
            const double r_in = f.R() * (1.0 + d);
            const double outer = arc_integral(f, L, a, b, 0.0, spec);
            const double cut_in = segment_integral(f, Point::cylindrical(L, b), Point::cylindrical(r_in, b), spec);
            const double inner = arc_integral(f, r_in, b, a, 0.0, spec);
            const double cut_out = segment_integral(f, Point::cylindrical(r_in, a), Point::cylindrical(L, a), spec);
            return outer + cut_in + inner + cut_out;
        };
        out.sector_circ[s] = richardson_limit(boundary);

        const double r_in = f.R() * (1.0 + limit_offsets.back());
        out.cut_integrals[2 * s] = segment_integral(f, Point::cylindrical(L, b), Point::cylindrical(r_in, b), spec);
        out.cut_integrals[2 * s + 1] =
            segment_integral(f, Point::cylindrical(r_in, a), Point::cylindrical(L, a), spec);
    }

    out.sector_sum = out.sector_circ[0] + out.sector_circ[1];
    out.phi_2 = verify_stokes(f, L, spec).phi_2;
    out.deviation = std::abs(out.sector_sum - out.phi_2);
    return out;
}

/// Deviation between phi_2 rebuilt from two single-valued azimuthal charts
/// and phi_2 from the whole annulus.
inline double chart_audit(const SolenoidField& f, double L, const QuadratureSpec& spec = {}) {
    return chart_audit_detail(f, L, spec).deviation;
}

}  // namespace abflux
