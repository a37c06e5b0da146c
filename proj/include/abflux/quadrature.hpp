#pragma once

#include <abflux/error.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace abflux {

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    std::uint64_t max_subdivisions = std::uint64_t{1} << 20;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) || !std::isfinite(abs_tol))
            throw Error(ErrorCode::InvalidQuadratureSpec, "quadrature tolerances must be positive and finite");
        if (max_subdivisions < 1)
            throw Error(ErrorCode::InvalidQuadratureSpec, "max_subdivisions must be at least 1");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::uint64_t intervals = 0;
};

namespace detail {

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& o) const { return error < o.error; }
};

// 15-point Kronrod estimate with the embedded 7-point Gauss rule as error
// estimate. Nodes and weights come from Boost.Math.
template <class F>
Panel kronrod_panel(const F& f, double a, double b) {
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& x = kronrod::abscissa();
    const auto& wk = kronrod::weights();
    const auto& wg = gauss::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k = f0 * wk[0];
    double g = f0 * wg[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double pair = f(mid + half * x[i]) + f(mid - half * x[i]);
        k += pair * wk[i];
        // Gauss nodes are the even-indexed Kronrod nodes.
        if (i % 2 == 0) g += pair * wg[i / 2];
    }
    const double err = std::max(std::abs(k - g), 2.0 * std::numeric_limits<double>::epsilon() * std::abs(k));
    return {a, b, half * k, half * err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |result|).
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return {};

    std::priority_queue<detail::Panel> queue;
    queue.push(detail::kronrod_panel(f, a, b));
    double total = queue.top().value;
    double error = queue.top().error;

    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (error > target()) {
        if (!std::isfinite(total) || !std::isfinite(error))
            throw Error(ErrorCode::QuadratureNotConverged, "integrand produced a non-finite value");
        if (queue.size() >= spec.max_subdivisions)
            throw Error(ErrorCode::QuadratureNotConverged,
                        "error estimate " + std::to_string(error) + " above target after " +
                            std::to_string(queue.size()) + " subdivisions");
        const detail::Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const detail::Panel left = detail::kronrod_panel(f, worst.a, mid);
        const detail::Panel right = detail::kronrod_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum in interval order so the result does not depend on heap layout.
    std::vector<detail::Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    QuadratureResult out;
    out.intervals = panels.size();
    for (const auto& p : panels) {
        out.value += p.value;
        out.error += p.error;
    }
    if (!std::isfinite(out.value))
        throw Error(ErrorCode::QuadratureNotConverged, "integrand produced a non-finite value");
    return out;
}

template <class F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec) {
    return integrate_adaptive(f, a, b, spec).value;
}

}  // namespace abflux
