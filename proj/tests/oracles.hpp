#pragma once

// Independent reference computations for the test suites. None of these
// call into the code paths they are used to check.

#include <abflux/fields.hpp>
#include <abflux/geometry.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace abflux::oracle {

/// Winding number of a closed polygon about the origin by signed crossings
/// of the positive x half-axis ray.
inline int crossing_winding(const std::vector<Point>& v) {
    auto is_left = [](double x1, double y1, double x2, double y2) {
        // sign of the cross product (p2 - p1) x (origin - p1)
        return (x2 - x1) * (0.0 - y1) - (0.0 - x1) * (y2 - y1);
    };
    int wn = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        if (a.y() <= 0.0) {
            if (b.y() > 0.0 && is_left(a.x(), a.y(), b.x(), b.y()) > 0.0) ++wn;
        } else if (b.y() <= 0.0 && is_left(a.x(), a.y(), b.x(), b.y()) < 0.0) {
            --wn;
        }
    }
    return wn;
}

/// Signed area of a polygon (shoelace).
inline double shoelace_area(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * s;
}

/// Smallest N >= 1 with p_i * N / d_i integral for all (p_i, d_i), by search.
inline std::int64_t brute_minimal_N(const std::vector<std::pair<std::int64_t, std::int64_t>>& qs, std::int64_t cap) {
    for (std::int64_t n = 1; n <= cap; ++n) {
        bool ok = true;
        for (auto [p, d] : qs) ok = ok && (p * n) % d == 0;
        if (ok) return n;
    }
    return -1;
}

/// Closed loop around the origin made of `turns` revolutions with random
/// radii in [rmin, rmax] and azimuth steps below pi. Negative turns run
/// clockwise. Offsetting the centre beyond rmax gives a non-enclosing loop.
inline std::vector<Point> random_loop(std::mt19937_64& rng, int turns, double rmin, double rmax, Point centre = {}) {
    std::uniform_real_distribution<double> radius(rmin, rmax);
    std::uniform_int_distribution<int> per_turn(5, 12);
    const int n_turns = turns == 0 ? 1 : std::abs(turns);
    const int n = per_turn(rng) * n_turns;
    const double sign = turns < 0 ? -1.0 : 1.0;
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    std::vector<Point> v;
    for (int i = 0; i < n; ++i) {
        const double phi = sign * (i + jitter(rng)) * 2.0 * std::numbers::pi * n_turns / n;
        const double r = radius(rng);
        v.emplace_back(centre.x() + r * std::cos(phi), centre.y() + r * std::sin(phi), 0.0);
    }
    return v;
}

}  // namespace abflux::oracle
