#pragma once

// Charge quantization in exact arithmetic. All charges are rationals in
// units of the electron charge e; kappa is handled as the rational kappa*e.
// Nothing in this header touches floating point.

#include <abflux/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace abflux {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational p/d kept in lowest terms with d >= 1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT: integers convert implicitly
    Rational(const BigInt& n) : value_(n) {}  // NOLINT
    Rational(const BigInt& p, const BigInt& d) {
        if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator");
        value_ = boost::multiprecision::cpp_rational(p, d);
    }

    /// Parses "p/d" or "p" with optional sign.
    static Rational parse(std::string_view text) {
        static const std::regex re(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
        std::match_results<std::string_view::const_iterator> m;
        if (!std::regex_match(text.begin(), text.end(), m, re))
            throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
        std::string num = m[1].str();
        if (!num.empty() && num.front() == '+') num.erase(0, 1);
        const BigInt p(num);
        const BigInt d = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
        return {p, d};
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    bool is_integer() const { return denominator() == 1; }

    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    /// Nearest double; for bridging into the floating-point phase code only.
    double to_double() const { return value_.convert_to<double>(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.value_ == 0) throw Error(ErrorCode::ParseError, "division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
    boost::multiprecision::cpp_rational value_;
};

/// q / e.
using RationalCharge = Rational;

/// All charges are integer multiples of e / N.
class ChargeSpectrum {
public:
    explicit ChargeSpectrum(BigInt N) : N_(std::move(N)) {
        if (N_ < 1) throw Error(ErrorCode::InvalidSpectrum, "N must be a positive integer");
    }
    const BigInt& N() const { return N_; }

private:
    BigInt N_;
};

/// Closed integer interval [lo, hi].
struct IntegerRange {
    std::int64_t lo;
    std::int64_t hi;
};

/// kappa is admissible for the electron iff kappa * e is an integer.
inline bool kappa_allowed(const Rational& kappa_times_e) { return kappa_times_e.is_integer(); }

/// q is in the spectrum iff q * N is an integer.
inline bool charge_allowed(const RationalCharge& q, const ChargeSpectrum& spec) {
    return (q * Rational(spec.N())).is_integer();
}

/// { n / N : n in range }, ascending.
inline std::vector<RationalCharge> spectrum(const ChargeSpectrum& spec, IntegerRange range) {
    if (range.hi < range.lo) throw Error(ErrorCode::EmptyRange, "empty integer range");
    std::vector<RationalCharge> out;
    out.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
    for (std::int64_t n = range.lo;; ++n) {
        out.emplace_back(BigInt(n), spec.N());
        if (n == range.hi) break;
    }
    return out;
}

/// Smallest N with q * N integral for every q: the lcm of the denominators.
inline ChargeSpectrum infer_minimal_N(const std::vector<RationalCharge>& charges) {
    if (charges.empty()) throw Error(ErrorCode::EmptyChargeSet, "no charges given");
    BigInt n = 1;
    for (const auto& q : charges) n = boost::multiprecision::lcm(n, q.denominator());
    return ChargeSpectrum(n);
}

/// Every q in the set satisfies q * kappa in Z (units of e and 1/e).
inline bool kappa_constraints(const std::vector<RationalCharge>& charges, const Rational& kappa_times_e) {
    return std::all_of(charges.begin(), charges.end(),
                       [&](const RationalCharge& q) { return (q * kappa_times_e).is_integer(); });
}

/// Whether the spectrum over a symmetric range contains -q for every q.
inline bool antiparticle_closure(const ChargeSpectrum& spec, IntegerRange range) {
    if (range.lo != -range.hi) throw Error(ErrorCode::AsymmetricRange, "range must be symmetric about zero");
    const auto charges = spectrum(spec, range);
    const std::set<RationalCharge> present(charges.begin(), charges.end());
    return std::all_of(charges.begin(), charges.end(), [&](const RationalCharge& q) { return present.count(-q) == 1; });
}

}  // namespace abflux
