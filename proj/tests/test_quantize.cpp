#include <abflux/phase.hpp>
#include <abflux/quantize.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace abflux;

namespace {

Rational r(const char* s) { return Rational::parse(s); }

std::vector<std::string> strs(const std::vector<RationalCharge>& qs) {
    std::vector<std::string> out;
    for (const auto& q : qs) out.push_back(q.str());
    return out;
}

}  // namespace

TEST(Rational, ParsesAndNormalises) {
    EXPECT_EQ(r("4/6").str(), "2/3");
    EXPECT_EQ(r("-2/4").str(), "-1/2");
    EXPECT_EQ(r("+7").str(), "7");
    EXPECT_EQ(r(" 6 / 3 ").str(), "2");
    EXPECT_EQ(r("0/5").str(), "0");
    EXPECT_EQ(r("-1/3").denominator(), 1 * 3);
    for (const char* bad : {"", "1/0", "a", "1/-3", "1.5", "2/3/4"}) {
        try {
            (void)r(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
        }
    }
}

TEST(Rational, LargeDenominatorsStayExact) {
    const Rational a = r("1/1000000007");
    const Rational b = r("1000000006/1000000007");
    EXPECT_EQ((a + b).str(), "1");
    const Rational big = r("123456789012345678901234567890/1000000007");
    EXPECT_EQ(((big * r("1000000007")) / r("1000000007")).str(), big.str());
    EXPECT_EQ(infer_minimal_N({r("1/1000000007"), r("1/998244353")}).N().str(), "998244359987710471");
}

TEST(KappaAllowed, Examples) {
    EXPECT_TRUE(kappa_allowed(r("3")));
    EXPECT_FALSE(kappa_allowed(r("1/2")));
    EXPECT_TRUE(kappa_allowed(r("0")));
    EXPECT_TRUE(kappa_allowed(r("-8/4")));
}

TEST(ChargeAllowed, Examples) {
    const ChargeSpectrum three(3);
    EXPECT_TRUE(charge_allowed(r("2/3"), three));
    EXPECT_TRUE(charge_allowed(r("-1/3"), three));
    EXPECT_FALSE(charge_allowed(r("1/2"), three));
    EXPECT_TRUE(charge_allowed(r("-5"), three));
    EXPECT_THROW(ChargeSpectrum(0), Error);
}

TEST(Spectrum, Examples) {
    EXPECT_EQ(strs(spectrum(ChargeSpectrum(3), {-2, 3})),
              (std::vector<std::string>{"-2/3", "-1/3", "0", "1/3", "2/3", "1"}));
    EXPECT_EQ(strs(spectrum(ChargeSpectrum(1), {-1, 1})), (std::vector<std::string>{"-1", "0", "1"}));
    EXPECT_EQ(strs(spectrum(ChargeSpectrum(6), {1, 3})), (std::vector<std::string>{"1/6", "1/3", "1/2"}));
    try {
        (void)spectrum(ChargeSpectrum(2), {1, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyRange);
    }
}

TEST(Spectrum, SortedAndEveryEntryAllowed) {
    for (int n : {1, 2, 5, 12}) {
        const ChargeSpectrum s(n);
        const auto qs = spectrum(s, {-20, 20});
        EXPECT_TRUE(std::is_sorted(qs.begin(), qs.end()));
        for (const auto& q : qs) EXPECT_TRUE(charge_allowed(q, s));
    }
}

TEST(InferMinimalN, Examples) {
    EXPECT_EQ(infer_minimal_N({r("1")}).N(), 1);
    EXPECT_EQ(infer_minimal_N({r("2/3"), r("-1/3"), r("1")}).N(), 3);
    EXPECT_EQ(infer_minimal_N({r("1/2"), r("1/3")}).N(), 6);
    try {
        (void)infer_minimal_N({});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyChargeSet);
    }
}

TEST(InferMinimalN, MatchesBruteForceAndIsMinimal) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> num(-30, 30);
    std::uniform_int_distribution<std::int64_t> den(1, 12);
    std::uniform_int_distribution<int> count(1, 4);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::pair<std::int64_t, std::int64_t>> raw;
        std::vector<RationalCharge> qs;
        for (int k = count(rng); k > 0; --k) {
            raw.emplace_back(num(rng), den(rng));
            qs.emplace_back(BigInt(raw.back().first), BigInt(raw.back().second));
        }
        const ChargeSpectrum s = infer_minimal_N(qs);
        EXPECT_EQ(s.N(), oracle::brute_minimal_N(raw, 100000));
        for (const auto& q : qs) EXPECT_TRUE(charge_allowed(q, s));
        // dividing out any prime factor breaks some charge
        auto n = s.N().convert_to<std::int64_t>();
        for (std::int64_t p = 2; p <= n; ++p) {
            if (n % p != 0) continue;
            bool prime = true;
            for (std::int64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
            if (!prime) continue;
            const ChargeSpectrum smaller(n / p);
            EXPECT_FALSE(std::all_of(qs.begin(), qs.end(), [&](const auto& q) { return charge_allowed(q, smaller); }));
        }
    }
}

TEST(KappaConstraints, Examples) {
    EXPECT_TRUE(kappa_constraints({r("2/3"), r("-1/3")}, r("3")));
    EXPECT_FALSE(kappa_constraints({r("2/3")}, r("1")));
    EXPECT_TRUE(kappa_constraints({r("1/7"), r("5/11")}, r("0")));
    EXPECT_TRUE(kappa_constraints({}, r("1/2")));
}

TEST(KappaConstraints, EquivalentToDenominatorLcmDividingKappa) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 9);
    std::uniform_int_distribution<std::int64_t> kap(-40, 40);
    for (int i = 0; i < 500; ++i) {
        std::vector<RationalCharge> qs;
        std::int64_t l = 1;
        for (int k = 0; k < 3; ++k) {
            const std::int64_t p = num(rng), d = den(rng);
            const std::int64_t g = std::gcd(p, d);
            qs.emplace_back(BigInt(p), BigInt(d));
            l = std::lcm(l, d / g);
        }
        const std::int64_t ke = kap(rng);
        EXPECT_EQ(kappa_constraints(qs, Rational(ke)), ke % l == 0);
    }
}

TEST(AntiparticleClosure, HoldsForSymmetricRanges) {
    EXPECT_TRUE(antiparticle_closure(ChargeSpectrum(3), {-3, 3}));
    EXPECT_TRUE(antiparticle_closure(ChargeSpectrum(1), {-5, 5}));
    EXPECT_TRUE(antiparticle_closure(ChargeSpectrum(6), {-6, 6}));
    try {
        (void)antiparticle_closure(ChargeSpectrum(3), {-2, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AsymmetricRange);
    }
}

TEST(QuantizeBridge, AllowedChargeMakesKappaShiftUnobservable) {
    // charge_allowed(q, N) with kappa e = N implies equal holonomy phases.
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> n(-12, 12);
    std::uniform_int_distribution<std::int64_t> N(1, 12);
    std::uniform_int_distribution<std::int64_t> mult(-3, 3);
    for (int i = 0; i < 300; ++i) {
        const ChargeSpectrum s(N(rng));
        const RationalCharge q(BigInt(n(rng)), s.N());
        ASSERT_TRUE(charge_allowed(q, s));
        const Rational kappa_e = Rational(s.N()) * Rational(mult(rng));
        ASSERT_TRUE(kappa_constraints({q}, kappa_e));
        const double gamma = 0.41;
        EXPECT_TRUE(phases_equivalent(q.to_double(), gamma, gamma + kappa_e.to_double(), 1e-9));
    }
}
