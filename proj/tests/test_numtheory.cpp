#include <gtest/gtest.h>

#include <numeric>

#include "circq/numtheory.hpp"
#include "circq/rational.hpp"
#include "support.hpp"

using namespace circq;
using circq::testing::random_nonzero_circular;
using circq::testing::uniform;

namespace {

DecimalPolynomial poly(const char* text, int base = 10) { return parse_polynomial(text, base); }

BigInt evaluate(const IntPolynomial& q, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::uint64_t naive_order(std::uint64_t modulus, int base) {
    if (modulus == 1)
        return 1;
    std::uint64_t x = static_cast<std::uint64_t>(base) % modulus, k = 1;
    while (x != 1) {
        x = x * static_cast<std::uint64_t>(base) % modulus;
        ++k;
    }
    return k;
}

}  // namespace

TEST(PeriodLength, Examples) {
    auto r = period_length(7, 10);
    EXPECT_EQ(r.aperiodic_len, 0u);
    EXPECT_EQ(r.period_len, 6u);
    EXPECT_EQ(r.repunit_witness, 142857);
    r = period_length(3, 10);
    EXPECT_EQ(r.period_len, 1u);
    EXPECT_EQ(r.repunit_witness, 3);
    r = period_length(240, 10);
    EXPECT_EQ(r.aperiodic_len, 4u);
    EXPECT_EQ(r.period_len, 1u);
    EXPECT_EQ(r.coprime_part, 3);
    r = period_length(27, 10);
    EXPECT_EQ(r.period_len, 3u);
    EXPECT_THROW(period_length(0, 10), std::invalid_argument);
    EXPECT_THROW(period_length(BigInt("1000003"), 10, Limits{1000}), CapacityError);
}

TEST(PeriodLength, WitnessIdentityAndNaiveOrder) {
    for (int base : {2, 3, 7, 10, 12})
        for (long v = 1; v <= 400; ++v) {
            const auto r = period_length(v, base);
            EXPECT_EQ(r.repunit_witness * r.coprime_part, big_pow(base, r.period_len) - 1) << v;
            EXPECT_EQ(std::gcd(r.coprime_part.get_si(), static_cast<long>(base)), 1);
            EXPECT_EQ(r.period_len, naive_order(r.coprime_part.get_ui(), base)) << v << " base " << base;
            // b^aperiodic is the least power divisible by v / coprime part
            const BigInt rest = BigInt(v) / r.coprime_part;
            EXPECT_TRUE(big_pow(base, r.aperiodic_len) % rest == 0);
            if (r.aperiodic_len > 0) {
                EXPECT_FALSE(big_pow(base, r.aperiodic_len - 1) % rest == 0);
            }
        }
}

TEST(LcmDivisibility, Examples) {
    EXPECT_EQ(lcm_divisibility(2, 3, 10), 6u);
    EXPECT_EQ(lcm_divisibility(4, 6, 2), 12u);
    EXPECT_EQ(brute_lcm_divisibility(2, 3, 10), 6u);
    EXPECT_EQ(brute_lcm_divisibility(4, 6, 2), 12u);
}

TEST(LcmDivisibility, MatchesBruteForce) {
    for (int base : {2, 3, 10})
        for (std::uint64_t l = 1; l <= 8; ++l)
            for (std::uint64_t l2 = 1; l2 <= 8; ++l2) {
                const auto brute = brute_lcm_divisibility(l, l2, base);
                if (brute) {
                    EXPECT_EQ(*brute, lcm_divisibility(l, l2, base)) << l << "," << l2 << " base " << base;
                }
            }
}

TEST(ProductLength, Examples) {
    EXPECT_EQ(product_period_length(2, 2, 10), 198);
    EXPECT_EQ(product_period_length(1, 1, 2), 1);
    EXPECT_EQ(product_period_length(2, 3, 10), 54);
    EXPECT_EQ(brute_product_period_length(2, 2, 10), 198u);
    EXPECT_EQ(general_square_length(10), 198);
    EXPECT_EQ(general_square_length(2), 6);
    EXPECT_EQ(general_square_length(3), 16);
}

TEST(ProductLength, MinimalAgainstBruteForce) {
    for (int base = 2; base <= 10; ++base)
        for (std::uint64_t l = 1; l <= 4; ++l)
            for (std::uint64_t l2 = 1; l2 <= 4; ++l2) {
                const auto brute = brute_product_period_length(l, l2, base);
                if (brute) {
                    EXPECT_EQ(BigInt(static_cast<unsigned long>(*brute)), product_period_length(l, l2, base))
                        << l << "," << l2 << " base " << base;
                }
            }
}

TEST(ProductLength, GeneralSquareIsRealised) {
    // 0.(0...01)^2 in the group of length 2 reaches the full length for small bases.
    for (int base : {2, 3, 5, 10}) {
        const StarElement p(CircularWord(base, {0, 1}));
        EXPECT_EQ(BigInt(static_cast<unsigned long>(circ_mul(p, p).length())), general_square_length(base));
    }
}

TEST(ProductMultiplier, TermwiseEqualsDirect) {
    for (int base : {2, 3, 10})
        for (std::uint64_t l = 1; l <= 4; ++l)
            for (std::uint64_t l2 = 1; l2 <= 4; ++l2)
                EXPECT_EQ(product_multiplier(l, l2, base), product_multiplier_direct(l, l2, base));
    EXPECT_EQ(product_multiplier(1, 1, 10), 12345679);
}

TEST(RepunitDivisibility, ExponentEquivalence) {
    // (b^n - 1) is divisible by (b^l - 1) exactly when l divides n.
    for (int base : {2, 3, 10})
        for (std::uint64_t n = 1; n <= 60; ++n)
            for (std::uint64_t l = 1; l <= 12; ++l)
                EXPECT_EQ((big_pow(base, n) - 1) % (big_pow(base, l) - 1) == 0, n % l == 0)
                    << base << " " << n << " " << l;
}

TEST(Lucas, Numbers) {
    EXPECT_EQ(lucas_number(1), 1);
    EXPECT_EQ(lucas_number(2), 3);
    EXPECT_EQ(lucas_number(7), 29);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u})
        EXPECT_EQ(lucas_number(p) % p, 1) << p;
}

TEST(ClassifyRoot, Examples) {
    auto r = classify_root({-2, 0, 1});
    EXPECT_TRUE(r.integer_roots.empty());
    EXPECT_EQ(r.verdict, "no integer roots, all real roots irrational");
    r = classify_root({1, 0, -10, 0, 1});
    EXPECT_TRUE(r.integer_roots.empty());
    r = classify_root({-4, 0, 1});
    EXPECT_EQ(r.integer_roots, (std::vector<BigInt>{-2, 2}));
    r = classify_root({0, 0, -1, 1});
    EXPECT_EQ(r.integer_roots, (std::vector<BigInt>{0, 1}));
    EXPECT_THROW(classify_root({-2, 0, 3}), std::invalid_argument);
    EXPECT_THROW(classify_root({}), std::invalid_argument);
    EXPECT_THROW(classify_root({BigInt("1000000000000000000000"), 0, 1}, 1000), CapacityError);
}

TEST(ClassifyRoot, MatchesCauchyBoundEvaluation) {
    for (int trial = 0; trial < 300; ++trial) {
        const auto degree = static_cast<std::size_t>(uniform(1, 5));
        IntPolynomial q(degree + 1);
        long long max_coeff = 0;
        for (std::size_t i = 0; i < degree; ++i) {
            const long long c = uniform(-100, 100);
            q[i] = static_cast<long>(c);
            max_coeff = std::max(max_coeff, std::abs(c));
        }
        q[degree] = 1;
        std::vector<BigInt> expected;
        for (long long x = -(max_coeff + 1); x <= max_coeff + 1; ++x)
            if (evaluate(q, static_cast<long>(x)) == 0)
                expected.push_back(static_cast<long>(x));
        EXPECT_EQ(classify_root(q).integer_roots, expected);
    }
}

TEST(ClassifyRootDecimal, PurePowers) {
    auto r = classify_root_decimal(poly("x^2-2"), 10);
    EXPECT_TRUE(r.roots.empty());
    r = classify_root_decimal(poly("x^3-3.57"), 10);
    EXPECT_TRUE(r.roots.empty());
    EXPECT_NE(r.verdict.find("3k = 2"), std::string::npos) << r.verdict;
    r = classify_root_decimal(poly("x^2-0.25"), 10);
    EXPECT_EQ(r.roots, (std::vector<DecimalNumber>{DecimalNumber::parse("-0.5", 10), DecimalNumber::parse("0.5", 10)}));
    r = classify_root_decimal(poly("x^2-0.2"), 10);
    EXPECT_TRUE(r.roots.empty());
    r = classify_root_decimal(poly("x^2-4"), 10);
    EXPECT_EQ(r.roots.size(), 2u);
    r = classify_root_decimal(poly("x^2+1"), 10);
    EXPECT_TRUE(r.no_real_roots);
    r = classify_root_decimal(poly("x^3+8"), 10);
    EXPECT_EQ(r.roots, (std::vector<DecimalNumber>{DecimalNumber::parse("-2", 10)}));
    // base 4 is not squarefree: 0.1 in base 4 is 1/4, whose root 1/2 is 0.2
    r = classify_root_decimal(poly("x^2-0.1", 4), 4);
    EXPECT_EQ(r.roots, (std::vector<DecimalNumber>{DecimalNumber::parse("-0.2", 4), DecimalNumber::parse("0.2", 4)}));
}

TEST(ClassifyRootDecimal, GeneralPolynomials) {
    auto r = classify_root_decimal(poly("x^4-10x^2+1"), 10);
    EXPECT_TRUE(r.roots.empty());
    r = classify_root_decimal(poly("x^2 - 2*x + 0.75"), 10);
    EXPECT_EQ(r.roots, (std::vector<DecimalNumber>{DecimalNumber::parse("0.5", 10), DecimalNumber::parse("1.5", 10)}));
    r = classify_root_decimal(poly("x^2-1.5x+0.5"), 10);
    EXPECT_EQ(r.roots.size(), 2u);
}

TEST(ClassifyRootDecimal, PerfectSquares) {
    for (long n = 1; n <= 400; ++n) {
        const auto r = classify_root_decimal(poly(("x^2-" + std::to_string(n)).c_str()), 10);
        long s = 0;
        while ((s + 1) * (s + 1) <= n)
            ++s;
        EXPECT_EQ(r.roots.empty(), s * s != n) << n;
    }
}

TEST(ClassifyRootDecimal, RejectsBadInput) {
    EXPECT_THROW(classify_root_decimal(poly("2x^2-1"), 10), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("", 10), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("x^2-y", 10), std::invalid_argument);
    EXPECT_THROW(classify_root_decimal({}, 10), std::invalid_argument);
}

TEST(ParsePolynomial, RoundTrip) {
    const auto q = poly("x^4-10x^2+1");
    ASSERT_EQ(q.size(), 5u);
    EXPECT_EQ(q[0], DecimalNumber::parse("1", 10));
    EXPECT_EQ(q[2], DecimalNumber::parse("-10", 10));
    EXPECT_EQ(parse_polynomial(polynomial_to_string(q), 10), q);
    EXPECT_EQ(poly("X^3 - 3.57"), poly("x^3-3.57"));
}

TEST(PeriodGrowth, Examples) {
    const auto cw = [](const char* s, int base) { return StarElement(CircularWord::parse(s, base)); };
    EXPECT_EQ(period_growth(cw("3", 10), 3), (std::vector<std::size_t>{1, 1, 3}));
    EXPECT_EQ(period_growth(cw("3", 10), 6), (std::vector<std::size_t>{1, 1, 3, 9, 27, 81}));
    EXPECT_EQ(period_growth(cw("15", 7), 2)[1], 2u);
    EXPECT_EQ(period_growth(cw("9", 10), 4), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_THROW(period_growth(cw("0", 10), 3), std::invalid_argument);
    EXPECT_THROW(period_growth(cw("3", 10), 12, Limits{1000}), CapacityError);
}

TEST(PeriodGrowth, MatchesDenominatorOrder) {
    for (int trial = 0; trial < 40; ++trial) {
        const int base = static_cast<int>(uniform(2, 10));
        const CircularWord p = random_nonzero_circular(base, static_cast<std::size_t>(uniform(1, 2)));
        const auto lens = period_growth(StarElement(p), 3);
        Fraction f(p.valuation(), repdigit(base, p.length()));
        Fraction power = f;
        for (std::size_t k = 0; k < lens.size(); ++k) {
            EXPECT_EQ(lens[k], period_length(power.denominator(), base).period_len) << p.to_string();
            power = power * f;
        }
    }
}

TEST(PeriodGrowth, ExceedsFifty) {
    const auto cw = [](const char* s, int base) { return StarElement(CircularWord::parse(s, base)); };
    EXPECT_GT(period_growth(cw("3", 10), 6).back(), 50u);
    EXPECT_GT(period_growth(cw("15", 7), 5).back(), 50u);
    EXPECT_GT(period_growth(cw("12", 10), 3).back(), 50u);
}
