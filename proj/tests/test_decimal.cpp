#include <gtest/gtest.h>

#include "circq/decimal.hpp"
#include "circq/oracle.hpp"
#include "support.hpp"

using namespace circq;
using circq::testing::random_circular;
using circq::testing::uniform;

namespace {

DecimalNumber dn(const char* s, int base = 10) { return DecimalNumber::parse(s, base); }

Fraction value(const DecimalNumber& d) { return Fraction(d.unscaled(), big_pow(d.base(), d.point())); }

Fraction circular_value(const CircularWord& w) {
    return Fraction(w.valuation(), repdigit(w.base(), w.length()));
}

DecimalNumber random_decimal(int base) {
    return DecimalNumber::from_scaled(static_cast<long>(uniform(-5000, 5000)), static_cast<std::size_t>(uniform(0, 4)),
                                      base);
}

}  // namespace

TEST(Decimal, CanonicalForm) {
    EXPECT_EQ(dn("1.70").to_string(), "1.7");
    EXPECT_EQ(dn("007.5").to_string(), "7.5");
    EXPECT_EQ(dn("-0.000").to_string(), "0");
    EXPECT_FALSE(dn("-0.000").is_negative());
    EXPECT_EQ(dn("370").to_string(), "370");
    EXPECT_EQ(dn("370").point(), 0u);
    EXPECT_EQ(dn(".25").to_string(), "0.25");
    EXPECT_EQ(dn("-0.3").to_string(), "-0.3");
    EXPECT_EQ(dn("1.A", 16).to_string(), "1.A");
    EXPECT_THROW(dn("1.2.3"), std::invalid_argument);
    EXPECT_THROW(dn(""), std::invalid_argument);
}

TEST(Decimal, AddExamples) {
    EXPECT_EQ(dn("1.7") + dn("0.3"), dn("2"));
    EXPECT_EQ(dn("24.181") + dn("0"), dn("24.181"));
    const DecimalNumber z = dn("-0.3") + dn("0.3");
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.is_negative());
}

TEST(Decimal, MulExamples) {
    EXPECT_EQ(dn("0.5") * dn("0.5"), dn("0.25"));
    EXPECT_EQ(dn("24.181") * dn("1"), dn("24.181"));
    EXPECT_EQ(dec_mul(dn("1.1308"), dn("0.00001")), dn("0.000011308"));
    EXPECT_THROW(dn("1", 10) * dn("1", 9), std::invalid_argument);
}

TEST(Decimal, ScaleAndCompare) {
    EXPECT_EQ(dec_scale(dn("24.181"), 3), dn("24181"));
    EXPECT_EQ(dec_scale(dn("37"), 1), dn("370"));
    EXPECT_EQ(dec_scale(dn("37"), -3), dn("0.037"));
    EXPECT_LT(dn("-2.7"), dn("-2.69"));
    EXPECT_EQ(dn("0.10") <=> dn("0.1"), std::strong_ordering::equal);
    EXPECT_EQ(DecimalNumber::power_of_base(-2, 10), dn("0.01"));
    EXPECT_EQ(DecimalNumber::power_of_base(3, 2), dn("1000", 2));
}

TEST(Decimal, RingAxiomsAgainstOracle) {
    for (int trial = 0; trial < 500; ++trial) {
        const int base = static_cast<int>(uniform(2, 16));
        const DecimalNumber x = random_decimal(base), y = random_decimal(base), z = random_decimal(base);
        EXPECT_EQ(value(x + y), value(x) + value(y));
        EXPECT_EQ(value(x * y), value(x) * value(y));
        EXPECT_EQ(value(x - y), value(x) - value(y));
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x <=> y, value(x) <=> value(y));
        EXPECT_EQ(DecimalNumber::parse(x.to_string(), base), x);
    }
}

TEST(ScalarAction, Examples) {
    auto a = scalar_action(dn("2"), CircularWord::parse("3", 10));
    EXPECT_TRUE(a.carry.is_zero());
    EXPECT_EQ(a.circular, CircularWord::parse("6", 10));

    a = scalar_action(dn("1"), CircularWord::parse("56", 10));
    EXPECT_TRUE(a.carry.is_zero());
    EXPECT_EQ(a.circular, CircularWord::parse("56", 10));

    a = scalar_action(dn("3"), CircularWord::parse("3", 10));
    EXPECT_EQ(a.carry, dn("1"));
    EXPECT_EQ(a.circular, CircularWord::parse("0", 10));

    a = scalar_action(dn("0.5"), CircularWord::parse("3", 10));
    EXPECT_EQ(a.carry, dn("-0.5"));
    EXPECT_EQ(a.circular, CircularWord::parse("6", 10));

    const auto s = scalar_action(dn("2"), StarElement(CircularWord::parse("3", 10)));
    EXPECT_EQ(s.circular, StarElement(CircularWord::parse("6", 10)));
}

TEST(ScalarAction, ContractAndModuleAxioms) {
    for (int trial = 0; trial < 500; ++trial) {
        const int base = static_cast<int>(uniform(2, 12));
        const auto len = static_cast<std::size_t>(uniform(1, 5));
        const DecimalNumber d = random_decimal(base), e = random_decimal(base);
        const CircularWord p = random_circular(base, len);
        const auto a = scalar_action(d, p);
        ASSERT_EQ(a.circular.length(), len);
        EXPECT_EQ(value(a.carry) + circular_value(a.circular), value(d) * circular_value(p));
        // additive in d
        const auto sum = scalar_action(d + e, p);
        const auto ae = scalar_action(e, p);
        EXPECT_EQ(value(sum.carry) + circular_value(sum.circular),
                  value(a.carry) + circular_value(a.circular) + value(ae.carry) + circular_value(ae.circular));
    }
}

TEST(ShiftPoint, Contract) {
    for (int trial = 0; trial < 300; ++trial) {
        const int base = static_cast<int>(uniform(2, 12));
        const CircularWord p = random_circular(base, static_cast<std::size_t>(uniform(1, 5)));
        const long long e = uniform(-7, 7);
        const auto s = shift_point(p, e);
        const Fraction scale = e >= 0 ? Fraction(big_pow(base, static_cast<std::size_t>(e)))
                                      : Fraction(BigInt(1), big_pow(base, static_cast<std::size_t>(-e)));
        EXPECT_EQ(value(s.correction) + circular_value(s.rotated), scale * circular_value(p));
        EXPECT_EQ(s.rotated, p.shift(e));
    }
}
