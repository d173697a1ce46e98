#pragma once

// Reduced fractions over arbitrary-precision integers. This is the reference
// semantics of Q that every digit-word operation is checked against; it
// shares no code with the circular-word representations.

#include <compare>
#include <string>
#include <string_view>

#include "circq/bigint.hpp"

namespace circq {

class Fraction {
public:
    Fraction() = default;
    Fraction(long long n) : num_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Fraction(const BigInt& n) : num_(n) {}                 // NOLINT(google-explicit-constructor)
    /// Reduces; throws std::domain_error on a zero denominator.
    Fraction(BigInt numerator, BigInt denominator);

    /// "u/v" or "u" in decimal.
    static Fraction parse(std::string_view text);

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    std::string to_string() const;

    Fraction operator-() const;
    friend Fraction operator+(const Fraction& x, const Fraction& y);
    friend Fraction operator-(const Fraction& x, const Fraction& y);
    friend Fraction operator*(const Fraction& x, const Fraction& y);
    friend Fraction operator/(const Fraction& x, const Fraction& y);
    friend bool operator==(const Fraction& x, const Fraction& y);
    friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

Fraction frac_add(const Fraction& x, const Fraction& y);
Fraction frac_mul(const Fraction& x, const Fraction& y);
Fraction frac_div(const Fraction& x, const Fraction& y);
std::strong_ordering frac_cmp(const Fraction& x, const Fraction& y);

}  // namespace circq
