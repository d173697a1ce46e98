#pragma once

// The ring of signed finite base-b expansions (numbers u * b^e) and its
// action on circular words.

#include <compare>
#include <string>
#include <string_view>

#include "circq/bigint.hpp"
#include "circq/group.hpp"
#include "circq/words.hpp"

namespace circq {

/// sign * N(word) * b^(-point) with 0 <= point <= |word|. Always canonical:
/// no superfluous leading zero, no trailing zero after the point, zero is
/// "+0". Values such as 370 are written with explicit zeros and point 0.
class DecimalNumber {
public:
    explicit DecimalNumber(int base = 10);
    /// value = unscaled * b^(-point)
    static DecimalNumber from_scaled(const BigInt& unscaled, std::size_t point, int base);
    static DecimalNumber from_integer(const BigInt& value, int base);
    /// "[-]INT[.FRAC]"
    static DecimalNumber parse(std::string_view text, int base);
    /// b^exponent for any integer exponent.
    static DecimalNumber power_of_base(long long exponent, int base);

    int base() const noexcept { return word_.base(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_zero() const noexcept { return word_.size() == 1 && word_[0] == 0; }
    const FiniteWord& word() const noexcept { return word_; }
    std::size_t point() const noexcept { return point_; }
    /// Signed integer k with value = k * b^(-point).
    BigInt unscaled() const;
    bool is_integer() const noexcept { return point_ == 0; }

    std::string to_string() const;

    DecimalNumber operator-() const;
    friend DecimalNumber operator+(const DecimalNumber& x, const DecimalNumber& y);
    friend DecimalNumber operator-(const DecimalNumber& x, const DecimalNumber& y);
    friend DecimalNumber operator*(const DecimalNumber& x, const DecimalNumber& y);
    friend std::strong_ordering operator<=>(const DecimalNumber& x, const DecimalNumber& y);
    bool operator==(const DecimalNumber&) const = default;

private:
    bool negative_ = false;
    FiniteWord word_;
    std::size_t point_ = 0;
};

DecimalNumber dec_add(const DecimalNumber& x, const DecimalNumber& y);
DecimalNumber dec_neg(const DecimalNumber& x);
DecimalNumber dec_mul(const DecimalNumber& x, const DecimalNumber& y);
/// x * b^k, a pure point move.
DecimalNumber dec_scale(const DecimalNumber& x, long long k);

/// b^e * 0.(P) = correction + 0.(rotated). Purely digit-wise: for e >= 0 the
/// first e letters (read cyclically) move in front of the point and P turns
/// left; for e < 0 the word turns right and the letters it wraps around are
/// subtracted. No identification is applied, so beta~ stays beta~.
struct PointShift {
    DecimalNumber correction;
    CircularWord rotated;
};

PointShift shift_point(const CircularWord& p, long long e);

/// d * N(P)/(b^l - 1) = carry + N(circular)/(b^l - 1) with `circular` of length l.
struct ScalarAction {
    DecimalNumber carry;
    CircularWord circular;
};

/// Writes k * N(P) = q (b^l - 1) + r with 0 <= r < b^l - 1 (k = unscaled d),
/// then moves the point: dividing 0.(R) by b rotates R right by one and
/// spills its last letter into the carry.
ScalarAction scalar_action(const DecimalNumber& d, const CircularWord& p);

struct StarScalarAction {
    DecimalNumber carry;
    StarElement circular;
};

StarScalarAction scalar_action(const DecimalNumber& d, const StarElement& p);

}  // namespace circq
