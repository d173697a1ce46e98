#pragma once

// The groups G_l (circular words of length l, carry re-entering on the right,
// 0^l identified with beta^l) and their direct limit G*, plus the product of
// circular words.

#include <cstdint>
#include <optional>

#include "circq/bigint.hpp"
#include "circq/words.hpp"

namespace circq {

/// Element of G_l. The all-beta word is stored as the all-zero word.
class GroupElement {
public:
    explicit GroupElement(const CircularWord& word);
    static GroupElement from_valuation(const BigInt& value, int base, std::size_t length);
    static GroupElement zero(int base, std::size_t length);

    const CircularWord& word() const noexcept { return word_; }
    int base() const noexcept { return word_.base(); }
    std::size_t length() const noexcept { return word_.length(); }
    BigInt valuation() const { return word_.valuation(); }
    /// b^l - 1
    BigInt modulus() const { return repdigit(base(), length()); }

    bool operator==(const GroupElement&) const = default;

private:
    CircularWord word_;
};

GroupElement g_add(const GroupElement& x, const GroupElement& y);
GroupElement g_neg(const GroupElement& x);
GroupElement g_sub(const GroupElement& x, const GroupElement& y);

/// Digit-wise addition of two raw circular words of equal length: the carry
/// leaving the leftmost position re-enters at the rightmost one, repeated
/// until no carry is left. No identification is applied, so W + beta^l = W
/// for W != 0^l and 0^l + beta^l = beta^l.
CircularWord circular_carry_add(const CircularWord& x, const CircularWord& y);

/// Element of G*: a circular word up to the circular-powers identification,
/// held as its primitive period. The word beta~ is kept distinct from 0~
/// because the product needs it (it is the multiplicative identity);
/// star_add identifies them.
class StarElement {
public:
    explicit StarElement(const CircularWord& word);
    static StarElement zero(int base);
    static StarElement one(int base);  ///< beta~

    const CircularWord& word() const noexcept { return word_; }
    int base() const noexcept { return word_.base(); }
    std::size_t length() const noexcept { return word_.length(); }
    bool is_zero() const { return word_.is_zero(); }

    bool operator==(const StarElement&) const = default;

private:
    CircularWord word_;
};

StarElement star_add(const StarElement& x, const StarElement& y, const Limits& limits = {});
StarElement star_neg(const StarElement& x);

/// The circular word Q with N(P)/(b^l - 1) * N(P')/(b^l' - 1) = N(Q)/(b^n - 1),
/// returned as its primitive period. The digits are produced by long division
/// of N(P)N(P') by (b^l - 1)(b^l' - 1); the remainder cycle closes after
/// exactly |Q| steps. Throws CapacityError past limits.max_period digits.
StarElement circ_mul(const StarElement& p, const StarElement& q, const Limits& limits = {});

/// The letter-product multiplier 1 + sum_{0 <= i < B-2} (B - i - 2) B^i; in
/// base ten it is 12345679.
BigInt letter_product_multiplier(const BigInt& base);

/// Unreduced product word from the block-base construction: both words are
/// lifted to L = lcm(l, l'), read as single letters of base B = b^L, and
/// multiplied with the letter-product multiplier. The result has
/// L * (B - 1) digits; CapacityError if that exceeds the cap.
CircularWord circ_mul_block(const CircularWord& p, const CircularWord& q, const Limits& limits = {});

/// Searches G_1 ... G_max_length for an element of order exactly p.
std::optional<GroupElement> find_order_p_element(int base, std::uint64_t p, std::size_t max_length);

}  // namespace circq
