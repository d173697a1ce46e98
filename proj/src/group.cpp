#include "circq/group.hpp"

#include <stdexcept>
#include <vector>

namespace circq {

namespace {

CircularWord canonical_group_word(const CircularWord& w) {
    return w.is_all_beta() ? CircularWord::constant(0, w.base(), w.length()) : w;
}

void require_same_shape(const GroupElement& x, const GroupElement& y) {
    if (x.base() != y.base())
        throw std::invalid_argument("base mismatch in G_l");
    if (x.length() != y.length())
        throw std::invalid_argument("length mismatch in G_l");
}

}  // namespace

GroupElement::GroupElement(const CircularWord& word) : word_(canonical_group_word(word)) {}

GroupElement GroupElement::from_valuation(const BigInt& value, int base, std::size_t length) {
    BigInt m = repdigit(base, length);
    BigInt q, r;
    floor_divmod(value, m, q, r);
    return GroupElement(CircularWord::from_value(r, base, length));
}

GroupElement GroupElement::zero(int base, std::size_t length) {
    return GroupElement(CircularWord::constant(0, base, length));
}

GroupElement g_add(const GroupElement& x, const GroupElement& y) {
    require_same_shape(x, y);
    return GroupElement::from_valuation(x.valuation() + y.valuation(), x.base(), x.length());
}

GroupElement g_neg(const GroupElement& x) { return GroupElement(x.word().complement()); }

GroupElement g_sub(const GroupElement& x, const GroupElement& y) { return g_add(x, g_neg(y)); }

CircularWord circular_carry_add(const CircularWord& x, const CircularWord& y) {
    if (x.base() != y.base() || x.length() != y.length())
        throw std::invalid_argument("circular addition needs equal base and length");
    const int b = x.base();
    const std::size_t n = x.length();
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i)
        s[i] = x[i] + y[i];
    int carry = 0;
    do {
        for (std::size_t i = n; i-- > 0;) {
            const int v = s[i] + carry;
            s[i] = v % b;
            carry = v / b;
        }
    } while (carry != 0);
    std::vector<Digit> out(s.begin(), s.end());
    return CircularWord(b, std::move(out));
}

// G*

StarElement::StarElement(const CircularWord& word) : word_(word.primitive_period()) {}

StarElement StarElement::zero(int base) { return StarElement(CircularWord::constant(0, base)); }

StarElement StarElement::one(int base) {
    return StarElement(CircularWord::constant(static_cast<Digit>(base - 1), base));
}

StarElement star_add(const StarElement& x, const StarElement& y, const Limits& limits) {
    if (x.base() != y.base())
        throw std::invalid_argument("base mismatch in G*");
    const std::size_t l = lcm_size(x.length(), y.length());
    GroupElement sum = g_add(GroupElement(lift(x.word(), l, limits)), GroupElement(lift(y.word(), l, limits)));
    return StarElement(sum.word());
}

StarElement star_neg(const StarElement& x) {
    return StarElement(g_neg(GroupElement(x.word())).word());
}

StarElement circ_mul(const StarElement& p, const StarElement& q, const Limits& limits) {
    if (p.base() != q.base())
        throw std::invalid_argument("base mismatch in circular product");
    const int b = p.base();
    if (p.is_zero() || q.is_zero())
        return StarElement::zero(b);

    BigInt num = p.word().valuation() * q.word().valuation();
    BigInt den = repdigit(b, p.length()) * repdigit(b, q.length());
    if (num == den)
        return StarElement::one(b);

    const BigInt g = big_gcd(num, den);
    num /= g;
    den /= g;

    // den is prime to b, so the remainders are purely periodic.
    std::vector<Digit> digits;
    BigInt r = num;
    BigInt digit;
    do {
        if (digits.size() >= limits.max_period)
            throw CapacityError("circular product period exceeds the cap of " +
                                std::to_string(limits.max_period) + " digits");
        r *= b;
        mpz_fdiv_qr(digit.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        digits.push_back(static_cast<Digit>(digit.get_ui()));
    } while (r != num);
    return StarElement(CircularWord(b, std::move(digits)));
}

BigInt letter_product_multiplier(const BigInt& base) {
    if (base < 2)
        throw std::invalid_argument("multiplier needs a base >= 2");
    if (!base.fits_ulong_p())
        throw CapacityError("letter-product multiplier base too large");
    const unsigned long B = base.get_ui();
    BigInt acc = 0;
    // Horner over the coefficients (B - i - 2) for i = B-3 down to 0.
    for (unsigned long i = B - 2; i-- > 0;) {
        acc *= base;
        acc += B - i - 2;
    }
    return acc + 1;
}

CircularWord circ_mul_block(const CircularWord& p, const CircularWord& q, const Limits& limits) {
    if (p.base() != q.base())
        throw std::invalid_argument("base mismatch in circular product");
    const int b = p.base();
    const std::size_t l = lcm_size(p.length(), q.length());
    const BigInt block_base = big_pow(b, l);
    const BigInt total = BigInt(static_cast<unsigned long>(l)) * (block_base - 1);
    if (total > static_cast<unsigned long>(limits.max_period))
        throw CapacityError("block product of length " + total.get_str() + " exceeds the cap of " +
                            std::to_string(limits.max_period) + " digits");
    const BigInt letter_p = lift(p, l, limits).valuation();
    const BigInt letter_q = lift(q, l, limits).valuation();
    const BigInt value = letter_p * letter_q * letter_product_multiplier(block_base);
    return CircularWord::from_value(value, b, total.get_ui());
}

std::optional<GroupElement> find_order_p_element(int base, std::uint64_t p, std::size_t max_length) {
    check_base(base);
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    const BigInt prime(static_cast<unsigned long>(p));
    for (std::size_t l = 1; l <= max_length; ++l) {
        BigInt m = repdigit(base, l);
        if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t()) != 0)
            return GroupElement::from_valuation(m / prime, base, l);
    }
    return std::nullopt;
}

}  // namespace circq
