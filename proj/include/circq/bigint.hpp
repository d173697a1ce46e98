#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace circq {

using BigInt = mpz_class;

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

/// Raised when an intermediate period (or an enumeration) would exceed the
/// configured size limit. Never a silent truncation.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size limits forwarded to every operation that lifts circular words to a
/// common length.
struct Limits {
    std::size_t max_period = 1'000'000;
};

inline void check_base(int base) {
    if (base < kMinBase || base > kMaxBase)
        throw std::invalid_argument("base must lie in [2, 36], got " + std::to_string(base));
}

inline BigInt big_pow(int base, std::size_t exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exponent));
    return result;
}

/// b^length - 1, the value of the all-beta word of the given length.
inline BigInt repdigit(int base, std::size_t length) {
    BigInt r = big_pow(base, length);
    r -= 1;
    return r;
}

/// Floor division and the matching nonnegative remainder (divisor > 0).
inline void floor_divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::size_t lcm_size(std::size_t a, std::size_t b) {
    std::size_t x = a, y = b;
    while (y != 0) {
        std::size_t t = x % y;
        x = y;
        y = t;
    }
    return a / x * b;
}

}  // namespace circq
