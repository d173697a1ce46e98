#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circq/oracle.hpp"
#include "circq/words.hpp"

namespace circq::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234ULL);
    return gen;
}

inline long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline std::vector<Digit> random_digits(int base, std::size_t length) {
    std::vector<Digit> d(length);
    for (auto& x : d)
        x = static_cast<Digit>(uniform(0, base - 1));
    return d;
}

inline CircularWord random_circular(int base, std::size_t length) {
    return CircularWord(base, random_digits(base, length));
}

inline CircularWord random_nonzero_circular(int base, std::size_t length) {
    for (;;) {
        CircularWord w = random_circular(base, length);
        if (!w.is_zero() && !w.is_all_beta())
            return w;
    }
}

/// Fraction with |numerator| <= max_num and 1 <= denominator <= max_den.
inline Fraction random_fraction(long long max_num, long long max_den) {
    return Fraction(BigInt(static_cast<long>(uniform(-max_num, max_num))),
                    BigInt(static_cast<long>(uniform(1, max_den))));
}

inline Fraction frac(long long u, long long v) { return Fraction(BigInt(static_cast<long>(u)), BigInt(static_cast<long>(v))); }

}  // namespace circq::testing
