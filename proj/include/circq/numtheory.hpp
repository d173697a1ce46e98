#pragma once

// Period-length laws, repunit divisibility, the length of a product of
// periods, and the integer-or-irrational classifier for monic polynomials.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circq/bigint.hpp"
#include "circq/decimal.hpp"
#include "circq/group.hpp"

namespace circq {

struct PeriodLengthReport {
    BigInt v;
    int base = 10;
    std::size_t aperiodic_len = 0;
    std::size_t period_len = 1;
    BigInt coprime_part;    ///< v with every prime factor of b removed
    BigInt repunit_witness; ///< M with M * coprime_part = b^period_len - 1
};

/// Aperiodic and periodic lengths of 1/v in base b. The order of b modulo the
/// coprime part is found by iterating powers; CapacityError once it passes
/// limits.max_period.
PeriodLengthReport period_length(const BigInt& v, int base, const Limits& limits = {});

/// lcm(l, l'): the least n with both b^l - 1 and b^l' - 1 dividing b^n - 1.
std::uint64_t lcm_divisibility(std::uint64_t l, std::uint64_t l2, int base);
/// Scans n = 1, 2, ... for the least n with (b^l - 1) | (b^n - 1) and
/// (b^l' - 1) | (b^n - 1). nullopt if a modulus exceeds `modulus_cap`.
std::optional<std::uint64_t> brute_lcm_divisibility(std::uint64_t l, std::uint64_t l2, int base,
                                                    std::uint64_t modulus_cap = 1'000'000'000);

/// (b^gcd(l, l') - 1) * lcm(l, l').
BigInt product_period_length(std::uint64_t l, std::uint64_t l2, int base);
/// Least n with (b^l - 1)(b^l' - 1) | b^n - 1, scanning multiples of
/// lcm(l, l'). nullopt if the product modulus exceeds `modulus_cap`.
std::optional<std::uint64_t> brute_product_period_length(std::uint64_t l, std::uint64_t l2, int base,
                                                         std::uint64_t modulus_cap = 1'000'000'000);
/// The multiplier M with (b^l - 1)(b^l' - 1) M = b^n - 1 for n the formula
/// value, summed term by term:
///   1 + sum_{0 <= j < (b^d - 1) a'} b^(l j mod l') (b^(q_j l') - 1)/(b^l' - 1)
/// where d = gcd(l, l'), a' = l'/d and q_j = floor(l j / l').
BigInt product_multiplier(std::uint64_t l, std::uint64_t l2, int base);
/// (b^n - 1) / ((b^l - 1)(b^l' - 1)), exact.
BigInt product_multiplier_direct(std::uint64_t l, std::uint64_t l2, int base);

/// 2(b^2 - 1)
BigInt general_square_length(int base);

/// Lucas numbers with L1 = 1, L2 = 3.
BigInt lucas_number(std::uint64_t n);

/// Coefficients from the constant term upwards; the last one must be 1.
using IntPolynomial = std::vector<BigInt>;
using DecimalPolynomial = std::vector<DecimalNumber>;

struct RootClassification {
    std::vector<BigInt> integer_roots;  ///< distinct, ascending
    std::string verdict;
};

inline constexpr std::uint64_t kDefaultRootSearchBound = 1'000'000'000'000ULL;

/// Integer roots by testing the divisors of the constant term; every other
/// real root is irrational. CapacityError if the (zero-root-stripped)
/// constant term exceeds `search_bound` in absolute value.
RootClassification classify_root(const IntPolynomial& q, std::uint64_t search_bound = kDefaultRootSearchBound);

struct DecimalRootClassification {
    std::vector<DecimalNumber> roots;  ///< real roots in D_b, distinct, ascending
    bool no_real_roots = false;  ///< decided only for X^n - delta
    std::string verdict;
};

/// Roots in D_b of a monic polynomial with coefficients in D_b; every other
/// real root is irrational. X^n - delta is decided by counting fractional
/// digits when b is squarefree and by an exact n-th power test otherwise.
DecimalRootClassification classify_root_decimal(const DecimalPolynomial& q, int base,
                                                std::uint64_t search_bound = kDefaultRootSearchBound);

/// "x^3-3.57", "x^4-10x^2+1", "x^2 - 2*x + 0.25": coefficients in base b.
DecimalPolynomial parse_polynomial(std::string_view text, int base);
std::string polynomial_to_string(const DecimalPolynomial& q);

/// Primitive period lengths of p, p^2, ..., p^n_max under circ_mul.
std::vector<std::size_t> period_growth(const StarElement& p, std::size_t n_max, const Limits& limits = {});

}  // namespace circq
