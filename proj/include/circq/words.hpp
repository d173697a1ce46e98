#pragma once

// Finite and circular digit words over the alphabet {0, ..., b-1}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circq/bigint.hpp"

namespace circq {

using Digit = std::uint8_t;

/// '0'-'9' then 'A'-'Z'.
char digit_char(Digit d);
/// Accepts both letter cases; nullopt for anything that is not a digit in `base`.
std::optional<Digit> digit_value(char c, int base);

class FiniteWord {
public:
    explicit FiniteWord(int base = 10);
    FiniteWord(int base, std::vector<Digit> digits);

    /// Parses a plain digit string ("873", "1A").
    static FiniteWord parse(std::string_view text, int base);
    /// Base-b digits of a nonnegative value, left-padded with zeros to `min_length`.
    static FiniteWord from_value(const BigInt& value, int base, std::size_t min_length = 0);

    int base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    Digit operator[](std::size_t i) const { return digits_[i]; }

    BigInt valuation() const;
    FiniteWord power(std::size_t n) const;
    FiniteWord concat(const FiniteWord& other) const;
    std::string to_string() const;

    bool operator==(const FiniteWord&) const = default;

private:
    int base_;
    std::vector<Digit> digits_;
};

/// A nonempty word indexed by Z/lZ. Shifted forms are distinct values; the
/// shift identification is handled by the rational representations.
class CircularWord {
public:
    CircularWord(int base, std::vector<Digit> digits);
    explicit CircularWord(const FiniteWord& word);

    static CircularWord parse(std::string_view text, int base);
    /// The length-`length` word whose valuation is `value` (requires value < b^length).
    static CircularWord from_value(const BigInt& value, int base, std::size_t length);
    static CircularWord constant(Digit d, int base, std::size_t length = 1);

    int base() const noexcept { return base_; }
    std::size_t length() const noexcept { return digits_.size(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    /// Cyclic access; any integer index is reduced mod length.
    Digit at(long long i) const;

    BigInt valuation() const;
    CircularWord shift(long long k) const;
    CircularWord power(std::size_t n) const;
    CircularWord primitive_period() const;
    bool is_primitive() const;
    bool is_constant() const;
    bool is_all(Digit d) const;
    bool is_zero() const { return is_all(0); }
    bool is_all_beta() const { return is_all(static_cast<Digit>(base_ - 1)); }
    /// Each letter w replaced by beta - w.
    CircularWord complement() const;
    FiniteWord as_finite() const { return FiniteWord(base_, digits_); }
    /// Digit text followed by '~', e.g. "56~".
    std::string to_string() const;
    std::string digit_string() const;

    bool operator==(const CircularWord&) const = default;

private:
    int base_;
    std::vector<Digit> digits_;
};

BigInt valuation(const FiniteWord& w);
BigInt valuation(const CircularWord& w);
CircularWord shift(const CircularWord& p, long long k);
CircularWord primitive_period(const CircularWord& p);
FiniteWord word_power(const FiniteWord& w, std::size_t n);
CircularWord word_power(const CircularWord& w, std::size_t n);

/// Lifts `p` to `length` (a multiple of its length) by repetition.
CircularWord lift(const CircularWord& p, std::size_t length, const Limits& limits = {});

bool is_prime(std::uint64_t n);

struct OrbitCount {
    std::uint64_t orbits = 0;     ///< shift orbits of size p
    std::uint64_t constants = 0;  ///< fixed points (the constant words)
};

inline constexpr std::uint64_t kEnumerationCap = 100'000'000;

/// Splits all b^p circular words of prime length p into shift orbits.
/// Postcondition (checked): b^p = orbits * p + constants.
OrbitCount fermat_orbit_count(int base, std::uint64_t p,
                              std::uint64_t cap = kEnumerationCap);

/// Binary circular words of length `length` without the factor 11 (cyclically).
std::uint64_t count_cyclic_no_11(std::uint64_t length, std::uint64_t cap = kEnumerationCap);

/// Same count for a prime length, checked against the orbit decomposition
/// (count = orbits * p + 1).
std::uint64_t lucas_orbit_count(std::uint64_t p, std::uint64_t cap = kEnumerationCap);

}  // namespace circq
