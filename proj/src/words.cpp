#include "circq/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace circq {

char digit_char(Digit d) {
    return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('A' + (d - 10));
}

std::optional<Digit> digit_value(char c, int base) {
    int v = -1;
    if (c >= '0' && c <= '9')
        v = c - '0';
    else if (c >= 'A' && c <= 'Z')
        v = c - 'A' + 10;
    else if (c >= 'a' && c <= 'z')
        v = c - 'a' + 10;
    if (v < 0 || v >= base)
        return std::nullopt;
    return static_cast<Digit>(v);
}

namespace {

void check_digits(int base, const std::vector<Digit>& digits) {
    check_base(base);
    for (Digit d : digits)
        if (d >= base)
            throw std::invalid_argument("digit " + std::to_string(int(d)) + " out of range for base " +
                                        std::to_string(base));
}

std::vector<Digit> parse_digits(std::string_view text, int base) {
    std::vector<Digit> out;
    out.reserve(text.size());
    for (char c : text) {
        auto d = digit_value(c, base);
        if (!d)
            throw std::invalid_argument("invalid digit '" + std::string(1, c) + "' for base " +
                                        std::to_string(base));
        out.push_back(*d);
    }
    return out;
}

BigInt value_of(int base, std::span<const Digit> digits) {
    if (digits.empty())
        return 0;
    std::string text(digits.size(), '0');
    std::transform(digits.begin(), digits.end(), text.begin(), digit_char);
    BigInt v;
    mpz_set_str(v.get_mpz_t(), text.c_str(), base);
    return v;
}

std::vector<Digit> digits_of(const BigInt& value, int base, std::size_t min_length) {
    if (value < 0)
        throw std::invalid_argument("cannot write a negative value as a digit word");
    std::vector<Digit> out;
    if (value != 0) {
        std::string text = value.get_str(base);
        out.reserve(std::max(text.size(), min_length));
        for (char c : text)
            out.push_back(*digit_value(c, base));
    }
    if (out.size() < min_length)
        out.insert(out.begin(), min_length - out.size(), Digit{0});
    return out;
}

std::string render(std::span<const Digit> digits) {
    std::string s(digits.size(), '0');
    std::transform(digits.begin(), digits.end(), s.begin(), digit_char);
    return s;
}

}  // namespace

// FiniteWord

FiniteWord::FiniteWord(int base) : base_(base) { check_base(base); }

FiniteWord::FiniteWord(int base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
    check_digits(base_, digits_);
}

FiniteWord FiniteWord::parse(std::string_view text, int base) {
    check_base(base);
    return FiniteWord(base, parse_digits(text, base));
}

FiniteWord FiniteWord::from_value(const BigInt& value, int base, std::size_t min_length) {
    check_base(base);
    return FiniteWord(base, digits_of(value, base, min_length));
}

BigInt FiniteWord::valuation() const { return value_of(base_, digits_); }

FiniteWord FiniteWord::power(std::size_t n) const {
    if (n == 0)
        throw std::invalid_argument("word power requires n >= 1");
    std::vector<Digit> out;
    out.reserve(digits_.size() * n);
    for (std::size_t i = 0; i < n; ++i)
        out.insert(out.end(), digits_.begin(), digits_.end());
    return FiniteWord(base_, std::move(out));
}

FiniteWord FiniteWord::concat(const FiniteWord& other) const {
    if (other.base_ != base_)
        throw std::invalid_argument("base mismatch in word concatenation");
    std::vector<Digit> out = digits_;
    out.insert(out.end(), other.digits_.begin(), other.digits_.end());
    return FiniteWord(base_, std::move(out));
}

std::string FiniteWord::to_string() const { return render(digits_); }

// CircularWord

CircularWord::CircularWord(int base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
    check_digits(base_, digits_);
    if (digits_.empty())
        throw std::invalid_argument("a circular word has length >= 1");
}

CircularWord::CircularWord(const FiniteWord& word)
    : CircularWord(word.base(), std::vector<Digit>(word.digits().begin(), word.digits().end())) {}

CircularWord CircularWord::parse(std::string_view text, int base) {
    check_base(base);
    if (!text.empty() && text.back() == '~')
        text.remove_suffix(1);
    return CircularWord(base, parse_digits(text, base));
}

CircularWord CircularWord::from_value(const BigInt& value, int base, std::size_t length) {
    check_base(base);
    if (length == 0)
        throw std::invalid_argument("a circular word has length >= 1");
    auto digits = digits_of(value, base, length);
    if (digits.size() != length)
        throw std::invalid_argument("value does not fit in a circular word of length " +
                                    std::to_string(length));
    return CircularWord(base, std::move(digits));
}

CircularWord CircularWord::constant(Digit d, int base, std::size_t length) {
    return CircularWord(base, std::vector<Digit>(length, d));
}

Digit CircularWord::at(long long i) const {
    const auto n = static_cast<long long>(digits_.size());
    long long r = i % n;
    if (r < 0)
        r += n;
    return digits_[static_cast<std::size_t>(r)];
}

BigInt CircularWord::valuation() const { return value_of(base_, digits_); }

CircularWord CircularWord::shift(long long k) const {
    const auto n = static_cast<long long>(digits_.size());
    long long r = k % n;
    if (r < 0)
        r += n;
    std::vector<Digit> out(digits_.size());
    std::rotate_copy(digits_.begin(), digits_.begin() + r, digits_.end(), out.begin());
    return CircularWord(base_, std::move(out));
}

CircularWord CircularWord::power(std::size_t n) const {
    return CircularWord(as_finite().power(n));
}

namespace {

bool has_period(std::span<const Digit> w, std::size_t d) {
    for (std::size_t i = d; i < w.size(); ++i)
        if (w[i] != w[i - d])
            return false;
    return true;
}

}  // namespace

CircularWord CircularWord::primitive_period() const {
    const std::size_t n = digits_.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0 && has_period(digits_, d))
            return CircularWord(base_, std::vector<Digit>(digits_.begin(), digits_.begin() + d));
    }
    return *this;
}

bool CircularWord::is_primitive() const { return primitive_period().length() == length(); }

bool CircularWord::is_constant() const { return is_all(digits_.front()); }

bool CircularWord::is_all(Digit d) const {
    return std::all_of(digits_.begin(), digits_.end(), [d](Digit x) { return x == d; });
}

CircularWord CircularWord::complement() const {
    std::vector<Digit> out(digits_.size());
    const auto beta = static_cast<Digit>(base_ - 1);
    std::transform(digits_.begin(), digits_.end(), out.begin(), [beta](Digit d) { return Digit(beta - d); });
    return CircularWord(base_, std::move(out));
}

std::string CircularWord::digit_string() const { return render(digits_); }

std::string CircularWord::to_string() const { return digit_string() + "~"; }

// free functions

BigInt valuation(const FiniteWord& w) { return w.valuation(); }
BigInt valuation(const CircularWord& w) { return w.valuation(); }
CircularWord shift(const CircularWord& p, long long k) { return p.shift(k); }
CircularWord primitive_period(const CircularWord& p) { return p.primitive_period(); }
FiniteWord word_power(const FiniteWord& w, std::size_t n) { return w.power(n); }
CircularWord word_power(const CircularWord& w, std::size_t n) { return w.power(n); }

CircularWord lift(const CircularWord& p, std::size_t length, const Limits& limits) {
    if (length > limits.max_period)
        throw CapacityError("period of length " + std::to_string(length) + " exceeds the cap of " +
                            std::to_string(limits.max_period) + " digits");
    if (length % p.length() != 0)
        throw std::invalid_argument("lift length must be a multiple of the word length");
    if (length == p.length())
        return p;
    return p.power(length / p.length());
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base)
            throw CapacityError("enumeration of " + std::to_string(base) + "^" + std::to_string(exp) +
                                " words exceeds the cap of " + std::to_string(cap));
        r *= base;
    }
    return r;
}

}  // namespace

OrbitCount fermat_orbit_count(int base, std::uint64_t p, std::uint64_t cap) {
    check_base(base);
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    const std::uint64_t b = static_cast<std::uint64_t>(base);
    const std::uint64_t total = checked_pow(b, p, cap);
    const std::uint64_t top = total / b;  // b^(p-1)

    // Words are encoded by their valuation; the shift moves the leading digit to the end.
    auto rotate = [&](std::uint64_t x) { return (x % top) * b + x / top; };

    std::vector<bool> seen(total, false);
    OrbitCount count;
    for (std::uint64_t w = 0; w < total; ++w) {
        if (seen[w])
            continue;
        std::uint64_t size = 0;
        std::uint64_t x = w;
        do {
            seen[x] = true;
            x = rotate(x);
            ++size;
        } while (x != w);
        if (size == 1)
            ++count.constants;
        else if (size == p)
            ++count.orbits;
        else
            throw std::logic_error("orbit of size " + std::to_string(size) + " for prime length " +
                                   std::to_string(p));
    }
    if (count.orbits * p + count.constants != total)
        throw std::logic_error("orbit decomposition does not cover all words");
    return count;
}

namespace {

std::uint64_t mask_count(std::uint64_t length, std::uint64_t cap) {
    if (length == 0)
        throw std::invalid_argument("length must be >= 1");
    if (length >= 63)
        throw CapacityError("binary enumeration of length " + std::to_string(length) + " exceeds the cap");
    return checked_pow(2, length, cap);
}

}  // namespace

std::uint64_t count_cyclic_no_11(std::uint64_t length, std::uint64_t cap) {
    const std::uint64_t total = mask_count(length, cap);
    const std::uint64_t full = total - 1;
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        const std::uint64_t rot = ((m << 1) | (m >> (length - 1))) & full;
        if ((m & rot) == 0)
            ++count;
    }
    return count;
}

std::uint64_t lucas_orbit_count(std::uint64_t p, std::uint64_t cap) {
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    const std::uint64_t total = mask_count(p, cap);
    const std::uint64_t full = total - 1;
    auto rotate = [&](std::uint64_t m) { return ((m << 1) | (m >> (p - 1))) & full; };

    std::vector<bool> seen(total, false);
    std::uint64_t admissible = 0, orbits = 0, fixed = 0;
    for (std::uint64_t w = 0; w < total; ++w) {
        if (seen[w] || (w & rotate(w)) != 0)
            continue;
        std::uint64_t size = 0;
        std::uint64_t x = w;
        do {
            seen[x] = true;
            x = rotate(x);
            ++size;
        } while (x != w);
        admissible += size;
        if (size == 1)
            ++fixed;
        else if (size == p)
            ++orbits;
        else
            throw std::logic_error("orbit size does not divide a prime length");
    }
    // Only 0^p is a constant admissible word.
    if (fixed != 1 || orbits * p + 1 != admissible)
        throw std::logic_error("Lucas orbit decomposition failed");
    return admissible;
}

}  // namespace circq
