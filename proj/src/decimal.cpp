#include "circq/decimal.hpp"

#include <stdexcept>

namespace circq {

DecimalNumber::DecimalNumber(int base) : word_(base, {0}) {}

DecimalNumber DecimalNumber::from_scaled(const BigInt& unscaled, std::size_t point, int base) {
    check_base(base);
    DecimalNumber d(base);
    if (unscaled == 0)
        return d;
    BigInt k = abs(unscaled);
    BigInt q, r;
    const BigInt b(base);
    while (point > 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), k.get_mpz_t(), b.get_mpz_t());
        if (r != 0)
            break;
        k = q;
        --point;
    }
    d.negative_ = unscaled < 0;
    d.word_ = FiniteWord::from_value(k, base, point);
    d.point_ = point;
    return d;
}

DecimalNumber DecimalNumber::from_integer(const BigInt& value, int base) { return from_scaled(value, 0, base); }

DecimalNumber DecimalNumber::parse(std::string_view text, int base) {
    check_base(base);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("empty decimal literal");
    FiniteWord digits = FiniteWord::parse(int_part, base).concat(FiniteWord::parse(frac_part, base));
    BigInt k = digits.valuation();
    if (negative)
        k = -k;
    return from_scaled(k, frac_part.size(), base);
}

DecimalNumber DecimalNumber::power_of_base(long long exponent, int base) {
    if (exponent >= 0)
        return from_integer(big_pow(base, static_cast<std::size_t>(exponent)), base);
    return from_scaled(1, static_cast<std::size_t>(-exponent), base);
}

BigInt DecimalNumber::unscaled() const {
    BigInt k = word_.valuation();
    return negative_ ? BigInt(-k) : k;
}

std::string DecimalNumber::to_string() const {
    std::string digits = word_.to_string();
    if (digits.size() < point_ + 1)
        digits.insert(0, point_ + 1 - digits.size(), '0');
    std::string out = negative_ ? "-" : "";
    out += digits.substr(0, digits.size() - point_);
    if (point_ > 0) {
        out += '.';
        out += digits.substr(digits.size() - point_);
    }
    return out;
}

namespace {

void require_same_base(const DecimalNumber& x, const DecimalNumber& y) {
    if (x.base() != y.base())
        throw std::invalid_argument("base mismatch in decimal arithmetic");
}

BigInt rescale(const DecimalNumber& x, std::size_t point) {
    return x.unscaled() * big_pow(x.base(), point - x.point());
}

}  // namespace

DecimalNumber DecimalNumber::operator-() const { return from_scaled(-unscaled(), point_, base()); }

DecimalNumber operator+(const DecimalNumber& x, const DecimalNumber& y) {
    require_same_base(x, y);
    const std::size_t c = std::max(x.point(), y.point());
    return DecimalNumber::from_scaled(rescale(x, c) + rescale(y, c), c, x.base());
}

DecimalNumber operator-(const DecimalNumber& x, const DecimalNumber& y) { return x + (-y); }

DecimalNumber operator*(const DecimalNumber& x, const DecimalNumber& y) {
    require_same_base(x, y);
    return DecimalNumber::from_scaled(x.unscaled() * y.unscaled(), x.point() + y.point(), x.base());
}

std::strong_ordering operator<=>(const DecimalNumber& x, const DecimalNumber& y) {
    require_same_base(x, y);
    const std::size_t c = std::max(x.point(), y.point());
    const int s = cmp(rescale(x, c), rescale(y, c));
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

DecimalNumber dec_add(const DecimalNumber& x, const DecimalNumber& y) { return x + y; }
DecimalNumber dec_neg(const DecimalNumber& x) { return -x; }
DecimalNumber dec_mul(const DecimalNumber& x, const DecimalNumber& y) { return x * y; }

DecimalNumber dec_scale(const DecimalNumber& x, long long k) {
    if (k < 0)
        return DecimalNumber::from_scaled(x.unscaled(), x.point() + static_cast<std::size_t>(-k), x.base());
    const auto up = static_cast<std::size_t>(k);
    if (up <= x.point())
        return DecimalNumber::from_scaled(x.unscaled(), x.point() - up, x.base());
    return DecimalNumber::from_scaled(x.unscaled() * big_pow(x.base(), up - x.point()), 0, x.base());
}

PointShift shift_point(const CircularWord& p, long long e) {
    const int b = p.base();
    const auto l = static_cast<long long>(p.length());
    if (e >= 0) {
        std::vector<Digit> moved(static_cast<std::size_t>(e));
        for (long long j = 0; j < e; ++j)
            moved[static_cast<std::size_t>(j)] = p.at(j);
        return {DecimalNumber::from_integer(FiniteWord(b, std::move(moved)).valuation(), b), p.shift(e)};
    }
    const long long c = -e;
    // Letters spilled by c right rotations, most significant first.
    std::vector<Digit> spilled(static_cast<std::size_t>(c));
    for (long long j = 0; j < c; ++j)
        spilled[static_cast<std::size_t>(j)] = p.at(l - c + j);
    const BigInt spill = FiniteWord(b, std::move(spilled)).valuation();
    return {DecimalNumber::from_scaled(-spill, static_cast<std::size_t>(c), b), p.shift(e)};
}

ScalarAction scalar_action(const DecimalNumber& d, const CircularWord& p) {
    if (d.base() != p.base())
        throw std::invalid_argument("base mismatch in scalar action");
    const int b = p.base();
    const std::size_t l = p.length();

    BigInt q, r;
    floor_divmod(d.unscaled() * p.valuation(), repdigit(b, l), q, r);
    PointShift moved = shift_point(CircularWord::from_value(r, b, l), -static_cast<long long>(d.point()));
    return {DecimalNumber::from_scaled(q, d.point(), b) + moved.correction, std::move(moved.rotated)};
}

StarScalarAction scalar_action(const DecimalNumber& d, const StarElement& p) {
    ScalarAction a = scalar_action(d, p.word());
    return {a.carry, StarElement(a.circular)};
}

}  // namespace circq
