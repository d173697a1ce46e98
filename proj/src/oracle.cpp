#include "circq/oracle.hpp"

#include <stdexcept>

namespace circq {

namespace {

BigInt euclid_gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

BigInt parse_integer(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer");
    std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    BigInt v(std::string(text.substr(i)), 10);
    return text.front() == '-' ? BigInt(-v) : v;
}

}  // namespace

Fraction::Fraction(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0)
        throw std::domain_error("fraction with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = euclid_gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Fraction(parse_integer(text), 1);
    return Fraction(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Fraction::to_string() const {
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_); }

Fraction operator+(const Fraction& x, const Fraction& y) {
    return Fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }

Fraction operator*(const Fraction& x, const Fraction& y) { return Fraction(x.num_ * y.num_, x.den_ * y.den_); }

Fraction operator/(const Fraction& x, const Fraction& y) {
    if (y.num_ == 0)
        throw std::domain_error("division by zero");
    return Fraction(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const Fraction& x, const Fraction& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    const BigInt lhs = x.num_ * y.den_;
    const BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Fraction frac_add(const Fraction& x, const Fraction& y) { return x + y; }
Fraction frac_mul(const Fraction& x, const Fraction& y) { return x * y; }
Fraction frac_div(const Fraction& x, const Fraction& y) { return x / y; }
std::strong_ordering frac_cmp(const Fraction& x, const Fraction& y) { return x <=> y; }

}  // namespace circq
