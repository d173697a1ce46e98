#include "circq/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace circq {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1)
            r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

// b^l - 1 if it does not exceed cap.
std::optional<std::uint64_t> small_repdigit(int base, std::uint64_t l, std::uint64_t cap) {
    const BigInt r = repdigit(base, static_cast<std::size_t>(l));
    if (r > BigInt(static_cast<unsigned long>(cap)))
        return std::nullopt;
    return r.get_ui();
}

void require_positive(std::uint64_t l, std::uint64_t l2) {
    if (l == 0 || l2 == 0)
        throw std::invalid_argument("period lengths must be positive");
}

bool is_squarefree(int n) {
    for (int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

BigInt evaluate(const IntPolynomial& q, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

void validate_monic(std::size_t size, bool all_zero, bool leading_is_one) {
    if (size == 0 || all_zero)
        throw std::invalid_argument("zero polynomial");
    if (!leading_is_one)
        throw std::invalid_argument("polynomial must be monic (leading coefficient 1)");
    if (size < 2)
        throw std::invalid_argument("polynomial must have degree >= 1");
}

std::string join_roots(const std::vector<std::string>& roots) {
    std::string out = "{";
    for (std::size_t i = 0; i < roots.size(); ++i)
        out += (i ? ", " : "") + roots[i];
    return out + "}";
}

}  // namespace

PeriodLengthReport period_length(const BigInt& v, int base, const Limits& limits) {
    check_base(base);
    if (v < 1)
        throw std::invalid_argument("period_length needs v >= 1");
    PeriodLengthReport rep;
    rep.v = v;
    rep.base = base;

    const BigInt b(base);
    BigInt coprime = v;
    for (BigInt g = big_gcd(coprime, b); g > 1; g = big_gcd(coprime, b))
        coprime /= g;
    rep.coprime_part = coprime;

    const BigInt b_part = v / coprime;
    BigInt power = 1;
    while (power % b_part != 0) {
        power *= b;
        ++rep.aperiodic_len;
    }

    const BigInt one = BigInt(1) % coprime;
    BigInt x = b % coprime;
    rep.period_len = 1;
    while (x != one) {
        x = x * b % coprime;
        if (++rep.period_len > limits.max_period)
            throw CapacityError("period of 1/" + v.get_str() + " exceeds limit " + std::to_string(limits.max_period));
    }
    rep.repunit_witness = repdigit(base, rep.period_len) / coprime;
    return rep;
}

std::uint64_t lcm_divisibility(std::uint64_t l, std::uint64_t l2, int base) {
    check_base(base);
    require_positive(l, l2);
    return std::lcm(l, l2);
}

std::optional<std::uint64_t> brute_lcm_divisibility(std::uint64_t l, std::uint64_t l2, int base,
                                                    std::uint64_t modulus_cap) {
    check_base(base);
    require_positive(l, l2);
    const auto m1 = small_repdigit(base, l, modulus_cap);
    const auto m2 = small_repdigit(base, l2, modulus_cap);
    if (!m1 || !m2)
        return std::nullopt;
    std::uint64_t x1 = 1 % *m1, x2 = 1 % *m2;
    for (std::uint64_t n = 1;; ++n) {
        x1 = mul_mod(x1, static_cast<std::uint64_t>(base), *m1);
        x2 = mul_mod(x2, static_cast<std::uint64_t>(base), *m2);
        if (x1 == 1 % *m1 && x2 == 1 % *m2)
            return n;
    }
}

BigInt product_period_length(std::uint64_t l, std::uint64_t l2, int base) {
    check_base(base);
    require_positive(l, l2);
    const std::uint64_t d = std::gcd(l, l2);
    return repdigit(base, static_cast<std::size_t>(d)) * BigInt(static_cast<unsigned long>(std::lcm(l, l2)));
}

std::optional<std::uint64_t> brute_product_period_length(std::uint64_t l, std::uint64_t l2, int base,
                                                         std::uint64_t modulus_cap) {
    check_base(base);
    require_positive(l, l2);
    const BigInt modulus = repdigit(base, static_cast<std::size_t>(l)) * repdigit(base, static_cast<std::size_t>(l2));
    if (modulus > BigInt(static_cast<unsigned long>(modulus_cap)))
        return std::nullopt;
    const std::uint64_t m = modulus.get_ui();
    // Only multiples of lcm(l, l') can work; b is a unit mod m, so the scan ends.
    const std::uint64_t step = std::lcm(l, l2);
    const std::uint64_t jump = pow_mod(static_cast<std::uint64_t>(base), step, m);
    std::uint64_t x = jump;
    for (std::uint64_t n = step;; n += step) {
        if (x == 1 % m)
            return n;
        x = mul_mod(x, jump, m);
    }
}

BigInt product_multiplier(std::uint64_t l, std::uint64_t l2, int base) {
    check_base(base);
    require_positive(l, l2);
    const std::uint64_t d = std::gcd(l, l2);
    const std::uint64_t a2 = l2 / d;
    const BigInt terms = repdigit(base, static_cast<std::size_t>(d)) * BigInt(static_cast<unsigned long>(a2));
    const BigInt beta2 = repdigit(base, static_cast<std::size_t>(l2));
    BigInt sum = 1;
    for (std::uint64_t j = 0; BigInt(static_cast<unsigned long>(j)) < terms; ++j) {
        const std::uint64_t q = l * j / l2;
        const std::uint64_t r = l * j % l2;
        sum += big_pow(base, static_cast<std::size_t>(r)) * (repdigit(base, static_cast<std::size_t>(q * l2)) / beta2);
    }
    return sum;
}

BigInt product_multiplier_direct(std::uint64_t l, std::uint64_t l2, int base) {
    const BigInt n = product_period_length(l, l2, base);
    return repdigit(base, n.get_ui()) /
           (repdigit(base, static_cast<std::size_t>(l)) * repdigit(base, static_cast<std::size_t>(l2)));
}

BigInt general_square_length(int base) {
    check_base(base);
    return BigInt(2) * (BigInt(base) * base - 1);
}

BigInt lucas_number(std::uint64_t n) {
    if (n == 0)
        return 2;
    BigInt prev = 2, cur = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RootClassification classify_root(const IntPolynomial& q, std::uint64_t search_bound) {
    validate_monic(q.size(), std::all_of(q.begin(), q.end(), [](const BigInt& c) { return c == 0; }),
                   !q.empty() && q.back() == 1);

    std::set<BigInt> roots;
    IntPolynomial p = q;
    if (p.front() == 0) {
        roots.insert(0);
        while (p.size() > 1 && p.front() == 0)
            p.erase(p.begin());
    }
    if (p.size() > 1) {
        const BigInt a0 = abs(p.front());
        if (a0 > BigInt(static_cast<unsigned long>(search_bound)))
            throw CapacityError("constant term " + a0.get_str() + " exceeds the divisor search bound");
        const std::uint64_t A = a0.get_ui();
        auto test = [&](std::uint64_t d) {
            for (const BigInt& x : {BigInt(static_cast<unsigned long>(d)), BigInt(-BigInt(static_cast<unsigned long>(d)))})
                if (evaluate(p, x) == 0)
                    roots.insert(x);
        };
        for (std::uint64_t d = 1; static_cast<u128>(d) * d <= A; ++d)
            if (A % d == 0) {
                test(d);
                test(A / d);
            }
    }

    RootClassification out;
    out.integer_roots.assign(roots.begin(), roots.end());
    if (out.integer_roots.empty()) {
        out.verdict = "no integer roots, all real roots irrational";
    } else {
        std::vector<std::string> shown;
        for (const auto& r : out.integer_roots)
            shown.push_back(r.get_str());
        out.verdict = "integer roots " + join_roots(shown) + ", every other real root irrational";
    }
    return out;
}

DecimalRootClassification classify_root_decimal(const DecimalPolynomial& q, int base, std::uint64_t search_bound) {
    check_base(base);
    for (const auto& c : q)
        if (c.base() != base)
            throw std::invalid_argument("coefficient base mismatch");
    validate_monic(q.size(), std::all_of(q.begin(), q.end(), [](const DecimalNumber& c) { return c.is_zero(); }),
                   !q.empty() && q.back() == DecimalNumber::from_integer(1, base));

    const std::size_t n = q.size() - 1;
    DecimalRootClassification out;
    auto render = [&] {
        std::vector<std::string> shown;
        for (const auto& r : out.roots)
            shown.push_back(r.to_string());
        return shown;
    };

    const bool pure_power = std::all_of(q.begin() + 1, q.end() - 1, [](const DecimalNumber& c) { return c.is_zero(); });
    if (pure_power && n >= 2 && !q.front().is_zero()) {
        // X^n = delta with delta = u / b^m; an integer delta goes through the integer route below.
        const DecimalNumber delta = -q.front();
        if (delta.is_negative() && n % 2 == 0) {
            out.no_real_roots = true;
            out.verdict = "no real roots";
            return out;
        }
    }
    if (pure_power && n >= 2 && !q.front().is_zero() && q.front().point() > 0) {
        const DecimalNumber delta = -q.front();
        const std::size_t m = delta.point();
        BigInt num = abs(delta.unscaled());
        BigInt den = big_pow(base, m);
        const BigInt g = big_gcd(num, den);
        num /= g;
        den /= g;
        BigInt r, s;
        const auto un = static_cast<unsigned long>(n);
        const bool exact = mpz_root(r.get_mpz_t(), num.get_mpz_t(), un) != 0 &&
                           mpz_root(s.get_mpz_t(), den.get_mpz_t(), un) != 0;
        const bool digit_count_applies = is_squarefree(base) && m % n != 0;
        if (digit_count_applies && exact)
            throw std::logic_error("digit-count argument contradicted by the exact n-th power test");

        if (!exact) {
            if (digit_count_applies)
                out.verdict = "irrational: a root in D_b with k fractional digits would give delta exactly " +
                              std::to_string(n) + "k fractional digits, but " + std::to_string(n) + "k = " +
                              std::to_string(m) + " is impossible";
            else
                out.verdict = "irrational: delta is not the power of degree " + std::to_string(n) + " of any member of D_b";
            return out;
        }
        // s^n divides b^m, so s divides b^m.
        const DecimalNumber root = DecimalNumber::from_scaled(r * (big_pow(base, m) / s), m, base);
        if (delta.is_negative())
            out.roots = {-root};
        else if (n % 2 == 0)
            out.roots = {-root, root};
        else
            out.roots = {root};
        out.verdict = "roots in D_b " + join_roots(render());
        return out;
    }

    // Substitute X = Y / b^m with m the largest number of fractional digits:
    // b^(mn) Q(Y / b^m) is monic with integer coefficients.
    std::size_t m = 0;
    for (const auto& c : q)
        m = std::max(m, c.point());
    IntPolynomial scaled(q.size());
    for (std::size_t i = 0; i <= n; ++i) {
        const DecimalNumber c = dec_scale(q[i], static_cast<long long>(m * (n - i)));
        if (!c.is_integer())
            throw std::logic_error("scaling left a fractional coefficient");
        scaled[i] = c.unscaled();
    }
    const RootClassification ints = classify_root(scaled, search_bound);
    for (const auto& y : ints.integer_roots)
        out.roots.push_back(DecimalNumber::from_scaled(y, m, base));
    if (m == 0)
        out.verdict = ints.verdict;
    else
        out.verdict = out.roots.empty() ? "no roots in D_b, all real roots irrational"
                                        : "roots in D_b " + join_roots(render()) + ", every other real root irrational";
    return out;
}

DecimalPolynomial parse_polynomial(std::string_view text, int base) {
    check_base(base);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    const std::string original(text);
    auto malformed = [&](const std::string& why) {
        return std::invalid_argument("malformed polynomial '" + original + "': " + why);
    };
    if (s.empty())
        throw malformed("empty");

    std::map<std::size_t, DecimalNumber> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw malformed("expected '+' or '-'");
        }
        const std::size_t coef_start = i;
        while (i < s.size() && s[i] != 'x' && s[i] != 'X' && (s[i] == '.' || digit_value(s[i], base)))
            ++i;
        const std::string coef = s.substr(coef_start, i - coef_start);
        if (i < s.size() && s[i] == '*') {
            if (coef.empty())
                throw malformed("'*' without coefficient");
            ++i;
        }
        std::size_t degree = 0;
        bool has_x = false;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            has_x = true;
            degree = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const std::size_t e0 = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (e0 == i)
                    throw malformed("missing exponent");
                degree = std::stoul(s.substr(e0, i - e0));
            }
        }
        if (coef.empty() && !has_x)
            throw malformed("empty term");
        DecimalNumber value = coef.empty() ? DecimalNumber::from_integer(1, base) : DecimalNumber::parse(coef, base);
        if (negative)
            value = -value;
        auto [it, fresh] = terms.emplace(degree, value);
        if (!fresh)
            it->second = it->second + value;
    }
    const std::size_t deg = terms.rbegin()->first;
    DecimalPolynomial out(deg + 1, DecimalNumber(base));
    for (const auto& [d, c] : terms)
        out[d] = c;
    return out;
}

std::string polynomial_to_string(const DecimalPolynomial& q) {
    std::string out;
    for (std::size_t i = q.size(); i-- > 0;) {
        const DecimalNumber& c = q[i];
        if (c.is_zero())
            continue;
        const bool negative = c.is_negative();
        const std::string mag = (negative ? -c : c).to_string();
        if (!out.empty() || negative)
            out += negative ? "-" : "+";
        if (i == 0 || mag != "1")
            out += mag;
        if (i >= 1)
            out += "x";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::vector<std::size_t> period_growth(const StarElement& p, std::size_t n_max, const Limits& limits) {
    if (p.is_zero())
        throw std::invalid_argument("period_growth needs a nonzero period");
    std::vector<std::size_t> lengths;
    if (n_max == 0)
        return lengths;
    StarElement cur = p;
    lengths.push_back(cur.length());
    for (std::size_t k = 2; k <= n_max; ++k) {
        cur = circ_mul(cur, p, limits);
        lengths.push_back(cur.length());
    }
    return lengths;
}

}  // namespace circq
