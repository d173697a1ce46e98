#include "circq/rational.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circq {

namespace {

void require_same_base(int a, int b) {
    if (a != b)
        throw std::invalid_argument("base mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

CircularWord zero_period(int base) { return CircularWord::constant(0, base, 1); }

std::strong_ordering to_ordering(int s) {
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t common_length(std::size_t acc, std::size_t l, const Limits& limits) {
    const std::size_t m = lcm_size(acc, l);
    if (m > limits.max_period)
        throw CapacityError("common period length " + std::to_string(m) + " exceeds limit " +
                            std::to_string(limits.max_period));
    return m;
}

// Lifts every term to the common length L and writes the sum of valuations as
// q * (b^L - 1) + r.
std::pair<BigInt, CircularWord> sum_circular(const std::vector<CircularWord>& terms, const Limits& limits) {
    const int b = terms.front().base();
    std::size_t L = 1;
    for (const auto& t : terms) {
        require_same_base(b, t.base());
        L = common_length(L, t.length(), limits);
    }
    BigInt s = 0;
    for (const auto& t : terms)
        s += lift(t, L, limits).valuation();
    BigInt q, r;
    floor_divmod(s, repdigit(b, L), q, r);
    return {q, CircularWord::from_value(r, b, L)};
}

// Magnitude of a WCP denotation with W held as an integer.
struct Magnitude {
    bool negative;
    BigInt w;
    CircularWord p;
    long long c;
};

Magnitude magnitude_of(const WcpDenotation& d) { return {d.negative, d.aperiodic.valuation(), d.period, d.point}; }

// (W, P, c) -> (W b^s + p0...p_{s-1}, sigma^s P, c - s)
Magnitude move_point_left(Magnitude m, long long s) {
    if (s == 0)
        return m;
    PointShift moved = shift_point(m.p, s);
    m.w = m.w * big_pow(m.p.base(), static_cast<std::size_t>(s)) + moved.correction.unscaled();
    m.p = std::move(moved.rotated);
    m.c -= s;
    return m;
}

// Brings both to the smaller exponent and a common period length.
std::pair<Magnitude, Magnitude> align(const WcpDenotation& x, const WcpDenotation& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    const long long c = std::min(x.point, y.point);
    Magnitude a = move_point_left(magnitude_of(x), x.point - c);
    Magnitude b = move_point_left(magnitude_of(y), y.point - c);
    const std::size_t L = common_length(a.p.length(), b.p.length(), limits);
    a.p = lift(a.p, L, limits);
    b.p = lift(b.p, L, limits);
    return {std::move(a), std::move(b)};
}

int lex_compare(const Magnitude& a, const Magnitude& b) {
    if (int s = cmp(a.w, b.w); s != 0)
        return s < 0 ? -1 : 1;
    for (std::size_t i = 0; i < a.p.length(); ++i)
        if (a.p[i] != b.p[i])
            return a.p[i] < b.p[i] ? -1 : 1;
    return 0;
}

bool is_zero_value(const Magnitude& m) { return m.w == 0 && m.p.is_zero(); }

// Lexicographic order plus the two exceptional clauses
// (W, beta^L) = (W + 1, 0^L).
int true_magnitude_compare(const Magnitude& a, const Magnitude& b) {
    const int s = lex_compare(a, b);
    if (s == 0)
        return 0;
    if (a.p.is_all_beta() && b.p.is_zero() && b.w == a.w + 1)
        return 0;
    if (b.p.is_all_beta() && a.p.is_zero() && a.w == b.w + 1)
        return 0;
    return s;
}

int signed_compare(const Magnitude& a, const Magnitude& b, int magnitude_order) {
    if (a.negative == b.negative)
        return a.negative ? -magnitude_order : magnitude_order;
    if (is_zero_value(a) && is_zero_value(b))
        return 0;
    return a.negative ? -1 : 1;
}

// Long division of the digit stream W P P P ... (point after |W| + c digits)
// by a positive integer. The state after W is (remainder, phase in P); the
// quotient digits repeat from the first repeated state.
WcpDenotation divide_stream(const FiniteWord& w, const CircularWord& p, long long c, const BigInt& divisor,
                            const Limits& limits) {
    const int b = p.base();
    std::vector<Digit> stream(w.digits().begin(), w.digits().end());
    if (static_cast<long long>(stream.size()) + c < 0)
        stream.insert(stream.begin(), static_cast<std::size_t>(-(static_cast<long long>(stream.size()) + c)),
                      Digit{0});
    const std::size_t n = stream.size();
    const long long point_pos = static_cast<long long>(n) + c;
    const std::size_t l = p.length();

    std::vector<Digit> quotient;
    std::map<std::pair<BigInt, std::size_t>, std::size_t> seen;
    BigInt r = 0, qd;
    std::size_t start = 0;
    for (std::size_t pos = 0;; ++pos) {
        if (pos >= n) {
            auto [it, fresh] = seen.emplace(std::make_pair(r, (pos - n) % l), pos);
            if (!fresh) {
                start = it->second;
                break;
            }
            if (seen.size() > limits.max_period)
                throw CapacityError("quotient period exceeds limit " + std::to_string(limits.max_period));
        }
        const Digit d = pos < n ? stream[pos] : p[(pos - n) % l];
        r = r * b + d;
        floor_divmod(r, divisor, qd, r);
        quotient.push_back(static_cast<Digit>(qd.get_ui()));
    }

    std::vector<Digit> pre(quotient.begin(), quotient.begin() + static_cast<std::ptrdiff_t>(start));
    if (pre.empty())
        pre.push_back(0);
    std::vector<Digit> per(quotient.begin() + static_cast<std::ptrdiff_t>(start), quotient.end());
    return {false, FiniteWord(b, std::move(pre)), CircularWord(b, std::move(per)),
            point_pos - static_cast<long long>(start)};
}

WcpNumber make_wcp(bool negative, const BigInt& w, CircularWord p, long long c) {
    const int b = p.base();
    return WcpNumber(WcpDenotation{negative, FiniteWord::from_value(w, b, 1), std::move(p), c});
}

}  // namespace

// display

std::string WcpDenotation::to_string() const {
    std::string w = aperiodic.to_string();
    if (w.empty())
        w = "0";
    if (point < 0 && static_cast<long long>(w.size()) < -point + 1)
        w.insert(0, static_cast<std::size_t>(-point + 1) - w.size(), '0');
    return std::string("(") + (negative ? "-" : "+") + ", " + w + ", " + period.to_string() + ", " +
           std::to_string(point) + ")";
}

std::string DcDenotation::to_string() const {
    return "(" + delta.to_string() + ", " + period.to_string() + ")";
}

// canonical forms

WcpNumber::WcpNumber(const WcpDenotation& raw) {
    const int b = raw.base();
    require_same_base(b, raw.aperiodic.base());
    CircularWord p = raw.period.primitive_period();
    BigInt w = raw.aperiodic.valuation();
    if (p.is_all_beta()) {
        w += 1;
        p = zero_period(b);
    }
    long long c = raw.point;
    if (w == 0 && p.is_zero()) {
        d_ = {false, FiniteWord(b, {0}), std::move(p), 0};
        return;
    }
    // Undo shifts while the last letter of W equals the last letter of P.
    const BigInt bb(b);
    BigInt q, r;
    for (;;) {
        floor_divmod(w, bb, q, r);
        if (r != static_cast<int>(p.at(-1)))
            break;
        w = q;
        p = p.shift(-1);
        ++c;
    }
    d_ = {raw.negative, FiniteWord::from_value(w, b, 1), std::move(p), c};
}

WcpNumber WcpNumber::zero(int base) { return from_integer(0, base); }

WcpNumber WcpNumber::from_integer(const BigInt& value, int base) {
    check_base(base);
    return make_wcp(value < 0, abs(value), zero_period(base), 0);
}

bool WcpNumber::is_zero() const { return d_.aperiodic.valuation() == 0 && d_.period.is_zero(); }

DcNumber::DcNumber(const DcDenotation& raw) {
    require_same_base(raw.delta.base(), raw.period.base());
    CircularWord p = raw.period.primitive_period();
    DecimalNumber delta = raw.delta;
    if (p.is_all_beta()) {
        delta = delta + DecimalNumber::from_integer(1, p.base());
        p = zero_period(p.base());
    }
    d_ = {std::move(delta), std::move(p)};
}

DcNumber DcNumber::zero(int base) { return from_integer(0, base); }

DcNumber DcNumber::from_integer(const BigInt& value, int base) {
    return from_decimal(DecimalNumber::from_integer(value, base));
}

DcNumber DcNumber::from_decimal(const DecimalNumber& value) {
    return DcNumber(DcDenotation{value, zero_period(value.base())});
}

// conversions

DcNumber from_fraction(const BigInt& numerator, const BigInt& denominator, int base, const Limits& limits) {
    check_base(base);
    if (denominator == 0)
        throw std::domain_error("fraction with zero denominator");
    const bool negative = numerator != 0 && ((numerator < 0) != (denominator < 0));
    WcpDenotation q = divide_stream(FiniteWord::from_value(abs(numerator), base, 1), zero_period(base), 0,
                                    abs(denominator), limits);
    q.negative = negative;
    return dc_from_wcp(WcpNumber(q));
}

DcNumber from_fraction(const Fraction& f, int base, const Limits& limits) {
    return from_fraction(f.numerator(), f.denominator(), base, limits);
}

Fraction to_fraction(const DcDenotation& x) {
    const int b = x.base();
    return Fraction(x.delta.unscaled(), big_pow(b, x.delta.point())) +
           Fraction(x.period.valuation(), repdigit(b, x.period.length()));
}

Fraction to_fraction(const WcpDenotation& x) {
    const int b = x.base();
    Fraction m = Fraction(x.aperiodic.valuation()) + Fraction(x.period.valuation(), repdigit(b, x.period.length()));
    const BigInt scale = big_pow(b, static_cast<std::size_t>(x.point < 0 ? -x.point : x.point));
    m = x.point >= 0 ? m * Fraction(scale) : m / Fraction(scale);
    return x.negative ? -m : m;
}

Fraction to_fraction(const DcNumber& x) { return to_fraction(x.denotation()); }
Fraction to_fraction(const WcpNumber& x) { return to_fraction(x.denotation()); }
Fraction iso_N(const DcNumber& x) { return to_fraction(x); }
Fraction iso_N(const WcpNumber& x) { return to_fraction(x); }

DcDenotation dc_denotation(const WcpDenotation& x) {
    const int b = x.base();
    require_same_base(b, x.aperiodic.base());
    PointShift moved = shift_point(x.period, x.point);
    DecimalNumber delta = dec_scale(DecimalNumber::from_integer(x.aperiodic.valuation(), b), x.point) +
                          moved.correction;
    DcDenotation d{std::move(delta), std::move(moved.rotated)};
    if (!x.negative || (d.delta.is_zero() && d.period.is_zero()))
        return d;
    return {-d.delta - DecimalNumber::from_integer(1, b), d.period.complement()};
}

DcNumber dc_from_wcp(const WcpNumber& x) { return DcNumber(dc_denotation(x.denotation())); }

WcpNumber wcp_from_dc(const DcNumber& x) {
    const auto c = static_cast<long long>(x.delta().point());
    PointShift moved = shift_point(x.period(), c);
    const BigInt w = x.delta().unscaled() + moved.correction.unscaled();
    if (w >= 0)
        return make_wcp(false, w, std::move(moved.rotated), -c);
    return make_wcp(true, -w - 1, moved.rotated.complement(), -c);
}

// DC operations

DcNumber dc_add(const DcNumber& x, const DcNumber& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    auto [q, r] = sum_circular({x.period(), y.period()}, limits);
    return DcNumber(DcDenotation{x.delta() + y.delta() + DecimalNumber::from_integer(q, x.base()), std::move(r)});
}

DcNumber dc_neg(const DcNumber& x) {
    return DcNumber(DcDenotation{-x.delta() - DecimalNumber::from_integer(1, x.base()), x.period().complement()});
}

DcNumber dc_sub(const DcNumber& x, const DcNumber& y, const Limits& limits) { return dc_add(x, dc_neg(y), limits); }

DcNumber dc_mul(const DcNumber& x, const DcNumber& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    ScalarAction a1 = scalar_action(x.delta(), y.period());
    ScalarAction a2 = scalar_action(y.delta(), x.period());
    CircularWord pq = circ_mul(StarElement(x.period()), StarElement(y.period()), limits).word();
    auto [q, r] = sum_circular({a1.circular, a2.circular, pq}, limits);
    DecimalNumber delta = x.delta() * y.delta() + a1.carry + a2.carry + DecimalNumber::from_integer(q, x.base());
    return DcNumber(DcDenotation{std::move(delta), std::move(r)});
}

DcNumber dc_div(const DcNumber& x, const DcNumber& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    if (y.is_zero())
        throw std::domain_error("division by zero");
    const int b = x.base();
    // y = Y / K with K = b^c' (b^l' - 1)
    const BigInt beta = repdigit(b, y.period().length());
    const BigInt bc = big_pow(b, y.delta().point());
    BigInt k = bc * beta;
    BigInt yy = y.delta().unscaled() * beta + bc * y.period().valuation();
    const BigInt g = big_gcd(k, yy);
    k /= g;
    yy /= g;

    const WcpNumber z = wcp_from_dc(dc_mul(x, DcNumber::from_integer(k, b), limits));
    WcpDenotation q = divide_stream(z.aperiodic(), z.period(), z.point(), abs(yy), limits);
    q.negative = z.is_negative() != (yy < 0);
    return dc_from_wcp(WcpNumber(q));
}

std::strong_ordering dc_compare(const DcNumber& x, const DcNumber& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    const std::size_t L = common_length(x.period().length(), y.period().length(), limits);
    const BigInt px = lift(x.period(), L, limits).valuation();
    const BigInt py = lift(y.period(), L, limits).valuation();
    // x < y  iff  b^L (d - d') < (d - d') + P' - P
    const DecimalNumber diff = x.delta() - y.delta();
    const DecimalNumber lhs = dec_scale(diff, static_cast<long long>(L));
    const DecimalNumber rhs = diff + DecimalNumber::from_integer(py - px, x.base());
    return lhs <=> rhs;
}

// WCP operations

WcpNumber wcp_add(const WcpNumber& x, const WcpNumber& y, const Limits& limits) {
    auto [a, b] = align(x.denotation(), y.denotation(), limits);
    if (a.negative == b.negative) {
        auto [q, r] = sum_circular({a.p, b.p}, limits);
        return make_wcp(a.negative, a.w + b.w + q, std::move(r), a.c);
    }
    const int s = lex_compare(a, b);
    if (s == 0)
        return WcpNumber::zero(x.base());
    const Magnitude& big = s > 0 ? a : b;
    const Magnitude& small = s > 0 ? b : a;
    BigInt w = big.w - small.w;
    BigInt p = big.p.valuation() - small.p.valuation();
    if (p < 0) {
        w -= 1;
        p += repdigit(x.base(), big.p.length());
    }
    return make_wcp(big.negative, w, CircularWord::from_value(p, x.base(), big.p.length()), a.c);
}

WcpNumber wcp_neg(const WcpNumber& x) {
    WcpDenotation d = x.denotation();
    d.negative = !d.negative;
    return WcpNumber(d);
}

WcpNumber wcp_sub(const WcpNumber& x, const WcpNumber& y, const Limits& limits) {
    return wcp_add(x, wcp_neg(y), limits);
}

WcpNumber wcp_mul(const WcpNumber& x, const WcpNumber& y, const Limits& limits) {
    require_same_base(x.base(), y.base());
    const int b = x.base();
    const BigInt w = x.aperiodic().valuation();
    const BigInt w2 = y.aperiodic().valuation();
    ScalarAction a1 = scalar_action(DecimalNumber::from_integer(w, b), y.period());
    ScalarAction a2 = scalar_action(DecimalNumber::from_integer(w2, b), x.period());
    CircularWord pq = circ_mul(StarElement(x.period()), StarElement(y.period()), limits).word();
    auto [q, r] = sum_circular({a1.circular, a2.circular, pq}, limits);
    const BigInt total = w * w2 + a1.carry.unscaled() + a2.carry.unscaled() + q;
    return make_wcp(x.is_negative() != y.is_negative(), total, std::move(r), x.point() + y.point());
}

Semiotic wcp_compare_semiotic(const WcpDenotation& x, const WcpDenotation& y, const Limits& limits) {
    auto [a, b] = align(x, y, limits);
    const int s = signed_compare(a, b, lex_compare(a, b));
    return s < 0 ? Semiotic::Precedes : s > 0 ? Semiotic::Follows : Semiotic::Same;
}

std::strong_ordering wcp_compare(const WcpDenotation& x, const WcpDenotation& y, const Limits& limits) {
    auto [a, b] = align(x, y, limits);
    return to_ordering(signed_compare(a, b, true_magnitude_compare(a, b)));
}

std::strong_ordering wcp_compare(const WcpNumber& x, const WcpNumber& y, const Limits& limits) {
    return wcp_compare(x.denotation(), y.denotation(), limits);
}

// 0.(beta) = 1 cancellation

CancellationReport cancellation_demo(const DcDenotation& a, const DcNumber& x, const Limits& limits) {
    require_same_base(a.base(), x.base());
    const int b = a.base();
    const DecimalNumber one = DecimalNumber::from_integer(1, b);
    CancellationReport out;
    if (a.period.is_all_beta()) {
        out.beta_form = a;
        out.successor_form = {a.delta + one, zero_period(b)};
    } else if (a.period.is_zero()) {
        out.successor_form = a;
        out.beta_form = {a.delta - one, CircularWord::constant(static_cast<Digit>(b - 1), b, 1)};
    } else {
        throw std::invalid_argument("cancellation_demo needs a period of all zeros or all betas");
    }
    if (x.period().is_zero())
        throw std::invalid_argument("cancellation_demo needs x with a nonzero period");

    auto raw_add = [&](const DcDenotation& u) {
        const std::size_t L = common_length(u.period.length(), x.period().length(), limits);
        const CircularWord pu = lift(u.period, L, limits);
        const CircularWord px = lift(x.period(), L, limits);
        BigInt q, r;
        floor_divmod(pu.valuation() + px.valuation(), repdigit(b, L), q, r);
        return DcDenotation{u.delta + x.delta() + DecimalNumber::from_integer(q, b), circular_carry_add(pu, px)};
    };
    out.sum_via_beta = raw_add(out.beta_form);
    out.sum_via_successor = raw_add(out.successor_form);
    out.identical = out.sum_via_beta == out.sum_via_successor;
    return out;
}

// notation

WcpDenotation parse_denotation(std::string_view text, int base) {
    check_base(base);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const std::string original(text);
    auto malformed = [&] { return std::invalid_argument("malformed number '" + original + "'"); };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view period_text;
    if (const auto open = text.find('('); open != std::string_view::npos) {
        if (text.back() != ')' || open + 2 > text.size() - 1)
            throw malformed();
        period_text = text.substr(open + 1, text.size() - open - 2);
        text = text.substr(0, open);
        if (text.find('.') == std::string_view::npos)
            throw malformed();
    }
    const auto dot = text.find('.');
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() || frac_part.find('.') != std::string_view::npos ||
        period_text.find_first_of("()") != std::string_view::npos)
        throw malformed();

    WcpDenotation d;
    d.negative = negative;
    d.aperiodic = FiniteWord::parse(int_part, base).concat(FiniteWord::parse(frac_part, base));
    d.period = period_text.empty() ? zero_period(base) : CircularWord::parse(period_text, base);
    d.point = -static_cast<long long>(frac_part.size());
    return d;
}

WcpNumber parse_wcp(std::string_view text, int base) { return WcpNumber(parse_denotation(text, base)); }

DcNumber parse_dc(std::string_view text, int base) { return dc_from_wcp(parse_wcp(text, base)); }

std::string to_notation(const WcpNumber& x) {
    const WcpDenotation& d = x.denotation();
    std::string w = d.aperiodic.to_string();
    std::string int_part, frac_part;
    CircularWord period = d.period;
    if (d.point <= 0) {
        const auto need = static_cast<std::size_t>(-d.point + 1);
        if (w.size() < need)
            w.insert(0, need - w.size(), '0');
        const std::size_t split = w.size() - static_cast<std::size_t>(-d.point);
        int_part = w.substr(0, split);
        frac_part = w.substr(split);
    } else {
        int_part = w;
        for (long long j = 0; j < d.point; ++j)
            int_part += digit_char(period.at(j));
        period = period.shift(d.point);
    }
    const auto first = int_part.find_first_not_of('0');
    int_part = first == std::string::npos ? "0" : int_part.substr(first);

    std::string out = (d.negative ? "-" : "") + int_part;
    if (!frac_part.empty() || !period.is_zero())
        out += "." + frac_part;
    if (!period.is_zero())
        out += "(" + period.digit_string() + ")";
    return out;
}

std::string to_notation(const DcNumber& x) { return to_notation(wcp_from_dc(x)); }

}  // namespace circq
