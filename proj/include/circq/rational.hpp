#pragma once

// Rational numbers as ultimately periodic base-b expansions.
//
// Two representations:
//   WCP  (s, W, P~, c)   value s * b^c * (N(W) + N(P)/(b^|P| - 1))
//   DC   (delta, P~)     value delta + N(P)/(b^|P| - 1), delta a finite expansion
//
// The *Denotation structs hold any textual/raw form; WcpNumber and DcNumber
// always hold the canonical representative obtained by applying the
// identifications (leading zeros, circular powers, 0.(beta) = 1, shift).
//
// Arithmetic works on digit words and integers only. Fractions appear at the
// conversion endpoints (from_fraction / to_fraction / iso_N) and nowhere else.

#include <compare>
#include <string>
#include <string_view>

#include "circq/bigint.hpp"
#include "circq/decimal.hpp"
#include "circq/group.hpp"
#include "circq/oracle.hpp"
#include "circq/words.hpp"

namespace circq {

struct WcpDenotation {
    bool negative = false;
    FiniteWord aperiodic;
    CircularWord period = CircularWord::constant(0, 10, 1);
    long long point = 0;

    int base() const noexcept { return period.base(); }
    /// "(+, 24837, 56~, -3)"; W is padded so the point falls inside it.
    std::string to_string() const;
    bool operator==(const WcpDenotation&) const = default;
};

struct DcDenotation {
    DecimalNumber delta;
    CircularWord period = CircularWord::constant(0, 10, 1);

    int base() const noexcept { return period.base(); }
    /// "(24.181, 65~)"
    std::string to_string() const;
    bool operator==(const DcDenotation&) const = default;
};

class WcpNumber {
public:
    /// Canonicalizes: primitive period, no all-beta period, W without leading
    /// zeros, shortest aperiodic part, zero is (+, 0, 0~, 0).
    explicit WcpNumber(const WcpDenotation& raw);
    static WcpNumber zero(int base);
    static WcpNumber from_integer(const BigInt& value, int base);

    int base() const noexcept { return d_.base(); }
    bool is_negative() const noexcept { return d_.negative; }
    bool is_zero() const;
    const FiniteWord& aperiodic() const noexcept { return d_.aperiodic; }
    const CircularWord& period() const noexcept { return d_.period; }
    long long point() const noexcept { return d_.point; }
    const WcpDenotation& denotation() const noexcept { return d_; }
    std::string to_string() const { return d_.to_string(); }

    bool operator==(const WcpNumber&) const = default;

private:
    WcpDenotation d_;
};

class DcNumber {
public:
    /// Canonicalizes: primitive period, (delta, beta~) -> (delta + 1, 0~).
    explicit DcNumber(const DcDenotation& raw);
    static DcNumber zero(int base);
    static DcNumber from_integer(const BigInt& value, int base);
    static DcNumber from_decimal(const DecimalNumber& value);

    int base() const noexcept { return d_.base(); }
    bool is_zero() const { return d_.delta.is_zero() && d_.period.is_zero(); }
    const DecimalNumber& delta() const noexcept { return d_.delta; }
    const CircularWord& period() const noexcept { return d_.period; }
    const DcDenotation& denotation() const noexcept { return d_; }
    std::string to_string() const { return d_.to_string(); }

    bool operator==(const DcNumber&) const = default;

private:
    DcDenotation d_;
};

// conversions

DcNumber from_fraction(const BigInt& numerator, const BigInt& denominator, int base, const Limits& limits = {});
DcNumber from_fraction(const Fraction& f, int base, const Limits& limits = {});

Fraction to_fraction(const DcNumber& x);
Fraction to_fraction(const WcpNumber& x);
Fraction to_fraction(const DcDenotation& x);
Fraction to_fraction(const WcpDenotation& x);

/// The ring isomorphism onto Q; identical to to_fraction.
Fraction iso_N(const DcNumber& x);
Fraction iso_N(const WcpNumber& x);

WcpNumber wcp_from_dc(const DcNumber& x);
DcNumber dc_from_wcp(const WcpNumber& x);
/// Converts a raw WCP denotation to a DC denotation without applying any
/// identification (so 0.(9) stays (0, 9~)).
DcDenotation dc_denotation(const WcpDenotation& x);

// DC field operations

DcNumber dc_add(const DcNumber& x, const DcNumber& y, const Limits& limits = {});
DcNumber dc_neg(const DcNumber& x);
DcNumber dc_sub(const DcNumber& x, const DcNumber& y, const Limits& limits = {});
DcNumber dc_mul(const DcNumber& x, const DcNumber& y, const Limits& limits = {});
/// Long division of the digit stream of x by an integer derived from y.
/// Throws std::domain_error when y is zero.
DcNumber dc_div(const DcNumber& x, const DcNumber& y, const Limits& limits = {});
std::strong_ordering dc_compare(const DcNumber& x, const DcNumber& y, const Limits& limits = {});

// WCP field operations

WcpNumber wcp_add(const WcpNumber& x, const WcpNumber& y, const Limits& limits = {});
WcpNumber wcp_neg(const WcpNumber& x);
WcpNumber wcp_sub(const WcpNumber& x, const WcpNumber& y, const Limits& limits = {});
WcpNumber wcp_mul(const WcpNumber& x, const WcpNumber& y, const Limits& limits = {});

enum class Semiotic { Precedes, Same, Follows };

/// Lexicographic order on aligned (W, P~) pairs; reads 0.(9) as below 1.
Semiotic wcp_compare_semiotic(const WcpDenotation& x, const WcpDenotation& y, const Limits& limits = {});
/// The semiotic order corrected by the two 0.(beta) = 1 clauses; agrees with
/// the order of values on raw denotations.
std::strong_ordering wcp_compare(const WcpDenotation& x, const WcpDenotation& y, const Limits& limits = {});
std::strong_ordering wcp_compare(const WcpNumber& x, const WcpNumber& y, const Limits& limits = {});

struct CancellationReport {
    DcDenotation beta_form;       ///< (delta, beta~)
    DcDenotation successor_form;  ///< (delta + 1, 0~)
    DcDenotation sum_via_beta;
    DcDenotation sum_via_successor;
    bool identical = false;
};

/// Adds x to both twin forms of `a` with the raw addition rule (no
/// identification on inputs or outputs) and compares the digits. `a` must
/// have period beta~ or 0~; x must have a nonzero period.
CancellationReport cancellation_demo(const DcDenotation& a, const DcNumber& x, const Limits& limits = {});

// text notation: [-]INT[.FRAC][(PERIOD)]

WcpDenotation parse_denotation(std::string_view text, int base);
WcpNumber parse_wcp(std::string_view text, int base);
DcNumber parse_dc(std::string_view text, int base);
std::string to_notation(const WcpNumber& x);
std::string to_notation(const DcNumber& x);

}  // namespace circq
