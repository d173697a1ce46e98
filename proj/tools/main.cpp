// circq: exact arithmetic on ultimately periodic base-b expansions.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 capacity exceeded.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "circq/numtheory.hpp"
#include "circq/rational.hpp"
#include "circq/words.hpp"
#include "expression.hpp"

namespace {

using namespace circq;

struct Options {
    int base = 10;
    bool raw = false;
    std::size_t max_period = Limits{}.max_period;
    Limits limits() const { return Limits{max_period}; }
};

const char* ordering_name(std::strong_ordering o) {
    return o < 0 ? "LT" : o > 0 ? "GT" : "EQ";
}

const char* semiotic_name(Semiotic s) {
    switch (s) {
        case Semiotic::Precedes: return "precedes";
        case Semiotic::Same: return "same";
        case Semiotic::Follows: return "follows";
    }
    return "?";
}

std::uint64_t parse_count(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-')
        throw std::invalid_argument(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    return v;
}

void print_raw_literals(const cli::Evaluation& e) {
    for (const auto& [text, d] : e.literals)
        std::cout << "literal " << text << "  wcp " << d.to_string() << "  dc " << dc_denotation(d).to_string()
                  << "\n";
}

int cmd_eval(const Options& o, const std::string& text) {
    const cli::Evaluation e = cli::evaluate(text, o.base, o.limits());
    if (o.raw) {
        print_raw_literals(e);
        std::cout << "result  wcp " << wcp_from_dc(e.value).to_string() << "  dc " << e.value.to_string() << "\n";
    }
    std::cout << to_notation(e.value) << "\n";
    return 0;
}

int cmd_to_frac(const Options& o, const std::string& text) {
    const cli::Evaluation e = cli::evaluate(text, o.base, o.limits());
    if (o.raw)
        print_raw_literals(e);
    std::cout << to_fraction(e.value).to_string() << "\n";
    return 0;
}

int cmd_from_frac(const Options& o, const std::string& text) {
    const Fraction f = Fraction::parse(text);
    const DcNumber x = from_fraction(f, o.base, o.limits());
    if (o.raw)
        std::cout << "wcp " << wcp_from_dc(x).to_string() << "  dc " << x.to_string() << "\n";
    std::cout << to_notation(x) << "\n";
    return 0;
}

int cmd_convert(const Options& o, const std::string& to, const std::string& text) {
    if (o.raw) {
        const WcpDenotation d = parse_denotation(text, o.base);
        std::cout << (to == "wcp" ? d.to_string() : dc_denotation(d).to_string()) << "\n";
        return 0;
    }
    const DcNumber x = cli::evaluate(text, o.base, o.limits()).value;
    std::cout << (to == "wcp" ? wcp_from_dc(x).to_string() : x.to_string()) << "\n";
    return 0;
}

int cmd_compare(const Options& o, const std::string& a, const std::string& b) {
    if (o.raw) {
        const WcpDenotation x = parse_denotation(a, o.base);
        const WcpDenotation y = parse_denotation(b, o.base);
        std::cout << "semiotic " << semiotic_name(wcp_compare_semiotic(x, y, o.limits())) << "\n";
        std::cout << ordering_name(wcp_compare(x, y, o.limits())) << "\n";
        return 0;
    }
    const DcNumber x = cli::evaluate(a, o.base, o.limits()).value;
    const DcNumber y = cli::evaluate(b, o.base, o.limits()).value;
    std::cout << ordering_name(dc_compare(x, y, o.limits())) << "\n";
    return 0;
}

int cmd_period_length(const Options& o, const std::string& text) {
    BigInt v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("V must be a positive integer, got '" + text + "'");
    const PeriodLengthReport r = period_length(v, o.base, o.limits());
    std::cout << "aperiodic=" << r.aperiodic_len << " period=" << r.period_len;
    if (r.coprime_part != r.v)
        std::cout << " coprime-part=" << r.coprime_part.get_str();
    std::cout << " witness=" << r.repunit_witness.get_str() << "\n";
    return 0;
}

int cmd_product_length(const Options& o, const std::string& a, const std::string& b) {
    const std::uint64_t l = parse_count(a, "L");
    const std::uint64_t l2 = parse_count(b, "L'");
    std::cout << "length=" << product_period_length(l, l2, o.base).get_str();
    if (const auto brute = brute_product_period_length(l, l2, o.base))
        std::cout << " brute-force=" << *brute;
    else
        std::cout << " brute-force=skipped";
    std::cout << "\n";
    return 0;
}

int cmd_fermat(const Options& o, const std::string& text) {
    const std::uint64_t p = parse_count(text, "P");
    const OrbitCount c = fermat_orbit_count(o.base, p);
    std::cout << "words=" << big_pow(o.base, p).get_str() << " orbits=" << c.orbits << " constants=" << c.constants
              << "\n";
    return 0;
}

int cmd_lucas(const Options&, const std::string& text) {
    const std::uint64_t p = parse_count(text, "P");
    const std::uint64_t count = lucas_orbit_count(p);
    const BigInt l = lucas_number(p);
    if (l != BigInt(static_cast<unsigned long>(count)))
        throw std::logic_error("enumeration disagrees with the Lucas recurrence");
    std::cout << "L=" << l.get_str() << " orbits=" << (count - 1) / p << " residue=" << BigInt(l % p).get_str()
              << "\n";
    return 0;
}

int cmd_irrational_check(const Options& o, const std::string& text) {
    const DecimalPolynomial q = parse_polynomial(text, o.base);
    std::cout << classify_root_decimal(q, o.base).verdict << "\n";
    return 0;
}

int cmd_period_growth(const Options& o, const std::string& word, const std::string& count) {
    const StarElement p(CircularWord::parse(word, o.base));
    const std::size_t n = parse_count(count, "N");
    const auto lengths = period_growth(p, n, o.limits());
    for (std::size_t i = 0; i < lengths.size(); ++i)
        std::cout << (i ? " " : "") << lengths[i];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic on ultimately periodic base-b expansions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--base", o.base, "Numeration base")->check(CLI::Range(kMinBase, kMaxBase));
    app.add_flag("--raw", o.raw, "Show the representations before canonicalization");
    app.add_option("--max-period", o.max_period, "Largest period length any operation may build")
        ->check(CLI::PositiveNumber);

    std::string a, b, to = "wcp";
    std::function<int()> action;

    auto* eval = app.add_subcommand("eval", "Evaluate an expression and print it in canonical notation");
    eval->add_option("EXPR", a)->required();
    eval->callback([&] { action = [&] { return cmd_eval(o, a); }; });

    auto* to_frac = app.add_subcommand("to-frac", "Print an expression's value as a reduced fraction");
    to_frac->add_option("EXPR", a)->required();
    to_frac->callback([&] { action = [&] { return cmd_to_frac(o, a); }; });

    auto* from_frac = app.add_subcommand("from-frac", "Expand U/V (decimal integers) in the chosen base");
    from_frac->add_option("U/V", a)->required();
    from_frac->callback([&] { action = [&] { return cmd_from_frac(o, a); }; });

    auto* convert = app.add_subcommand("convert", "Print the canonical WCP or DC representation");
    convert->add_option("--to", to)->check(CLI::IsMember({"wcp", "dc"}));
    convert->add_option("NUMBER", a)->required();
    convert->callback([&] { action = [&] { return cmd_convert(o, to, a); }; });

    auto* compare = app.add_subcommand("compare", "Print LT, EQ or GT");
    compare->add_option("A", a)->required();
    compare->add_option("B", b)->required();
    compare->callback([&] { action = [&] { return cmd_compare(o, a, b); }; });

    auto* period = app.add_subcommand("period-length", "Aperiodic and period lengths of 1/V");
    period->add_option("V", a)->required();
    period->callback([&] { action = [&] { return cmd_period_length(o, a); }; });

    auto* product = app.add_subcommand("product-length", "Period length of a product of periods of lengths L, L'");
    product->add_option("L", a)->required();
    product->add_option("L2", b)->required();
    product->callback([&] { action = [&] { return cmd_product_length(o, a, b); }; });

    auto* fermat = app.add_subcommand("fermat", "Shift orbits of circular words of prime length P");
    fermat->add_option("P", a)->required();
    fermat->callback([&] { action = [&] { return cmd_fermat(o, a); }; });

    auto* lucas = app.add_subcommand("lucas", "Binary circular words of length P without 11");
    lucas->add_option("P", a)->required();
    lucas->callback([&] { action = [&] { return cmd_lucas(o, a); }; });

    auto* irr = app.add_subcommand("irrational-check", "Classify the real roots of a monic polynomial");
    irr->add_option("POLY", a)->required();
    irr->callback([&] { action = [&] { return cmd_irrational_check(o, a); }; });

    auto* growth = app.add_subcommand("period-growth", "Period lengths of P, P^2, ..., P^N");
    growth->add_option("P", a)->required();
    growth->add_option("N", b)->required();
    growth->callback([&] { action = [&] { return cmd_period_growth(o, a, b); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return action();
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
