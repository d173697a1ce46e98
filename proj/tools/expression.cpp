#include "expression.hpp"

#include <cctype>
#include <stdexcept>

namespace circq::cli {

namespace {

class Parser {
public:
    Parser(std::string_view text, int base, const Limits& limits) : s_(text), base_(base), limits_(limits) {}

    Evaluation run() {
        DcNumber v = expr();
        skip_space();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return {std::move(v), std::move(literals_)};
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("expression error at column " + std::to_string(i_ + 1) + ": " + why);
    }

    void skip_space() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool eat(char c) {
        skip_space();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    DcNumber expr() {
        DcNumber acc = term();
        for (;;) {
            if (eat('+'))
                acc = dc_add(acc, term(), limits_);
            else if (eat('-'))
                acc = dc_sub(acc, term(), limits_);
            else
                return acc;
        }
    }

    DcNumber term() {
        DcNumber acc = unary();
        for (;;) {
            if (eat('*'))
                acc = dc_mul(acc, unary(), limits_);
            else if (eat('/'))
                acc = dc_div(acc, unary(), limits_);
            else
                return acc;
        }
    }

    DcNumber unary() {
        if (eat('-'))
            return dc_neg(unary());
        if (eat('+'))
            return unary();
        return primary();
    }

    DcNumber primary() {
        if (eat('(')) {
            DcNumber v = expr();
            if (!eat(')'))
                fail("missing ')'");
            return v;
        }
        skip_space();
        const std::size_t start = i_;
        bool has_point = false;
        while (i_ < s_.size() && (digit_value(s_[i_], base_) || s_[i_] == '.')) {
            has_point |= s_[i_] == '.';
            ++i_;
        }
        if (start == i_)
            fail(i_ < s_.size() ? "expected a number, got '" + std::string(1, s_[i_]) + "'" : "unexpected end");
        if (has_point && i_ < s_.size() && s_[i_] == '(') {
            const auto close = s_.find(')', i_);
            if (close == std::string_view::npos)
                fail("unterminated period");
            i_ = close + 1;
        }
        const std::string literal(s_.substr(start, i_ - start));
        WcpDenotation d = parse_denotation(literal, base_);
        literals_.emplace_back(literal, d);
        return dc_from_wcp(WcpNumber(d));
    }

    std::string_view s_;
    int base_;
    const Limits& limits_;
    std::size_t i_ = 0;
    std::vector<std::pair<std::string, WcpDenotation>> literals_;
};

}  // namespace

Evaluation evaluate(std::string_view text, int base, const Limits& limits) {
    check_base(base);
    return Parser(text, base, limits).run();
}

}  // namespace circq::cli
