#pragma once

// Infix expressions over the text notation: + - * / parentheses, unary minus.
// A '(' right after a literal that contains a point opens its period, so
// "0.1(6)*(2+1)" reads as 0.1666... times three.

#include <string>
#include <string_view>
#include <vector>

#include "circq/rational.hpp"

namespace circq::cli {

struct Evaluation {
    DcNumber value;
    std::vector<std::pair<std::string, WcpDenotation>> literals;  ///< as written, in order
};

Evaluation evaluate(std::string_view text, int base, const Limits& limits);

}  // namespace circq::cli
