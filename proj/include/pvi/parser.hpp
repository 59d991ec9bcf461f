#ifndef PVI_PARSER_HPP
#define PVI_PARSER_HPP

#include <map>
#include <string>

#include "pvi/ffelem.hpp"
#include "pvi/theta.hpp"

namespace pvi {

// Grammar: integers, + - * / ^ (nonnegative integer exponents), parentheses,
// and the symbols supplied by the context; implicit multiplication is not
// accepted.  Division is exact field-element division.
//
// The default context binds s, t/t1/t2 (when the radical set has them)
// and i (sqrt(-1)).

struct ExprContext {
    RadicalSetPtr rad = FFElem::no_radicals();
    // extra or overriding bindings (e.g. p, q, S, D for space-curve checks)
    std::map<std::string, FFElem> symbols;
};

FFElem parse_expr(const std::string& text, const ExprContext& ctx);
inline FFElem parse_expr(const std::string& text, RadicalSetPtr rad) {
    ExprContext c;
    c.rad = std::move(rad);
    return parse_expr(text, c);
}

// Rational affine combinations of the family parameters a, b (theta slots).
LinForm parse_linform(const std::string& text);

}  // namespace pvi

#endif
