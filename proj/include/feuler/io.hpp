#ifndef FEULER_IO_HPP
#define FEULER_IO_HPP

#include <feuler/basis.hpp>
#include <feuler/xpoly.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace feuler {

using json = nlohmann::ordered_json;

// Human-readable forms. Rational functions print as a single fraction with
// integer coefficients in descending degree, for example "(λ+1)/(λ-1)^2" or
// "(λ+1)/(2(λ-1))". A leading '-' appears iff the numerator's leading
// coefficient is negative.
std::string to_text(const LPoly &p);
std::string to_text(const LRat &f);
std::string to_text(const XPoly &p);

std::string to_latex(const LRat &f);
std::string to_latex(const XPoly &p);

// Reads the text and LaTeX forms above (and ordinary infix input using
// + - * / ^, parentheses, λ/l/lambda/\lambda, x, \frac{}{}).
// Throws std::invalid_argument on malformed input.
XPoly parse_xpoly(std::string_view text);
// As parse_xpoly, rejecting anything that depends on x.
LRat parse_lrat(std::string_view text);

// JSON schemas:
//   BigRat       "p/q" or "p"
//   LPoly        ["c0", "c1", ...] ascending degree in λ
//   LRat         {"num": LPoly, "den": LPoly}
//   XPoly        [LRat, ...] ascending degree in x
//   FEExpansion  {"order": r, "coeffs": [LRat, ...]}
// Readers throw std::invalid_argument on schema violations. LRat readers also
// accept a string in the text form.
json to_json(const BigRat &q);
json to_json(const LPoly &p);
json to_json(const LRat &f);
json to_json(const XPoly &p);
json to_json(const FEExpansion &e);

BigRat bigrat_from_json(const json &j);
LPoly lpoly_from_json(const json &j);
LRat lrat_from_json(const json &j);
XPoly xpoly_from_json(const json &j);
FEExpansion expansion_from_json(const json &j);

} // namespace feuler

#endif // FEULER_IO_HPP
