#ifndef FEULER_BIGRAT_HPP
#define FEULER_BIGRAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace feuler {

// Arbitrary-precision rational. mpq_class keeps the canonical form
// (coprime parts, positive denominator) after every arithmetic operation,
// but the two-argument constructor does not: build fractions with ratio().
using BigInt = mpz_class;
using BigRat = mpq_class;

// "p/q", or "p" when q == 1.
std::string to_string(const BigRat &q);

// Accepts "p", "p/q", with optional leading sign; throws std::invalid_argument.
BigRat parse_bigrat(std::string_view text);

inline BigRat ratio(const BigInt &p, const BigInt &q)
{
    BigRat r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRat &q) { return sgn(q) == 0; }

BigInt factorial(unsigned n);

// Binomial coefficient from a shared, on-demand Pascal table.
const BigInt &binomial(unsigned n, unsigned k);

} // namespace feuler

#endif // FEULER_BIGRAT_HPP
