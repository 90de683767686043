#ifndef FEULER_LPOLY_HPP
#define FEULER_LPOLY_HPP

#include <feuler/bigrat.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace feuler {

// Dense univariate polynomial in the parameter λ over Q.
// coeffs()[i] is the coefficient of λ^i; the zero polynomial has no
// coefficients and every other value has a nonzero top coefficient.
class LPoly {
public:
    LPoly() = default;
    explicit LPoly(std::vector<BigRat> coeffs);
    LPoly(std::initializer_list<BigRat> coeffs);
    explicit LPoly(const BigRat &c);

    // λ^k
    static LPoly monomial(unsigned k, const BigRat &c = 1);

    const std::vector<BigRat> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRat &leading() const;
    BigRat coeff(std::size_t i) const;

    BigRat operator()(const BigRat &at) const;

    LPoly operator-() const;
    LPoly &operator+=(const LPoly &rhs);
    LPoly &operator-=(const LPoly &rhs);
    LPoly &operator*=(const LPoly &rhs);
    LPoly &operator*=(const BigRat &c);

    friend LPoly operator+(LPoly a, const LPoly &b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly &b) { return a -= b; }
    friend LPoly operator*(const LPoly &a, const LPoly &b);
    friend LPoly operator*(LPoly a, const BigRat &c) { return a *= c; }
    friend LPoly operator*(const BigRat &c, LPoly a) { return a *= c; }
    friend bool operator==(const LPoly &a, const LPoly &b) = default;

    // Scaled so the leading coefficient is 1; zero stays zero.
    LPoly monic() const;

    LPoly pow(unsigned e) const;

    // Reversal λ^deg · p(1/λ).
    LPoly reversed() const;

private:
    void trim();

    std::vector<BigRat> coeffs_;
};

// Quotient and remainder; throws std::domain_error when the divisor is zero.
std::pair<LPoly, LPoly> divmod(const LPoly &a, const LPoly &b);

// Exact division; the caller guarantees b | a.
LPoly exact_div(const LPoly &a, const LPoly &b);

// Monic greatest common divisor; gcd(0, 0) = 0.
LPoly gcd(LPoly a, LPoly b);

} // namespace feuler

#endif // FEULER_LPOLY_HPP
