#ifndef FEULER_XPOLY_HPP
#define FEULER_XPOLY_HPP

#include <feuler/lrat.hpp>

#include <initializer_list>
#include <vector>

namespace feuler {

// Dense polynomial in x over Q(λ); coeffs()[i] multiplies x^i.
// Trailing zeros are trimmed, the zero polynomial is empty.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<LRat> coeffs);
    XPoly(std::initializer_list<LRat> coeffs);
    explicit XPoly(const LRat &c);

    // c · x^k
    static XPoly monomial(unsigned k, const LRat &c = LRat(1));

    const std::vector<LRat> &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LRat &leading() const;
    LRat coeff(std::size_t i) const;

    LRat operator()(const LRat &at) const;

    XPoly operator-() const;
    XPoly &operator+=(const XPoly &rhs);
    XPoly &operator-=(const XPoly &rhs);
    XPoly &operator*=(const LRat &c);

    friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
    friend XPoly operator*(const XPoly &a, const XPoly &b);
    friend XPoly operator*(XPoly a, const LRat &c) { return a *= c; }
    friend XPoly operator*(const LRat &c, XPoly a) { return a *= c; }
    friend bool operator==(const XPoly &a, const XPoly &b) = default;

    // a += c · b, skipping the temporary product.
    XPoly &add_scaled(const XPoly &b, const LRat &c);

private:
    void trim();

    std::vector<LRat> coeffs_;
};

} // namespace feuler

#endif // FEULER_XPOLY_HPP
