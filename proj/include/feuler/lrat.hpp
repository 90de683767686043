#ifndef FEULER_LRAT_HPP
#define FEULER_LRAT_HPP

#include <feuler/lpoly.hpp>

#include <stdexcept>
#include <string>

namespace feuler {

// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Element of Q(λ) in canonical form: num/den coprime, den monic, zero is 0/1.
// Canonical form makes field equality a componentwise comparison.
class LRat {
public:
    LRat() : den_(BigRat(1)) {}
    LRat(const BigRat &c) : num_(c), den_(BigRat(1)) {}
    LRat(long c) : LRat(BigRat(c)) {}
    explicit LRat(LPoly num) : num_(std::move(num)), den_(BigRat(1)) {}
    // Normalizes; throws std::domain_error when den is zero.
    LRat(LPoly num, LPoly den);

    // The indeterminate λ.
    static LRat lambda();

    const LPoly &num() const { return num_; }
    const LPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Rational value of a constant element; throws std::domain_error otherwise.
    BigRat constant_value() const;

    LRat operator-() const;
    LRat &operator+=(const LRat &rhs);
    LRat &operator-=(const LRat &rhs);
    LRat &operator*=(const LRat &rhs);
    LRat &operator/=(const LRat &rhs);

    friend LRat operator+(LRat a, const LRat &b) { return a += b; }
    friend LRat operator-(LRat a, const LRat &b) { return a -= b; }
    friend LRat operator*(LRat a, const LRat &b) { return a *= b; }
    friend LRat operator/(LRat a, const LRat &b) { return a /= b; }
    friend bool operator==(const LRat &a, const LRat &b) = default;

    // Multiplicative inverse; throws std::domain_error on zero.
    LRat inverse() const;
    LRat pow(int e) const;

    // Exact value at λ = at; throws PoleError when den(at) = 0.
    BigRat eval_at(const BigRat &at) const;

    // Image under the field automorphism λ ↦ 1/λ. An involution.
    LRat invert_lambda() const;

    // Rebuilds the canonical form; idempotent on constructed values.
    LRat normalized() const { return LRat(num_, den_); }

private:
    struct Raw {};
    LRat(LPoly num, LPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

    LPoly num_;
    LPoly den_;
};

} // namespace feuler

#endif // FEULER_LRAT_HPP
