#include <feuler/lrat.hpp>

namespace feuler {

LRat::LRat(LPoly num, LPoly den)
{
    if (den.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    if (num.is_zero()) {
        den_ = LPoly(BigRat(1));
        return;
    }
    if (!den.is_constant()) {
        const LPoly g = gcd(num, den);
        if (!g.is_constant()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    const BigRat scale = 1 / den.leading();
    num_ = num * scale;
    den_ = den * scale;
}

LRat LRat::lambda() { return LRat(LPoly{BigRat(0), BigRat(1)}); }

bool LRat::is_one() const { return num_.is_constant() && !num_.is_zero() && num_.leading() == 1 && den_.is_constant(); }

BigRat LRat::constant_value() const
{
    if (!is_constant()) {
        throw std::domain_error("rational function is not a constant");
    }
    return num_.coeff(0);
}

LRat LRat::operator-() const { return LRat(-num_, den_, Raw{}); }

LRat &LRat::operator+=(const LRat &rhs)
{
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    if (den_ == rhs.den_) {
        return *this = LRat(num_ + rhs.num_, den_);
    }
    // Henrici: with g = gcd(b, d), only g can share factors with the new numerator.
    const LPoly g = gcd(den_, rhs.den_);
    if (g.is_constant()) {
        LPoly n = num_ * rhs.den_ + rhs.num_ * den_;
        if (n.is_zero()) {
            return *this = LRat();
        }
        return *this = LRat(std::move(n), den_ * rhs.den_, Raw{});
    }
    const LPoly b1 = exact_div(den_, g);
    const LPoly d1 = exact_div(rhs.den_, g);
    LPoly n = num_ * d1 + rhs.num_ * b1;
    if (n.is_zero()) {
        return *this = LRat();
    }
    const LPoly h = gcd(n, g);
    if (h.is_constant()) {
        return *this = LRat(std::move(n), b1 * d1 * g, Raw{});
    }
    return *this = LRat(exact_div(n, h), b1 * d1 * exact_div(g, h), Raw{});
}

LRat &LRat::operator-=(const LRat &rhs) { return *this += -rhs; }

LRat &LRat::operator*=(const LRat &rhs)
{
    if (is_zero() || rhs.is_zero()) {
        return *this = LRat();
    }
    if (den_.is_constant() && rhs.den_.is_constant()) {
        return *this = LRat(num_ * rhs.num_, den_, Raw{});
    }
    // Cross-cancel before multiplying; monic dens divided by monic gcds stay monic.
    const LPoly g1 = gcd(num_, rhs.den_);
    const LPoly g2 = gcd(rhs.num_, den_);
    LPoly n = exact_div(num_, g1) * exact_div(rhs.num_, g2);
    LPoly d = exact_div(den_, g2) * exact_div(rhs.den_, g1);
    return *this = LRat(std::move(n), std::move(d), Raw{});
}

LRat &LRat::operator/=(const LRat &rhs) { return *this *= rhs.inverse(); }

LRat LRat::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    const BigRat scale = 1 / num_.leading();
    return LRat(den_ * scale, num_ * scale, Raw{});
}

LRat LRat::pow(int e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    const auto k = static_cast<unsigned>(e);
    return LRat(num_.pow(k), den_.pow(k), Raw{});
}

BigRat LRat::eval_at(const BigRat &at) const
{
    const BigRat d = den_(at);
    if (feuler::is_zero(d)) {
        throw PoleError("pole at lambda = " + to_string(at));
    }
    return num_(at) / d;
}

LRat LRat::invert_lambda() const
{
    if (is_zero()) {
        return *this;
    }
    // f(1/λ) = λ^(deg den - deg num) · rev(num) / rev(den)
    LPoly n = num_.reversed();
    LPoly d = den_.reversed();
    const int shift = den_.degree() - num_.degree();
    if (shift > 0) {
        n *= LPoly::monomial(static_cast<unsigned>(shift));
    } else if (shift < 0) {
        d *= LPoly::monomial(static_cast<unsigned>(-shift));
    }
    return LRat(std::move(n), std::move(d));
}

} // namespace feuler
