#include <feuler/lpoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace feuler {

LPoly::LPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LPoly::LPoly(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { trim(); }

LPoly::LPoly(const BigRat &c)
{
    if (!feuler::is_zero(c)) {
        coeffs_.push_back(c);
    }
}

LPoly LPoly::monomial(unsigned k, const BigRat &c)
{
    if (feuler::is_zero(c)) {
        return {};
    }
    std::vector<BigRat> v(k + 1, BigRat(0));
    v[k] = c;
    return LPoly(std::move(v));
}

void LPoly::trim()
{
    while (!coeffs_.empty() && feuler::is_zero(coeffs_.back())) {
        coeffs_.pop_back();
    }
}

const BigRat &LPoly::leading() const
{
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

BigRat LPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

BigRat LPoly::operator()(const BigRat &at) const
{
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

LPoly LPoly::operator-() const
{
    LPoly r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

LPoly &LPoly::operator+=(const LPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

LPoly &LPoly::operator-=(const LPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), BigRat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

LPoly operator*(const LPoly &a, const LPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (feuler::is_zero(a.coeffs_[i])) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LPoly(std::move(out));
}

LPoly &LPoly::operator*=(const LPoly &rhs) { return *this = *this * rhs; }

LPoly &LPoly::operator*=(const BigRat &c)
{
    if (feuler::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

LPoly LPoly::monic() const
{
    if (is_zero()) {
        return {};
    }
    const BigRat inv = 1 / leading();
    return *this * inv;
}

LPoly LPoly::pow(unsigned e) const
{
    LPoly result(BigRat(1));
    LPoly base = *this;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

LPoly LPoly::reversed() const
{
    std::vector<BigRat> v(coeffs_.rbegin(), coeffs_.rend());
    return LPoly(std::move(v));
}

std::pair<LPoly, LPoly> divmod(const LPoly &a, const LPoly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {LPoly{}, a};
    }
    std::vector<BigRat> rem = a.coeffs();
    std::vector<BigRat> quo(rem.size() - b.coeffs().size() + 1, BigRat(0));
    const BigRat inv_lead = 1 / b.leading();
    const auto db = b.coeffs().size() - 1;
    for (std::size_t i = quo.size(); i-- > 0;) {
        const BigRat q = rem[i + db] * inv_lead;
        quo[i] = q;
        if (feuler::is_zero(q)) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i + j] -= q * b.coeffs()[j];
        }
    }
    rem.resize(db);
    return {LPoly(std::move(quo)), LPoly(std::move(rem))};
}

LPoly exact_div(const LPoly &a, const LPoly &b)
{
    if (b.is_constant()) {
        return a * (1 / b.leading());
    }
    return divmod(a, b).first;
}

LPoly gcd(LPoly a, LPoly b)
{
    // Monic remainder sequence over Q keeps coefficient growth moderate.
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        if (b.is_constant()) {
            return LPoly(BigRat(1));
        }
        auto r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace feuler
