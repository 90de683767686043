#include <feuler/xpoly.hpp>

#include <stdexcept>

namespace feuler {

XPoly::XPoly(std::vector<LRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly::XPoly(std::initializer_list<LRat> coeffs) : coeffs_(coeffs) { trim(); }

XPoly::XPoly(const LRat &c)
{
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

XPoly XPoly::monomial(unsigned k, const LRat &c)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<LRat> v(k + 1);
    v[k] = c;
    return XPoly(std::move(v));
}

void XPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const LRat &XPoly::leading() const
{
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

LRat XPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : LRat(); }

LRat XPoly::operator()(const LRat &at) const
{
    LRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

XPoly XPoly::operator-() const
{
    XPoly r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

XPoly &XPoly::operator+=(const XPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

XPoly &XPoly::operator-=(const XPoly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

XPoly &XPoly::operator*=(const LRat &c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

XPoly &XPoly::add_scaled(const XPoly &b, const LRat &c)
{
    if (c.is_zero()) {
        return *this;
    }
    if (coeffs_.size() < b.coeffs_.size()) {
        coeffs_.resize(b.coeffs_.size());
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        if (!b.coeffs_[i].is_zero()) {
            coeffs_[i] += b.coeffs_[i] * c;
        }
    }
    trim();
    return *this;
}

XPoly operator*(const XPoly &a, const XPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<LRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (!b.coeffs_[j].is_zero()) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return XPoly(std::move(out));
}

} // namespace feuler
