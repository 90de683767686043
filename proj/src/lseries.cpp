#include <feuler/lseries.hpp>

#include <algorithm>
#include <stdexcept>

namespace feuler {

LSeries::LSeries(unsigned order) : coeffs_(order + 1) {}

LSeries::LSeries(std::vector<LRat> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("series needs at least a constant term");
    }
}

LSeries LSeries::one(unsigned order)
{
    LSeries s(order);
    s.coeffs_[0] = LRat(1);
    return s;
}

LSeries operator*(const LSeries &a, const LSeries &b)
{
    const unsigned n = std::min(a.order(), b.order());
    LSeries out(n);
    for (unsigned k = 0; k <= n; ++k) {
        LRat acc;
        for (unsigned i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) {
                continue;
            }
            acc += a[i] * b[k - i];
        }
        out.coeffs_[k] = std::move(acc);
    }
    return out;
}

LSeries series_reciprocal(const LSeries &s)
{
    if (s[0].is_zero()) {
        throw std::domain_error("series reciprocal needs a nonzero constant term");
    }
    const unsigned n = s.order();
    const LRat inv0 = s[0].inverse();
    std::vector<LRat> q(n + 1);
    q[0] = inv0;
    for (unsigned k = 1; k <= n; ++k) {
        LRat acc;
        for (unsigned i = 1; i <= k; ++i) {
            if (s[i].is_zero() || q[k - i].is_zero()) {
                continue;
            }
            acc += s[i] * q[k - i];
        }
        q[k] = -(acc * inv0);
    }
    return LSeries(std::move(q));
}

LSeries series_product_power(const LSeries &s, unsigned r)
{
    LSeries out = LSeries::one(s.order());
    for (unsigned i = 0; i < r; ++i) {
        out = out * s;
    }
    return out;
}

} // namespace feuler
