#ifndef FEULER_LSERIES_HPP
#define FEULER_LSERIES_HPP

#include <feuler/lrat.hpp>

#include <vector>

namespace feuler {

// Truncated power series in t over Q(λ): coefficients of t^0 .. t^order.
class LSeries {
public:
    // Zero series of the given order.
    explicit LSeries(unsigned order);
    // Throws std::invalid_argument if coeffs is empty.
    explicit LSeries(std::vector<LRat> coeffs);

    static LSeries one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const std::vector<LRat> &coeffs() const { return coeffs_; }
    const LRat &operator[](std::size_t k) const { return coeffs_[k]; }

    // Cauchy product truncated to the smaller of the two orders.
    friend LSeries operator*(const LSeries &a, const LSeries &b);
    friend bool operator==(const LSeries &a, const LSeries &b) = default;

private:
    std::vector<LRat> coeffs_;
};

// q with s·q ≡ 1 mod t^(order+1); throws std::domain_error when s(0) = 0.
LSeries series_reciprocal(const LSeries &s);

// s^r truncated at s.order(); r = 0 gives the identity series.
LSeries series_product_power(const LSeries &s, unsigned r);

} // namespace feuler

#endif // FEULER_LSERIES_HPP
