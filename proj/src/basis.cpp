#include <feuler/basis.hpp>

#include <feuler/core.hpp>

#include <stdexcept>

namespace feuler {

namespace {

LRat one_minus_lambda_pow(unsigned r) { return (LRat(1) - LRat::lambda()).pow(static_cast<int>(r)); }

LRat inverse_factorial(unsigned k) { return LRat(BigRat(1, factorial(k))); }

void require_order(unsigned r)
{
    if (r == 0) {
        throw std::invalid_argument("expansion order must be at least 1");
    }
}

// Σ_j C(r,j) (-λ)^(r-j) q(j)
LRat alternating_shift_sum(const XPoly &q, unsigned r)
{
    const LRat minus_lambda = -LRat::lambda();
    LRat acc;
    for (unsigned j = 0; j <= r; ++j) {
        const LRat value = eval_at_integer(q, static_cast<long>(j));
        if (value.is_zero()) {
            continue;
        }
        acc += value * minus_lambda.pow(static_cast<int>(r - j)) * LRat(BigRat(binomial(r, j)));
    }
    return acc;
}

} // namespace

FEExpansion to_fe_basis(const XPoly &p)
{
    const LRat lambda = LRat::lambda();
    const LRat scale = (LRat(1) - lambda).inverse();
    FEExpansion e{1, {}};
    e.coeffs.reserve(p.coeffs().size());
    for (unsigned k = 0; k < p.coeffs().size(); ++k) {
        const XPoly dk = poly_derivative(p, k);
        const LRat g = eval_at_integer(dk, 1) - lambda * eval_at_integer(dk, 0);
        e.coeffs.push_back(g * scale * inverse_factorial(k));
    }
    return e;
}

FEExpansion to_fe_basis_higher(const XPoly &p, unsigned r)
{
    require_order(r);
    const XPoly g = delta_lambda_iter(p, r);
    const LRat scale = one_minus_lambda_pow(r).inverse();
    FEExpansion e{r, {}};
    e.coeffs.reserve(p.coeffs().size());
    for (unsigned k = 0; k < p.coeffs().size(); ++k) {
        e.coeffs.push_back(g.coeff(k) * scale);
    }
    return e;
}

FEExpansion to_fe_basis_higher_finite_sum(const XPoly &p, unsigned r)
{
    require_order(r);
    const LRat scale = one_minus_lambda_pow(r).inverse();
    FEExpansion e{r, {}};
    e.coeffs.reserve(p.coeffs().size());
    for (unsigned k = 0; k < p.coeffs().size(); ++k) {
        const LRat s = alternating_shift_sum(poly_derivative(p, k), r);
        e.coeffs.push_back(s * scale * inverse_factorial(k));
    }
    return e;
}

XPoly from_fe_basis(const FEExpansion &e)
{
    require_order(e.order);
    XPoly out;
    for (unsigned k = 0; k < e.coeffs.size(); ++k) {
        if (!e.coeffs[k].is_zero()) {
            out.add_scaled(fe_poly_higher(k, e.order), e.coeffs[k]);
        }
    }
    return out;
}

FEExpansion fe_change_order(unsigned n, unsigned r)
{
    require_order(r);
    const LRat scale = one_minus_lambda_pow(r).inverse();
    FEExpansion e{r, {}};
    e.coeffs.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const LRat s = alternating_shift_sum(fe_poly(n - k), r);
        e.coeffs.push_back(s * scale * LRat(BigRat(binomial(n, k))));
    }
    return e;
}

} // namespace feuler
