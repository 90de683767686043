#ifndef FEULER_BASIS_HPP
#define FEULER_BASIS_HPP

#include <feuler/xpoly.hpp>

#include <vector>

namespace feuler {

// p(x) = Σ_k coeffs[k] · H_k^(order)(x|λ). Order 1 is the plain
// Frobenius–Euler basis.
struct FEExpansion {
    unsigned order = 1;
    std::vector<LRat> coeffs;

    friend bool operator==(const FEExpansion &, const FEExpansion &) = default;
};

// b_k = (p^(k)(1) - λ p^(k)(0)) / ((1-λ) k!)
FEExpansion to_fe_basis(const XPoly &p);

// C_k = [x^k] Δ_λ^r p / (1-λ)^r, i.e. D^k(Δ_λ^r p)(0) / ((1-λ)^r k!).
// Throws std::invalid_argument when r = 0.
FEExpansion to_fe_basis_higher(const XPoly &p, unsigned r);

// Same coefficients through the finite sum
// C_k = Σ_j C(r,j) (-λ)^(r-j) p^(k)(j) / ((1-λ)^r k!).
FEExpansion to_fe_basis_higher_finite_sum(const XPoly &p, unsigned r);

// Σ_k coeffs[k] · H_k^(order)(x|λ)
XPoly from_fe_basis(const FEExpansion &e);

// H_n(x|λ) in the order-r basis with
// C_k = C(n,k) Σ_j C(r,j) (-λ)^(r-j) H_{n-k}(j|λ) / (1-λ)^r.
FEExpansion fe_change_order(unsigned n, unsigned r);

} // namespace feuler

#endif // FEULER_BASIS_HPP
