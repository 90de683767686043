#ifndef FEULER_CORE_HPP
#define FEULER_CORE_HPP

#include <feuler/lseries.hpp>
#include <feuler/xpoly.hpp>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace feuler {

// Library-wide convention: 0^0 = 1, so 0^(n-k) is the Kronecker delta δ_{n,k}.

// Memo tables for Frobenius–Euler numbers H_n(λ) and H_n^(r)(λ) and for the
// order-r polynomials. Every entry equals what the defining recurrence
// produces; the tables only trade memory for repeated work.
// All members are safe to call concurrently.
class FECache {
public:
    // H_n(λ) from H_0 = 1 and (λ-1)H_n = Σ_{l<n} C(n,l) H_l for n >= 1.
    LRat number(unsigned n);
    // H_n^(r)(λ) by r-1 binomial convolutions with H; order 0 is δ_{n,0}.
    LRat number_higher(unsigned n, unsigned r);
    // H_n^(r)(x|λ) = Σ_l C(n,l) H_{n-l}^(r)(λ) x^l.
    XPoly poly_higher(unsigned n, unsigned r);

    // Process-wide instance used by the free functions below.
    static FECache &shared();

private:
    void extend_numbers(unsigned n);
    void extend_higher(unsigned n, unsigned r);

    std::mutex mutex_;
    std::vector<LRat> numbers_;
    std::map<unsigned, std::vector<LRat>> higher_;
    std::map<std::pair<unsigned, unsigned>, XPoly> polys_;
};

LRat fe_number(unsigned n);

// H_0..H_N as n! [t^n] of the reciprocal of (e^t - λ)/(1 - λ). Independent of
// the recurrence in FECache.
std::vector<LRat> fe_numbers_via_series(unsigned N);

// (1-λ)/(e^t-λ) truncated at t^N.
LSeries fe_kernel_series(unsigned N);

XPoly fe_poly(unsigned n);
LRat fe_number_higher(unsigned n, unsigned r);
XPoly fe_poly_higher(unsigned n, unsigned r);

// p(x + c)
XPoly poly_shift(const XPoly &p, long c);

// Δ_λ p(x) = p(x+1) - λ p(x)
XPoly delta_lambda(const XPoly &p);
XPoly delta_lambda_iter(const XPoly &p, unsigned r);

// k-th derivative in x.
XPoly poly_derivative(const XPoly &p, unsigned k = 1);

// ∫_0^1 p(x) dx
LRat integral_01(const XPoly &p);

LRat eval_at_integer(const XPoly &p, long j);

// Coefficientwise λ ↦ 1/λ; maps H_n(x|λ) to H_n(x|1/λ).
XPoly poly_invert_lambda(const XPoly &p);

} // namespace feuler

#endif // FEULER_CORE_HPP
