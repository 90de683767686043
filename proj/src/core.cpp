#include <feuler/core.hpp>

namespace feuler {

namespace {

const LRat &lambda_minus_one_inverse()
{
    static const LRat v = (LRat::lambda() - LRat(1)).inverse();
    return v;
}

} // namespace

FECache &FECache::shared()
{
    static FECache cache;
    return cache;
}

void FECache::extend_numbers(unsigned n)
{
    if (numbers_.empty()) {
        numbers_.emplace_back(1);
    }
    while (numbers_.size() <= n) {
        const auto m = static_cast<unsigned>(numbers_.size());
        LRat acc;
        for (unsigned l = 0; l < m; ++l) {
            acc += numbers_[l] * LRat(BigRat(binomial(m, l)));
        }
        numbers_.push_back(acc * lambda_minus_one_inverse());
    }
}

void FECache::extend_higher(unsigned n, unsigned r)
{
    auto &row = higher_[r];
    if (row.size() > n) {
        return;
    }
    if (r == 0) {
        while (row.size() <= n) {
            row.emplace_back(row.empty() ? 1 : 0);
        }
        return;
    }
    if (r == 1) {
        extend_numbers(n);
        row.assign(numbers_.begin(), numbers_.begin() + n + 1);
        return;
    }
    extend_numbers(n);
    extend_higher(n, r - 1);
    const auto &prev = higher_[r - 1];
    while (row.size() <= n) {
        const auto m = static_cast<unsigned>(row.size());
        LRat acc;
        for (unsigned l = 0; l <= m; ++l) {
            if (prev[l].is_zero() || numbers_[m - l].is_zero()) {
                continue;
            }
            acc += prev[l] * numbers_[m - l] * LRat(BigRat(binomial(m, l)));
        }
        row.push_back(std::move(acc));
    }
}

LRat FECache::number(unsigned n)
{
    std::lock_guard lock(mutex_);
    extend_numbers(n);
    return numbers_[n];
}

LRat FECache::number_higher(unsigned n, unsigned r)
{
    std::lock_guard lock(mutex_);
    extend_higher(n, r);
    return higher_[r][n];
}

XPoly FECache::poly_higher(unsigned n, unsigned r)
{
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, r);
    if (auto it = polys_.find(key); it != polys_.end()) {
        return it->second;
    }
    extend_higher(n, r);
    const auto &row = higher_[r];
    std::vector<LRat> coeffs(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        coeffs[l] = row[n - l] * LRat(BigRat(binomial(n, l)));
    }
    XPoly p(std::move(coeffs));
    polys_.emplace(key, p);
    return p;
}

LRat fe_number(unsigned n) { return FECache::shared().number(n); }

LSeries fe_kernel_series(unsigned N)
{
    // (e^t - λ)/(1 - λ) = 1 + Σ_{k>=1} t^k / (k! (1-λ))
    const LRat inv_one_minus_lambda = (LRat(1) - LRat::lambda()).inverse();
    std::vector<LRat> coeffs(N + 1);
    coeffs[0] = LRat(1);
    for (unsigned k = 1; k <= N; ++k) {
        coeffs[k] = inv_one_minus_lambda * LRat(BigRat(1, factorial(k)));
    }
    return series_reciprocal(LSeries(std::move(coeffs)));
}

std::vector<LRat> fe_numbers_via_series(unsigned N)
{
    const LSeries kernel = fe_kernel_series(N);
    std::vector<LRat> out;
    out.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        out.push_back(kernel[n] * LRat(BigRat(factorial(n))));
    }
    return out;
}

XPoly fe_poly(unsigned n) { return FECache::shared().poly_higher(n, 1); }

LRat fe_number_higher(unsigned n, unsigned r) { return FECache::shared().number_higher(n, r); }

XPoly fe_poly_higher(unsigned n, unsigned r) { return FECache::shared().poly_higher(n, r); }

XPoly poly_shift(const XPoly &p, long c)
{
    if (c == 0 || p.is_zero()) {
        return p;
    }
    const auto &a = p.coeffs();
    const BigInt shift(c);
    std::vector<LRat> out(a.size());
    for (unsigned i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        // a_i (x + c)^i = a_i Σ_j C(i,j) c^(i-j) x^j
        BigInt cpow(1);
        for (unsigned j = i + 1; j-- > 0;) {
            out[j] += a[i] * LRat(BigRat(binomial(i, j) * cpow));
            cpow *= shift;
        }
    }
    return XPoly(std::move(out));
}

XPoly delta_lambda(const XPoly &p) { return poly_shift(p, 1) - p * LRat::lambda(); }

XPoly delta_lambda_iter(const XPoly &p, unsigned r)
{
    XPoly out = p;
    for (unsigned i = 0; i < r; ++i) {
        out = delta_lambda(out);
    }
    return out;
}

XPoly poly_derivative(const XPoly &p, unsigned k)
{
    const auto &a = p.coeffs();
    if (k == 0) {
        return p;
    }
    if (a.size() <= k) {
        return {};
    }
    std::vector<LRat> out(a.size() - k);
    for (std::size_t i = k; i < a.size(); ++i) {
        // i (i-1) ... (i-k+1)
        BigInt falling(1);
        for (std::size_t m = i - k + 1; m <= i; ++m) {
            falling *= static_cast<unsigned long>(m);
        }
        out[i - k] = a[i] * LRat(BigRat(falling));
    }
    return XPoly(std::move(out));
}

LRat integral_01(const XPoly &p)
{
    LRat acc;
    const auto &a = p.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * LRat(BigRat(1, static_cast<unsigned long>(i + 1)));
    }
    return acc;
}

LRat eval_at_integer(const XPoly &p, long j) { return p(LRat(j)); }

XPoly poly_invert_lambda(const XPoly &p)
{
    std::vector<LRat> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        out.push_back(c.invert_lambda());
    }
    return XPoly(std::move(out));
}

} // namespace feuler
