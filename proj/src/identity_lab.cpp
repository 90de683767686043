#include <feuler/identity_lab.hpp>

#include <feuler/core.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace feuler {

std::string_view to_string(Variant v) { return v == Variant::AsPrinted ? "as-printed" : "corrected"; }

std::string_view to_string(Status s) { return s == Status::Verified ? "verified" : "refuted"; }

namespace {

LRat num(const BigRat &q) { return LRat(q); }
LRat num(const BigInt &z) { return LRat(BigRat(z)); }

const LRat &lam()
{
    static const LRat v = LRat::lambda();
    return v;
}

const LRat &one_minus_lam()
{
    static const LRat v = LRat(1) - LRat::lambda();
    return v;
}

LRat inv_factorial(unsigned k) { return num(BigRat(1, factorial(k))); }

LRat two_pow(int e) { return LRat(2).pow(e); }

// Σ_k H_k(x|λ) H_{n-k}(x|λ)
XPoly convolution_square(unsigned n)
{
    XPoly acc;
    for (unsigned k = 0; k <= n; ++k) {
        acc += fe_poly(k) * fe_poly(n - k);
    }
    return acc;
}

// Σ_k H_k(x|λ) H_{n-k}(x|λ) / (k! (n-k)!)
XPoly exponential_convolution_square(unsigned n)
{
    XPoly acc;
    for (unsigned k = 0; k <= n; ++k) {
        acc.add_scaled(fe_poly(k) * fe_poly(n - k), inv_factorial(k) * inv_factorial(n - k));
    }
    return acc;
}

// Σ_j C(r,j) (-λ)^(r-j) q(j)
LRat alternating_shift_sum(const XPoly &q, unsigned r)
{
    LRat acc;
    for (unsigned j = 0; j <= r; ++j) {
        acc += eval_at_integer(q, static_cast<long>(j)) * (-lam()).pow(static_cast<int>(r - j)) *
               num(binomial(r, j));
    }
    return acc;
}

// (x + λ)^n, a λ-dependent test polynomial with every coefficient nonzero.
XPoly shifted_power(unsigned n)
{
    XPoly base{lam(), LRat(1)};
    XPoly out(LRat(1));
    for (unsigned i = 0; i < n; ++i) {
        out = out * base;
    }
    return out;
}

// Σ_k C_k H_k^(r)(x|λ) with C_k from the finite shift sum applied to p.
XPoly finite_sum_expansion(const XPoly &p, unsigned r)
{
    const LRat scale = one_minus_lam().pow(-static_cast<int>(r));
    XPoly out;
    for (unsigned k = 0; k < p.coeffs().size(); ++k) {
        const LRat c = alternating_shift_sum(poly_derivative(p, k), r) * scale * inv_factorial(k);
        out.add_scaled(fe_poly_higher(k, r), c);
    }
    return out;
}

// Coefficient of H_k(x|λ) in the product expansions, without the δ_{n,k} term:
//   conv  (exponential=false):  -λ Σ_{l=k}^n H_{l-k} H_{n-l}
//   exp   (exponential=true):   -λ Σ_{l=k}^n H_{l-k} H_{n-l} / ((l-k)! (n-l)!)
LRat inner_sum(unsigned n, unsigned k, bool exponential)
{
    LRat acc;
    for (unsigned l = k; l <= n; ++l) {
        LRat term = fe_number(l - k) * fe_number(n - l);
        if (exponential) {
            term *= inv_factorial(l - k) * inv_factorial(n - l);
        }
        acc += term;
    }
    return acc;
}

std::vector<Identity> build_registry()
{
    std::vector<Identity> reg;

    auto add = [&](Identity id) { reg.push_back(std::move(id)); };

    add({.id = "eq2",
         .statement = "H_n(1|λ) - λH_n(λ) = (1-λ)δ_{0,n}",
         .lhs = [](unsigned n, unsigned) { return XPoly(eval_at_integer(fe_poly(n), 1) - lam() * fe_number(n)); },
         .rhs = [](unsigned n, unsigned) { return n == 0 ? XPoly(one_minus_lam()) : XPoly(); }});

    add({.id = "eq5",
         .statement = "H_n(x+1|λ) - λH_n(x|λ) = (1-λ)x^n",
         .lhs = [](unsigned n, unsigned) { return delta_lambda(fe_poly(n)); },
         .rhs = [](unsigned n, unsigned) { return XPoly::monomial(n, one_minus_lam()); }});

    add({.id = "eq6",
         .statement = "d/dx H_n(x|λ) = nH_{n-1}(x|λ)",
         .n_min = 1,
         .lhs = [](unsigned n, unsigned) { return poly_derivative(fe_poly(n)); },
         .rhs = [](unsigned n, unsigned) { return fe_poly(n - 1) * LRat(static_cast<long>(n)); }});

    add({.id = "eq7",
         .statement = "∫_0^1 H_n(x|λ)dx = (λ-1)/(n+1) H_{n+1}(λ)",
         .lhs = [](unsigned n, unsigned) { return XPoly(integral_01(fe_poly(n))); },
         .rhs =
             [](unsigned n, unsigned) {
                 return XPoly(-one_minus_lam() * num(BigRat(1, n + 1)) * fe_number(n + 1));
             }});

    add({.id = "eq30",
         .statement = "H_n^(0)(x|λ) = x^n",
         .lhs = [](unsigned n, unsigned) { return fe_poly_higher(n, 0); },
         .rhs = [](unsigned n, unsigned) { return XPoly::monomial(n); }});

    add({.id = "eq31",
         .statement = "d/dx H_n^(r)(x|λ) = nH_{n-1}^(r)(x|λ)",
         .n_min = 1,
         .uses_r = true,
         .r_min = 0,
         .lhs = [](unsigned n, unsigned r) { return poly_derivative(fe_poly_higher(n, r)); },
         .rhs = [](unsigned n, unsigned r) { return fe_poly_higher(n - 1, r) * LRat(static_cast<long>(n)); }});

    add({.id = "eq32",
         .statement = "H_n^(r)(x+1|λ) - λH_n^(r)(x|λ) = (1-λ)H_n^(r-1)(x|λ)",
         .uses_r = true,
         .r_min = 1,
         .lhs = [](unsigned n, unsigned r) { return delta_lambda(fe_poly_higher(n, r)); },
         .rhs = [](unsigned n, unsigned r) { return fe_poly_higher(n, r - 1) * one_minus_lam(); }});

    add({.id = "thm2",
         .statement = "λH_n(x|1/λ) + H_n(x|λ) = (1+λ) Σ_k C(n,k) H_{n-k}(1/λ) H_k(x|λ)",
         .lhs = [](unsigned n, unsigned) { return poly_invert_lambda(fe_poly(n)) * lam() + fe_poly(n); },
         .rhs =
             [](unsigned n, unsigned) {
                 XPoly acc;
                 for (unsigned k = 0; k <= n; ++k) {
                     acc.add_scaled(fe_poly(k), fe_number(n - k).invert_lambda() * num(binomial(n, k)));
                 }
                 return acc * (LRat(1) + lam());
             }});

    // Σ_k H_k H_{n-k}: printed form repeats 2λH_{n-k} inside the l-sum.
    const auto thm3_lhs = [](unsigned n, unsigned) {
        return convolution_square(n) * num(BigRat(1, n + 1));
    };
    add({.id = "thm3-as-printed",
         .statement = "1/(n+1) Σ_k H_k(x|λ)H_{n-k}(x|λ) = Σ_{k<n} C(n,k)/(n-k+1) Σ_{l=k}^n "
                      "{-λH_{l-k}(λ)H_{n-l}(λ) + 2λH_{n-k}(λ)} H_k(x|λ) + H_n(x|λ)",
         .variant = Variant::AsPrinted,
         .authoritative = false,
         .lhs = thm3_lhs,
         .rhs =
             [](unsigned n, unsigned) {
                 XPoly acc = fe_poly(n);
                 for (unsigned k = 0; k < n; ++k) {
                     LRat c;
                     for (unsigned l = k; l <= n; ++l) {
                         c += -lam() * fe_number(l - k) * fe_number(n - l) + LRat(2) * lam() * fe_number(n - k);
                     }
                     acc.add_scaled(fe_poly(k), c * num(ratio(binomial(n, k), n - k + 1)));
                 }
                 return acc;
             }});
    add({.id = "thm3-corrected",
         .statement = "1/(n+1) Σ_k H_k(x|λ)H_{n-k}(x|λ) = Σ_{k<n} C(n,k)/(n-k+1) "
                      "{-λ Σ_{l=k}^n H_{l-k}(λ)H_{n-l}(λ) + 2λH_{n-k}(λ)} H_k(x|λ) + H_n(x|λ)",
         .variant = Variant::Corrected,
         .lhs = thm3_lhs,
         .rhs =
             [](unsigned n, unsigned) {
                 XPoly acc = fe_poly(n);
                 for (unsigned k = 0; k < n; ++k) {
                     const LRat c = -lam() * inner_sum(n, k, false) + LRat(2) * lam() * fe_number(n - k);
                     acc.add_scaled(fe_poly(k), c * num(ratio(binomial(n, k), n - k + 1)));
                 }
                 return acc;
             }});

    const auto thm4_lhs = [](unsigned n, unsigned) { return exponential_convolution_square(n); };
    add({.id = "thm4-as-printed",
         .statement = "Σ_k H_k(x|λ)H_{n-k}(x|λ)/(k!(n-k)!) = Σ_{k<n} 2^(k-1)/k! Σ_{l=k}^n "
                      "{λ(λ-1)H_{l-k}(λ)H_{n-l}(λ)/((l-k)!(n-l)!) + 2λ(1-λ)H_{n-k}(λ)/(n-k)!} H_k(x|λ) "
                      "+ 2^(n-1)(1-λ)/n! H_n(x|λ)",
         .variant = Variant::AsPrinted,
         .authoritative = false,
         .lhs = thm4_lhs,
         .rhs =
             [](unsigned n, unsigned) {
                 XPoly acc = fe_poly(n) * (two_pow(static_cast<int>(n) - 1) * one_minus_lam() * inv_factorial(n));
                 for (unsigned k = 0; k < n; ++k) {
                     LRat c;
                     for (unsigned l = k; l <= n; ++l) {
                         c += lam() * (lam() - LRat(1)) * fe_number(l - k) * fe_number(n - l) *
                                  inv_factorial(l - k) * inv_factorial(n - l) +
                              LRat(2) * lam() * one_minus_lam() * fe_number(n - k) * inv_factorial(n - k);
                     }
                     acc.add_scaled(fe_poly(k), c * two_pow(static_cast<int>(k) - 1) * inv_factorial(k));
                 }
                 return acc;
             }});
    add({.id = "thm4-corrected",
         .statement = "Σ_k H_k(x|λ)H_{n-k}(x|λ)/(k!(n-k)!) = Σ_{k<n} 2^k/k! "
                      "{-λ Σ_{l=k}^n H_{l-k}(λ)H_{n-l}(λ)/((l-k)!(n-l)!) + 2λH_{n-k}(λ)/(n-k)!} H_k(x|λ) "
                      "+ 2^n/n! H_n(x|λ)",
         .variant = Variant::Corrected,
         .lhs = thm4_lhs,
         .rhs =
             [](unsigned n, unsigned) {
                 XPoly acc = fe_poly(n) * (two_pow(static_cast<int>(n)) * inv_factorial(n));
                 for (unsigned k = 0; k < n; ++k) {
                     const LRat c =
                         -lam() * inner_sum(n, k, true) + LRat(2) * lam() * fe_number(n - k) * inv_factorial(n - k);
                     acc.add_scaled(fe_poly(k), c * two_pow(static_cast<int>(k)) * inv_factorial(k));
                 }
                 return acc;
             }});
    // The coefficient rule b_k = (p^(k)(1) - p^(k)(0)) / (2 k!) applied to the
    // same left side, recorded next to the general rule.
    add({.id = "thm4-halved-difference",
         .statement = "Σ_k H_k(x|λ)H_{n-k}(x|λ)/(k!(n-k)!) = Σ_k (p^(k)(1) - p^(k)(0))/(2k!) H_k(x|λ), "
                      "p = left side",
         .variant = Variant::AsPrinted,
         .authoritative = false,
         .lhs = thm4_lhs,
         .rhs =
             [](unsigned n, unsigned) {
                 const XPoly p = exponential_convolution_square(n);
                 XPoly acc;
                 for (unsigned k = 0; k <= n; ++k) {
                     const XPoly dk = poly_derivative(p, k);
                     const LRat c = (eval_at_integer(dk, 1) - eval_at_integer(dk, 0)) * num(BigRat(1, 2)) *
                                    inv_factorial(k);
                     acc.add_scaled(fe_poly(k), c);
                 }
                 return acc;
             }});

    add({.id = "thm5-as-printed",
         .statement = "p(x) = (1-λ)^(-r) Σ_k C_k H_k^(r)(x|λ), C_k = Σ_j C(r,j)(-λ)^(r-j) D^k p(j) / ((1-λ)^r k!), "
                      "p = (x+λ)^n",
         .variant = Variant::AsPrinted,
         .authoritative = false,
         .uses_r = true,
         .r_min = 1,
         .expands_in_order_r = true,
         .lhs = [](unsigned n, unsigned) { return shifted_power(n); },
         .rhs =
             [](unsigned n, unsigned r) {
                 return finite_sum_expansion(shifted_power(n), r) * one_minus_lam().pow(-static_cast<int>(r));
             }});
    add({.id = "thm5-corrected",
         .statement = "p(x) = Σ_k C_k H_k^(r)(x|λ), C_k = Σ_j C(r,j)(-λ)^(r-j) D^k p(j) / ((1-λ)^r k!), p = (x+λ)^n",
         .variant = Variant::Corrected,
         .uses_r = true,
         .r_min = 1,
         .expands_in_order_r = true,
         .lhs = [](unsigned n, unsigned) { return shifted_power(n); },
         .rhs = [](unsigned n, unsigned r) { return finite_sum_expansion(shifted_power(n), r); }});

    add({.id = "thm6",
         .statement = "H_n(x|λ) = (1-λ)^(-r) Σ_k C(n,k) (Σ_j C(r,j)(-λ)^(r-j) H_{n-k}(j|λ)) H_k^(r)(x|λ)",
         .uses_r = true,
         .r_min = 1,
         .expands_in_order_r = true,
         .lhs = [](unsigned n, unsigned) { return fe_poly(n); },
         .rhs =
             [](unsigned n, unsigned r) {
                 XPoly acc;
                 for (unsigned k = 0; k <= n; ++k) {
                     acc.add_scaled(fe_poly_higher(k, r),
                                    alternating_shift_sum(fe_poly(n - k), r) * num(binomial(n, k)));
                 }
                 return acc * one_minus_lam().pow(-static_cast<int>(r));
             }});

    const auto thm7_lhs = [](unsigned n, unsigned r) { return fe_poly_higher(n, r); };
    const auto thm7_sum = [](unsigned n, unsigned r) {
        XPoly acc;
        for (unsigned k = 0; k <= n; ++k) {
            acc.add_scaled(fe_poly(k), fe_number_higher(n - k, r - 1) * num(binomial(n, k)));
        }
        return acc;
    };
    add({.id = "thm7-as-printed",
         .statement = "H_n^(r)(x|λ) = (1-λ)^(-2) Σ_k C(n,k) H_{n-k}^(r-1)(λ) H_k(x|λ)",
         .variant = Variant::AsPrinted,
         .authoritative = false,
         .uses_r = true,
         .r_min = 1,
         .lhs = thm7_lhs,
         .rhs = [thm7_sum](unsigned n, unsigned r) { return thm7_sum(n, r) * one_minus_lam().pow(-2); }});
    add({.id = "thm7-corrected",
         .statement = "H_n^(r)(x|λ) = Σ_k C(n,k) H_{n-k}^(r-1)(λ) H_k(x|λ)",
         .variant = Variant::Corrected,
         .uses_r = true,
         .r_min = 1,
         .lhs = thm7_lhs,
         .rhs = thm7_sum});

    std::sort(reg.begin(), reg.end(), [](const Identity &a, const Identity &b) { return a.id < b.id; });
    return reg;
}

// Uniform-ish rational with numerator in [-20, 20] and denominator in [1, 10].
BigRat draw_rational(std::mt19937_64 &engine)
{
    const long n = static_cast<long>(engine() % 41) - 20;
    const long d = static_cast<long>(engine() % 10) + 1;
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

bool has_pole(const XPoly &p, const BigRat &at)
{
    return std::any_of(p.coeffs().begin(), p.coeffs().end(),
                       [&](const LRat &c) { return is_zero(c.den()(at)); });
}

BigRat evaluate(const XPoly &p, const BigRat &lambda0, const BigRat &x0)
{
    BigRat acc(0);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x0 + it->eval_at(lambda0);
    }
    return acc;
}

unsigned resolve_r(const Identity &identity, unsigned n, std::optional<unsigned> r)
{
    if (n < identity.n_min) {
        throw std::out_of_range(identity.id + ": n must be at least " + std::to_string(identity.n_min));
    }
    if (!identity.uses_r) {
        return 0;
    }
    if (!r) {
        throw std::out_of_range(identity.id + ": requires an order r");
    }
    if (*r < identity.r_min) {
        throw std::out_of_range(identity.id + ": r must be at least " + std::to_string(identity.r_min));
    }
    return *r;
}

} // namespace

const std::vector<Identity> &registry_list()
{
    static const std::vector<Identity> registry = build_registry();
    return registry;
}

const Identity &find_identity(std::string_view id)
{
    for (const auto &identity : registry_list()) {
        if (identity.id == id) {
            return identity;
        }
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

FEExpansion oracle_expansion(const XPoly &p, unsigned r)
{
    return r == 1 ? to_fe_basis(p) : to_fe_basis_higher(p, r);
}

IdentityReport verify_identity(std::string_view id, unsigned n, std::optional<unsigned> r)
{
    const Identity &identity = find_identity(id);
    const unsigned order = resolve_r(identity, n, r);

    const XPoly lhs = identity.lhs(n, order);
    const XPoly rhs = identity.rhs(n, order);

    IdentityReport report;
    report.id = identity.id;
    report.variant = identity.variant;
    report.n = n;
    if (identity.uses_r) {
        report.r = order;
    }
    report.residual = lhs - rhs;
    report.status = report.residual.is_zero() ? Status::Verified : Status::Refuted;
    if (report.status == Status::Refuted) {
        const unsigned basis = identity.expands_in_order_r && order >= 1 ? order : 1;
        report.corrected_coefficients = oracle_expansion(lhs, basis);
    }
    return report;
}

std::vector<IdentityReport> verify_range(std::string_view id, unsigned n_max, std::optional<unsigned> r_max)
{
    const Identity &identity = find_identity(id);
    std::vector<IdentityReport> out;
    for (unsigned n = identity.n_min; n <= n_max; ++n) {
        if (!identity.uses_r) {
            out.push_back(verify_identity(id, n));
            continue;
        }
        if (!r_max) {
            throw std::out_of_range(identity.id + ": requires a maximum order r");
        }
        for (unsigned r = identity.r_min; r <= *r_max; ++r) {
            out.push_back(verify_identity(id, n, r));
        }
    }
    return out;
}

ScreenResult random_screen(std::string_view id, unsigned n, std::optional<unsigned> r, unsigned trials,
                           std::uint64_t seed)
{
    if (trials == 0) {
        throw std::invalid_argument("random screen needs at least one trial");
    }
    const Identity &identity = find_identity(id);
    const unsigned order = resolve_r(identity, n, r);
    const XPoly lhs = identity.lhs(n, order);
    const XPoly rhs = identity.rhs(n, order);

    std::mt19937_64 engine(seed);
    ScreenResult result;
    result.seed = seed;
    result.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        BigRat lambda0;
        do {
            lambda0 = draw_rational(engine);
        } while (lambda0 == 0 || lambda0 == 1 || has_pole(lhs, lambda0) || has_pole(rhs, lambda0));
        const BigRat x0 = draw_rational(engine);
        BigRat l = evaluate(lhs, lambda0, x0);
        BigRat rv = evaluate(rhs, lambda0, x0);
        if (l != rv) {
            result.counterexample = ScreenCounterexample{lambda0, x0, std::move(l), std::move(rv)};
            break;
        }
    }
    return result;
}

IdentitySummary summarize(const Identity &identity, unsigned n_max, unsigned r_max,
                          std::optional<std::uint64_t> seed, unsigned screen_trials)
{
    IdentitySummary s;
    s.identity = &identity;
    s.n_max = n_max;
    if (identity.uses_r) {
        s.r_max = r_max;
    }
    auto visit = [&](unsigned n, std::optional<unsigned> r) {
        std::optional<ScreenResult> screen;
        if (seed) {
            screen = random_screen(identity.id, n, r, screen_trials, *seed);
            ++s.screened;
            if (!screen->passed() && !s.first_screen_failure) {
                s.first_screen_failure = screen;
            }
        }
        IdentityReport report = verify_identity(identity.id, n, r);
        ++s.instances;
        if (report.status == Status::Verified) {
            ++s.verified;
        } else if (!s.first_counterexample) {
            report.seed = seed;
            report.screen = screen;
            s.first_counterexample = std::move(report);
        }
    };
    for (unsigned n = identity.n_min; n <= n_max; ++n) {
        if (!identity.uses_r) {
            visit(n, std::nullopt);
            continue;
        }
        for (unsigned r = identity.r_min; r <= r_max; ++r) {
            visit(n, r);
        }
    }
    return s;
}

json to_json(const ScreenResult &s)
{
    json j = json::object();
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    if (s.passed()) {
        j["result"] = "pass";
    } else {
        j["result"] = "counterexample";
        j["lambda"] = to_string(s.counterexample->lambda);
        j["x"] = to_string(s.counterexample->x);
        j["lhs_value"] = to_string(s.counterexample->lhs_value);
        j["rhs_value"] = to_string(s.counterexample->rhs_value);
    }
    return j;
}

json to_json(const IdentityReport &r)
{
    json j = json::object();
    j["id"] = r.id;
    j["variant"] = std::string(to_string(r.variant));
    j["n"] = r.n;
    j["r"] = r.r ? json(*r.r) : json(nullptr);
    j["status"] = std::string(to_string(r.status));
    j["residual"] = to_json(r.residual);
    j["corrected_coefficients"] = r.corrected_coefficients ? to_json(*r.corrected_coefficients) : json(nullptr);
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["screen"] = r.screen ? to_json(*r.screen) : json(nullptr);
    return j;
}

json to_json(const IdentitySummary &s)
{
    const Identity &identity = *s.identity;
    json j = json::object();
    j["id"] = identity.id;
    j["variant"] = std::string(to_string(identity.variant));
    j["authoritative"] = identity.authoritative;
    j["statement"] = identity.statement;
    j["n_range"] = json::array({identity.n_min, s.n_max});
    j["r_range"] = s.r_max ? json::array({identity.r_min, *s.r_max}) : json(nullptr);
    j["instances"] = s.instances;
    j["verified"] = s.verified;
    j["verdict"] = std::string(to_string(s.verdict()));
    if (s.first_counterexample) {
        const auto &c = *s.first_counterexample;
        json cj = json::object();
        cj["n"] = c.n;
        cj["r"] = c.r ? json(*c.r) : json(nullptr);
        cj["residual"] = to_json(c.residual);
        cj["residual_text"] = to_text(c.residual);
        cj["corrected_coefficients"] =
            c.corrected_coefficients ? to_json(*c.corrected_coefficients) : json(nullptr);
        j["first_counterexample"] = std::move(cj);
    } else {
        j["first_counterexample"] = nullptr;
    }
    if (s.screened == 0) {
        j["screen"] = nullptr;
    } else {
        json sj = json::object();
        sj["instances"] = s.screened;
        sj["result"] = s.first_screen_failure ? "counterexample" : "pass";
        sj["first_failure"] = s.first_screen_failure ? to_json(*s.first_screen_failure) : json(nullptr);
        j["screen"] = std::move(sj);
    }
    return j;
}

json report_header(unsigned n_max, unsigned r_max, std::optional<std::uint64_t> seed, unsigned screen_trials)
{
    json h = json::object();
    h["max_n"] = n_max;
    h["max_r"] = r_max;
    if (seed) {
        json s = json::object();
        s["seed"] = *seed;
        s["generator"] = "std::mt19937_64";
        s["sampling"] = "numerator = engine() % 41 - 20, then denominator = engine() % 10 + 1; "
                        "lambda drawn before x, lambda redrawn on 0, 1 or a pole";
        s["trials_per_instance"] = screen_trials;
        h["screen"] = std::move(s);
    } else {
        h["screen"] = nullptr;
    }
    return h;
}

} // namespace feuler
