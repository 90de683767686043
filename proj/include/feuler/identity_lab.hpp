#ifndef FEULER_IDENTITY_LAB_HPP
#define FEULER_IDENTITY_LAB_HPP

#include <feuler/basis.hpp>
#include <feuler/io.hpp>
#include <feuler/xpoly.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feuler {

enum class Variant { AsPrinted, Corrected };
enum class Status { Verified, Refuted };

std::string_view to_string(Variant v);
std::string_view to_string(Status s);

// An identity LHS(n[, r]) = RHS(n[, r]) in Q(λ)[x]. Both sides are built from
// the fe-core primitives only.
struct Identity {
    using Builder = std::function<XPoly(unsigned n, unsigned r)>;

    std::string id;
    std::string statement;
    Variant variant = Variant::AsPrinted;
    // Corrected variants, and identities registered in one form only.
    bool authoritative = true;
    unsigned n_min = 0;
    bool uses_r = false;
    unsigned r_min = 0;
    // Basis used to re-derive coefficients when refuted: order 1, or the
    // identity's own r when true.
    bool expands_in_order_r = false;
    Builder lhs;
    Builder rhs;
};

struct ScreenCounterexample {
    BigRat lambda;
    BigRat x;
    BigRat lhs_value;
    BigRat rhs_value;
};

struct ScreenResult {
    std::uint64_t seed = 0;
    unsigned trials = 0;
    // Empty on pass. A counterexample refutes; a pass is only evidence.
    std::optional<ScreenCounterexample> counterexample;

    bool passed() const { return !counterexample; }
};

struct IdentityReport {
    std::string id;
    Variant variant = Variant::AsPrinted;
    unsigned n = 0;
    std::optional<unsigned> r;
    Status status = Status::Verified;
    XPoly residual; // canonical LHS - RHS
    std::optional<FEExpansion> corrected_coefficients;
    std::optional<std::uint64_t> seed;
    std::optional<ScreenResult> screen;
};

// Immutable after first use.
const std::vector<Identity> &registry_list();

// Throws std::invalid_argument for an unknown id.
const Identity &find_identity(std::string_view id);

// Expands both sides and compares canonical forms. Throws
// std::invalid_argument on unknown ids, std::out_of_range when n (or r) is
// below the identity's range, or when an r-dependent identity gets no r.
IdentityReport verify_identity(std::string_view id, unsigned n, std::optional<unsigned> r = std::nullopt);

// One report per grid point, sorted by (n, r). n-only identities ignore r_max.
std::vector<IdentityReport> verify_range(std::string_view id, unsigned n_max,
                                         std::optional<unsigned> r_max = std::nullopt);

// Sampling: std::mt19937_64 seeded with `seed`; each rational draws a
// numerator (engine() % 41) - 20 and then a denominator engine() % 10 + 1.
// λ0 is drawn before x0 and redrawn while λ0 ∈ {0, 1} or λ0 is a pole of any
// coefficient on either side.
ScreenResult random_screen(std::string_view id, unsigned n, std::optional<unsigned> r, unsigned trials,
                           std::uint64_t seed);

// Coefficients of p in the order-r basis (r = 1: plain basis).
FEExpansion oracle_expansion(const XPoly &p, unsigned r);

// Aggregate verdict for one registry entry over a grid.
struct IdentitySummary {
    const Identity *identity = nullptr;
    unsigned n_max = 0;
    std::optional<unsigned> r_max;
    unsigned instances = 0;
    unsigned verified = 0;
    std::optional<IdentityReport> first_counterexample;
    std::optional<ScreenResult> first_screen_failure;
    unsigned screened = 0;

    Status verdict() const { return verified == instances ? Status::Verified : Status::Refuted; }
};

// Runs the screen (when seed is set) and the full comparison on every grid point.
IdentitySummary summarize(const Identity &identity, unsigned n_max, unsigned r_max,
                          std::optional<std::uint64_t> seed, unsigned screen_trials = 4);

json to_json(const ScreenResult &s);
json to_json(const IdentityReport &r);
json to_json(const IdentitySummary &s);

// Header object describing the grid and the screen's generator.
json report_header(unsigned n_max, unsigned r_max, std::optional<std::uint64_t> seed, unsigned screen_trials);

} // namespace feuler

#endif // FEULER_IDENTITY_LAB_HPP
