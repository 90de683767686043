#include "test_support.hpp"

#include <feuler/core.hpp>
#include <feuler/identity_lab.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace feuler;

namespace {

const LRat L = LRat::lambda();
const LRat ONE_MINUS_L = LRat(1) - LRat::lambda();

bool all_verified(const std::vector<IdentityReport> &reports)
{
    for (const auto &r : reports) {
        if (r.status != Status::Verified) {
            return false;
        }
    }
    return !reports.empty();
}

} // namespace

TEST(Registry, Contents)
{
    const auto &reg = registry_list();
    std::set<std::string> ids;
    for (const auto &identity : reg) {
        ids.insert(identity.id);
    }
    EXPECT_EQ(ids.size(), reg.size());
    EXPECT_GE(reg.size(), 11u);
    for (const char *id : {"eq2", "eq5", "eq7", "eq30", "eq32", "thm2", "thm6", "thm3-as-printed", "thm3-corrected",
                           "thm4-as-printed", "thm4-corrected", "thm5-as-printed", "thm5-corrected",
                           "thm7-as-printed", "thm7-corrected"}) {
        EXPECT_TRUE(ids.count(id)) << id;
    }
    EXPECT_EQ(std::count_if(reg.begin(), reg.end(), [](const Identity &i) { return i.id.rfind("thm2", 0) == 0; }), 1);
    EXPECT_THROW(find_identity("thm99"), std::invalid_argument);
}

TEST(Registry, BuildersStayWithinDegreeN)
{
    for (const auto &identity : registry_list()) {
        for (unsigned n = identity.n_min; n <= 5; ++n) {
            for (unsigned r = identity.uses_r ? identity.r_min : 0; r <= (identity.uses_r ? 3u : 0u); ++r) {
                ASSERT_LE(identity.lhs(n, r).degree(), static_cast<int>(n)) << identity.id;
                ASSERT_LE(identity.rhs(n, r).degree(), static_cast<int>(n)) << identity.id;
            }
        }
    }
}

TEST(Verify, Thm2AtOne)
{
    const IdentityReport r = verify_identity("thm2", 1);
    EXPECT_EQ(r.status, Status::Verified);
    EXPECT_TRUE(r.residual.is_zero());
    EXPECT_FALSE(r.corrected_coefficients.has_value());
    EXPECT_FALSE(r.r.has_value());
    // Both sides equal (1+λ)(x-1) at n = 1.
    EXPECT_EQ(find_identity("thm2").lhs(1, 0), XPoly({-(LRat(1) + L), LRat(1) + L}));
}

TEST(Verify, SupportingEquations)
{
    EXPECT_TRUE(all_verified(verify_range("eq5", 10)));
    EXPECT_TRUE(all_verified(verify_range("eq2", 24)));
    EXPECT_TRUE(all_verified(verify_range("eq32", 8, 4)));
    EXPECT_TRUE(all_verified(verify_range("eq6", 10)));
    EXPECT_TRUE(all_verified(verify_range("eq7", 10)));
    EXPECT_TRUE(all_verified(verify_range("eq30", 10)));
    EXPECT_TRUE(all_verified(verify_range("eq31", 8, 4)));
}

TEST(Verify, Thm7AsPrintedIsRefutedAtTheOrigin)
{
    const IdentityReport r = verify_identity("thm7-as-printed", 0, 2);
    EXPECT_EQ(r.status, Status::Refuted);
    EXPECT_EQ(r.residual, XPoly(LRat(1) - ONE_MINUS_L.pow(-2)));
    ASSERT_TRUE(r.corrected_coefficients.has_value());
    EXPECT_EQ(r.corrected_coefficients->coeffs, std::vector<LRat>{LRat(1)});
}

TEST(Verify, CorrectedVariantsHoldOnTheGrid)
{
    EXPECT_TRUE(all_verified(verify_range("thm7-corrected", 8, 4)));
    EXPECT_TRUE(all_verified(verify_range("thm3-corrected", 8)));
    EXPECT_TRUE(all_verified(verify_range("thm4-corrected", 8)));
    EXPECT_TRUE(all_verified(verify_range("thm5-corrected", 8, 4)));
    EXPECT_TRUE(all_verified(verify_range("thm6", 8, 4)));
    EXPECT_TRUE(all_verified(verify_range("thm2", 10)));
}

TEST(Verify, ParameterErrors)
{
    EXPECT_THROW(verify_identity("nope", 1), std::invalid_argument);
    EXPECT_THROW(verify_identity("eq6", 0), std::out_of_range);
    EXPECT_THROW(verify_identity("thm6", 2), std::out_of_range);
    EXPECT_THROW(verify_identity("thm6", 2, 0), std::out_of_range);
    EXPECT_THROW(verify_range("thm6", 2), std::out_of_range);
}

TEST(Verify, RefutedReportsCarryOracleCoefficients)
{
    for (const char *id : {"thm3-as-printed", "thm4-as-printed", "thm7-as-printed", "thm5-as-printed"}) {
        for (const auto &r : verify_range(id, 5, 3)) {
            if (r.status == Status::Verified) {
                EXPECT_TRUE(r.residual.is_zero());
                continue;
            }
            ASSERT_TRUE(r.corrected_coefficients.has_value()) << id;
            const Identity &identity = find_identity(id);
            ASSERT_EQ(from_fe_basis(*r.corrected_coefficients), identity.lhs(r.n, r.r.value_or(0))) << id;
        }
    }
}

TEST(OracleExpansion, Examples)
{
    // Σ_k H_k H_{1-k} = 2 H_1
    const XPoly p = fe_poly(0) * fe_poly(1) + fe_poly(1) * fe_poly(0);
    EXPECT_EQ(oracle_expansion(p, 1).coeffs, (std::vector<LRat>{LRat(0), LRat(2)}));
    for (unsigned n = 0; n <= 6; ++n) {
        std::vector<LRat> unit(n + 1);
        unit[n] = LRat(1);
        ASSERT_EQ(oracle_expansion(fe_poly(n), 1).coeffs, unit);
    }
    EXPECT_EQ(oracle_expansion(XPoly::monomial(1), 2).coeffs, (std::vector<LRat>{LRat(2) / ONE_MINUS_L, LRat(1)}));
}

TEST(OracleExpansion, CorrectedClosedFormsMatchOracle)
{
    // thm3 family: coefficient k of Σ_k H_k H_{n-k} / (n+1).
    for (unsigned n = 0; n <= 8; ++n) {
        const XPoly lhs = find_identity("thm3-corrected").lhs(n, 0);
        const FEExpansion e = oracle_expansion(lhs, 1);
        for (unsigned k = 0; k < n; ++k) {
            LRat inner;
            for (unsigned l = k; l <= n; ++l) {
                inner += fe_number(l - k) * fe_number(n - l);
            }
            const LRat expected = (-L * inner + LRat(2) * L * fe_number(n - k)) *
                                  LRat(ratio(binomial(n, k), n - k + 1));
            ASSERT_EQ(e.coeffs[k], expected) << n << "," << k;
        }
        ASSERT_TRUE(e.coeffs[n].is_one());
    }
    // thm7 family: b_k = C(n,k) H_{n-k}^(r-1)(λ).
    for (unsigned r = 1; r <= 4; ++r) {
        for (unsigned n = 0; n <= 8; ++n) {
            const FEExpansion e = oracle_expansion(fe_poly_higher(n, r), 1);
            for (unsigned k = 0; k <= n; ++k) {
                ASSERT_EQ(e.coeffs[k], fe_number_higher(n - k, r - 1) * LRat(BigRat(binomial(n, k))));
            }
        }
    }
}

TEST(Screen, Examples)
{
    const ScreenResult pass = random_screen("thm2", 3, std::nullopt, 20, 7);
    EXPECT_TRUE(pass.passed());
    EXPECT_EQ(pass.trials, 20u);

    const ScreenResult cex = random_screen("thm7-as-printed", 0, 2, 1, 1);
    ASSERT_FALSE(cex.passed());
    const auto &c = *cex.counterexample;
    EXPECT_EQ(c.lhs_value, 1);
    const BigRat d = 1 - c.lambda;
    EXPECT_EQ(c.rhs_value, BigRat(1 / (d * d)));

    EXPECT_THROW(random_screen("thm2", 3, std::nullopt, 0, 7), std::invalid_argument);
}

TEST(Screen, DeterministicForAGivenSeed)
{
    const ScreenResult a = random_screen("thm3-as-printed", 3, std::nullopt, 5, 12345);
    const ScreenResult b = random_screen("thm3-as-printed", 3, std::nullopt, 5, 12345);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Screen, TrueIdentitiesNeverFailForAnySeed)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        ASSERT_TRUE(random_screen("thm6", 4, 3, 3, seed).passed());
        ASSERT_TRUE(random_screen("eq32", 5, 2, 3, seed).passed());
    }
}

// A counterexample from the screen must always be matched by a symbolic
// refutation, and symbolic verification must imply the screen passes.
TEST(Screen, AgreesWithVerifierAcrossRegistry)
{
    for (const auto &identity : registry_list()) {
        for (unsigned n = identity.n_min; n <= 6; ++n) {
            for (unsigned r = identity.uses_r ? identity.r_min : 0; r <= (identity.uses_r ? 4u : 0u); ++r) {
                const std::optional<unsigned> ro = identity.uses_r ? std::optional<unsigned>(r) : std::nullopt;
                const auto report = verify_identity(identity.id, n, ro);
                const auto screen = random_screen(identity.id, n, ro, 3, 100 + n);
                if (report.status == Status::Verified) {
                    ASSERT_TRUE(screen.passed()) << identity.id << " n=" << n;
                }
                if (!screen.passed()) {
                    ASSERT_EQ(report.status, Status::Refuted) << identity.id << " n=" << n;
                }
            }
        }
    }
}

TEST(Summary, FirstCounterexampleAndJson)
{
    const IdentitySummary s = summarize(find_identity("thm7-as-printed"), 4, 3, 42);
    EXPECT_EQ(s.verdict(), Status::Refuted);
    ASSERT_TRUE(s.first_counterexample.has_value());
    EXPECT_EQ(s.first_counterexample->n, 0u);
    EXPECT_EQ(s.first_counterexample->r, 1u);
    EXPECT_EQ(s.first_counterexample->residual, XPoly(LRat(1) - ONE_MINUS_L.pow(-2)));
    EXPECT_EQ(s.instances, 5u * 3u);
    ASSERT_TRUE(s.first_screen_failure.has_value());

    const json j = to_json(s);
    EXPECT_EQ(j["verdict"], "refuted");
    EXPECT_EQ(j["first_counterexample"]["n"], 0);
    EXPECT_EQ(to_json(verify_identity("thm2", 2)).dump(),
              R"({"id":"thm2","variant":"as-printed","n":2,"r":null,"status":"verified","residual":[],)"
              R"("corrected_coefficients":null,"seed":null,"screen":null})");
}
