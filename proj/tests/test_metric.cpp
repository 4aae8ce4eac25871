#include <gtest/gtest.h>

#include <random>

#include "gyro/gyro.hpp"
#include "support.hpp"

using namespace gyro;

namespace {

FiniteChain z4_weak() { return {Flavor::weak, {ElementSet(4, {0, 1, 2, 3}), ElementSet(4, {0, 2}), ElementSet(4, {0})}}; }
FiniteChain z4_admissible() {
    return {Flavor::admissible, {ElementSet(4, {0, 1, 2, 3}), ElementSet(4, {0, 2}), ElementSet(4, {0, 2})}};
}

}  // namespace

TEST(Rho, CyclicExamples) {
    const auto g = test::z4();
    const FinitePrenorm n(g, z4_weak());
    EXPECT_EQ(rho_N(n, 0, 2), Dyadic::one() + Dyadic::zero());
    EXPECT_EQ(rho_N(n, 0, 1), Dyadic(2, 0));
    for (std::size_t x = 0; x < 4; ++x) EXPECT_TRUE(rho_N(n, x, x).is_zero());
    EXPECT_EQ(pseudometric(n, 0, 2), Dyadic(1, 1));
}

TEST(Rho, MetricLawsOnEveryEnumeratedChain) {
    for (const auto& g : {test::z4(), test::g8()}) {
        for (auto f : {Flavor::weak, Flavor::admissible}) {
            for (const auto& c : test::all_chains(g, f, 4)) {
                const FinitePrenorm n(g, c);
                const auto r = check_metric_laws(n, [&](std::size_t x) { return n.tail().contains(x); });
                for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << chk.name << " on " << c.sets.back().to_string();
                // Identity of indiscernibles exactly when the tail is trivial.
                bool separates = true;
                for (std::size_t x = 0; x < g.order(); ++x)
                    for (std::size_t y = 0; y < g.order(); ++y)
                        if (x != y && rho_N(n, x, y).is_zero()) separates = false;
                EXPECT_EQ(separates, n.tail().size() == 1);
            }
        }
    }
}

TEST(Rho, TriangleInequalityOnEinstein) {
    EinsteinModel<3> m;
    const RadialPrenorm<EinsteinModel<3>> n(m, RadialChain{Flavor::weak, 1.0, {0.8, 0.5, 0.25}}, 10);
    const auto r = check_metric_laws(n, [&](const Vec<3>& x) { return m.norm(x) <= m.tolerance(); },
                                     SampleSpec{10000, 1, true}, 2.0 / 1024.0);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.max_residual;
    EXPECT_TRUE(rho_N(n, m.identity(), m.identity()).is_zero());
}

TEST(Rho, RadialPrenormLawsAndSandwich) {
    for (double c : {1.0, 2.0}) {
        EinsteinModel<3> m(c);
        const RadialChain chain{Flavor::weak, c, {0.8 * c, 0.5 * c, 0.25 * c}};
        const RadialPrenorm<EinsteinModel<3>> n(m, chain, 10);
        const SampleSpec spec{5000, 3, true};
        const auto laws = check_prenorm_laws(n, spec, 1.0 / 1024.0);
        for (const auto& r : laws.checks) EXPECT_TRUE(r.pass) << r.name << " " << r.max_residual;
        EXPECT_TRUE(check_sandwich(n, 10, spec, 1.0 / 1024.0).pass);
    }
    MobiusModel mo;
    const RadialPrenorm<MobiusModel> nm(mo, RadialChain{Flavor::admissible, 1.0, {0.9}}, 10);
    EXPECT_TRUE(check_prenorm_laws(nm, SampleSpec{5000, 4, true}, 1.0 / 1024.0).passed());
}

TEST(Quotient, CyclicExample) {
    const auto g = test::z4();
    const FinitePrenorm n(g, z4_admissible());
    const auto p = left_cosets(g, ElementSet(4, {0, 2}));
    EXPECT_EQ(quotient_metric(n, p, 0, 1), Dyadic(2, 0));
    EXPECT_TRUE(quotient_metric(n, p, 1, 1).is_zero());
    for (std::size_t x : {0, 2})
        for (std::size_t y : {1, 3}) EXPECT_EQ(quotient_metric_of(n, x, y), Dyadic(2, 0));
    const auto inv = coset_invariant_N_check(n, ElementSet(4, {0, 2}));
    EXPECT_TRUE(inv.pass);
    EXPECT_EQ(inv.samples, 8u);
    EXPECT_TRUE(check_quotient_metric(n, p).passed());
}

TEST(Quotient, RepresentativeIndependenceOnG8) {
    const auto g = test::g8();
    std::size_t checked = 0;
    for (const auto& c : test::all_chains(g, Flavor::admissible, 4)) {
        const FinitePrenorm n(g, c);
        if (!is_L_subgyrogroup(g, n.tail())) continue;
        const auto p = left_cosets(g, n.tail());
        EXPECT_TRUE(coset_invariant_N_check(n, n.tail()).pass);
        const auto r = check_quotient_metric(n, p);
        for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << chk.name;
        ++checked;
    }
    EXPECT_GT(checked, 5u);
}

TEST(Quotient, CosetInvarianceFailsWhenHIsNotTheTail) {
    const auto g = test::z4();
    const FinitePrenorm n(g, z4_weak());
    // N(0 ⊕ 2) = 1/2 but N(0) = 0.
    const auto c = coset_invariant_N_check(n, ElementSet(4, {0, 2}));
    EXPECT_FALSE(c.pass);
    ASSERT_FALSE(c.witnesses.empty());
}

TEST(Quotient, ProductModelQuotients) {
    const auto g = test::g16();
    std::size_t checked = 0;
    for (const auto& u : test::invariant_sets(g)) {
        const auto hull = admissible_hull(g, u);
        const FinitePrenorm n(g, hull.chain);
        const auto p = left_cosets(g, hull.subgroup);
        EXPECT_TRUE(coset_invariant_N_check(n, hull.subgroup).pass);
        EXPECT_TRUE(check_quotient_metric(n, p).passed());
        ++checked;
    }
    EXPECT_GT(checked, 10u);
}

TEST(Balls, PreimageLawForSmallRadiiOnCyclicModel) {
    const auto g = test::z4();
    const FinitePrenorm n(g, z4_admissible());
    const auto p = left_cosets(g, ElementSet(4, {0, 2}));
    EXPECT_TRUE(check_ball_preimage(n, p, {0.25, 0.5, 1.0}).pass);
    EXPECT_EQ(pseudometric_ball(n, 1, 0.5), ElementSet(4, {1, 3}));
    EXPECT_EQ(quotient_ball_preimage(n, p, 1, 0.5), ElementSet(4, {1, 3}));
}

TEST(Balls, PreimageLawFailsOnceRadiusExceedsOne) {
    // d(x', 0) = N(x') <= 1 puts every element in B(0, 1.5), while the
    // quotient ball around π(0) still excludes the coset at distance 2.
    const auto g = test::z4();
    const FinitePrenorm n(g, z4_admissible());
    const auto p = left_cosets(g, ElementSet(4, {0, 2}));
    EXPECT_EQ(pseudometric_ball(n, 0, 1.5), ElementSet::full(4));
    EXPECT_EQ(quotient_ball_preimage(n, p, 0, 1.5), ElementSet(4, {0, 2}));
    const auto c = check_ball_preimage(n, p, {1.5});
    EXPECT_FALSE(c.pass);
    ASSERT_FALSE(c.witnesses.empty());
    EXPECT_EQ(c.witnesses.front().elements, (std::vector<std::size_t>{0, 1}));
}

TEST(Balls, PreimageIsAlwaysInsideTheBallForTrivialSubgroup) {
    // With H = {0}, ϱ(π x', π x) ≥ |N(x') - N(x)| by subadditivity, so the
    // preimage of B* sits inside B.
    const auto g = test::g8();
    for (const auto& c : test::all_chains(g, Flavor::admissible, 4)) {
        const FinitePrenorm n(g, c);
        if (n.tail().size() != 1) continue;
        const auto p = left_cosets(g, n.tail());
        for (double eps : {0.25, 0.5, 1.0, 1.5})
            for (std::size_t x = 0; x < 8; ++x)
                EXPECT_TRUE(quotient_ball_preimage(n, p, x, eps).subset_of(pseudometric_ball(n, x, eps)));
    }
}
