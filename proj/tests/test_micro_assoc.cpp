#include <gtest/gtest.h>

#include "gyro/gyro.hpp"
#include "support.hpp"

using namespace gyro;

TEST(MicroAssoc, GroupModelsAreAssociative) {
    const auto g = test::z4();
    EXPECT_TRUE(micro_assoc_check(g, ElementSet(4, {0, 1}), ElementSet(4, {0, 1, 3})).pass);
    EXPECT_TRUE(micro_assoc_check(g, ElementSet::full(4), ElementSet::full(4)).pass);
}

TEST(MicroAssoc, EveryGyrInvariantSetOnFiniteModels) {
    for (const auto& g : {test::g8(), test::g16()}) {
        for (const auto& v : test::invariant_sets(g)) {
            const auto c = micro_assoc_check(g, v, v);
            EXPECT_TRUE(c.pass) << v.to_string();
            EXPECT_EQ(c.samples, v.size() * v.size());
        }
    }
}

TEST(MicroAssoc, NonInvariantSetGivesCounterexample) {
    const auto g = test::g8();
    const ElementSet v(8, {0, 2, 4});
    ASSERT_TRUE(gyr_invariance_witness(g, v).has_value());
    const auto c = micro_assoc_check(g, v, v);
    EXPECT_FALSE(c.pass);
    ASSERT_FALSE(c.witnesses.empty());
    const auto& w = c.witnesses.front().elements;
    ASSERT_EQ(w.size(), 3u);
    const auto lhs = translate(g, w[0], translate(g, w[1], v));
    const auto rhs = translate(g, g.add(w[0], w[1]), v);
    EXPECT_NE(lhs.contains(w[2]), rhs.contains(w[2]));
}

TEST(MicroAssoc, Preconditions) {
    const auto g = test::g8();
    EXPECT_THROW(micro_assoc_check(g, ElementSet(8, {0, 5}), ElementSet(8, {0, 1})), precondition_error);
    EXPECT_THROW(micro_assoc_check(g, ElementSet(8), ElementSet(8, {0, 1})), precondition_error);
    EinsteinModel<3> m;
    EXPECT_THROW(micro_assoc_check(m, 0.6, 0.5), precondition_error);
    EXPECT_THROW(micro_assoc_check(m, 0.5, 1.0), precondition_error);
}

TEST(MicroAssoc, EinsteinNormBalls) {
    EinsteinModel<3> m;
    for (double v : {0.3, 0.5, 0.9}) {
        const auto c = micro_assoc_check(m, v / 2, v, MicroAssocSpec{100, 256, 5, 1e-6});
        EXPECT_TRUE(c.pass) << v << " residual " << c.max_residual;
        EXPECT_EQ(c.samples, 100u);
    }
    const auto mo = micro_assoc_check(MobiusModel{}, 0.5, 0.5, MicroAssocSpec{100, 256, 6, 1e-6});
    EXPECT_TRUE(mo.pass);
}

TEST(MicroAssoc, ResidualDetectsAWrongBoundary) {
    // Comparing translated spheres of radius v against radius 1.1·v must fail:
    // the gauge is sensitive to the set, not only to the points.
    EinsteinModel<3> m;
    const auto pts = m.sphere_points(0.5, 256);
    const Vec<3> a{0.2, 0.1, 0}, b{0, 0.3, -0.1};
    double worst = 0.0;
    for (const auto& d : pts) {
        const auto p = m.add(a, m.add(b, d));
        worst = std::max(worst, std::abs(m.norm(m.add(m.negate(m.add(a, b)), p)) - 0.55));
    }
    EXPECT_GT(worst, 1e-3);
}

TEST(MicroAssoc, FibonacciSphereCoversDirections) {
    EinsteinModel<3> m;
    const auto pts = m.sphere_points(0.5, 256);
    ASSERT_EQ(pts.size(), 256u);
    Vec<3> mean{};
    for (const auto& p : pts) {
        EXPECT_NEAR(m.norm(p), 0.5, 1e-12);
        for (int i = 0; i < 3; ++i) mean[i] += p[i] / 256.0;
    }
    EXPECT_LT(euclidean_norm(mean), 0.02);
}
