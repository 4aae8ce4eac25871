#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gyro/gyro.hpp"
#include "support.hpp"

using namespace gyro;

namespace {

FiniteChain z4_weak() { return {Flavor::weak, {ElementSet(4, {0, 1, 2, 3}), ElementSet(4, {0, 2}), ElementSet(4, {0})}}; }
FiniteChain z4_admissible() {
    return {Flavor::admissible, {ElementSet(4, {0, 1, 2, 3}), ElementSet(4, {0, 2}), ElementSet(4, {0, 2})}};
}

std::vector<Dyadic> dyadics(std::initializer_list<std::pair<std::uint64_t, unsigned>> xs) {
    std::vector<Dyadic> out;
    for (auto [n, e] : xs) out.emplace_back(n, e);
    return out;
}

}  // namespace

TEST(Dyadic, Arithmetic) {
    EXPECT_EQ(Dyadic(2, 2), Dyadic(1, 1));
    EXPECT_EQ((Dyadic(1, 2) + Dyadic(1, 2)).to_string(), "1/2");
    EXPECT_EQ((Dyadic(3, 2) + Dyadic(1, 2)), Dyadic::one());
    EXPECT_EQ(abs_diff(Dyadic(1, 3), Dyadic(3, 2)), Dyadic(5, 3));
    EXPECT_LT(Dyadic(33, 6), Dyadic(17, 5));
    EXPECT_EQ(Dyadic(0, 9), Dyadic::zero());
    EXPECT_EQ(Dyadic::zero().to_string(), "0");
    EXPECT_DOUBLE_EQ(Dyadic(3, 2).to_double(), 0.75);
    EXPECT_THROW(Dyadic(1, 63), std::overflow_error);
}

TEST(DyadicFamily, CyclicRecurrence) {
    const auto g = test::z4();
    const FiniteDyadicFamily v(g, z4_weak(), 3);
    EXPECT_EQ(v.at(Dyadic::one()), ElementSet(4, {0, 1, 2, 3}));
    EXPECT_EQ(v.at(Dyadic(1, 1)), ElementSet(4, {0, 2}));
    EXPECT_EQ(v.at(Dyadic(1, 2)), ElementSet(4, {0}));
    EXPECT_EQ(v.at(Dyadic(3, 2)), ElementSet(4, {0, 2}));
    EXPECT_EQ(v.at(Dyadic(3, 1)), ElementSet::full(4));
    EXPECT_THROW(v.at(Dyadic(1, 4)), precondition_error);
    EXPECT_THROW(FiniteDyadicFamily(g, z4_weak(), max_family_depth + 1), precondition_error);
}

TEST(DyadicFamily, FamilyIsMonotone) {
    const auto g = test::g8();
    for (const auto& c : test::all_chains(g, Flavor::weak, 4)) {
        const FiniteDyadicFamily v(g, c, 6);
        for (std::size_t j = 1; j < v.size(); ++j) EXPECT_TRUE(v.by_numerator(j - 1).subset_of(v.by_numerator(j)));
    }
}

TEST(RadialFamily, RadiiFollowRadialAddition) {
    const RadialDyadicFamily f(RadialChain{Flavor::weak, 1.0, {0.8, 0.5, 0.25}}, 4);
    EXPECT_NEAR(f.radius(Dyadic::one()), 0.8, 1e-15);
    EXPECT_NEAR(f.radius(Dyadic(1, 1)), 0.5, 1e-15);
    EXPECT_NEAR(f.radius(Dyadic(1, 2)), 0.25, 1e-15);
    EXPECT_NEAR(f.radius(Dyadic(3, 2)), 0.75 / 1.125, 1e-15);
    EXPECT_DOUBLE_EQ(f.radius(Dyadic(5, 2)), 1.0);
    // Extended by the shrink rule beyond the listed radii.
    EXPECT_NEAR(f.radius(Dyadic(1, 3)), radial_half(1.0, 0.25), 1e-15);
    EXPECT_THROW(RadialDyadicFamily(RadialChain{Flavor::weak, 1.0, {0.8, 0.6}}, 4), precondition_error);
}

TEST(FinitePrenorm, CyclicWeakChain) {
    const FinitePrenorm n(test::z4(), z4_weak());
    EXPECT_EQ(n.values(), dyadics({{0, 0}, {1, 0}, {1, 1}, {1, 0}}));
    EXPECT_EQ(FinitePrenorm::truncated(test::z4(), z4_weak(), 4), n.values());
    EXPECT_THROW(n(4), carrier_error);
}

TEST(FinitePrenorm, CyclicAdmissibleChainVanishesOnTail) {
    const FinitePrenorm n(test::z4(), z4_admissible());
    EXPECT_EQ(n.values(), dyadics({{0, 0}, {1, 0}, {0, 0}, {1, 0}}));
}

TEST(FinitePrenorm, RejectsInvalidChains) {
    FiniteChain bad{Flavor::weak, {ElementSet(4, {0, 1, 2, 3}), ElementSet(4, {0, 1, 3})}};
    EXPECT_THROW(FinitePrenorm(test::z4(), bad), precondition_error);
}

TEST(FinitePrenorm, TruncationOverestimatesButConverges) {
    const auto g = test::g8();
    const FiniteChain c{Flavor::weak, {ElementSet(8, {0, 1, 2, 3}), ElementSet(8, {0, 1, 2}), ElementSet(8, {0, 1})}};
    const FinitePrenorm n(g, c);
    // 3 ∈ {0,1} ⊕ {0,1,2} = H ⊕ V(1/2), so the infimum is 1/2.
    EXPECT_EQ(n(3), Dyadic(1, 1));
    const auto shallow = FinitePrenorm::truncated(g, c, 6);
    EXPECT_EQ(shallow[3], Dyadic(33, 6));
    EXPECT_GT(shallow[3], shallow[1] + shallow[2]);  // truncation alone breaks subadditivity
    for (const auto& ch : test::all_chains(g, Flavor::weak, 4)) {
        const FinitePrenorm exact(g, ch);
        const auto deep = FinitePrenorm::truncated(g, ch, 12);
        for (std::size_t x = 0; x < g.order(); ++x) {
            EXPECT_GE(deep[x], exact(x));
            EXPECT_LE(abs_diff(deep[x], exact(x)), Dyadic::pow2_inv(12)) << x;
        }
    }
}

TEST(FinitePrenorm, LawsHoldOnEveryEnumeratedChain) {
    for (const auto& g : {test::z4(), test::g8()}) {
        for (auto f : {Flavor::weak, Flavor::admissible}) {
            for (const auto& c : test::all_chains(g, f, 4)) {
                const FinitePrenorm n(g, c);
                const auto laws = check_prenorm_laws(n);
                for (const auto& r : laws.checks) EXPECT_TRUE(r.pass) << r.name;
                EXPECT_TRUE(check_sandwich(n, c.sets.size() + 2).pass);
                for (std::size_t x = 0; x < g.order(); ++x) EXPECT_EQ(n(x).is_zero(), n.tail().contains(x));
            }
        }
    }
}

TEST(FinitePrenorm, LawsOnProductModel) {
    const auto g = test::g16();
    const auto sets = test::invariant_sets(g);
    std::size_t checked = 0;
    for (const auto& u : sets) {
        if (u.size() < 4) continue;
        const auto hull = admissible_hull(g, u);
        const FinitePrenorm n(g, hull.chain);
        const auto laws = check_prenorm_laws(n);
        EXPECT_TRUE(laws.passed());
        EXPECT_TRUE(check_sandwich(n, 6).pass);
        ++checked;
    }
    EXPECT_GT(checked, 10u);
}

TEST(RadialPrenorm, BasicValues) {
    EinsteinModel<3> m;
    const RadialPrenorm<EinsteinModel<3>> n(m, RadialChain{Flavor::weak, 1.0, {0.8, 0.5, 0.25}}, 10);
    EXPECT_EQ(n(m.identity()), Dyadic::zero());
    EXPECT_EQ(n.of_norm(0.85), Dyadic::one());
    EXPECT_THROW(n(Vec<3>{1.0, 0, 0}), carrier_error);
    EXPECT_THROW(RadialPrenorm<EinsteinModel<3>>(EinsteinModel<3>(2.0), RadialChain{Flavor::weak, 1.0, {0.8}}),
                 precondition_error);
}

TEST(RadialPrenorm, MatchesRapidityOracle) {
    // V(j/2^d) is the ball whose rapidity is the sum of the chain rapidities
    // picked out by the binary digits of j.
    EinsteinModel<3> m;
    const RadialChain chain{Flavor::weak, 1.0, {0.8, 0.5, 0.25}};
    const unsigned depth = 8;
    const RadialPrenorm<EinsteinModel<3>> n(m, chain, depth);
    std::vector<double> phi{std::atanh(0.8), std::atanh(0.5), std::atanh(0.25)};
    while (phi.size() <= depth) {
        const double r = std::tanh(phi.back());
        phi.push_back(std::atanh(r / (1.0 + std::sqrt(1.0 - r * r))));
    }
    auto oracle = [&](double norm) {
        const double target = std::atanh(norm);
        for (std::uint64_t j = 1; j <= (1u << depth); ++j) {
            double sum = 0.0;
            if (j == (1u << depth)) sum = phi[0];
            else
                for (unsigned k = 1; k <= depth; ++k)
                    if (j >> (depth - k) & 1U) sum += phi[k];
            if (target < sum - 1e-12) return Dyadic(j, depth);
        }
        return Dyadic::one();
    };
    for (int i = 1; i < 400; ++i) {
        const double r = 0.9 * i / 400.0;
        // Skip norms within rounding distance of a family radius.
        const auto& radii = n.family().radii();
        const bool near_edge = std::any_of(radii.begin(), radii.end(), [&](double R) { return std::abs(R - r) < 1e-9; });
        if (near_edge) continue;
        EXPECT_EQ(n.of_norm(r), oracle(r)) << r;
    }
}

TEST(RadialPrenorm, MonotoneInNormAndGyrInvariant) {
    EinsteinModel<3> m;
    const RadialPrenorm<EinsteinModel<3>> n(m, RadialChain{Flavor::weak, 1.0, {0.8, 0.5, 0.25}}, 10);
    Dyadic prev = Dyadic::zero();
    for (int i = 0; i < 1000; ++i) {
        const Dyadic v = n.of_norm(0.99 * i / 1000.0);
        EXPECT_GE(v, prev);
        prev = v;
    }
    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const auto a = m.sample(rng), b = m.sample(rng), z = m.sample(rng);
        EXPECT_NEAR(m.norm(gyr(m, a, b, z)), m.norm(z), 1e-12);
    }
}

TEST(RadialPrenorm, AgreesWithExhaustivePrenormOnDiscretizedDisk) {
    // Z_64 with interval chain U_n = {k : |k| <= h_n} against Einstein balls of
    // rapidity (h_n + eps 2^-n) delta, sampled at points of rapidity k delta.
    const std::size_t order = 64;
    const std::vector<std::size_t> h{8, 4, 2, 1, 0};
    const double delta = 0.1, eps = 0.5;
    const auto g = cyclic_table(order);
    FiniteChain fc{Flavor::weak, {}};
    RadialChain rc{Flavor::weak, 1.0, {}};
    for (std::size_t n = 0; n < h.size(); ++n) {
        ElementSet u(order);
        for (std::size_t k = 0; k < order; ++k)
            if (std::min(k, order - k) <= h[n]) u.insert(k);
        fc.sets.push_back(u);
        rc.radii.push_back(std::tanh((double(h[n]) + eps / double(1u << n)) * delta));
    }
    const FinitePrenorm exact(g, fc);
    EinsteinModel<3> m;
    const RadialPrenorm<EinsteinModel<3>> radial(m, rc, 10);
    for (std::size_t k = 0; k < order; ++k) {
        const std::size_t level = std::min(k, order - k);
        const double r = std::tanh(double(level) * delta);
        if (level == 0) {
            EXPECT_EQ(radial(m.identity()), exact(k));
            continue;
        }
        for (const auto& x : m.sphere_points(r, 16)) EXPECT_EQ(radial(x), exact(k)) << k;
    }
}
