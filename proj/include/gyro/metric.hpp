#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string_view>
#include <type_traits>
#include <utility>
#include <cstddef>
#include <string>
#include <vector>

#include "gyro/axioms.hpp"
#include "gyro/coset.hpp"
#include "gyro/dyadic.hpp"
#include "gyro/gyration.hpp"
#include "gyro/prenorm.hpp"
#include "gyro/report.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

template <typename P>
concept Prenorm = requires(const P& p) {
    { p.model() };
    { p(p.model().identity()) } -> std::convertible_to<Dyadic>;
};

template <Prenorm P>
using prenorm_element_t = element_t<std::remove_cvref_t<decltype(std::declval<const P&>().model())>>;

/// ρ_N(x, y) = N(⊖x⊕y) + N(⊖y⊕x).
template <Prenorm P>
Dyadic rho_N(const P& n, const prenorm_element_t<P>& x, const prenorm_element_t<P>& y) {
    const auto& m = n.model();
    return n(gyro_difference(m, x, y)) + n(gyro_difference(m, y, x));
}

/// d(x, y) = |N(x) - N(y)|, a pseudometric.
template <Prenorm P>
Dyadic pseudometric(const P& n, const prenorm_element_t<P>& x, const prenorm_element_t<P>& y) {
    return abs_diff(n(x), n(y));
}

/// ϱ(π(x), π(y)) = d(⊖x⊕y, 0) + d(⊖y⊕x, 0), computed from representatives.
template <Prenorm P>
Dyadic quotient_metric_of(const P& n, const prenorm_element_t<P>& x, const prenorm_element_t<P>& y) {
    const auto& m = n.model();
    const auto zero = m.identity();
    return pseudometric(n, gyro_difference(m, x, y), zero) + pseudometric(n, gyro_difference(m, y, x), zero);
}

/**
 * ϱ between two cosets of a finite partition. Every pair of representatives is
 * evaluated; disagreement raises invariant_error.
 */
inline Dyadic quotient_metric(const FinitePrenorm& n, const CosetPartition& p, std::size_t coset_x, std::size_t coset_y) {
    if (coset_x >= p.count() || coset_y >= p.count()) throw carrier_error("quotient_metric: coset index out of range");
    const Dyadic value = quotient_metric_of(n, p.representatives[coset_x], p.representatives[coset_y]);
    for (auto x : p.cosets[coset_x].elements())
        for (auto y : p.cosets[coset_y].elements())
            if (quotient_metric_of(n, x, y) != value)
                throw invariant_error("quotient_metric depends on representatives (" + std::to_string(x) + ", " +
                                      std::to_string(y) + ")");
    return value;
}

/// B(x, ε) = {x' : d(x', x) < ε}.
inline ElementSet pseudometric_ball(const FinitePrenorm& n, std::size_t x, double eps) {
    ElementSet out(n.model().order());
    for (std::size_t y = 0; y < n.model().order(); ++y)
        if (pseudometric(n, y, x).to_double() < eps) out.insert(y);
    return out;
}

/// π⁻¹(B*(π(x), ε)): union of the cosets within ϱ-distance ε of π(x).
inline ElementSet quotient_ball_preimage(const FinitePrenorm& n, const CosetPartition& p, std::size_t x, double eps) {
    ElementSet out(n.model().order());
    const std::size_t cx = quotient_map(p, x);
    for (std::size_t c = 0; c < p.count(); ++c)
        if (quotient_metric(n, p, c, cx).to_double() < eps) out = out.unite(p.cosets[c]);
    return out;
}

// ---------------------------------------------------------------------------
// Checks. Finite prenorms are checked exhaustively and exactly; radial ones on
// sampled points spread over the chain's scale, against `tol`.

namespace detail {

template <BallModel M>
element_t<M> sample_at_scale(const M& m, std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto x = m.sample(rng);
    const double r = m.norm(x);
    if (r == 0.0) return x;
    // Alternate between the carrier distribution and norms uniform in [0, scale).
    if (unif(rng) < 0.25) return x;
    const double target = std::min(scale * unif(rng), M::sample_radius_fraction * m.c());
    const double f = target / r;
    if constexpr (requires { x.real(); }) return x * f;
    else {
        for (auto& v : x) v *= f;
        return x;
    }
}

template <std::size_t K, Prenorm P, typename F>
void for_each_prenorm_tuple(const P& n, const SampleSpec& spec, std::string_view stream, F&& fn) {
    using M = std::remove_cvref_t<decltype(n.model())>;
    if constexpr (FiniteGyroModel<M>) {
        for_each_tuple<K>(n.model(), spec, stream, fn);
    } else {
        auto rng = make_rng(spec.seed, stream);
        const double scale = 1.25 * n.family().chain().radii[0];
        std::array<element_t<M>, K> t;
        for (std::size_t s = 0; s < spec.count; ++s) {
            for (auto& e : t) e = sample_at_scale(n.model(), rng, scale);
            fn(t);
        }
    }
}

inline double excess(Dyadic lhs, Dyadic rhs) { return lhs > rhs ? (abs_diff(lhs, rhs)).to_double() : 0.0; }

}  // namespace detail

/// N(0) = 0, N(⊖x) = N(x), N(x⊕y) ≤ N(x) + N(y), N(gyr[a,b](z)) = N(z).
template <Prenorm P>
AxiomReport<prenorm_element_t<P>> check_prenorm_laws(const P& n, const SampleSpec& spec = {}, double tol = 0.0) {
    using E = prenorm_element_t<P>;
    const auto& m = n.model();
    AxiomReport<E> report;
    {
        CheckResult<E> c{"prenorm_zero"};
        c.record(n(m.identity()).to_double(), 0.0, std::array<E, 1>{m.identity()});
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"prenorm_symmetric"};
        detail::for_each_prenorm_tuple<1>(n, spec, c.name, [&](const std::array<E, 1>& t) {
            c.record(abs_diff(n(t[0]), n(m.negate(t[0]))).to_double(), tol, t);
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"prenorm_subadditive"};
        detail::for_each_prenorm_tuple<2>(n, spec, c.name, [&](const std::array<E, 2>& t) {
            c.record(detail::excess(n(m.add(t[0], t[1])), n(t[0]) + n(t[1])), tol, t);
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"prenorm_gyr_invariant"};
        detail::for_each_prenorm_tuple<3>(n, spec, c.name, [&](const std::array<E, 3>& t) {
            c.record(abs_diff(n(gyr(m, t[0], t[1], t[2])), n(t[2])).to_double(), tol, t);
        });
        report.checks.push_back(std::move(c));
    }
    report.sort_by_name();
    return report;
}

/// {x : N(x) < 1/2ⁿ} ⊆ Uₙ ⊆ {x : N(x) ≤ 2/2ⁿ} for n = 0..max_n, exhaustively.
inline CheckResult<std::size_t> check_sandwich(const FinitePrenorm& n, unsigned max_n) {
    CheckResult<std::size_t> c{"prenorm_sandwich"};
    c.depth = static_cast<int>(max_n);
    for (unsigned k = 0; k <= max_n; ++k) {
        const auto& u = n.chain().at(k);
        for (std::size_t x = 0; x < n.model().order(); ++x) {
            const Dyadic v = n(x);
            if (v < Dyadic::pow2_inv(k) && !u.contains(x)) c.fail({k, x});
            else if (u.contains(x) && v > Dyadic(2, k)) c.fail({k, x});
            else c.record(0.0, 0.0, std::array<std::size_t, 2>{k, x});
        }
    }
    return c;
}

/// Sampled sandwich on a ball model: N(x) < 1/2ⁿ ⟹ |x| < rₙ and |x| < rₙ ⟹ N(x) ≤ 2/2ⁿ + tol.
template <BallModel M>
CheckResult<element_t<M>> check_sandwich(const RadialPrenorm<M>& n, unsigned max_n, const SampleSpec& spec, double tol) {
    using E = element_t<M>;
    CheckResult<E> c{"prenorm_sandwich"};
    c.depth = static_cast<int>(max_n);
    auto rng = make_rng(spec.seed, c.name);
    const double scale = 1.25 * n.family().chain().radii[0];
    for (std::size_t s = 0; s < spec.count; ++s) {
        const E x = detail::sample_at_scale(n.model(), rng, scale);
        const double v = n(x).to_double();
        double worst = 0.0;
        for (unsigned k = 0; k <= max_n && k <= n.depth(); ++k) {
            const double lower = 1.0 / double(std::uint64_t{1} << k);
            const bool in_u = n.in_chain_set(x, k);
            if (v < lower - tol && !in_u) worst = std::max(worst, lower - v);
            if (in_u) worst = std::max(worst, v - 2.0 * lower);
        }
        c.record(worst, tol, std::array<E, 1>{x});
    }
    return c;
}

/**
 * ρ_N metric laws: ρ(x,x) = 0, symmetry, triangle inequality, and
 * ρ(x,y) = 0 ⟺ ⊖x⊕y ∈ H and ⊖y⊕x ∈ H (finite models; on ball models H = {0}).
 */
template <Prenorm P, typename InTail>
AxiomReport<prenorm_element_t<P>> check_metric_laws(const P& n, InTail&& in_tail, const SampleSpec& spec = {},
                                                    double tol = 0.0) {
    using E = prenorm_element_t<P>;
    const auto& m = n.model();
    AxiomReport<E> report;
    {
        CheckResult<E> c{"rho_identity"};
        detail::for_each_prenorm_tuple<2>(n, spec, c.name, [&](const std::array<E, 2>& t) {
            const auto& [x, y] = t;
            const bool zero = rho_N(n, x, y).is_zero();
            const bool in_tail_both = in_tail(gyro_difference(m, x, y)) && in_tail(gyro_difference(m, y, x));
            c.record(zero == in_tail_both && rho_N(n, x, x).is_zero() ? 0.0 : 1.0, 0.0, t);
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"rho_symmetric"};
        detail::for_each_prenorm_tuple<2>(n, spec, c.name, [&](const std::array<E, 2>& t) {
            c.record(abs_diff(rho_N(n, t[0], t[1]), rho_N(n, t[1], t[0])).to_double(), 0.0, t);
        });
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<E> c{"rho_triangle"};
        detail::for_each_prenorm_tuple<3>(n, spec, c.name, [&](const std::array<E, 3>& t) {
            const auto& [x, y, z] = t;
            c.record(detail::excess(rho_N(n, x, y), rho_N(n, x, z) + rho_N(n, z, y)), tol, t);
        });
        report.checks.push_back(std::move(c));
    }
    report.sort_by_name();
    return report;
}

/// N(x ⊕ h) = N(x) for all x ∈ G, h ∈ H. Witness (x, h).
inline CheckResult<std::size_t> coset_invariant_N_check(const FinitePrenorm& n, const ElementSet& h) {
    CheckResult<std::size_t> c{"coset_invariant_N"};
    const auto& g = n.model();
    for (std::size_t x = 0; x < g.order(); ++x)
        for (auto k : h.elements())
            c.record(abs_diff(n(g.add(x, k)), n(x)).to_double(), 0.0, std::array<std::size_t, 2>{x, k});
    return c;
}

/// Sampled version on ball models, where H = {0}; pairs (x, 0) plus x ⊕ (tiny h)
/// would leave H, so only h = 0 is meaningful.
template <BallModel M>
CheckResult<element_t<M>> coset_invariant_N_check(const RadialPrenorm<M>& n, const SampleSpec& spec) {
    using E = element_t<M>;
    CheckResult<E> c{"coset_invariant_N"};
    const auto& m = n.model();
    detail::for_each_prenorm_tuple<1>(n, spec, c.name, [&](const std::array<E, 1>& t) {
        c.record(abs_diff(n(m.add(t[0], m.identity())), n(t[0])).to_double(), 0.0, t);
    });
    return c;
}

/**
 * Quotient metric laws on a finite partition: representative independence over
 * every pair of representatives, ϱ = 0 exactly on the diagonal, symmetry and the
 * triangle inequality over all coset triples.
 */
inline AxiomReport<std::size_t> check_quotient_metric(const FinitePrenorm& n, const CosetPartition& p) {
    AxiomReport<std::size_t> report;
    const auto& g = n.model();
    {
        CheckResult<std::size_t> c{"quotient_well_defined"};
        for (std::size_t x = 0; x < g.order(); ++x)
            for (std::size_t y = 0; y < g.order(); ++y) {
                const Dyadic base = quotient_metric_of(n, p.representatives[p.coset_of[x]], p.representatives[p.coset_of[y]]);
                c.record(abs_diff(quotient_metric_of(n, x, y), base).to_double(), 0.0, std::array<std::size_t, 2>{x, y});
            }
        report.checks.push_back(std::move(c));
    }
    std::vector<std::vector<Dyadic>> table(p.count(), std::vector<Dyadic>(p.count()));
    for (std::size_t a = 0; a < p.count(); ++a)
        for (std::size_t b = 0; b < p.count(); ++b)
            table[a][b] = quotient_metric_of(n, p.representatives[a], p.representatives[b]);
    {
        CheckResult<std::size_t> c{"quotient_identity"};
        for (std::size_t a = 0; a < p.count(); ++a)
            for (std::size_t b = 0; b < p.count(); ++b)
                c.record(table[a][b].is_zero() == (a == b) ? 0.0 : 1.0, 0.0, std::array<std::size_t, 2>{a, b});
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<std::size_t> c{"quotient_symmetric"};
        for (std::size_t a = 0; a < p.count(); ++a)
            for (std::size_t b = 0; b < p.count(); ++b)
                c.record(abs_diff(table[a][b], table[b][a]).to_double(), 0.0, std::array<std::size_t, 2>{a, b});
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult<std::size_t> c{"quotient_triangle"};
        for (std::size_t a = 0; a < p.count(); ++a)
            for (std::size_t b = 0; b < p.count(); ++b)
                for (std::size_t z = 0; z < p.count(); ++z)
                    c.record(detail::excess(table[a][b], table[a][z] + table[z][b]), 0.0, std::array<std::size_t, 3>{a, b, z});
        report.checks.push_back(std::move(c));
    }
    report.sort_by_name();
    return report;
}

/// π⁻¹(B*(π(x), ε)) = B(x, ε) for every x and each ε in `radii`. Witness (x, y),
/// y in exactly one of the two sets.
inline CheckResult<std::size_t> check_ball_preimage(const FinitePrenorm& n, const CosetPartition& p,
                                                    const std::vector<double>& radii) {
    CheckResult<std::size_t> c{"ball_preimage"};
    for (double eps : radii) {
        for (std::size_t x = 0; x < n.model().order(); ++x) {
            const ElementSet lhs = quotient_ball_preimage(n, p, x, eps);
            const ElementSet rhs = pseudometric_ball(n, x, eps);
            if (lhs == rhs) {
                c.record(0.0, 0.0, std::array<std::size_t, 1>{x});
            } else {
                const std::size_t y = lhs.subset_of(rhs) ? rhs.first_outside(lhs) : lhs.first_outside(rhs);
                c.fail({x, y});
            }
        }
    }
    return c;
}

}  // namespace gyro
