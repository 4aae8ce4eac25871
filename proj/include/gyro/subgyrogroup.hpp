#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "gyro/concepts.hpp"
#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/gyration.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

template <typename E>
struct Verdict {
    bool holds = true;
    std::vector<E> witness;
    std::string reason;

    explicit operator bool() const { return holds; }
};

/**
 * A subset of a continuous ball model given by a descriptor: the diameter along
 * a coordinate axis, or an open norm ball about 0. Membership is tested with the
 * model's tolerance.
 */
class ContinuousSubset {
public:
    enum class Kind { axis, ball };

    static ContinuousSubset axis(std::size_t index) { return ContinuousSubset(Kind::axis, index, 0.0); }
    static ContinuousSubset ball(double radius) { return ContinuousSubset(Kind::ball, 0, radius); }

    Kind kind() const { return kind_; }
    std::size_t axis_index() const { return axis_; }
    double radius() const { return radius_; }

    template <SampledGyroModel M>
    bool contains(const M& m, const element_t<M>& x) const {
        if (!m.contains(x)) return false;
        if (kind_ == Kind::ball) return m.norm(x) < radius_ + m.tolerance();
        // Off-axis mass: distance from x to its projection on the axis.
        const auto on_axis = m.along_axis(axis_, coordinate(x));
        return m.residual(x, on_axis) <= m.tolerance();
    }

    template <SampledGyroModel M>
    element_t<M> sample(const M& m, std::mt19937_64& rng) const {
        if (kind_ == Kind::axis) {
            std::uniform_real_distribution<double> u(-M::sample_radius_fraction, M::sample_radius_fraction);
            return m.along_axis(axis_, u(rng) * m.c());
        }
        // Rescale a carrier sample into the ball.
        auto x = m.sample(rng);
        return scale(x, radius_ / m.c());
    }

    std::string describe() const {
        if (kind_ == Kind::axis) return "axis:" + std::string(1, "xyz"[axis_ < 3 ? axis_ : 0]);
        return "ball:" + std::to_string(radius_);
    }

private:
    ContinuousSubset(Kind k, std::size_t axis, double r) : kind_(k), axis_(axis), radius_(r) {}

    template <typename E>
    double coordinate(const E& x) const {
        if constexpr (requires { x.real(); }) return axis_ == 0 ? x.real() : x.imag();
        else return x.at(axis_);
    }

    template <typename E>
    static E scale(E x, double f) {
        if constexpr (requires { x.real(); }) return x * f;
        else {
            for (auto& v : x) v *= f;
            return x;
        }
    }

    Kind kind_;
    std::size_t axis_;
    double radius_;
};

/// H is a subgyrogroup iff it is nonempty and closed under ⊖ and ⊕.
inline Verdict<std::size_t> is_subgyrogroup(const FiniteTable& g, const ElementSet& h) {
    if (h.empty()) throw precondition_error("is_subgyrogroup: empty subset");
    if (h.universe() != g.order()) throw carrier_error("is_subgyrogroup: subset universe does not match the model");
    for (auto x : h.elements())
        if (!h.contains(g.negate(x))) return {false, {x}, "not closed under inverse"};
    for (auto x : h.elements())
        for (auto y : h.elements())
            if (!h.contains(g.add(x, y))) return {false, {x, y}, "not closed under the operation"};
    return {};
}

/// Sampled closure test on a continuous subset.
template <SampledGyroModel M>
Verdict<element_t<M>> is_subgyrogroup(const M& m, const ContinuousSubset& h, const SampleSpec& spec) {
    auto rng = make_rng(spec.seed, "is_subgyrogroup");
    for (std::size_t s = 0; s < spec.count; ++s) {
        const auto x = h.sample(m, rng);
        const auto y = h.sample(m, rng);
        if (!h.contains(m, m.negate(x))) return {false, {x}, "not closed under inverse"};
        if (!h.contains(m, m.add(x, y))) return {false, {x, y}, "not closed under the operation"};
    }
    return {};
}

/// H is an L-subgyrogroup iff it is a subgyrogroup with gyr[a, h](H) = H for
/// every a ∈ G, h ∈ H. Exhaustive; the witness is (a, h, x) with gyr[a,h](x) ∉ H.
inline Verdict<std::size_t> is_L_subgyrogroup(const FiniteTable& g, const ElementSet& h) {
    if (auto sub = is_subgyrogroup(g, h); !sub)
        throw precondition_error("is_L_subgyrogroup: " + h.to_string() + " is not a subgyrogroup (" + sub.reason + ")");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (auto k : h.elements())
            for (auto x : h.elements())
                if (!h.contains(gyr(g, a, k, x))) return {false, {a, k, x}, "gyr[a,h](H) != H"};
    return {};
}

/// Sampled version: gyr[a,h] and its inverse gyr[h,a] both map sampled points
/// of H into H.
template <SampledGyroModel M>
Verdict<element_t<M>> is_L_subgyrogroup(const M& m, const ContinuousSubset& h, const SampleSpec& spec) {
    if (auto sub = is_subgyrogroup(m, h, spec); !sub)
        throw precondition_error("is_L_subgyrogroup: " + h.describe() + " is not a subgyrogroup (" + sub.reason + ")");
    auto rng = make_rng(spec.seed, "is_L_subgyrogroup");
    for (std::size_t s = 0; s < spec.count; ++s) {
        const auto a = m.sample(rng);
        const auto k = h.sample(m, rng);
        const auto x = h.sample(m, rng);
        if (!h.contains(m, gyr(m, a, k, x)) || !h.contains(m, gyr(m, k, a, x)))
            return {false, {a, k, x}, "gyr[a,h](H) != H"};
    }
    return {};
}

}  // namespace gyro
