#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gyro/chain.hpp"
#include "gyro/concepts.hpp"
#include "gyro/dyadic.hpp"
#include "gyro/element_set.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"
#include "gyro/radial.hpp"

namespace gyro {

/// Largest depth accepted for dyadic families (2^20 + 1 entries).
inline constexpr unsigned max_family_depth = 20;

/**
 * The dyadic family V(m/2ⁿ) of a finite chain, n ≤ depth:
 *
 *   V(1) = U₀,  V(1/2ⁿ) = Uₙ,  V(2m/2ⁿ) = V(m/2ⁿ⁻¹),
 *   V((2m+1)/2ⁿ) = Uₙ ⊕ V(m/2ⁿ⁻¹),   V(r) = G for r > 1.
 *
 * Entries are stored by numerator over 2^depth; V(0) is taken to be the tail H.
 */
class FiniteDyadicFamily {
public:
    FiniteDyadicFamily(const FiniteTable& g, const FiniteChain& chain, unsigned depth) : depth_(depth), order_(g.order()) {
        if (depth > max_family_depth) throw precondition_error("dyadic family depth too large");
        const std::size_t top = std::size_t{1} << depth;
        sets_.assign(top + 1, ElementSet(g.order()));
        sets_[0] = chain.tail();
        sets_[top] = chain.at(0);
        for (unsigned n = 1; n <= depth; ++n) {
            const std::size_t step = std::size_t{1} << (depth - n);
            sets_[step] = chain.at(n);
            for (std::size_t m = 1; 2 * m + 1 < (std::size_t{1} << n); ++m)
                sets_[(2 * m + 1) * step] = set_add(g, chain.at(n), sets_[2 * m * step]);
        }
    }

    unsigned depth() const { return depth_; }

    /// V(r) for a dyadic r whose denominator is at most 2^depth; G for r > 1.
    ElementSet at(Dyadic r) const {
        if (r > Dyadic::one()) return ElementSet::full(order_);
        if (r.exponent() > depth_) throw precondition_error("dyadic family: " + r.to_string() + " is finer than the family depth");
        return sets_[r.numerator() << (depth_ - r.exponent())];
    }

    /// V(j / 2^depth), 0 ≤ j ≤ 2^depth.
    const ElementSet& by_numerator(std::size_t j) const { return sets_.at(j); }
    std::size_t size() const { return sets_.size(); }

private:
    unsigned depth_;
    std::size_t order_;
    std::vector<ElementSet> sets_;
};

/**
 * Radii of the dyadic family of a radial chain: V(r) is the open ball of radius
 * R(r), with R((2m+1)/2ⁿ) = rₙ ⊕₁ R(m/2ⁿ⁻¹). The chain is extended by the
 * flavor's shrink rule when it lists fewer than depth + 1 radii.
 */
class RadialDyadicFamily {
public:
    RadialDyadicFamily(const RadialChain& chain, unsigned depth) : depth_(depth), c_(chain.c) {
        if (depth > max_family_depth) throw precondition_error("dyadic family depth too large");
        if (auto v = validate_chain(chain); !v) throw precondition_error("radial family: invalid chain: " + v.reason);
        chain_ = extend_radial_chain(chain, depth + 1);
        const std::size_t top = std::size_t{1} << depth;
        radii_.assign(top + 1, 0.0);
        radii_[top] = chain_.radii[0];
        for (unsigned n = 1; n <= depth; ++n) {
            const std::size_t step = std::size_t{1} << (depth - n);
            radii_[step] = chain_.radii[n];
            for (std::size_t m = 1; 2 * m + 1 < (std::size_t{1} << n); ++m)
                radii_[(2 * m + 1) * step] = radial_add(c_, chain_.radii[n], radii_[2 * m * step]);
        }
        for (std::size_t j = 1; j < radii_.size(); ++j)
            if (radii_[j] < radii_[j - 1]) throw invariant_error("radial family is not monotone at index " + std::to_string(j));
    }

    unsigned depth() const { return depth_; }
    double c() const { return c_; }
    const RadialChain& chain() const { return chain_; }

    /// R(r); c for r > 1 (the whole carrier).
    double radius(Dyadic r) const {
        if (r > Dyadic::one()) return c_;
        if (r.exponent() > depth_) throw precondition_error("dyadic family: " + r.to_string() + " is finer than the family depth");
        return radii_[r.numerator() << (depth_ - r.exponent())];
    }

    const std::vector<double>& radii() const { return radii_; }

private:
    unsigned depth_;
    double c_;
    RadialChain chain_;
    std::vector<double> radii_;
};

/**
 * N(x) = inf{ r dyadic : x ∈ V(r) } on a finite model, evaluated exactly.
 *
 * With K the index where the chain stabilizes at H, every V(r) with r ∈ (j/2^K,
 * (j+1)/2^K) has the form H⊕(H⊕(...⊕V(j/2^K))). The infimum is therefore the
 * least j/2^K whose H-closure ∪_t H⊕ᵗV(j/2^K) contains x, and 1 when there is
 * none below 1. In particular N(x) = 0 exactly on H.
 */
class FinitePrenorm {
public:
    FinitePrenorm(const FiniteTable& g, const FiniteChain& chain) : g_(&g), chain_(chain.normalized()) {
        if (auto v = validate_chain(g, chain_); !v) throw precondition_error("prenorm: invalid chain: " + v.reason);
        const std::size_t k = chain_.last_index();
        if (k > max_family_depth) throw precondition_error("prenorm: chain too long");
        const FiniteDyadicFamily family(g, chain_, static_cast<unsigned>(k));
        const ElementSet& h = chain_.tail();
        values_.assign(g.order(), Dyadic::one());
        std::vector<char> done(g.order(), 0);
        const std::size_t top = std::size_t{1} << k;
        for (std::size_t j = 0; j < top; ++j) {
            ElementSet closure = family.by_numerator(j);
            while (true) {
                ElementSet next = closure.unite(set_add(g, h, closure));
                if (next == closure) break;
                closure = std::move(next);
            }
            for (auto x : closure.elements()) {
                if (!done[x]) {
                    done[x] = 1;
                    values_[x] = Dyadic(j, static_cast<unsigned>(k));
                }
            }
        }
    }

    const FiniteTable& model() const { return *g_; }
    const FiniteChain& chain() const { return chain_; }
    const ElementSet& tail() const { return chain_.tail(); }

    Dyadic operator()(std::size_t x) const {
        if (!g_->contains(x)) throw carrier_error("prenorm: element out of range");
        return values_[x];
    }

    const std::vector<Dyadic>& values() const { return values_; }

    /// min{ j/2^depth : x ∈ V(j/2^depth) } with V(0) = H, 1 if x is in no V(r)
    /// with r ≤ 1. Upper bound for N(x) approaching it as depth grows.
    static std::vector<Dyadic> truncated(const FiniteTable& g, const FiniteChain& chain, unsigned depth) {
        const FiniteDyadicFamily family(g, chain.normalized(), depth);
        std::vector<Dyadic> out(g.order(), Dyadic::one());
        std::vector<char> done(g.order(), 0);
        for (std::size_t j = 0; j < family.size(); ++j) {
            for (auto x : family.by_numerator(j).elements()) {
                if (!done[x]) {
                    done[x] = 1;
                    out[x] = Dyadic(j, depth);
                }
            }
        }
        return out;
    }

private:
    const FiniteTable* g_;
    FiniteChain chain_;
    std::vector<Dyadic> values_;
};

/// Ball models: Einstein/Möbius-like models with a speed bound and norm.
template <typename M>
concept BallModel = SampledGyroModel<M> && requires(const M& m, const element_t<M>& x) {
    { m.c() } -> std::convertible_to<double>;
    { m.sphere_points(0.5, std::size_t{4}) } -> std::convertible_to<std::vector<element_t<M>>>;
};

/**
 * N on a ball model from a radial family truncated at `depth`:
 * N(x) = 0 for ‖x‖ within the model tolerance, otherwise the least j/2^depth with |x| < R(j/2^depth), and 1 if
 * |x| ≥ r₀. Truncation overestimates the infimum by at most 2^-depth.
 */
template <BallModel M>
class RadialPrenorm {
public:
    RadialPrenorm(const M& model, const RadialChain& chain, unsigned depth = 10) : m_(&model), family_(chain, depth) {
        if (chain.c != model.c()) throw precondition_error("radial prenorm: chain c does not match the model");
    }

    const M& model() const { return *m_; }
    const RadialDyadicFamily& family() const { return family_; }
    unsigned depth() const { return family_.depth(); }

    Dyadic operator()(const element_t<M>& x) const {
        if (!m_->contains(x)) throw carrier_error("prenorm: element outside the carrier");
        return of_norm(m_->norm(x));
    }

    /// Norms within the model tolerance count as 0, so ⊖x⊕x evaluates to N = 0.
    Dyadic of_norm(double r) const {
        if (r <= m_->tolerance()) return Dyadic::zero();
        const auto& radii = family_.radii();
        const auto it = std::upper_bound(radii.begin(), radii.end(), r);
        if (it == radii.end()) return Dyadic::one();
        return Dyadic(static_cast<std::uint64_t>(it - radii.begin()), family_.depth());
    }

    /// Whether x ∈ U_n (open ball of radius r_n).
    bool in_chain_set(const element_t<M>& x, std::size_t n) const { return m_->norm(x) < family_.chain().radii.at(n); }

private:
    const M* m_;
    RadialDyadicFamily family_;
};

}  // namespace gyro
