#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "gyro/concepts.hpp"

namespace gyro {

/// How continuous models are sampled. Finite models ignore it and are always
/// enumerated exhaustively.
struct SampleSpec {
    std::size_t count = 10000;
    std::uint64_t seed = 0;
    bool stress = true;
};

/// FNV-1a, used to derive an independent stream per named check so that
/// adding or reordering checks never changes another check's samples.
constexpr std::uint64_t stream_salt(std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_salt(stream)),
                      static_cast<std::uint32_t>(stream_salt(stream) >> 32)};
    return std::mt19937_64(seq);
}

/// Calls fn(std::array<E, K>) for every K-tuple of a finite carrier. Returns the count.
template <std::size_t K, FiniteGyroModel M, typename F>
    requires(K > 0)
std::size_t for_each_tuple(const M& model, const SampleSpec&, std::string_view, F&& fn) {
    const std::size_t n = model.order();
    std::array<std::size_t, K> t{};
    std::size_t visited = 0;
    while (true) {
        fn(t);
        ++visited;
        std::size_t i = K;
        while (i > 0) {
            --i;
            if (++t[i] < n) break;
            t[i] = 0;
            if (i == 0) return visited;
        }
    }
}

/// Calls fn on `spec.count` seeded random K-tuples, then (if enabled) on tuples
/// mixing the model's near-boundary stress points.
template <std::size_t K, SampledGyroModel M, typename F>
std::size_t for_each_tuple(const M& model, const SampleSpec& spec, std::string_view stream, F&& fn) {
    auto rng = make_rng(spec.seed, stream);
    std::size_t visited = 0;
    std::array<element_t<M>, K> t;
    for (std::size_t s = 0; s < spec.count; ++s) {
        for (auto& e : t) e = model.sample(rng);
        fn(t);
        ++visited;
    }
    if (spec.stress) {
        const auto pts = model.stress_points();
        const std::size_t m = pts.size();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < K; ++k) t[k] = pts[(i + k * (j + 1)) % m];
                fn(t);
                ++visited;
            }
        }
    }
    return visited;
}

}  // namespace gyro
