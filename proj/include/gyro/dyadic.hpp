#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gyro {

/// Nonnegative dyadic rational m / 2^n, kept in lowest terms. Prenorm values on
/// finite models are exact in this type.
class Dyadic {
public:
    constexpr Dyadic() = default;
    constexpr Dyadic(std::uint64_t numerator, unsigned exponent) : num_(numerator), exp_(exponent) {
        if (exponent > 62) throw std::overflow_error("Dyadic: exponent too large");
        normalize();
    }

    static constexpr Dyadic zero() { return {}; }
    static constexpr Dyadic one() { return Dyadic(1, 0); }
    static constexpr Dyadic pow2_inv(unsigned n) { return Dyadic(1, n); }

    constexpr std::uint64_t numerator() const { return num_; }
    constexpr unsigned exponent() const { return exp_; }
    constexpr double to_double() const { return double(num_) / double(std::uint64_t{1} << exp_); }
    constexpr bool is_zero() const { return num_ == 0; }

    friend constexpr Dyadic operator+(Dyadic a, Dyadic b) {
        const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }

    /// |a - b|.
    friend constexpr Dyadic abs_diff(Dyadic a, Dyadic b) {
        const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        const std::uint64_t x = a.num_ << (e - a.exp_), y = b.num_ << (e - b.exp_);
        return Dyadic(x > y ? x - y : y - x, e);
    }

    friend constexpr std::strong_ordering operator<=>(Dyadic a, Dyadic b) {
        const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return (a.num_ << (e - a.exp_)) <=> (b.num_ << (e - b.exp_));
    }
    friend constexpr bool operator==(Dyadic a, Dyadic b) { return a.num_ == b.num_ && a.exp_ == b.exp_; }

    /// "0", "1", "3/4", ...
    std::string to_string() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << exp_);
    }

private:
    constexpr void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1u) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    std::uint64_t num_ = 0;
    unsigned exp_ = 0;
};

}  // namespace gyro
