#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "gyro/errors.hpp"

namespace gyro {

/// Möbius addition on the open unit disk: a ⊕ b = (a + b) / (1 + conj(a)·b).
class MobiusModel {
public:
    using element_type = std::complex<double>;

    explicit MobiusModel(double tolerance = 1e-9) : eps_(tolerance) {
        if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    }

    double tolerance() const { return eps_; }
    double c() const { return 1.0; }
    element_type identity() const { return {0.0, 0.0}; }

    bool contains(const element_type& z) const {
        return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < 1.0;
    }

    double norm(const element_type& z) const { return std::abs(z); }

    element_type add(const element_type& a, const element_type& b) const {
        require(a, "add");
        require(b, "add");
        const element_type w = (a + b) / (1.0 + std::conj(a) * b);
        if (!contains(w)) throw invariant_error("Möbius addition left the unit disk");
        return w;
    }

    element_type negate(const element_type& a) const {
        require(a, "negate");
        return -a;
    }

    /// gyr[a, b](z) = (1 + a·conj(b)) / (1 + conj(a)·b) · z, a rotation of the disk.
    element_type gyration(const element_type& a, const element_type& b, const element_type& z) const {
        require(a, "gyration");
        require(b, "gyration");
        require(z, "gyration");
        return (1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b) * z;
    }

    double residual(const element_type& a, const element_type& b) const {
        return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
    }

    element_type sample(std::mt19937_64& rng) const {
        constexpr double pi = 3.14159265358979323846;
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double r = sample_radius_fraction * std::sqrt(unif(rng));
        const double t = 2.0 * pi * unif(rng);
        return std::polar(r, t);
    }

    std::vector<element_type> stress_points() const {
        std::vector<element_type> out;
        for (double f : {0.9, 0.99}) {
            out.emplace_back(f, 0.0);
            out.emplace_back(-f, 0.0);
            out.emplace_back(0.0, f);
            out.emplace_back(0.0, -f);
            out.push_back(std::polar(f, 0.785398163397448310));
        }
        return out;
    }

    std::vector<element_type> sphere_points(double r, std::size_t count) const {
        constexpr double pi = 3.14159265358979323846;
        std::vector<element_type> out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) out.push_back(std::polar(r, 2.0 * pi * double(k) / double(count)));
        return out;
    }

    element_type along_axis(std::size_t axis, double t) const {
        if (axis == 0) return {t, 0.0};
        if (axis == 1) return {0.0, t};
        throw std::out_of_range("Möbius disk has axes 0 (real) and 1 (imaginary)");
    }

    std::string describe() const { return "mobius"; }

    static constexpr double sample_radius_fraction = 0.99;

private:
    void require(const element_type& z, const char* op) const {
        if (!contains(z)) throw carrier_error(std::string("Möbius ") + op + ": element outside the open unit disk");
    }

    double eps_;
};

}  // namespace gyro
