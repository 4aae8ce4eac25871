#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gyro/errors.hpp"

namespace gyro {

template <std::size_t Dim>
using Vec = std::array<double, Dim>;

template <std::size_t Dim>
double dot(const Vec<Dim>& u, const Vec<Dim>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < Dim; ++i) s += u[i] * v[i];
    return s;
}

template <std::size_t Dim>
double euclidean_norm(const Vec<Dim>& u) {
    return std::sqrt(dot(u, u));
}

/**
 * Einstein velocity addition on the open c-ball of R^Dim (Dim = 2 or 3).
 *
 *   u ⊕ v = 1/(1 + <u,v>/c²) · { u + v/γ_u + (1/c²)·γ_u/(1+γ_u)·<u,v>·u }
 *
 * with γ_u = 1/sqrt(1 - |u|²/c²). The operation is neither associative nor
 * commutative; ⊖u = -u.
 */
template <std::size_t Dim = 3>
class EinsteinModel {
    static_assert(Dim == 2 || Dim == 3, "Einstein model supports dimension 2 or 3");

public:
    using element_type = Vec<Dim>;
    static constexpr std::size_t dimension = Dim;

    explicit EinsteinModel(double c = 1.0, double tolerance = 1e-9) : c_(c), eps_(tolerance) {
        if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("speed bound c must be positive");
        if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    }

    double c() const { return c_; }
    double tolerance() const { return eps_; }
    element_type identity() const { return element_type{}; }

    bool contains(const element_type& u) const {
        for (double x : u)
            if (!std::isfinite(x)) return false;
        return euclidean_norm(u) < c_;
    }

    double norm(const element_type& u) const { return euclidean_norm(u); }

    double lorentz_gamma(const element_type& u) const {
        require(u, "lorentz_gamma");
        return 1.0 / std::sqrt(1.0 - dot(u, u) / (c_ * c_));
    }

    element_type add(const element_type& u, const element_type& v) const {
        require(u, "add");
        require(v, "add");
        const double c2 = c_ * c_;
        const double uv = dot(u, v);
        const double gamma = 1.0 / std::sqrt(1.0 - dot(u, u) / c2);
        const double denom = 1.0 + uv / c2;
        // |<u,v>| < c² on the carrier, so denom > 0.
        if (!(denom > 0.0)) throw invariant_error("Einstein addition: vanishing denominator");
        const double k = gamma / (1.0 + gamma) * uv / c2;
        element_type w{};
        for (std::size_t i = 0; i < Dim; ++i) w[i] = (u[i] + v[i] / gamma + k * u[i]) / denom;
        if (!contains(w)) throw invariant_error("Einstein addition left the c-ball");
        return w;
    }

    element_type negate(const element_type& u) const {
        require(u, "negate");
        element_type w{};
        for (std::size_t i = 0; i < Dim; ++i) w[i] = -u[i];
        return w;
    }

    double residual(const element_type& a, const element_type& b) const {
        double r = 0.0;
        for (std::size_t i = 0; i < Dim; ++i) r = std::max(r, std::abs(a[i] - b[i]));
        return r;
    }

    /// Uniform direction, norm distributed as in the uniform ball of radius
    /// `sample_radius_fraction`·c.
    element_type sample(std::mt19937_64& rng) const {
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        element_type dir{};
        double n = 0.0;
        while (n < 1e-12) {
            for (auto& x : dir) x = gauss(rng);
            n = euclidean_norm(dir);
        }
        const double r = sample_radius_fraction * c_ * std::pow(unif(rng), 1.0 / double(Dim));
        for (auto& x : dir) x *= r / n;
        return dir;
    }

    /// Points at 0.9c and 0.99c along each axis (both signs) and along the diagonal.
    std::vector<element_type> stress_points() const {
        std::vector<element_type> out;
        for (double f : {0.9, 0.99}) {
            for (std::size_t i = 0; i < Dim; ++i) {
                for (double s : {1.0, -1.0}) {
                    element_type e{};
                    e[i] = s * f * c_;
                    out.push_back(e);
                }
            }
            element_type d{};
            for (auto& x : d) x = f * c_ / std::sqrt(double(Dim));
            out.push_back(d);
        }
        return out;
    }

    /// Points on the sphere of radius `r` used to probe ball boundaries: evenly
    /// spaced angles in the plane, a Fibonacci lattice in space.
    std::vector<element_type> sphere_points(double r, std::size_t count) const {
        std::vector<element_type> out;
        out.reserve(count);
        constexpr double pi = 3.14159265358979323846;
        for (std::size_t k = 0; k < count; ++k) {
            element_type e{};
            if constexpr (Dim == 2) {
                const double t = 2.0 * pi * double(k) / double(count);
                e = {r * std::cos(t), r * std::sin(t)};
            } else {
                const double golden = pi * (3.0 - std::sqrt(5.0));
                const double z = 1.0 - 2.0 * (double(k) + 0.5) / double(count);
                const double rho = std::sqrt(1.0 - z * z);
                const double t = golden * double(k);
                e = {r * rho * std::cos(t), r * rho * std::sin(t), r * z};
            }
            out.push_back(e);
        }
        return out;
    }

    /// Unit vector along `axis` scaled by t.
    element_type along_axis(std::size_t axis, double t) const {
        element_type e{};
        e.at(axis) = t;
        return e;
    }

    std::string describe() const {
        std::ostringstream os;
        os << "einstein(d=" << Dim << ",c=" << c_ << ")";
        return os.str();
    }

    static constexpr double sample_radius_fraction = 0.99;

private:
    void require(const element_type& u, const char* op) const {
        if (!contains(u)) throw carrier_error(std::string("Einstein ") + op + ": element outside the open c-ball");
    }

    double c_;
    double eps_;
};

}  // namespace gyro
