#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gyro {

template <typename E>
struct Witness {
    std::vector<E> elements;
    double residual = 0.0;
};

/// Outcome of one named check over a set of samples.
template <typename E>
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool pass = true;
    double max_residual = 0.0;
    std::size_t samples = 0;
    std::vector<Witness<E>> witnesses;
    std::optional<int> depth;

    static constexpr std::size_t max_witnesses = 5;

    /// Records one evaluation; a residual above `tol` fails the check and, for the
    /// first few failures, keeps the elements that produced it.
    template <std::size_t K>
    void record(double residual, double tol, const std::array<E, K>& elements) {
        ++samples;
        // NaN residuals count as failures.
        if (!(residual <= max_residual)) max_residual = residual;
        if (!(residual <= tol)) {
            pass = false;
            if (witnesses.size() < max_witnesses)
                witnesses.push_back({std::vector<E>(elements.begin(), elements.end()), residual});
        }
    }

    void fail(std::vector<E> elements, double residual = 1.0) {
        ++samples;
        pass = false;
        max_residual = std::max(max_residual, residual);
        if (witnesses.size() < max_witnesses) witnesses.push_back({std::move(elements), residual});
    }
};

template <typename E>
struct AxiomReport {
    std::vector<CheckResult<E>> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    }

    const CheckResult<E>* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.max_residual);
        return r;
    }

    void sort_by_name() {
        std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    }
};

inline nlohmann::json element_to_json(std::size_t e) { return e; }
inline nlohmann::json element_to_json(const std::complex<double>& z) { return nlohmann::json::array({z.real(), z.imag()}); }
template <std::size_t D>
nlohmann::json element_to_json(const std::array<double, D>& v) {
    auto j = nlohmann::json::array();
    for (double x : v) j.push_back(x);
    return j;
}

template <typename E>
nlohmann::json to_json(const CheckResult<E>& c) {
    nlohmann::json j;
    j["check"] = c.name;
    j["verdict"] = c.pass ? "pass" : "fail";
    j["residual"] = c.max_residual;
    j["samples"] = c.samples;
    j["depth"] = c.depth ? nlohmann::json(*c.depth) : nlohmann::json(nullptr);
    auto ws = nlohmann::json::array();
    for (const auto& w : c.witnesses) {
        auto els = nlohmann::json::array();
        for (const auto& e : w.elements) els.push_back(element_to_json(e));
        ws.push_back({{"elements", els}, {"residual", w.residual}});
    }
    j["witnesses"] = ws;
    return j;
}

}  // namespace gyro
