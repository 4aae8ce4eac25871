#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gyro/chain.hpp"
#include "gyro/errors.hpp"
#include "gyro/report.hpp"
#include "gyro/table_io.hpp"

namespace gyro {

/**
 * Chain files: `{"flavor": "weak"|"admissible", "sets": [[i, ...], ...]}` for
 * finite models, `{"flavor": ..., "radii": [r0, r1, ...]}` for ball models.
 * An optional "c" sets the speed bound of a radial chain (default 1).
 */
inline nlohmann::json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw parse_error(std::string("cannot open ") + what + " file '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string(what) + " file '" + path + "': " + e.what());
    }
}

inline Flavor parse_flavor(const nlohmann::json& j) {
    if (!j.contains("flavor")) return Flavor::weak;
    const auto& f = j.at("flavor");
    if (f == "weak") return Flavor::weak;
    if (f == "admissible") return Flavor::admissible;
    throw parse_error("chain: 'flavor' must be \"weak\" or \"admissible\"");
}

inline bool is_radial_chain_json(const nlohmann::json& j) { return j.is_object() && j.contains("radii"); }

namespace detail {

inline void check_chain_keys(const nlohmann::json& j, const char* body) {
    if (!j.is_object()) throw parse_error("chain: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "flavor" && key != body && !(key == "c" && std::string(body) == "radii"))
            throw parse_error("chain: unexpected key '" + key + "'");
    }
    if (!j.contains(body) || !j.at(body).is_array() || j.at(body).empty())
        throw parse_error(std::string("chain: '") + body + "' must be a nonempty array");
}

}  // namespace detail

inline FiniteChain parse_finite_chain(const nlohmann::json& j, std::size_t order) {
    detail::check_chain_keys(j, "sets");
    FiniteChain chain{parse_flavor(j), {}};
    for (const auto& s : j.at("sets")) {
        if (!s.is_array()) throw parse_error("chain: each set must be an array of indices");
        ElementSet set(order);
        for (const auto& v : s) {
            if (!detail::is_index(v)) throw parse_error("chain: set entries must be nonnegative integers");
            const auto x = v.get<std::size_t>();
            if (x >= order) throw parse_error("chain: index " + std::to_string(x) + " is outside the model");
            set.insert(x);
        }
        chain.sets.push_back(std::move(set));
    }
    return chain;
}

inline RadialChain parse_radial_chain(const nlohmann::json& j) {
    detail::check_chain_keys(j, "radii");
    RadialChain chain{parse_flavor(j), 1.0, {}};
    if (j.contains("c")) {
        if (!j.at("c").is_number()) throw parse_error("chain: 'c' must be a number");
        chain.c = j.at("c").get<double>();
    }
    for (const auto& v : j.at("radii")) {
        if (!v.is_number()) throw parse_error("chain: radii must be numbers");
        chain.radii.push_back(v.get<double>());
    }
    return chain;
}

inline nlohmann::json chain_to_json(const FiniteChain& c) {
    auto sets = nlohmann::json::array();
    for (const auto& s : c.sets) sets.push_back(s.elements());
    return {{"flavor", to_string(c.flavor)}, {"sets", sets}};
}

inline nlohmann::json chain_to_json(const RadialChain& c) {
    return {{"flavor", to_string(c.flavor)}, {"c", c.c}, {"radii", c.radii}};
}

/// One JSON object per line, each check merged with the shared `context`
/// (model, seed, ...). Checks are written in the order given.
template <typename E>
void write_jsonl(std::ostream& out, const std::vector<CheckResult<E>>& checks, const nlohmann::json& context) {
    for (const auto& c : checks) {
        nlohmann::json line = context;
        line.update(to_json(c));
        out << line.dump() << '\n';
    }
}

}  // namespace gyro
