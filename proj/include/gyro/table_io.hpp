#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gyro/axioms.hpp"
#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"

namespace gyro {

namespace detail {

// Parsed text yields unsigned numbers, but JSON built in code holds signed ones.
inline bool is_index(const nlohmann::json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

}  // namespace detail

/// Raised by load_table when a well-formed table is not a gyrogroup. Carries
/// the exhaustive report, whose failed checks hold the witnesses.
class axiom_failure : public std::runtime_error {
public:
    explicit axiom_failure(AxiomReport<std::size_t> report)
        : std::runtime_error(summarize(report)), report_(std::move(report)) {}

    const AxiomReport<std::size_t>& report() const { return report_; }

private:
    static std::string summarize(const AxiomReport<std::size_t>& r) {
        std::ostringstream os;
        os << "table is not a gyrogroup:";
        for (const auto& c : r.checks) {
            if (c.pass) continue;
            os << ' ' << c.name;
            if (!c.witnesses.empty()) {
                os << " [";
                for (std::size_t i = 0; i < c.witnesses.front().elements.size(); ++i)
                    os << (i ? "," : "") << c.witnesses.front().elements[i];
                os << ']';
            }
        }
        return os.str();
    }

    AxiomReport<std::size_t> report_;
};

/**
 * Parses `{"order": n, "labels": [...], "table": [[...], ...]}` without
 * validating the axioms. Entries must be unsigned integers; labels, if present,
 * must be distinct strings. Unknown keys are rejected.
 */
inline FiniteTable parse_table(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("Cayley table: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key != "order" && key != "labels" && key != "table") throw parse_error("Cayley table: unknown key '" + key + "'");
    }
    if (!j.contains("order") || !detail::is_index(j.at("order")))
        throw parse_error("Cayley table: 'order' must be a nonnegative integer");
    const auto n = j.at("order").get<std::size_t>();
    if (!j.contains("table") || !j.at("table").is_array()) throw parse_error("Cayley table: 'table' must be an array");
    const auto& t = j.at("table");
    if (t.size() != n) throw parse_error("Cayley table: 'table' has " + std::to_string(t.size()) + " rows, order is " + std::to_string(n));
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array()) throw parse_error("Cayley table: row " + std::to_string(i) + " is not an array");
        std::vector<std::size_t> row;
        for (const auto& v : t[i]) {
            if (!detail::is_index(v)) throw parse_error("Cayley table: row " + std::to_string(i) + " holds a non-index entry");
            row.push_back(v.get<std::size_t>());
        }
        rows.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const auto& l = j.at("labels");
        if (!l.is_array()) throw parse_error("Cayley table: 'labels' must be an array");
        std::set<std::string> seen;
        for (const auto& v : l) {
            if (!v.is_string()) throw parse_error("Cayley table: labels must be strings");
            auto s = v.get<std::string>();
            if (!seen.insert(s).second) throw parse_error("Cayley table: duplicate label '" + s + "'");
            labels.push_back(std::move(s));
        }
    }
    return FiniteTable(std::move(rows), std::move(labels));
}

/// Parses and validates a Cayley table. Throws parse_error on malformed input
/// and axiom_failure when the exhaustive axiom check fails.
inline FiniteTable load_table(const nlohmann::json& j) {
    FiniteTable table = parse_table(j);
    auto report = check_axioms(table);
    if (!report.passed()) throw axiom_failure(std::move(report));
    return table;
}

inline FiniteTable load_table(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("Cayley table: ") + e.what());
    }
    return load_table(j);
}

inline FiniteTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table file '" + path + "'");
    return load_table(in);
}

inline nlohmann::json table_to_json(const FiniteTable& t) {
    return {{"order", t.order()}, {"labels", t.labels()}, {"table", t.rows()}};
}

}  // namespace gyro
