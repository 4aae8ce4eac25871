#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gyro/errors.hpp"

namespace gyro {

/**
 * A finite groupoid given by its Cayley table, identity at index 0.
 *
 * Construction only checks the shape (square, indices in range). Whether the
 * table is a gyrogroup is decided by check_axioms; use `load_table` (table_io.hpp)
 * to obtain a validated model.
 */
class FiniteTable {
public:
    using element_type = std::size_t;

    FiniteTable(std::vector<std::vector<std::size_t>> rows, std::vector<std::string> labels = {})
        : n_(rows.size()), labels_(std::move(labels)) {
        if (n_ == 0) throw parse_error("Cayley table must be nonempty");
        table_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (rows[i].size() != n_)
                throw parse_error("Cayley table row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n_));
            for (std::size_t j = 0; j < n_; ++j) {
                if (rows[i][j] >= n_)
                    throw parse_error("Cayley table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") = " + std::to_string(rows[i][j]) + " is out of range");
                table_.push_back(rows[i][j]);
            }
        }
        if (labels_.empty()) {
            for (std::size_t i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
        } else if (labels_.size() != n_) {
            throw parse_error("label count does not match order");
        }
        // Right inverse a ⊕ b = 0; G2 in check_axioms decides whether it is two-sided.
        inverse_.assign(n_, 0);
        for (std::size_t a = 0; a < n_; ++a) {
            for (std::size_t b = 0; b < n_; ++b) {
                if (at(a, b) == 0) {
                    inverse_[a] = b;
                    break;
                }
            }
        }
    }

    std::size_t order() const { return n_; }
    double tolerance() const { return 0.0; }
    element_type identity() const { return 0; }
    bool contains(element_type a) const { return a < n_; }

    element_type add(element_type a, element_type b) const {
        require(a);
        require(b);
        return at(a, b);
    }

    element_type negate(element_type a) const {
        require(a);
        return inverse_[a];
    }

    double residual(element_type a, element_type b) const { return a == b ? 0.0 : 1.0; }

    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::vector<std::size_t>> rows() const {
        std::vector<std::vector<std::size_t>> out(n_, std::vector<std::size_t>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i][j] = at(i, j);
        return out;
    }

    std::string describe() const { return "table(order=" + std::to_string(n_) + ")"; }

private:
    element_type at(element_type a, element_type b) const { return table_[a * n_ + b]; }

    void require(element_type a) const {
        if (a >= n_)
            throw carrier_error("element index " + std::to_string(a) + " out of range for order " + std::to_string(n_));
    }

    std::size_t n_;
    std::vector<std::size_t> table_;
    std::vector<element_type> inverse_;
    std::vector<std::string> labels_;
};

/// ℤ_n under addition mod n.
inline FiniteTable cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    return FiniteTable(std::move(rows));
}

/// Componentwise product of two tables; pair (i, j) has index i·|B| + j.
inline FiniteTable direct_product(const FiniteTable& a, const FiniteTable& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> rows(na * nb, std::vector<std::size_t>(na * nb));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < na * nb; ++i) {
        labels.push_back("(" + a.labels()[i / nb] + "," + b.labels()[i % nb] + ")");
        for (std::size_t j = 0; j < na * nb; ++j)
            rows[i][j] = a.add(i / nb, j / nb) * nb + b.add(i % nb, j % nb);
    }
    return FiniteTable(std::move(rows), std::move(labels));
}

}  // namespace gyro
