#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/finite_table.hpp"

namespace gyro {

/// A subset of a finite carrier {0, .., n-1}, stored as a bitset.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
    ElementSet(std::size_t universe, std::initializer_list<std::size_t> elems) : ElementSet(universe) {
        for (auto e : elems) insert(e);
    }
    ElementSet(std::size_t universe, const std::vector<std::size_t>& elems) : ElementSet(universe) {
        for (auto e : elems) insert(e);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        std::fill(s.bits_.begin(), s.bits_.end(), true);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    bool contains(std::size_t e) const { return e < bits_.size() && bits_[e]; }

    void insert(std::size_t e) {
        if (e >= bits_.size())
            throw carrier_error("element " + std::to_string(e) + " outside universe of size " +
                                std::to_string(bits_.size()));
        bits_[e] = true;
    }
    void erase(std::size_t e) {
        if (e < bits_.size()) bits_[e] = false;
    }

    std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
    bool empty() const { return size() == 0; }

    /// Elements in increasing order.
    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(i);
        return out;
    }

    bool subset_of(const ElementSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.contains(i)) return false;
        return true;
    }

    /// First element of *this missing from `other`, or universe() if none.
    std::size_t first_outside(const ElementSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] && !other.contains(i)) return i;
        return bits_.size();
    }

    ElementSet intersect(const ElementSet& other) const {
        ElementSet out(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && other.contains(i);
        return out;
    }

    ElementSet unite(const ElementSet& other) const {
        ElementSet out(*this);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] || other.contains(i);
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

private:
    std::vector<bool> bits_;
};

/// A ⊕ B = {a ⊕ b : a ∈ A, b ∈ B}.
inline ElementSet set_add(const FiniteTable& g, const ElementSet& a, const ElementSet& b) {
    ElementSet out(g.order());
    for (auto x : a.elements())
        for (auto y : b.elements()) out.insert(g.add(x, y));
    return out;
}

/// a ⊕ B.
inline ElementSet translate(const FiniteTable& g, std::size_t a, const ElementSet& b) {
    ElementSet out(g.order());
    for (auto y : b.elements()) out.insert(g.add(a, y));
    return out;
}

/// ⊖A.
inline ElementSet negate_set(const FiniteTable& g, const ElementSet& a) {
    ElementSet out(g.order());
    for (auto x : a.elements()) out.insert(g.negate(x));
    return out;
}

inline bool is_symmetric(const FiniteTable& g, const ElementSet& a) { return negate_set(g, a) == a; }

}  // namespace gyro
