#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

/// An element lies outside the model's carrier (norm >= bound, index out of range).
class carrier_error : public std::domain_error {
public:
    explicit carrier_error(const std::string& what) : std::domain_error(what) {}
};

/// Malformed input: unparsable file, wrong shape, bad index, duplicate label.
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A structural precondition of an algorithm does not hold (e.g. subset is not an
/// L-subgyrogroup, chain violates its containment law).
class precondition_error : public std::logic_error {
public:
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

/// An invariant that the mathematics guarantees was observed to fail at runtime.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gyro
