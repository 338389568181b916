#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

/// Invalid argument to an operation (bad dimension, bad flag combination, ...).
/// Maps to CLI exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration/exact-arithmetic budget was exceeded. Maps to CLI exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation's contract (e.g. non-Hermitian input to the
/// Hermitian eigensolver).
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

/// An iterative numerical method failed to converge within its cap.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rmt
