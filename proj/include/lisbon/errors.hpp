#pragma once

#include <stdexcept>
#include <string>

namespace lisbon {

struct MismatchedArity : std::invalid_argument {
    explicit MismatchedArity(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureNoConvergence : std::runtime_error {
    explicit QuadratureNoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateRoots : std::runtime_error {
    explicit DegenerateRoots(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lisbon
