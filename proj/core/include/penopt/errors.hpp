#pragma once

#include <stdexcept>
#include <string>

namespace penopt {

/// Malformed problem description: dimension mismatch, non-positive budget,
/// out-of-range pen counts, and similar input errors.
class InvalidSpec : public std::invalid_argument {
public:
    explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

/// The grid problem has no finite optimum (some direction is free of cost).
class UnboundedProblem : public std::runtime_error {
public:
    explicit UnboundedProblem(const std::string& what) : std::runtime_error(what) {}
};

/// A witness for an unbounded problem was requested, but every direction
/// carries positive cost, so the optimum is finite.
class NotUnbounded : public std::runtime_error {
public:
    explicit NotUnbounded(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative solver exhausted its iteration budget above tolerance.
class DidNotConverge : public std::runtime_error {
public:
    explicit DidNotConverge(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace penopt
