#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zerosurf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Undefined arithmetic during field evaluation (sqrt of a negative,
/// division by zero, zero base with negative exponent).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SyntaxError : Error {
    explicit SyntaxError(const std::string& msg) : Error(msg) {}
};

struct UnknownIdentifier : Error {
    explicit UnknownIdentifier(const std::string& msg) : Error(msg) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// |grad u| fell below the configured floor where a direction was required.
struct DegenerateGradient : Error {
    int vertex_id;
    explicit DegenerateGradient(int vertex, const std::string& msg)
        : Error(msg), vertex_id(vertex) {}
};

/// Bisection found no sign change over the (widened) bracket.
struct NoBracket : Error {
    int vertex_id;
    explicit NoBracket(const std::string& msg, int vertex = -1)
        : Error(msg), vertex_id(vertex) {}
};

struct SolveFailed : Error {
    std::vector<int> vertex_ids;
    SolveFailed(std::vector<int> ids, const std::string& msg)
        : Error(msg), vertex_ids(std::move(ids)) {}
};

struct AsymmetricDensity : Error {
    explicit AsymmetricDensity(const std::string& msg) : Error(msg) {}
};

struct NodeMismatch : Error {
    explicit NodeMismatch(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace zerosurf
