#pragma once

#include <stdexcept>
#include <string>

namespace srrkit {

// Inversion of zero in GF(q).
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// A demand vector outside the service region was handed to a constructive
// allocator that requires membership.
struct InfeasibleDemand : std::runtime_error {
    explicit InfeasibleDemand(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated hypotheses do not hold for the given inputs.
struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

// The query is outside the supported parameter regime (e.g. vertex
// enumeration above dimension 3).
struct UnsupportedQuery : std::runtime_error {
    explicit UnsupportedQuery(const std::string& what) : std::runtime_error(what) {}
};

} // namespace srrkit
