#pragma once

#include <stdexcept>
#include <string>

namespace ktheta {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Weight list violates monotonicity / nonnegativity for its variant.
struct MalformedWeight : Error {
    explicit MalformedWeight(const std::string& msg) : Error(msg) {}
};

// Weight list length disagrees with the stated rank.
struct RankMismatch : Error {
    explicit RankMismatch(const std::string& msg) : Error(msg) {}
};

// A K-type does not match the compact group it is used with.
struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

// The metaplectic cover does not split over the requested member.
struct SplitRequired : Error {
    explicit SplitRequired(const std::string& msg) : Error(msg) {}
};

// Strict type-I semantics requested on a type-II pair.
struct NotTypeI : Error {
    explicit NotTypeI(const std::string& msg) : Error(msg) {}
};

// The degree/parity alignment condition fails for this pair and member.
struct Condition3Violated : Error {
    explicit Condition3Violated(const std::string& msg) : Error(msg) {}
};

// Workload exceeds the configured monomial cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// Kernel dimensions inconsistent with the dimension-sum identity.
// This is a self-check firing; it is never an expected state.
struct InternalRankError : Error {
    explicit InternalRankError(const std::string& msg) : Error(msg) {}
};

// A maximal compact factor outside U/Sp/O was requested from the oracle.
struct UnsupportedMember : Error {
    explicit UnsupportedMember(const std::string& msg) : Error(msg) {}
};

// Unparseable K-type / group / pair text.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace ktheta
