#pragma once

#include <stdexcept>
#include <string>

namespace siltlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& msg) : Error(msg) {}
};

struct CyclicQuiver : Error {
    explicit CyclicQuiver(const std::string& msg) : Error(msg) {}
};

struct RepInfinite : Error {
    explicit RepInfinite(const std::string& msg) : Error(msg) {}
};

struct NotIndecomposable : Error {
    explicit NotIndecomposable(const std::string& msg) : Error(msg) {}
};

struct IsProjective : Error {
    explicit IsProjective(const std::string& msg) : Error(msg) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& msg) : Error(msg) {}
};

struct ApproximationNeitherMonoNorEpi : Error {
    explicit ApproximationNeitherMonoNorEpi(const std::string& msg) : Error(msg) {}
};

struct DecorationUndecidable : Error {
    explicit DecorationUndecidable(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A falsified mathematical invariant: either a bug or a disproved claim.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

struct InvariantViolation : InternalInconsistency {
    explicit InvariantViolation(const std::string& msg) : InternalInconsistency(msg) {}
};

}  // namespace siltlab
