#ifndef CHROMA_ERRORS_HPP
#define CHROMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chroma {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedLabel : Error {
    explicit MalformedLabel(const std::string& msg) : Error(msg) {}
};

// Two labels of the same color in one simplex, or non color-disjoint joins.
struct ColorClash : Error {
    explicit ColorClash(const std::string& msg) : Error(msg) {}
};

struct VertexNotFound : Error {
    explicit VertexNotFound(const std::string& msg) : Error(msg) {}
};

struct NotPure : Error {
    explicit NotPure(const std::string& msg) : Error(msg) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

struct InvalidSchedule : Error {
    explicit InvalidSchedule(const std::string& msg) : Error(msg) {}
};

struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& msg) : Error(msg) {}
};

struct DecisionMapUndefined : Error {
    explicit DecisionMapUndefined(const std::string& msg) : Error(msg) {}
};

// A (stage, vertex) pair missing from a specialization table: stale table.
struct TableMiss : Error {
    explicit TableMiss(const std::string& msg) : Error(msg) {}
};

// Paired generic/optimized runs disagreed on an output.
struct OutputMismatch : Error {
    explicit OutputMismatch(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace chroma

#endif
