#pragma once

#include <stdexcept>
#include <string>

namespace recon {

// Contract violations surfaced to callers. The CLI maps these onto its
// stable exit codes; library code throws them directly.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DisconnectedInput : Error {
    explicit DisconnectedInput(const std::string& msg = "input graph is not connected") : Error(msg) {}
};

struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string& msg) : Error(msg) {}
};

struct EdgeExists : Error {
    explicit EdgeExists(const std::string& msg) : Error(msg) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(const std::string& msg) : Error(msg) {}
};

struct NoSuchEdge : Error {
    explicit NoSuchEdge(const std::string& msg) : Error(msg) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& msg) : Error(msg) {}
};

struct PartSizeMismatch : Error {
    explicit PartSizeMismatch(const std::string& msg) : Error(msg) {}
};

struct PartDisconnected : Error {
    explicit PartDisconnected(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotAnHEdge : Error {
    explicit NotAnHEdge(const std::string& msg) : Error(msg) {}
};

struct SameLabel : Error {
    explicit SameLabel(const std::string& msg) : Error(msg) {}
};

struct StateSpaceExceeded : Error {
    explicit StateSpaceExceeded(const std::string& msg = "state space budget exceeded") : Error(msg) {}
};

struct HypothesisNotMet : Error {
    explicit HypothesisNotMet(const std::string& msg) : Error(msg) {}
};

struct NotAMinor : Error {
    explicit NotAMinor(const std::string& msg) : Error(msg) {}
};

struct UnknownModel : Error {
    explicit UnknownModel(const std::string& msg) : Error(msg) {}
};

// Planner preconditions carry the name of the violated hypothesis so that
// campaigns can report which one failed on which instance.
struct PreconditionFailed : Error {
    std::string condition;
    PreconditionFailed(const std::string& cond, const std::string& msg)
        : Error(msg), condition(cond) {}
};

struct NotTwoConnected : Error {
    explicit NotTwoConnected(const std::string& msg = "host graph is not 2-connected") : Error(msg) {}
};

struct NotComplete : Error {
    explicit NotComplete(const std::string& msg = "host graph is not complete") : Error(msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotAGeneralizedWheel : Error {
    explicit NotAGeneralizedWheel(const std::string& msg) : Error(msg) {}
};

struct LiftFailed : Error {
    std::size_t step_index;
    LiftFailed(std::size_t idx, const std::string& msg) : Error(msg), step_index(idx) {}
};

struct ReplayError : Error {
    std::size_t step_index;
    ReplayError(std::size_t idx, const std::string& msg) : Error(msg), step_index(idx) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace recon
