#pragma once

#include <stdexcept>
#include <string>

namespace simpset {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind))
    {
    }
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error("invalid-argument", w) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("dimension-mismatch", w) {}
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& w) : Error("unknown-generator", w) {}
};

struct InvalidPresentation : Error {
    explicit InvalidPresentation(const std::string& w) : Error("invalid-presentation", w) {}
};

/// Property C is only defined here for inputs with Property B.
struct NotNonsingular : Error {
    explicit NotNonsingular(const std::string& w) : Error("not-nonsingular", w) {}
};

struct NotInSSetUn : Error {
    explicit NotInSSetUn(const std::string& w) : Error("not-in-sset-un", w) {}
};

struct UnsupportedSingularity : Error {
    explicit UnsupportedSingularity(const std::string& w) : Error("unsupported-singularity", w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("budget-exceeded", w) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& w) : Error("precondition", w) {}
};

struct InvalidOsc : Error {
    explicit InvalidOsc(const std::string& w) : Error("invalid-osc", w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse", w) {}
};

/// A library invariant failed; always a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error("internal", w) {}
};

}  // namespace simpset
