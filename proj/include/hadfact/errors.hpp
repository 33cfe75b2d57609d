#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hadfact {

// Domain errors carry a stable machine-readable name used in CLI error
// objects and exit-code mapping.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct InvalidPolynomial : Error {
    explicit InvalidPolynomial(const std::string& w) : Error("InvalidPolynomial", w) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& w) : Error("DegreeMismatch", w) {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& w) : Error("DegreeTooSmall", w) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& w) : Error("BadIndex", w) {}
};

struct NotStable : Error {
    explicit NotStable(const std::string& w) : Error("NotStable", w) {}
};

struct QuotientNotStable : Error {
    explicit QuotientNotStable(const std::string& w) : Error("QuotientNotStable", w) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w) : Error("ConvergenceFailure", w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

// A certified result contradicted a consequence that is provable from the
// certificates; indicates an implementation bug, never a data error.
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& w) : Error("InvariantViolation", w) {}
};

}  // namespace hadfact
