#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covtype {

enum class ErrorKind {
    malformed_input,
    not_found,
    precondition,
    property_a_violation,
    inconsistency,
    domain,
    parse,
    unsupported_triangulation,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. Each error carries a kind so
/// callers (the CLI in particular) can map failures onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class MalformedInputError : public Error {
public:
    explicit MalformedInputError(const std::string& what) : Error(ErrorKind::malformed_input, what) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& what) : Error(ErrorKind::not_found, what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// A move would need a path around a maximal edge; impossible when the
/// cohomology ring has property A.
class PropertyAViolation : public Error {
public:
    explicit PropertyAViolation(const std::string& what)
        : Error(ErrorKind::property_a_violation, what) {}
};

class InconsistencyError : public Error {
public:
    explicit InconsistencyError(const std::string& what) : Error(ErrorKind::inconsistency, what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedTriangulationError : public Error {
public:
    explicit UnsupportedTriangulationError(const std::string& what)
        : Error(ErrorKind::unsupported_triangulation, what) {}
};

/// Error raised inside one stage of the reduction pipeline, re-tagged with
/// the stage name. kind() reports the kind of the original failure.
class StageError : public Error {
public:
    StageError(std::string stage, const Error& inner)
        : Error(inner.kind(), "[" + stage + "] " + inner.what()), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace covtype
