#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadric {

// Every error raised by the library derives from Error. The two intermediate
// classes decide the CLI exit code: MathDomainError -> 3, InternalError -> 4,
// anything else (bad input) -> 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MathDomainError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("no image or slot for variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DegreeCapExceeded : public Error {
public:
    DegreeCapExceeded(int degree, int cap)
        : Error("degree " + std::to_string(degree) + " exceeds the degree cap " +
                std::to_string(cap)) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RankError : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownGenerator : public Error {
public:
    UnknownGenerator(const std::string& name, std::size_t position)
        : Error("unknown generator '" + name + "' at position " + std::to_string(position)),
          name_(name), position_(position) {}
    const std::string& name() const noexcept { return name_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string name_;
    std::size_t position_;
};

class NotInImage : public MathDomainError {
public:
    using MathDomainError::MathDomainError;
};

class UnsupportedRank : public MathDomainError {
public:
    using MathDomainError::MathDomainError;
};

class InternalInvariantViolation : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace quadric
