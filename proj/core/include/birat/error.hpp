#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string token, std::size_t position)
        : Error(what), token_(std::move(token)), position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

class NotBirational : public Error {
public:
    NotBirational(const std::string& what, std::string clause)
        : Error(what), clause_(std::move(clause)) {}
    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

class DegenerateComposition : public Error {
public:
    using Error::Error;
};

class InconclusiveFit : public Error {
public:
    using Error::Error;
};

class UnsupportedCase : public Error {
public:
    using Error::Error;
};

class OutOfScope : public Error {
public:
    using Error::Error;
};

} // namespace birat
