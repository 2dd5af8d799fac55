#pragma once

#include <stdexcept>
#include <string>

namespace twomain {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an order exceeds a configured cap (canonicalization, enumeration).
class OrderTooLarge : public Error {
public:
    OrderTooLarge(int order, int cap)
        : Error("order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          order_(order), cap_(cap) {}
    int order() const noexcept { return order_; }
    int cap() const noexcept { return cap_; }

private:
    int order_;
    int cap_;
};

class OrderTooSmall : public Error {
public:
    using Error::Error;
};

class NotUnicyclic : public Error {
public:
    using Error::Error;
};

class NotAdjacent : public Error {
public:
    using Error::Error;
};

/// Family parameters outside their admissible domain; the message names the constraint.
class BadParameters : public Error {
public:
    using Error::Error;
};

class UnknownTag : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NoTypeMatches : public Error {
public:
    using Error::Error;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    int line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    int line_;
    std::string reason_;
};

}  // namespace twomain
