#pragma once

#include <stdexcept>
#include <string>

namespace relaxlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed something the API contract forbids (bad id, bad parameter).
class UsageError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
    int line_;
    int column_;

public:
    ParseError(const std::string &msg, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }
};

class UnsupportedFeature : public Error {
public:
    using Error::Error;
};

class ResourceExhausted : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NoReferencePlan : public Error {
public:
    using Error::Error;
};

class Truncated : public Error {
public:
    using Error::Error;
};

} // namespace relaxlab
