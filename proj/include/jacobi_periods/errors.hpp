#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Bad command line input or an unknown name.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raw data that does not describe an element of the requested set.
class InvalidElementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a mathematical function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical result cannot be certified with the requested tolerance.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, long required_qmax = -1)
        : std::runtime_error(what), required_qmax_(required_qmax) {}
    long required_qmax() const { return required_qmax_; }

private:
    long required_qmax_;
};

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace jacobi
