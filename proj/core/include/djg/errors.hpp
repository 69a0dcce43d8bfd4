#pragma once

#include <stdexcept>
#include <string>

namespace djg {

/// Parameters outside the documented domain of an operation.
class DomainError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

/// An instance or enumeration would exceed a configured budget.
class ResourceError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// The input violates a hypothesis that must be established by the caller
/// (for example a subgraph that is required to be C_L-free but is not).
class PreconditionError : public std::logic_error
{
    public:
        using std::logic_error::logic_error;
};

/// A structural claim that holds for every valid input was violated. Seeing
/// this means the implementation is wrong, not the input.
class InternalError : public std::logic_error
{
    public:
        using std::logic_error::logic_error;
};

/// Malformed text in one of the import formats.
class ParseError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

}
