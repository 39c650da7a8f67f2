#pragma once

#include <stdexcept>
#include <string>

namespace pdfa {

/// Malformed input or violated precondition (bad index, unmet gadget assumption, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A subset or product search exceeded its configured budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent decision procedures disagreed.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pdfa
