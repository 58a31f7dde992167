#pragma once

#include <stdexcept>
#include <string>

namespace filmwave {

/// An input violates a documented domain constraint.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A numerically degenerate configuration or a computation that failed to converge.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A filesystem read/write failure; carries the offending path in the message.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace filmwave
