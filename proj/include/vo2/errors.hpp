#pragma once

#include <stdexcept>
#include <string>

namespace vo2 {

// Raised for malformed or inconsistent configuration (bad document syntax,
// unknown keys, invariant violations). The message names the offending key.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an output destination cannot be opened or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace vo2
