#pragma once
#include <stdexcept>
#include <string>

namespace cip {

// Invalid user-supplied data: bad grid sizes, non-finite initial data,
// malformed configs. Maps to exit code 2 in the CLI.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Failure inside a numerical routine: step-size underflow, singular
// interface system, CFL violation. Maps to exit code 3 in the CLI.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cip
