#pragma once
#include <stdexcept>
#include <string>

namespace hl {

// Instance cannot satisfy the request (f = 0, no Hamilton cycle, ...).
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hl
