#pragma once

#include <stdexcept>
#include <string>

namespace ppb {

// Degree or index above a compile-time capacity limit.
struct capacity_error : std::domain_error {
    explicit capacity_error(const std::string& what) : std::domain_error(what) {}
};

// A numerical procedure failed to converge or produced non-finite values.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ppb
