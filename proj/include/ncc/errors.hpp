#pragma once

#include <stdexcept>
#include <string>

namespace ncc {

/// Enumeration or table size would exceed the configured cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Iteration failed to converge, or an internal numerical consistency check tripped.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncc
