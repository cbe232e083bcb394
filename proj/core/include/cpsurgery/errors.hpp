#pragma once

#include <stdexcept>
#include <string>

namespace cpsurgery {

// Bad input from a caller. The CLI maps this to exit status 1.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact identity that must hold did not. The CLI maps this to exit status 2.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cpsurgery
