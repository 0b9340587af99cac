#pragma once

#include <stdexcept>
#include <string>

namespace sszeta {

// Bad arguments, malformed files, unsupported parameter combinations.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic detected an inconsistency (failed divisibility, failed
// supersingularity bound, identity mismatch). The CLI maps this to exit code 1.
class math_error : public std::runtime_error {
  public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sszeta
