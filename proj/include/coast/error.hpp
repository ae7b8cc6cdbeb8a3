#pragma once

#include <stdexcept>
#include <string>

namespace coast {

// Internal failure (bad state, numerical breakdown). CLI maps this to exit 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input (files, config, malformed data). CLI maps this to exit 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace coast
