#pragma once

#include <stdexcept>
#include <string>

namespace smale {

/// Malformed text or document input. Everything else the library throws
/// (std::domain_error, std::invalid_argument, std::overflow_error) is a
/// domain error on well-formed input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smale
