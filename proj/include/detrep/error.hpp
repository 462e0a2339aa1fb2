#pragma once

#include <stdexcept>
#include <string>

namespace detrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text could not be parsed; position is a byte offset into the input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace detrep
