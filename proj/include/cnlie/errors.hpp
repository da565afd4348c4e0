#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnlie {

// Operands belong to Clifford algebras with different ambient generator counts.
struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A graded operation received an element of mixed parity.
struct HomogeneityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Expression or schema parse failure; offset is a byte position into the input.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

}  // namespace cnlie
