#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace formal {

struct RingMismatch : std::invalid_argument {
  RingMismatch() : std::invalid_argument("operands belong to different rings") {}
};

/// Parse failure; offset is a 0-based byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), message_(message), offset_(offset) {}

  const std::string& message() const { return message_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// A computation was refused because its configured size budget was exceeded.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace formal
