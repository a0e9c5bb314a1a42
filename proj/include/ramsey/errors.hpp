#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

// violated user-facing precondition: bad parameters, degree hypothesis not met, ...
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// instance is too large for an exhaustive routine; the message names the limit
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// malformed serialized input; offset is the byte at which decoding failed
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// a step that is guaranteed by the underlying combinatorics failed: an
// implementation bug, never a user error
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramsey
