#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace moyal {

enum class Errc {
  parse_error,
  non_local_input,
  self_reference,
  floor_too_high,
  bad_lax_shape,
  inconsistent_reduction,
  not_solvable,
  elimination_stuck,
  insufficient_depth,
  infinite_tail,
};

const char* to_string(Errc code);

/// All domain failures are reported through this type; the code tells
/// callers (and the CLI's exit-status logic) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Parse failures carry the byte offset of the offending token and the
/// set of token classes that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected,
             const std::string& message)
      : Error(Errc::parse_error, message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace moyal
