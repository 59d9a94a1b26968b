#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Input text could not be parsed. `line` is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

/// A configured search cap was reached before the answer was established.
/// Thrown instead of ever returning a possibly-wrong result.
class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The map sends some vertex outside its own conjugacy class.
class not_vertex_conjugating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace raag
