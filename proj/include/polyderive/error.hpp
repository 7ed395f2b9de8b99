#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyderive {

/// Base for every failure raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two quadratic-extension values with different radicands met in one operation.
class radicand_mismatch : public error {
 public:
  using error::error;
};

/// Division by an exact zero, a zero denominator, or a degenerate a^2 - b^2 d.
class zero_division : public error {
 public:
  using error::error;
};

/// A caller violated an operation's precondition (bad index, wrong size, ...).
class precondition_error : public error {
 public:
  using error::error;
};

enum class degeneracy { collinear_pair, coplanar_triple };

inline const char* to_string(degeneracy kind) {
  return kind == degeneracy::collinear_pair ? "collinear_pair" : "coplanar_triple";
}

/// Consecutive edges are collinear or a consecutive triple is coplanar.
/// `index` is 1-based, matching the reports.
class non_generic : public error {
 public:
  non_generic(std::size_t index, degeneracy kind, const std::string& what)
      : error(what), index_(index), kind_(kind) {}

  std::size_t index() const noexcept { return index_; }
  degeneracy kind() const noexcept { return kind_; }

 private:
  std::size_t index_;
  degeneracy kind_;
};

class not_regular : public error {
 public:
  using error::error;
};

/// Malformed input text; `line` is 1-based, 0 when unknown.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
      : error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A rejection sampler gave up.
class budget_exhausted : public error {
 public:
  using error::error;
};

}  // namespace polyderive
