#ifndef RBEZ_ERROR_HPP
#define RBEZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rbez {

/// Base of every error thrown by the library. The kind maps one-to-one onto
/// the command-line exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation, Pole, DegreeCap, Domain, Io };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Malformed input text (JSON, scalar literal). Carries an optional 1-based
/// line/column; zero means unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(Kind::Parse, with_position(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string with_position(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
  }
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(Kind::Validation, what) {}
};

/// The curve denominator vanishes (only possible off [0,1]).
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what = "pole") : Error(Kind::Pole, what) {}
};

class DegreeCapError : public Error {
 public:
  explicit DegreeCapError(const std::string& what = "derivative degree overflow; raise cap")
      : Error(Kind::DegreeCap, what) {}
};

/// Precondition violations on operation arguments.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(Kind::Domain, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Kind::Io, what) {}
};

}  // namespace rbez

#endif  // RBEZ_ERROR_HPP
