#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace knotlike {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  enum class Kind {
    DuplicateGenerator,
    UnknownGenerator,
    DuplicateEntry,
    DegreeViolation,
    DSquaredNonzero,
    InvalidMonomial,
  };

  ValidationError(Kind kind, std::string detail, std::optional<int> line = std::nullopt);

  Kind kind() const { return kind_; }
  const std::optional<int>& line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::string detail_;
  std::optional<int> line_;
};

const char* to_string(ValidationError::Kind kind);

class NotReducedError : public Error {
 public:
  using Error::Error;
};

class MultipleTowersError : public Error {
 public:
  MultipleTowersError(const std::string& side, std::size_t count);
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

class NotKnotLikeError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class NotStaircaseError : public Error {
 public:
  using Error::Error;
};

class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the text grammars. `line` and `column` are 1-based;
/// `line` is 1 for single-line inputs such as knot expressions.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when a mathematical guarantee the algorithms rely on is observed
/// to fail. Seeing one means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The greedy representative search ran past its length cap.
class LengthCapExceededError : public InternalError {
 public:
  using InternalError::InternalError;
};

/// A computed representative failed the two-sided local map check.
class VerificationFailedError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace knotlike
