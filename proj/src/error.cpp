#include "knotlike/error.hpp"

namespace knotlike {

namespace {

std::string format_validation(ValidationError::Kind kind, const std::string& detail,
                              const std::optional<int>& line) {
  std::string out = to_string(kind);
  if (line) out += " at line " + std::to_string(*line);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

ValidationError::ValidationError(Kind kind, std::string detail, std::optional<int> line)
    : Error(format_validation(kind, detail, line)),
      kind_(kind),
      detail_(std::move(detail)),
      line_(line) {}

const char* to_string(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::DuplicateGenerator: return "DuplicateGenerator";
    case ValidationError::Kind::UnknownGenerator: return "UnknownGenerator";
    case ValidationError::Kind::DuplicateEntry: return "DuplicateEntry";
    case ValidationError::Kind::DegreeViolation: return "DegreeViolation";
    case ValidationError::Kind::DSquaredNonzero: return "DSquaredNonzero";
    case ValidationError::Kind::InvalidMonomial: return "InvalidMonomial";
  }
  return "ValidationError";
}

MultipleTowersError::MultipleTowersError(const std::string& side, std::size_t count)
    : Error("MultipleTowers(" + std::to_string(count) + ") in " + side + " homology"),
      count_(count) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("syntax error at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace knotlike
