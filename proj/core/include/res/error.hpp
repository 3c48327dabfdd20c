#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace res {

struct SourceLocation {
  std::size_t line = 0;    // 1-based, 0 when unknown
  std::size_t column = 0;  // 1-based, 0 when unknown
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller misuse: mixed frames, unknown ids, invalid query operands.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Ill-formed declarations: unknown atoms, empty conclusions, unsatisfiable
// presumptions. `column` is a 1-based offset into the offending text when known.
class DeclarationError : public Error {
 public:
  explicit DeclarationError(const std::string& what, std::size_t column = 0)
      : Error(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// Observations that cannot be conditioned on.
class EvidenceError : public Error {
 public:
  using Error::Error;
};

struct Diagnostic {
  SourceLocation location;
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

// Thrown by the document parser; carries every located error found.
class ParseError : public DeclarationError {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace res
