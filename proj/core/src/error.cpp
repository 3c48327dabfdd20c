#include "res/error.hpp"

#include <sstream>

namespace res {

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  if (d.location.line != 0) {
    out << "line " << d.location.line;
    if (d.location.column != 0) out << ", column " << d.location.column;
    out << ": ";
  }
  out << d.message;
  return out.str();
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string text;
  for (const auto& d : diagnostics) {
    if (!text.empty()) text += '\n';
    text += format_diagnostic(d);
  }
  return text;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : DeclarationError(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace res
