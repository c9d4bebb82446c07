#include "nihdl/diagnostic.hpp"

#include <algorithm>

namespace nihdl {

Severity severity_for_code(std::string_view code) {
  if (!code.empty() && code.front() == 'W') return Severity::Warning;
  if (!code.empty() && code.front() == 'I') return Severity::Info;
  return Severity::Error;
}

Diagnostic make_diagnostic(std::string code, std::string message,
                           std::optional<SourceLocation> location,
                           std::optional<std::string> method_name) {
  Diagnostic d;
  d.severity = severity_for_code(code);
  d.code = std::move(code);
  d.message = std::move(message);
  d.location = std::move(location);
  d.method_name = std::move(method_name);
  return d;
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "error";
}

std::string format_diagnostic(const Diagnostic& diagnostic) {
  std::string out;
  if (diagnostic.location) {
    const auto& loc = *diagnostic.location;
    out += loc.file.empty() ? std::string("-") : loc.file;
    out += ':' + std::to_string(loc.line) + ':' + std::to_string(loc.column);
  } else {
    out += '-';
  }
  out += ": ";
  out += diagnostic.code;
  out += ' ';
  out += to_string(diagnostic.severity);
  if (diagnostic.method_name) {
    out += " [" + *diagnostic.method_name + "]";
  }
  out += ' ';
  out += diagnostic.message;
  return out;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.code != b.code) return a.code < b.code;
                     if (a.location.has_value() != b.location.has_value()) {
                       return a.location.has_value();
                     }
                     if (!a.location) return false;
                     if (a.location->line != b.location->line) {
                       return a.location->line < b.location->line;
                     }
                     return a.location->column < b.location->column;
                   });
}

}  // namespace nihdl
