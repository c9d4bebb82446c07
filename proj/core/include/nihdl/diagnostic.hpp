#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nihdl {

/// Position inside a source file. Line and column are 1-based; the column
/// counts Unicode code points, not bytes.
struct SourceLocation {
  std::string file;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
  friend auto operator<=>(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { Error, Warning, Info };

/// A coded finding. The first letter of `code` fixes the severity:
/// E### errors, W### warnings, I### informational notes.
struct Diagnostic {
  std::string code;
  Severity severity = Severity::Error;
  std::string message;
  std::optional<SourceLocation> location;
  std::optional<std::string> method_name;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Builds a diagnostic whose severity is derived from the code prefix.
Diagnostic make_diagnostic(std::string code, std::string message,
                           std::optional<SourceLocation> location = std::nullopt,
                           std::optional<std::string> method_name = std::nullopt);

Severity severity_for_code(std::string_view code);
std::string_view to_string(Severity severity);

/// `FILE:LINE:COL: CODE SEVERITY [method] message`. Diagnostics without a
/// location print `-` in place of the file position.
std::string format_diagnostic(const Diagnostic& diagnostic);

bool has_errors(std::span<const Diagnostic> diagnostics);

/// Orders by code, then by location (diagnostics without a location last).
/// Stable, so equal keys keep their production order.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

}  // namespace nihdl
