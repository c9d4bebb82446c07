#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nihdl/diagnostic.hpp"
#include "nihdl/model.hpp"
#include "nihdl/taxonomy.hpp"

namespace nihdl {

/// Where the blocks of one parsed method start. Used to attach locations to
/// validation diagnostics.
struct MethodLocations {
  SourceLocation method;
  SourceLocation pattern;
  std::optional<SourceLocation> scenario;
  SourceLocation carrier;
  SourceLocation sender;
  SourceLocation receiver;
  SourceLocation channel;
  SourceLocation directness;
  std::array<SourceLocation, 4> metrics;  // indexed by Metric
  SourceLocation countermeasures;
  std::vector<SourceLocation> entries;  // parallel to countermeasures
  std::optional<SourceLocation> warden;
};

struct Document {
  std::vector<MethodDescription> methods;
  std::string source_file;
  /// Parallel to `methods` for parsed documents; empty for constructed ones.
  std::vector<MethodLocations> locations;

  const MethodLocations* locations_for(std::size_t method_index) const {
    return method_index < locations.size() ? &locations[method_index] : nullptr;
  }
};

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

/// Parses a .nihd description file. Never throws on malformed input; on any
/// error-severity finding `value` is empty and `diagnostics` explains why.
ParseResult<Document> parse_description(std::string_view text,
                                        std::string file_name);

/// Parses a .nihc catalog file.
ParseResult<PatternCatalog> parse_catalog(std::string_view text,
                                          std::string file_name);

/// Canonical text of `doc` (normalized, fixed key order, 2-space indent,
/// LF endings, blank line between methods). Empty for an empty document.
std::string serialize(const Document& doc);
std::string serialize(const MethodDescription& method);

std::string serialize_catalog(const PatternCatalog& catalog);

/// Double-quoted with `\"` and `\\` escapes.
std::string quote(std::string_view text);

}  // namespace nihdl
