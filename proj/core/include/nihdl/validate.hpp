#pragma once

#include <string_view>
#include <vector>

#include "nihdl/diagnostic.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/model.hpp"
#include "nihdl/taxonomy.hpp"

namespace nihdl {

/// Survey tolerates Unspecified values (legacy papers have gaps); Strict is
/// for authors of new methods.
enum class ValidationMode { Survey, Strict };

/// Rule table:
///   E110 path not found          E111 path ends on internal node
///   E112 unassigned, no reason   E120 indirect without intermediary text
///   E130 metric block missing    E140 no elimination / detection entry
///   E141 no limitation entry and no applicable elimination
///   E142 not-applicable entry without justification
///   E210 (Strict) / W210 unspecified value    E211 (Strict) no scenario block
///   W200 path element without justify         W201 special purpose, no text
///   W202 evaluated without limitations        W203 undetectability absent,
///                                                  no detection entry
///   I300 bandwidth value given, robustness absent
/// Results are ordered by code, then location.
std::vector<Diagnostic> validate(const MethodDescription& description,
                                 const PatternCatalog& catalog,
                                 ValidationMode mode,
                                 const MethodLocations* locations = nullptr,
                                 std::string_view file_name = {});

/// Per-method results plus E150 for duplicate method names and E006 when the
/// catalog has no roots.
std::vector<Diagnostic> validate_document(const Document& doc,
                                          const PatternCatalog& catalog,
                                          ValidationMode mode);

/// E006 when `catalog` cannot be used for classification (no roots).
std::vector<Diagnostic> check_catalog_usable(const PatternCatalog& catalog,
                                             std::string_view file_name);

}  // namespace nihdl
