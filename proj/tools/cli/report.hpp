#pragma once

#include <string>
#include <vector>

#include "nihdl/model.hpp"

namespace nihdl::cli {

/// Human-readable report of one method. Sections follow the order of the
/// description structure; the pattern section is the rendered chain.
std::string render_report(const MethodDescription& method);

/// Reports for several methods separated by a rule line.
std::string render_reports(const std::vector<MethodDescription>& methods);

inline constexpr const char* kRuleLine =
    "------------------------------------------------------------------------";

}  // namespace nihdl::cli
