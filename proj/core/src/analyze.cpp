#include "nihdl/analyze.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nihdl {

namespace {

std::int64_t score(Presence p) {
  switch (p) {
    case Presence::Full: return 2;
    case Presence::Partial: return 1;
    case Presence::Absent: return 0;
  }
  return 0;
}

void count_into(CoverageTable& table, const MethodDescription& method) {
  ++table.total;
  for (auto attribute : kTrackedAttributes) {
    auto& counts = table.attributes[static_cast<std::size_t>(attribute)];
    switch (attribute_presence(method, attribute).presence) {
      case Presence::Full: ++counts.full; break;
      case Presence::Partial: ++counts.partial; break;
      case Presence::Absent: ++counts.absent; break;
    }
  }
}

const std::optional<SharedGroup>* shared_of(const MethodDescription& m, SharedFacet facet) {
  switch (facet) {
    case SharedFacet::ApplicationScenario:
      return m.scenario ? &m.scenario->shared : nullptr;
    case SharedFacet::CarrierRequirements:
      return &m.carrier.shared;
    case SharedFacet::Bandwidth:
      return m.channel.bandwidth ? &m.channel.bandwidth->shared : nullptr;
    case SharedFacet::Undetectability:
      return m.channel.undetectability ? &m.channel.undetectability->shared : nullptr;
    case SharedFacet::Robustness:
      return m.channel.robustness ? &m.channel.robustness->shared : nullptr;
    case SharedFacet::Cost:
      return m.channel.cost ? &m.channel.cost->shared : nullptr;
  }
  return nullptr;
}

constexpr std::array<SharedFacet, 6> kSharedFacets = {
    SharedFacet::ApplicationScenario, SharedFacet::CarrierRequirements, SharedFacet::Bandwidth,
    SharedFacet::Undetectability,     SharedFacet::Robustness,          SharedFacet::Cost};

std::optional<Attribute> tracked(CompareColumn column) {
  switch (column) {
    case CompareColumn::ApplicationScenario: return Attribute::ApplicationScenario;
    case CompareColumn::CarrierRequirements: return Attribute::CarrierRequirements;
    case CompareColumn::Countermeasures: return Attribute::Countermeasures;
    case CompareColumn::Bandwidth: return Attribute::Bandwidth;
    case CompareColumn::Robustness: return Attribute::Robustness;
    case CompareColumn::ControlProtocol: return Attribute::ControlProtocol;
    case CompareColumn::Relation:
    case CompareColumn::Directness:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string_view presence_cell(Presence p) {
  switch (p) {
    case Presence::Full: return "Yes";
    case Presence::Partial: return "Par";
    case Presence::Absent: return "No";
  }
  return "No";
}

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

constexpr std::array<CompareColumn, 8> kCompareColumns = {
    CompareColumn::ApplicationScenario, CompareColumn::CarrierRequirements,
    CompareColumn::Countermeasures,     CompareColumn::Bandwidth,
    CompareColumn::Robustness,          CompareColumn::ControlProtocol,
    CompareColumn::Relation,            CompareColumn::Directness};

}  // namespace

// --- Fraction -------------------------------------------------------------

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) {
    throw std::invalid_argument("Fraction requires numerator >= 0 and denominator > 0");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string format_decimal(const Fraction& value, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = value.numerator() * scale;
  const std::int64_t rounded = (2 * scaled + value.denominator()) / (2 * value.denominator());
  std::string out = std::to_string(rounded / scale);
  if (digits > 0) {
    std::string frac = std::to_string(rounded % scale);
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string format_percent(const Fraction& value) {
  return format_decimal(Fraction(value.numerator() * 100, value.denominator()), 1);
}

// --- coverage -------------------------------------------------------------

CoverageVector completeness(const MethodDescription& description) {
  CoverageVector v;
  std::int64_t points = 0;
  for (auto attribute : kTrackedAttributes) {
    auto presence = attribute_presence(description, attribute);
    points += score(presence.presence);
    v.values[static_cast<std::size_t>(attribute)] = std::move(presence);
  }
  v.aggregate = Fraction(points, 2 * static_cast<std::int64_t>(kTrackedAttributes.size()));
  return v;
}

std::optional<Fraction> AttributeCounts::covered() const {
  if (total() == 0) return std::nullopt;
  return Fraction(static_cast<std::int64_t>(full + partial), static_cast<std::int64_t>(total()));
}

CoverageTable coverage_table(std::span<const MethodDescription> corpus) {
  CoverageTable table;
  for (const auto& method : corpus) count_into(table, method);
  return table;
}

std::vector<YearRow> stats_by_year(std::span<const MethodDescription> corpus) {
  std::map<int, CoverageTable> years;
  std::optional<CoverageTable> unknown;
  for (const auto& method : corpus) {
    if (method.year) {
      count_into(years[*method.year], method);
    } else {
      if (!unknown) unknown.emplace();
      count_into(*unknown, method);
    }
  }
  std::vector<YearRow> rows;
  for (auto& [year, table] : years) rows.push_back({year, table});
  if (unknown) rows.push_back({std::nullopt, *unknown});
  return rows;
}

std::size_t PatternHistogram::leaf_total() const {
  std::size_t n = 0;
  for (const auto& [path, count] : leaves) n += count;
  return n;
}

PatternHistogram pattern_histogram(std::span<const MethodDescription> corpus,
                                   const PatternCatalog& catalog) {
  PatternHistogram h;
  std::map<PatternPath, std::size_t> counts;
  for (const auto& method : corpus) {
    const auto& path = method.pattern.path;
    if (path.is_unassigned()) {
      ++h.unassigned;
      continue;
    }
    if (path.empty()) {
      ++h.unresolved;
      h.diagnostics.push_back(
          make_diagnostic("E110", "pattern path is empty", std::nullopt, method.name));
      continue;
    }
    const Resolution r = resolve_path(catalog, path);
    if (r.is_leaf()) {
      ++counts[path];
    } else {
      ++h.unresolved;
      h.diagnostics.push_back(
          r.kind == ResolutionKind::NotFound
              ? make_diagnostic("E110", "pattern path '" + path.to_string() + "' not found in catalog",
                                std::nullopt, method.name)
              : make_diagnostic("E111",
                                "pattern path '" + path.to_string() + "' ends at an internal node",
                                std::nullopt, method.name));
    }
  }
  for (auto& leaf : list_leaves(catalog)) {
    auto it = counts.find(leaf);
    if (it != counts.end()) h.leaves.emplace_back(std::move(leaf), it->second);
  }
  return h;
}

CorpusStats corpus_stats(std::span<const MethodDescription> corpus, const PatternCatalog& catalog) {
  return CorpusStats{coverage_table(corpus), stats_by_year(corpus),
                     pattern_histogram(corpus, catalog)};
}

// --- per-publication reports ---------------------------------------------

std::string_view keyword(SharedFacet facet) {
  switch (facet) {
    case SharedFacet::ApplicationScenario: return "application-scenario";
    case SharedFacet::CarrierRequirements: return "carrier-requirements";
    case SharedFacet::Bandwidth: return "bandwidth";
    case SharedFacet::Undetectability: return "undetectability";
    case SharedFacet::Robustness: return "robustness";
    case SharedFacet::Cost: return "cost";
  }
  return "?";
}

std::vector<CombinedGroup> combined_groups(std::span<const MethodDescription> corpus) {
  struct Accumulator {
    CombinedGroup group;
    std::array<std::size_t, kSharedFacets.size()> carriers{};
  };
  std::vector<Accumulator> groups;
  auto find_group = [&](const std::string& source, const std::string& label) -> Accumulator& {
    for (auto& acc : groups) {
      if (acc.group.source == source && acc.group.label == label) return acc;
    }
    groups.push_back(Accumulator{CombinedGroup{source, label, {}, {}, false}, {}});
    return groups.back();
  };

  for (const auto& method : corpus) {
    if (!method.source) continue;
    for (std::size_t f = 0; f < kSharedFacets.size(); ++f) {
      const auto* shared = shared_of(method, kSharedFacets[f]);
      if (shared == nullptr || !shared->has_value()) continue;
      auto& acc = find_group(*method.source, (*shared)->label);
      ++acc.carriers[f];
      auto& members = acc.group.members;
      if (std::find(members.begin(), members.end(), method.name) == members.end()) {
        members.push_back(method.name);
      }
    }
  }

  std::vector<CombinedGroup> out;
  for (auto& acc : groups) {
    for (std::size_t f = 0; f < kSharedFacets.size(); ++f) {
      if (acc.carriers[f] >= 2) acc.group.shared_facets.push_back(kSharedFacets[f]);
    }
    acc.group.single_member = acc.group.members.size() == 1;
    out.push_back(std::move(acc.group));
  }
  return out;
}

std::vector<Inconsistency> inconsistency_report(std::span<const MethodDescription> corpus) {
  std::vector<std::string> sources;
  for (const auto& method : corpus) {
    if (method.source &&
        std::find(sources.begin(), sources.end(), *method.source) == sources.end()) {
      sources.push_back(*method.source);
    }
  }

  std::vector<Inconsistency> out;
  for (const auto& source : sources) {
    std::vector<const MethodDescription*> members;
    for (const auto& method : corpus) {
      if (method.source == source) members.push_back(&method);
    }
    if (members.size() < 2) continue;
    for (auto attribute : kTrackedAttributes) {
      Inconsistency row{source, attribute, {}};
      bool differs = false;
      for (const auto* m : members) {
        const Presence p = attribute_presence(*m, attribute).presence;
        if (!row.values.empty() && row.values.front().second != p) differs = true;
        row.values.emplace_back(m->name, p);
      }
      if (differs) out.push_back(std::move(row));
    }
  }
  return out;
}

// --- comparison matrix ----------------------------------------------------

std::string_view keyword(CompareColumn column) {
  if (auto attribute = tracked(column)) return keyword(*attribute);
  return column == CompareColumn::Relation ? "relation" : "directness";
}

std::optional<CompareColumn> parse_compare_column(std::string_view name) {
  for (auto column : kCompareColumns) {
    if (keyword(column) == name) return column;
  }
  return std::nullopt;
}

namespace {

std::optional<SharedGroup> column_group(const MethodDescription& m, CompareColumn column) {
  if (auto attribute = tracked(column)) return attribute_presence(m, *attribute).shared;
  return std::nullopt;
}

}  // namespace

std::string matrix_cell(const MethodDescription& method, CompareColumn column) {
  if (auto attribute = tracked(column)) {
    const auto presence = attribute_presence(method, *attribute);
    std::string cell(presence_cell(presence.presence));
    if (presence.shared) cell += ",combined";
    return cell;
  }
  if (column == CompareColumn::Relation) {
    return method.sender.relation == Relation::Unspecified ? "No" : "Yes";
  }
  const auto& d = method.channel.directness;
  if (d.kind == DirectnessKind::Unspecified) return "No";
  if (d.kind == DirectnessKind::Indirect && blank(d.intermediary_requirements)) return "Par";
  return "Yes";
}

ComparisonMatrix comparison_matrix(std::span<const MethodDescription> methods,
                                   std::span<const CompareColumn> columns, MatrixOptions options) {
  ComparisonMatrix matrix;
  matrix.header.push_back("method");
  for (auto column : columns) matrix.header.emplace_back(keyword(column));

  for (std::size_t i = 0; i < methods.size(); ++i) {
    const auto& method = methods[i];
    std::vector<std::string> row{method.name};
    for (auto column : columns) {
      bool collapsed = false;
      if (options.collapse_combined && method.source) {
        if (auto group = column_group(method, column)) {
          for (std::size_t j = 0; j < i && !collapsed; ++j) {
            collapsed = methods[j].source == method.source && column_group(methods[j], column) == group;
          }
        }
      }
      row.push_back(collapsed ? std::string() : matrix_cell(method, column));
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

ComparisonMatrix comparison_matrix(std::span<const MethodDescription> methods,
                                   std::span<const std::string> columns, MatrixOptions options) {
  std::vector<CompareColumn> parsed;
  for (const auto& name : columns) {
    auto column = parse_compare_column(name);
    if (!column) throw UnknownAttributeError(name);
    parsed.push_back(*column);
  }
  return comparison_matrix(methods, std::span<const CompareColumn>(parsed), options);
}

}  // namespace nihdl
