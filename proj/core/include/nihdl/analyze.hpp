#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nihdl/diagnostic.hpp"
#include "nihdl/model.hpp"
#include "nihdl/taxonomy.hpp"

namespace nihdl {

/// Exact non-negative rational, always stored reduced.
class Fraction {
 public:
  Fraction() = default;
  Fraction(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Rounds half up to `digits` decimals: Fraction(104,131) -> "0.794" (3).
std::string format_decimal(const Fraction& value, int digits);
/// Percentage at one decimal: Fraction(104,131) -> "79.4".
std::string format_percent(const Fraction& value);

/// Per-attribute presence of one method plus the mean score
/// (Full = 1, Partial = 1/2, Absent = 0).
struct CoverageVector {
  std::array<AttributePresence, 6> values;
  Fraction aggregate;

  const AttributePresence& operator[](Attribute attribute) const {
    return values[static_cast<std::size_t>(attribute)];
  }
};

CoverageVector completeness(const MethodDescription& description);

struct AttributeCounts {
  std::size_t full = 0;
  std::size_t partial = 0;
  std::size_t absent = 0;

  std::size_t total() const { return full + partial + absent; }
  /// (full + partial) / total; empty when total is zero.
  std::optional<Fraction> covered() const;

  friend bool operator==(const AttributeCounts&, const AttributeCounts&) = default;
};

struct CoverageTable {
  std::size_t total = 0;
  std::array<AttributeCounts, 6> attributes{};

  const AttributeCounts& operator[](Attribute attribute) const {
    return attributes[static_cast<std::size_t>(attribute)];
  }
  friend bool operator==(const CoverageTable&, const CoverageTable&) = default;
};

CoverageTable coverage_table(std::span<const MethodDescription> corpus);

/// One row per year in ascending order; methods without a year form a final
/// row with an empty key ("unknown").
struct YearRow {
  std::optional<int> year;
  CoverageTable table;
};
std::vector<YearRow> stats_by_year(std::span<const MethodDescription> corpus);

struct PatternHistogram {
  /// Observed leaves in catalog depth-first order.
  std::vector<std::pair<PatternPath, std::size_t>> leaves;
  std::size_t unassigned = 0;
  /// Paths that are not a catalog leaf; each has a diagnostic.
  std::size_t unresolved = 0;
  std::vector<Diagnostic> diagnostics;

  std::size_t leaf_total() const;
};

PatternHistogram pattern_histogram(std::span<const MethodDescription> corpus,
                                   const PatternCatalog& catalog);

struct CorpusStats {
  CoverageTable overall;
  std::vector<YearRow> by_year;
  PatternHistogram histogram;
};

CorpusStats corpus_stats(std::span<const MethodDescription> corpus,
                         const PatternCatalog& catalog);

/// Facets that can carry a shared-with label.
enum class SharedFacet {
  ApplicationScenario,
  CarrierRequirements,
  Bandwidth,
  Undetectability,
  Robustness,
  Cost,
};
std::string_view keyword(SharedFacet facet);

struct CombinedGroup {
  std::string source;
  std::string label;
  std::vector<std::string> members;
  /// Facets where at least two members carry the label.
  std::vector<SharedFacet> shared_facets;
  /// The label occurs on a single method only.
  bool single_member = false;
};

/// Groups by (source, label), in order of first appearance.
std::vector<CombinedGroup> combined_groups(std::span<const MethodDescription> corpus);

struct Inconsistency {
  std::string source;
  Attribute attribute = Attribute::ApplicationScenario;
  std::vector<std::pair<std::string, Presence>> values;  // method -> presence
};

/// For each source with at least two methods, the tracked attributes whose
/// presence differs between them.
std::vector<Inconsistency> inconsistency_report(
    std::span<const MethodDescription> corpus);

/// Columns of a comparison matrix: the tracked attributes plus the two
/// process properties compared in published tables.
enum class CompareColumn {
  ApplicationScenario,
  CarrierRequirements,
  Countermeasures,
  Bandwidth,
  Robustness,
  ControlProtocol,
  Relation,
  Directness,
};
std::string_view keyword(CompareColumn column);
std::optional<CompareColumn> parse_compare_column(std::string_view name);

class UnknownAttributeError : public std::invalid_argument {
 public:
  explicit UnknownAttributeError(const std::string& name)
      : std::invalid_argument("unknown attribute: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct MatrixOptions {
  /// Leave a cell blank when an earlier row of the same source already shows
  /// the same shared label for that column.
  bool collapse_combined = false;
};

struct ComparisonMatrix {
  std::vector<std::string> header;             // "method", then column names
  std::vector<std::vector<std::string>> rows;  // method name, then cells
};

/// "Yes" / "Par" / "No" cell text for one method and column, with a
/// ",combined" suffix when the attribute carries a shared group.
std::string matrix_cell(const MethodDescription& method, CompareColumn column);

ComparisonMatrix comparison_matrix(std::span<const MethodDescription> methods,
                                   std::span<const CompareColumn> columns,
                                   MatrixOptions options = {});

/// Throws UnknownAttributeError for an unrecognized name.
ComparisonMatrix comparison_matrix(std::span<const MethodDescription> methods,
                                   std::span<const std::string> columns,
                                   MatrixOptions options = {});

// --- report output -------------------------------------------------------

enum class OutputFormat { Table, Csv, Json };
std::optional<OutputFormat> parse_output_format(std::string_view name);

struct StatsReport {
  CoverageTable overall;
  std::optional<std::vector<YearRow>> by_year;
  std::optional<PatternHistogram> histogram;
  std::optional<std::vector<CombinedGroup>> combined;
  std::optional<std::vector<Inconsistency>> inconsistencies;
};

std::string render_stats(const StatsReport& report, OutputFormat format);

/// Table and CSV only; JSON is rejected with std::invalid_argument.
std::string render_matrix(const ComparisonMatrix& matrix, OutputFormat format);

/// RFC 4180 field quoting: quoted when the field holds a comma, quote, CR or
/// LF; embedded quotes doubled.
std::string csv_field(std::string_view field);

}  // namespace nihdl
