// Text, CSV and JSON renderings of analysis results.

#include <algorithm>
#include <json.hpp>

#include "nihdl/analyze.hpp"

namespace nihdl {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string percent_or_na(const AttributeCounts& counts) {
  auto covered = counts.covered();
  return covered ? format_percent(*covered) + "%" : "n/a";
}

std::string presence_word(Presence p) { return std::string(keyword(p)); }

// Left-aligned columns separated by two spaces; numeric-looking columns are
// right-aligned.
std::string aligned(const Rows& rows, const std::vector<bool>& right_align) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      const std::size_t pad = widths[c] - row[c].size();
      const bool right = c < right_align.size() && right_align[c];
      if (right) line.append(pad, ' ');
      line += row[c];
      if (!right && c + 1 < row.size()) line.append(pad, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string csv(const Rows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += csv_field(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string year_label(const YearRow& row) {
  return row.year ? std::to_string(*row.year) : std::string("unknown");
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string facets_text(const CombinedGroup& group) {
  std::vector<std::string> names;
  for (auto f : group.shared_facets) names.emplace_back(keyword(f));
  return join(names, "; ");
}

std::string values_text(const Inconsistency& row) {
  std::vector<std::string> parts;
  for (const auto& [method, presence] : row.values) parts.push_back(method + "=" + presence_word(presence));
  return join(parts, "; ");
}

Rows attribute_rows(const CoverageTable& table, bool with_total, bool percent_sign) {
  Rows rows;
  for (auto attribute : kTrackedAttributes) {
    const auto& counts = table[attribute];
    std::vector<std::string> row{std::string(keyword(attribute))};
    if (with_total) row.push_back(std::to_string(table.total));
    row.push_back(std::to_string(counts.full));
    row.push_back(std::to_string(counts.partial));
    row.push_back(std::to_string(counts.absent));
    auto covered = counts.covered();
    row.push_back(covered ? format_percent(*covered) + (percent_sign ? "%" : "") : "n/a");
    rows.push_back(std::move(row));
  }
  return rows;
}

// --- table ---------------------------------------------------------------

std::string stats_table(const StatsReport& r) {
  std::string out = "methods: " + std::to_string(r.overall.total) + "\n\n";
  Rows rows{{"attribute", "full", "partial", "absent", "covered"}};
  for (auto& row : attribute_rows(r.overall, false, true)) rows.push_back(std::move(row));
  out += aligned(rows, {false, true, true, true, true});

  if (r.by_year) {
    out += "\nby year\n";
    Rows year_rows;
    std::vector<std::string> header{"year", "methods"};
    for (auto attribute : kTrackedAttributes) header.emplace_back(keyword(attribute));
    year_rows.push_back(std::move(header));
    for (const auto& y : *r.by_year) {
      std::vector<std::string> row{year_label(y), std::to_string(y.table.total)};
      for (auto attribute : kTrackedAttributes) row.push_back(percent_or_na(y.table[attribute]));
      year_rows.push_back(std::move(row));
    }
    out += aligned(year_rows, std::vector<bool>(2 + kTrackedAttributes.size(), true));
  }

  if (r.histogram) {
    out += "\npatterns\n";
    Rows hist{{"count", "pattern"}};
    for (const auto& [path, count] : r.histogram->leaves) {
      hist.push_back({std::to_string(count), path.to_string()});
    }
    out += aligned(hist, {true, false});
    out += "unassigned: " + std::to_string(r.histogram->unassigned) + "\n";
    out += "unresolved: " + std::to_string(r.histogram->unresolved) + "\n";
  }

  if (r.combined) {
    out += "\ncombined evaluations\n";
    Rows rows_c{{"source", "group", "members", "shared attributes"}};
    for (const auto& g : *r.combined) {
      rows_c.push_back({g.source, g.label, join(g.members, "; "),
                        g.single_member ? std::string("(single method)") : facets_text(g)});
    }
    out += aligned(rows_c, {});
  }

  if (r.inconsistencies) {
    out += "\ninconsistent descriptions\n";
    Rows rows_i{{"source", "attribute", "values"}};
    for (const auto& i : *r.inconsistencies) {
      rows_i.push_back({i.source, std::string(keyword(i.attribute)), values_text(i)});
    }
    out += aligned(rows_i, {});
  }
  return out;
}

// --- csv -----------------------------------------------------------------

std::string stats_csv(const StatsReport& r) {
  Rows overall{{"attribute", "total", "full", "partial", "absent", "covered_pct"}};
  for (auto& row : attribute_rows(r.overall, true, false)) overall.push_back(std::move(row));
  std::string out = csv(overall);

  if (r.by_year) {
    Rows rows{{"year", "attribute", "total", "full", "partial", "absent", "covered_pct"}};
    for (const auto& y : *r.by_year) {
      for (auto& row : attribute_rows(y.table, true, false)) {
        row.insert(row.begin(), year_label(y));
        rows.push_back(std::move(row));
      }
    }
    out += "\n" + csv(rows);
  }
  if (r.histogram) {
    Rows rows{{"kind", "pattern", "count"}};
    for (const auto& [path, count] : r.histogram->leaves) {
      rows.push_back({"leaf", path.to_string(), std::to_string(count)});
    }
    rows.push_back({"unassigned", "", std::to_string(r.histogram->unassigned)});
    rows.push_back({"unresolved", "", std::to_string(r.histogram->unresolved)});
    out += "\n" + csv(rows);
  }
  if (r.combined) {
    Rows rows{{"source", "group", "members", "shared_attributes", "single_member"}};
    for (const auto& g : *r.combined) {
      rows.push_back({g.source, g.label, join(g.members, "; "), facets_text(g),
                      g.single_member ? "true" : "false"});
    }
    out += "\n" + csv(rows);
  }
  if (r.inconsistencies) {
    Rows rows{{"source", "attribute", "values"}};
    for (const auto& i : *r.inconsistencies) {
      rows.push_back({i.source, std::string(keyword(i.attribute)), values_text(i)});
    }
    out += "\n" + csv(rows);
  }
  return out;
}

// --- json ----------------------------------------------------------------

using Json = nlohmann::ordered_json;

Json attributes_json(const CoverageTable& table) {
  Json attributes = Json::object();
  for (auto attribute : kTrackedAttributes) {
    const auto& counts = table[attribute];
    Json entry = {{"full", counts.full}, {"partial", counts.partial}, {"absent", counts.absent}};
    auto covered = counts.covered();
    entry["covered_pct"] = covered ? Json(std::stod(format_percent(*covered))) : Json(nullptr);
    attributes[std::string(keyword(attribute))] = std::move(entry);
  }
  return attributes;
}

std::string stats_json(const StatsReport& r) {
  Json root;
  root["total"] = r.overall.total;
  root["attributes"] = attributes_json(r.overall);
  if (r.by_year) {
    Json years = Json::object();
    for (const auto& y : *r.by_year) {
      years[year_label(y)] = {{"total", y.table.total}, {"attributes", attributes_json(y.table)}};
    }
    root["by_year"] = std::move(years);
  }
  if (r.histogram) {
    Json hist = Json::object();
    for (const auto& [path, count] : r.histogram->leaves) hist[path.to_string()] = count;
    root["histogram"] = std::move(hist);
    root["unassigned"] = r.histogram->unassigned;
    root["unresolved"] = r.histogram->unresolved;
  }
  if (r.combined) {
    Json groups = Json::array();
    for (const auto& g : *r.combined) {
      Json facets = Json::array();
      for (auto f : g.shared_facets) facets.push_back(std::string(keyword(f)));
      groups.push_back({{"source", g.source},
                        {"group", g.label},
                        {"members", g.members},
                        {"shared_attributes", std::move(facets)},
                        {"single_member", g.single_member}});
    }
    root["combined"] = std::move(groups);
  }
  if (r.inconsistencies) {
    Json rows = Json::array();
    for (const auto& i : *r.inconsistencies) {
      Json values = Json::object();
      for (const auto& [method, presence] : i.values) values[method] = presence_word(presence);
      rows.push_back({{"source", i.source},
                      {"attribute", std::string(keyword(i.attribute))},
                      {"values", std::move(values)}});
    }
    root["inconsistent"] = std::move(rows);
  }
  return root.dump(2) + "\n";
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_stats(const StatsReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return stats_table(report);
    case OutputFormat::Csv: return stats_csv(report);
    case OutputFormat::Json: return stats_json(report);
  }
  return {};
}

std::string render_matrix(const ComparisonMatrix& matrix, OutputFormat format) {
  Rows rows;
  rows.push_back(matrix.header);
  for (const auto& row : matrix.rows) rows.push_back(row);
  switch (format) {
    case OutputFormat::Table: return aligned(rows, {});
    case OutputFormat::Csv: return csv(rows);
    case OutputFormat::Json: break;
  }
  throw std::invalid_argument("comparison matrices render as table or csv only");
}

}  // namespace nihdl
