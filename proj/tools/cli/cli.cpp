#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>

#include "nihdl/analyze.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/io.hpp"
#include "nihdl/novelty.hpp"
#include "nihdl/store.hpp"
#include "nihdl/taxonomy.hpp"
#include "nihdl/validate.hpp"
#include "report.hpp"

namespace nihdl::cli {

namespace {

class Status {
 public:
  void raise(int s) { value_ = std::max(value_, s); }
  int value() const { return value_; }

 private:
  int value_ = kSuccess;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;

  void diagnostics(const std::vector<Diagnostic>& ds) const {
    for (const auto& d : ds) err << format_diagnostic(d) << '\n';
  }
  int usage(const std::string& message) const {
    err << "error: " << message << '\n';
    return kUsage;
  }
};

std::optional<std::string> catalog_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("NIHDL_CATALOG"); env != nullptr && *env != '\0') {
    return std::string(env);
  }
  return std::nullopt;
}

/// Reads and parses a catalog; diagnostics are printed and the status raised.
std::optional<PatternCatalog> load_catalog_file(const std::string& path, const Streams& io,
                                                Status& status) {
  auto text = read_file(path);
  if (!text) {
    io.diagnostics({make_diagnostic("E008", "cannot read catalog file", SourceLocation{path, 1, 1})});
    status.raise(kUsage);
    return std::nullopt;
  }
  auto parsed = parse_catalog(*text, path);
  io.diagnostics(parsed.diagnostics);
  if (!parsed.ok()) {
    status.raise(kDiagnostics);
    return std::nullopt;
  }
  return std::move(*parsed.value);
}

std::optional<Document> load_description(const std::string& path, const Streams& io,
                                         Status& status) {
  auto text = read_file(path);
  if (!text) {
    io.diagnostics({make_diagnostic("E008", "cannot read file", SourceLocation{path, 1, 1})});
    status.raise(kUsage);
    return std::nullopt;
  }
  auto parsed = parse_description(*text, path);
  io.diagnostics(parsed.diagnostics);
  if (!parsed.ok()) {
    status.raise(kDiagnostics);
    return std::nullopt;
  }
  return std::move(*parsed.value);
}

bool needs_catalog(const Document& doc) {
  return std::any_of(doc.methods.begin(), doc.methods.end(), [](const MethodDescription& m) {
    return !m.pattern.path.is_unassigned() && !m.pattern.path.empty();
  });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    items.push_back(first == std::string::npos ? std::string() : item.substr(first, last - first + 1));
    start = end + 1;
  }
  return items;
}

void add_catalog_option(CLI::App* cmd, std::string& target,
                        const std::string& fallback = "$NIHDL_CATALOG") {
  cmd->add_option("--catalog", target, "Pattern catalog (.nihc); defaults to " + fallback);
}

// --- commands ------------------------------------------------------------

struct ValidateArgs {
  std::vector<std::string> files;
  std::string catalog;
  bool strict = false;
};

int cmd_validate(const ValidateArgs& a, const Streams& io) {
  Status status;
  std::vector<Document> docs;
  for (const auto& file : a.files) {
    if (auto doc = load_description(file, io, status)) docs.push_back(std::move(*doc));
  }

  const bool required = std::any_of(docs.begin(), docs.end(), needs_catalog);
  PatternCatalog catalog;
  const auto path = catalog_path(a.catalog);
  if (path) {
    auto loaded = load_catalog_file(*path, io, status);
    if (!loaded) return status.value();
    catalog = std::move(*loaded);
    auto unusable = check_catalog_usable(catalog, *path);
    io.diagnostics(unusable);
    if (!unusable.empty()) status.raise(kDiagnostics);
  } else if (required) {
    status.raise(io.usage("a pattern catalog is required to resolve pattern paths; "
                          "pass --catalog PATH or set NIHDL_CATALOG"));
    return status.value();
  }

  const auto mode = a.strict ? ValidationMode::Strict : ValidationMode::Survey;
  for (const auto& doc : docs) {
    auto diagnostics = validate_document(doc, catalog, mode);
    // An unusable catalog has already been reported once, with its location.
    std::erase_if(diagnostics, [](const Diagnostic& d) { return d.code == "E006" && !d.location; });
    io.diagnostics(diagnostics);
    if (has_errors(diagnostics)) status.raise(kDiagnostics);
  }
  return status.value();
}

struct RenderArgs {
  std::string file;
  std::string method;
};

int cmd_render(const RenderArgs& a, const Streams& io) {
  Status status;
  auto doc = load_description(a.file, io, status);
  if (!doc) return status.value();
  std::vector<MethodDescription> selected;
  for (const auto& m : doc->methods) {
    if (a.method.empty() || m.name == a.method) selected.push_back(m);
  }
  if (!a.method.empty() && selected.empty()) {
    io.err << "error: unknown method '" << a.method << "' in " << a.file << '\n';
    return kDiagnostics;
  }
  io.out << render_reports(selected);
  return status.value();
}

struct TreeArgs {
  std::string catalog;
};

int cmd_tree(const TreeArgs& a, const Streams& io) {
  Status status;
  PatternCatalog catalog;
  if (const auto path = catalog_path(a.catalog)) {
    auto loaded = load_catalog_file(*path, io, status);
    if (!loaded) return status.value();
    catalog = std::move(*loaded);
  } else {
    catalog = seed_catalog();
  }
  if (!catalog.empty()) io.out << render_tree(catalog) << '\n';
  return status.value();
}

struct StatsArgs {
  std::string directory;
  std::string catalog;
  std::string format = "table";
  bool by_year = false;
  bool patterns = false;
  bool combined = false;
  bool inconsistent = false;
};

int cmd_stats(const StatsArgs& a, const Streams& io) {
  Status status;
  const auto format = parse_output_format(a.format);
  if (!format) return io.usage("unknown format '" + a.format + "'");

  Corpus corpus;
  try {
    corpus = open_corpus(a.directory);
  } catch (const StoreError& e) {
    return io.usage(e.what());
  }
  auto loaded = load_all(corpus);
  io.diagnostics(loaded.diagnostics);
  if (has_errors(loaded.diagnostics)) status.raise(kDiagnostics);

  std::vector<MethodDescription> methods;
  for (auto& doc : loaded.documents) {
    for (auto& m : doc.methods) methods.push_back(std::move(m));
  }

  StatsReport report;
  report.overall = coverage_table(methods);
  if (a.by_year) report.by_year = stats_by_year(methods);
  if (a.patterns) {
    PatternCatalog catalog;
    if (!a.catalog.empty()) {
      auto c = load_catalog_file(a.catalog, io, status);
      if (!c) return status.value();
      catalog = std::move(*c);
    } else {
      try {
        auto parsed = load_catalog(corpus);
        io.diagnostics(parsed.diagnostics);
        if (!parsed.ok()) {
          status.raise(kDiagnostics);
          return status.value();
        }
        catalog = std::move(*parsed.value);
      } catch (const StoreError& e) {
        const auto fallback = catalog_path({});
        if (!fallback) return io.usage(std::string(e.what()) + "; pass --catalog PATH");
        auto c = load_catalog_file(*fallback, io, status);
        if (!c) return status.value();
        catalog = std::move(*c);
      }
    }
    auto histogram = pattern_histogram(methods, catalog);
    io.diagnostics(histogram.diagnostics);
    if (has_errors(histogram.diagnostics)) status.raise(kDiagnostics);
    report.histogram = std::move(histogram);
  }
  if (a.combined) report.combined = combined_groups(methods);
  if (a.inconsistent) report.inconsistencies = inconsistency_report(methods);

  io.out << render_stats(report, *format);
  return status.value();
}

struct CompareArgs {
  std::vector<std::string> files;
  std::string attributes;
  std::string format = "table";
  bool collapse_combined = false;
};

int cmd_compare(const CompareArgs& a, const Streams& io) {
  Status status;
  const auto format = parse_output_format(a.format);
  if (!format || *format == OutputFormat::Json) {
    return io.usage("compare supports --format table or csv");
  }
  const auto columns = split_list(a.attributes);
  for (const auto& name : columns) {
    if (!parse_compare_column(name)) {
      return io.usage("unknown attribute '" + name + "'");
    }
  }

  std::vector<MethodDescription> methods;
  for (const auto& file : a.files) {
    if (auto doc = load_description(file, io, status)) {
      for (auto& m : doc->methods) methods.push_back(std::move(m));
    }
  }
  if (status.value() != kSuccess) return status.value();

  const auto matrix = comparison_matrix(methods, std::span<const std::string>(columns),
                                        MatrixOptions{a.collapse_combined});
  io.out << render_matrix(matrix, *format);
  return status.value();
}

struct AssessArgs {
  std::string file;
  std::string catalog;
};

int cmd_assess(const AssessArgs& a, const Streams& io) {
  Status status;
  auto doc = load_description(a.file, io, status);
  if (!doc) return status.value();
  const auto path = catalog_path(a.catalog);
  if (!path) return io.usage("assess needs a pattern catalog; pass --catalog PATH or set NIHDL_CATALOG");
  auto catalog = load_catalog_file(*path, io, status);
  if (!catalog) return status.value();

  const bool several = doc->methods.size() > 1;
  for (const auto& m : doc->methods) {
    const auto verdict = assess(m, *catalog);
    if (several) io.out << m.name << ": ";
    io.out << render_verdict(verdict) << '\n';
    if (std::holds_alternative<Rejected>(verdict)) status.raise(kDiagnostics);
  }
  return status.value();
}

struct CatalogAddArgs {
  std::string catalog;
  std::string parent;
  std::string name;
  std::string justification;
};

int cmd_catalog_add(const CatalogAddArgs& a, const Streams& io) {
  Status status;
  const auto path = catalog_path(a.catalog);
  if (!path) return io.usage("catalog-add needs --catalog PATH or NIHDL_CATALOG");

  auto rationale = read_file(a.justification);
  if (!rationale) return io.usage("cannot read justification file " + a.justification);
  if (rationale->find_first_not_of(" \t\r\n") == std::string::npos) {
    io.err << "error: a new pattern requires a detailed justification\n";
    return kDiagnostics;
  }

  auto catalog = load_catalog_file(*path, io, status);
  if (!catalog) return status.value();

  PatternCatalog extended;
  try {
    extended = extend_catalog(*catalog, PatternPath::from_text(a.parent), a.name);
  } catch (const TaxonomyError& e) {
    io.err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kDiagnostics;
  }
  if (!write_file_atomic(*path, serialize_catalog(extended))) {
    return io.usage("cannot write " + *path);
  }
  const auto added = a.parent.empty() ? PatternPath({a.name}) : PatternPath::from_text(a.parent).child(a.name);
  io.out << "added: " << added.to_string() << '\n';
  return status.value();
}

struct IndexArgs {
  std::string directory;
};

int cmd_index(const IndexArgs& a, const Streams& io) {
  Status status;
  try {
    const auto corpus = open_corpus(a.directory);
    const auto loaded = load_all(corpus);
    io.diagnostics(loaded.diagnostics);
    if (has_errors(loaded.diagnostics)) status.raise(kDiagnostics);
    const auto rows = build_index(corpus);
    io.out << "wrote " << rows.size() << " rows to " << (corpus.root / "index.tsv").string() << '\n';
  } catch (const StoreError& e) {
    return io.usage(e.what());
  }
  return status.value();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Streams io{out, err};
  CLI::App app{"Describe, validate and survey network information hiding methods", "nihdl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nihdl 0.1.0");

  ValidateArgs validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate description files");
  validate_cmd->add_option("files", validate_args.files, "Description files (.nihd)")->required();
  add_catalog_option(validate_cmd, validate_args.catalog);
  validate_cmd->add_flag("--strict", validate_args.strict, "Reject unspecified values");

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Print a readable report of each method");
  render_cmd->add_option("file", render_args.file, "Description file")->required();
  render_cmd->add_option("--method", render_args.method, "Only this method");

  TreeArgs tree_args;
  auto* tree_cmd = app.add_subcommand("tree", "Print the pattern hierarchy");
  add_catalog_option(tree_cmd, tree_args.catalog, "$NIHDL_CATALOG, then the built-in seed");

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "Attribute coverage of a corpus directory");
  stats_cmd->add_option("directory", stats_args.directory, "Corpus directory")->required();
  stats_cmd->add_flag("--by-year", stats_args.by_year, "Add a per-year table");
  stats_cmd->add_flag("--patterns", stats_args.patterns, "Add the pattern histogram");
  stats_cmd->add_flag("--combined", stats_args.combined, "List jointly evaluated method groups");
  stats_cmd->add_flag("--inconsistent", stats_args.inconsistent,
                      "List attributes described unevenly within one publication");
  stats_cmd->add_option("--format", stats_args.format, "table, csv or json");
  add_catalog_option(stats_cmd, stats_args.catalog, "<directory>/catalog.nihc, then $NIHDL_CATALOG");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Attribute comparison matrix");
  compare_cmd->add_option("files", compare_args.files, "Description files")->required();
  compare_cmd->add_option("--attributes", compare_args.attributes, "Comma-separated columns")
      ->required();
  compare_cmd->add_option("--format", compare_args.format, "table or csv");
  compare_cmd->add_flag("--collapse-combined", compare_args.collapse_combined,
                        "Blank repeated cells of a jointly evaluated group");

  AssessArgs assess_args;
  auto* assess_cmd = app.add_subcommand("assess", "Classify a method as small-c or Big-C");
  assess_cmd->add_option("file", assess_args.file, "Description file")->required();
  add_catalog_option(assess_cmd, assess_args.catalog);

  CatalogAddArgs add_args;
  auto* add_cmd = app.add_subcommand("catalog-add", "Add an accepted pattern to a catalog");
  add_catalog_option(add_cmd, add_args.catalog);
  add_cmd->add_option("--parent", add_args.parent, "Parent path; empty for a new root");
  add_cmd->add_option("--name", add_args.name, "New pattern name")->required();
  add_cmd->add_option("--justification", add_args.justification, "File explaining the new pattern")
      ->required();

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "Write <corpus>/index.tsv");
  index_cmd->add_option("directory", index_args.directory, "Corpus directory")->required();

  std::vector<const char*> argv{"nihdl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  if (*validate_cmd) return cmd_validate(validate_args, io);
  if (*render_cmd) return cmd_render(render_args, io);
  if (*tree_cmd) return cmd_tree(tree_args, io);
  if (*stats_cmd) return cmd_stats(stats_args, io);
  if (*compare_cmd) return cmd_compare(compare_args, io);
  if (*assess_cmd) return cmd_assess(assess_args, io);
  if (*add_cmd) return cmd_catalog_add(add_args, io);
  if (*index_cmd) return cmd_index(index_args, io);
  return kUsage;
}

}  // namespace nihdl::cli
