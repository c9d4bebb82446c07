#include "nihdl/store.hpp"

#include <algorithm>
#include <system_error>

#include "nihdl/analyze.hpp"
#include "nihdl/io.hpp"

namespace nihdl {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCatalogName = "catalog.nihc";
constexpr const char* kDescriptionsDir = "descriptions";
constexpr const char* kIndexName = "index.tsv";

std::string tsv_field(std::string value) {
  std::replace_if(value.begin(), value.end(),
                  [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return value;
}

}  // namespace

std::string Corpus::display_name(const fs::path& file) const {
  std::error_code ec;
  auto relative = fs::relative(file, root, ec);
  if (ec || relative.empty()) return file.generic_string();
  return relative.generic_string();
}

Corpus open_corpus(const fs::path& directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw StoreError(StoreErrc::MissingDirectory,
                     "corpus directory not found: " + directory.string());
  }
  Corpus corpus;
  corpus.root = directory;
  corpus.catalog_file = directory / kCatalogName;

  const fs::path descriptions = directory / kDescriptionsDir;
  if (fs::is_directory(descriptions, ec)) {
    for (const auto& entry : fs::directory_iterator(descriptions, ec)) {
      if (entry.is_regular_file(ec) && entry.path().extension() == ".nihd") {
        corpus.description_files.push_back(entry.path());
      }
    }
  }
  std::sort(corpus.description_files.begin(), corpus.description_files.end());
  return corpus;
}

LoadResult load_all(const Corpus& corpus) {
  LoadResult result;
  for (const auto& file : corpus.description_files) {
    const std::string name = corpus.display_name(file);
    auto text = read_file(file);
    if (!text) {
      result.diagnostics.push_back(
          make_diagnostic("E008", "cannot read file", SourceLocation{name, 1, 1}));
      ++result.failed_files;
      continue;
    }
    auto parsed = parse_description(*text, name);
    result.diagnostics.insert(result.diagnostics.end(), parsed.diagnostics.begin(),
                              parsed.diagnostics.end());
    if (parsed.ok()) {
      result.documents.push_back(std::move(*parsed.value));
    } else {
      ++result.failed_files;
    }
  }
  return result;
}

ParseResult<PatternCatalog> load_catalog(const Corpus& corpus) {
  auto text = read_file(corpus.catalog_file);
  if (!text) {
    throw StoreError(StoreErrc::MissingCatalog,
                     "catalog not found: " + corpus.catalog_file.string());
  }
  return parse_catalog(*text, corpus.display_name(corpus.catalog_file));
}

std::vector<IndexRow> index_rows(const std::vector<Document>& documents) {
  std::vector<IndexRow> rows;
  for (const auto& doc : documents) {
    for (const auto& method : doc.methods) {
      IndexRow row;
      row.file = tsv_field(doc.source_file);
      row.method = tsv_field(method.name);
      row.source = method.source ? tsv_field(*method.source) : "-";
      row.year = method.year ? std::to_string(*method.year) : "-";
      row.pattern = tsv_field(method.pattern.path.to_string());
      row.score = format_decimal(completeness(method).aggregate, 3);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_index(const std::vector<IndexRow>& rows) {
  std::string out = "file\tmethod\tsource\tyear\tpattern\tscore\n";
  for (const auto& r : rows) {
    out += r.file + '\t' + r.method + '\t' + r.source + '\t' + r.year + '\t' + r.pattern + '\t' +
           r.score + '\n';
  }
  return out;
}

std::vector<IndexRow> build_index(const Corpus& corpus) {
  const auto loaded = load_all(corpus);
  auto rows = index_rows(loaded.documents);
  const fs::path target = corpus.root / kIndexName;
  if (!write_file_atomic(target, format_index(rows))) {
    throw StoreError(StoreErrc::WriteFailed, "cannot write " + target.string());
  }
  return rows;
}

}  // namespace nihdl
