#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nihdl/diagnostic.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/taxonomy.hpp"

namespace nihdl {

enum class StoreErrc { MissingDirectory, MissingCatalog, WriteFailed };

class StoreError : public std::runtime_error {
 public:
  StoreError(StoreErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  StoreErrc code() const { return code_; }

 private:
  StoreErrc code_;
};

/// A corpus directory:
///   <root>/catalog.nihc
///   <root>/descriptions/*.nihd
///   <root>/index.tsv        (generated)
struct Corpus {
  std::filesystem::path root;
  std::filesystem::path catalog_file;
  /// Sorted lexicographically.
  std::vector<std::filesystem::path> description_files;

  /// Path relative to the root with '/' separators; used as the file name in
  /// diagnostics and index rows.
  std::string display_name(const std::filesystem::path& file) const;
};

/// Throws StoreError(MissingDirectory).
Corpus open_corpus(const std::filesystem::path& directory);

struct LoadResult {
  std::vector<Document> documents;
  std::vector<Diagnostic> diagnostics;
  std::size_t failed_files = 0;
};

/// Parses every description file; a broken file contributes diagnostics and
/// does not stop the others.
LoadResult load_all(const Corpus& corpus);

/// Throws StoreError(MissingCatalog) when the catalog file does not exist.
ParseResult<PatternCatalog> load_catalog(const Corpus& corpus);

struct IndexRow {
  std::string file;
  std::string method;
  std::string source;   // "-" when absent
  std::string year;     // "-" when absent
  std::string pattern;  // " / "-joined path or "unassigned"
  std::string score;    // aggregate coverage, 3 decimals

  friend bool operator==(const IndexRow&, const IndexRow&) = default;
};

std::vector<IndexRow> index_rows(const std::vector<Document>& documents);

/// Header line plus one tab-separated line per row, LF-terminated.
std::string format_index(const std::vector<IndexRow>& rows);

/// Loads the corpus, writes <root>/index.tsv atomically and returns the rows.
/// Throws StoreError(WriteFailed).
std::vector<IndexRow> build_index(const Corpus& corpus);

}  // namespace nihdl
