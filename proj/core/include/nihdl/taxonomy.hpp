#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nihdl {

/// Root-to-node sequence of pattern names, or the distinguished Unassigned
/// value for methods that cannot be placed in the hierarchy.
class PatternPath {
 public:
  PatternPath() = default;
  explicit PatternPath(std::vector<std::string> elements)
      : elements_(std::move(elements)) {}

  static PatternPath unassigned() {
    PatternPath path;
    path.unassigned_ = true;
    return path;
  }

  /// Splits on the " / " separator. Empty text gives an empty path; the
  /// pieces are not validated.
  static PatternPath from_text(std::string_view text);

  bool is_unassigned() const { return unassigned_; }
  bool empty() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_[i]; }
  const std::string& back() const { return elements_.back(); }

  PatternPath prefix(std::size_t length) const;
  PatternPath child(std::string name) const;

  /// Elements joined with " / ", or "unassigned".
  std::string to_string() const;

  friend bool operator==(const PatternPath&, const PatternPath&) = default;
  friend auto operator<=>(const PatternPath&, const PatternPath&) = default;

 private:
  std::vector<std::string> elements_;
  bool unassigned_ = false;
};

struct PatternNode {
  std::string name;
  std::vector<PatternNode> children;

  bool is_leaf() const { return children.empty(); }
  const PatternNode* find_child(std::string_view child_name) const;

  friend bool operator==(const PatternNode&, const PatternNode&) = default;
};

struct PatternCatalog {
  std::vector<PatternNode> roots;
  std::optional<std::string> label;

  bool empty() const { return roots.empty(); }
  const PatternNode* find_root(std::string_view name) const;

  friend bool operator==(const PatternCatalog&, const PatternCatalog&) = default;
};

enum class ResolutionKind { ResolvedLeaf, ResolvedInternal, NotFound };

struct Resolution {
  ResolutionKind kind = ResolutionKind::NotFound;
  /// Index of the first element that failed to match (NotFound only).
  std::size_t failing_index = 0;

  bool is_leaf() const { return kind == ResolutionKind::ResolvedLeaf; }
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

enum class TaxonomyErrc {
  EmptyPath,
  NotRenderable,
  DuplicateChild,
  ParentNotFound,
  InvalidName,
};

class TaxonomyError : public std::runtime_error {
 public:
  TaxonomyError(TaxonomyErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  TaxonomyErrc code() const { return code_; }

 private:
  TaxonomyErrc code_;
};

std::string_view to_string(TaxonomyErrc code);

/// Non-empty, no '/', no leading or trailing whitespace.
bool is_valid_pattern_name(std::string_view name);

/// Walks `path` from the roots. Throws TaxonomyError(EmptyPath) for an empty
/// or Unassigned path.
Resolution resolve_path(const PatternCatalog& catalog, const PatternPath& path);

/// Number of leading elements of `path` that match a catalog chain.
std::size_t matched_prefix_length(const PatternCatalog& catalog,
                                  const PatternPath& path);

const PatternNode* find_node(const PatternCatalog& catalog,
                             const PatternPath& path);

/// Root at column 0; each following element indented 4 spaces per level
/// below the first child and prefixed with "`-- ". No trailing newline.
std::string render_chain(const PatternPath& path);

/// Depth-first rendering with "|-- " / "`-- " connectors and "|   " / "    "
/// continuations. Roots sit at column 0. No trailing newline.
std::string render_tree(const PatternCatalog& catalog);

/// Returns a copy of `catalog` with a new leaf `name` under `parent`. An
/// empty `parent` adds a new root.
PatternCatalog extend_catalog(const PatternCatalog& catalog,
                              const PatternPath& parent, std::string_view name);

/// Every root-to-leaf path, depth-first, in author order.
std::vector<PatternPath> list_leaves(const PatternCatalog& catalog);

std::size_t count_nodes(const PatternCatalog& catalog);

/// The catalog evidenced by the worked examples: the LSB chain, the DHCP
/// number-of-options chain and the inter-arrival time chain.
PatternCatalog seed_catalog();

}  // namespace nihdl
