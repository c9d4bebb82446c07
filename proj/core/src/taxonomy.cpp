#include "nihdl/taxonomy.hpp"

#include <algorithm>

namespace nihdl {

namespace {

constexpr std::string_view kSeparator = " / ";

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

const PatternNode* find_in(const std::vector<PatternNode>& nodes, std::string_view name) {
  auto it = std::find_if(nodes.begin(), nodes.end(),
                         [&](const PatternNode& n) { return n.name == name; });
  return it == nodes.end() ? nullptr : &*it;
}

void render_subtree(const PatternNode& node, const std::string& prefix, bool last,
                    std::string& out) {
  out += '\n';
  out += prefix;
  out += last ? "`-- " : "|-- ";
  out += node.name;
  const std::string child_prefix = prefix + (last ? "    " : "|   ");
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    render_subtree(node.children[i], child_prefix, i + 1 == node.children.size(), out);
  }
}

void collect_leaves(const PatternNode& node, std::vector<std::string>& trail,
                    std::vector<PatternPath>& out) {
  trail.push_back(node.name);
  if (node.is_leaf()) {
    out.emplace_back(trail);
  } else {
    for (const auto& child : node.children) collect_leaves(child, trail, out);
  }
  trail.pop_back();
}

std::size_t count_subtree(const PatternNode& node) {
  std::size_t n = 1;
  for (const auto& child : node.children) n += count_subtree(child);
  return n;
}

PatternNode chain(std::initializer_list<std::string_view> names) {
  PatternNode head;
  PatternNode* cursor = nullptr;
  for (auto name : names) {
    if (cursor == nullptr) {
      head.name = std::string(name);
      cursor = &head;
    } else {
      cursor->children.push_back(PatternNode{std::string(name), {}});
      cursor = &cursor->children.back();
    }
  }
  return head;
}

}  // namespace

PatternPath PatternPath::from_text(std::string_view text) {
  std::vector<std::string> elements;
  if (text.empty()) return PatternPath();
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(kSeparator, start);
    if (pos == std::string_view::npos) {
      elements.emplace_back(text.substr(start));
      break;
    }
    elements.emplace_back(text.substr(start, pos - start));
    start = pos + kSeparator.size();
  }
  return PatternPath(std::move(elements));
}

PatternPath PatternPath::prefix(std::size_t length) const {
  length = std::min(length, elements_.size());
  return PatternPath(std::vector<std::string>(elements_.begin(),
                                              elements_.begin() + static_cast<std::ptrdiff_t>(length)));
}

PatternPath PatternPath::child(std::string name) const {
  auto elements = elements_;
  elements.push_back(std::move(name));
  return PatternPath(std::move(elements));
}

std::string PatternPath::to_string() const {
  if (unassigned_) return "unassigned";
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += kSeparator;
    out += elements_[i];
  }
  return out;
}

const PatternNode* PatternNode::find_child(std::string_view child_name) const {
  return find_in(children, child_name);
}

const PatternNode* PatternCatalog::find_root(std::string_view name) const {
  return find_in(roots, name);
}

std::string_view to_string(TaxonomyErrc code) {
  switch (code) {
    case TaxonomyErrc::EmptyPath: return "EmptyPath";
    case TaxonomyErrc::NotRenderable: return "NotRenderable";
    case TaxonomyErrc::DuplicateChild: return "DuplicateChild";
    case TaxonomyErrc::ParentNotFound: return "ParentNotFound";
    case TaxonomyErrc::InvalidName: return "InvalidName";
  }
  return "TaxonomyError";
}

bool is_valid_pattern_name(std::string_view name) {
  if (name.empty()) return false;
  if (name.find('/') != std::string_view::npos) return false;
  return !is_space(name.front()) && !is_space(name.back());
}

std::size_t matched_prefix_length(const PatternCatalog& catalog, const PatternPath& path) {
  if (path.is_unassigned()) return 0;
  const std::vector<PatternNode>* level = &catalog.roots;
  std::size_t matched = 0;
  for (const auto& element : path.elements()) {
    const PatternNode* node = find_in(*level, element);
    if (node == nullptr) break;
    ++matched;
    level = &node->children;
  }
  return matched;
}

const PatternNode* find_node(const PatternCatalog& catalog, const PatternPath& path) {
  if (path.is_unassigned() || path.empty()) return nullptr;
  const std::vector<PatternNode>* level = &catalog.roots;
  const PatternNode* node = nullptr;
  for (const auto& element : path.elements()) {
    node = find_in(*level, element);
    if (node == nullptr) return nullptr;
    level = &node->children;
  }
  return node;
}

Resolution resolve_path(const PatternCatalog& catalog, const PatternPath& path) {
  if (path.is_unassigned()) {
    throw TaxonomyError(TaxonomyErrc::EmptyPath, "cannot resolve an unassigned path");
  }
  if (path.empty()) {
    throw TaxonomyError(TaxonomyErrc::EmptyPath, "cannot resolve an empty path");
  }
  const std::size_t matched = matched_prefix_length(catalog, path);
  if (matched < path.size()) {
    return Resolution{ResolutionKind::NotFound, matched};
  }
  const PatternNode* node = find_node(catalog, path);
  return Resolution{node->is_leaf() ? ResolutionKind::ResolvedLeaf
                                    : ResolutionKind::ResolvedInternal,
                    0};
}

std::string render_chain(const PatternPath& path) {
  if (path.is_unassigned() || path.empty()) {
    throw TaxonomyError(TaxonomyErrc::NotRenderable,
                        "only non-empty, assigned paths can be rendered");
  }
  std::string out = path[0];
  for (std::size_t k = 1; k < path.size(); ++k) {
    out += '\n';
    out.append(4 * (k - 1), ' ');
    out += "`-- ";
    out += path[k];
  }
  return out;
}

std::string render_tree(const PatternCatalog& catalog) {
  std::string out;
  for (std::size_t r = 0; r < catalog.roots.size(); ++r) {
    const auto& root = catalog.roots[r];
    if (r > 0) out += '\n';
    out += root.name;
    for (std::size_t i = 0; i < root.children.size(); ++i) {
      render_subtree(root.children[i], "", i + 1 == root.children.size(), out);
    }
  }
  return out;
}

PatternCatalog extend_catalog(const PatternCatalog& catalog, const PatternPath& parent,
                              std::string_view name) {
  if (!is_valid_pattern_name(name)) {
    throw TaxonomyError(TaxonomyErrc::InvalidName,
                        "invalid pattern name \"" + std::string(name) + "\"");
  }
  if (parent.is_unassigned()) {
    throw TaxonomyError(TaxonomyErrc::ParentNotFound, "parent path is unassigned");
  }

  PatternCatalog extended = catalog;
  std::vector<PatternNode>* siblings = &extended.roots;
  for (std::size_t i = 0; i < parent.size(); ++i) {
    auto it = std::find_if(siblings->begin(), siblings->end(),
                           [&](const PatternNode& n) { return n.name == parent[i]; });
    if (it == siblings->end()) {
      throw TaxonomyError(TaxonomyErrc::ParentNotFound,
                          "parent \"" + parent.to_string() + "\" not found in catalog");
    }
    siblings = &it->children;
  }
  if (find_in(*siblings, name) != nullptr) {
    throw TaxonomyError(TaxonomyErrc::DuplicateChild,
                        "\"" + std::string(name) + "\" already exists under \"" +
                            (parent.empty() ? std::string("(root)") : parent.to_string()) +
                            "\"");
  }
  siblings->push_back(PatternNode{std::string(name), {}});
  return extended;
}

std::vector<PatternPath> list_leaves(const PatternCatalog& catalog) {
  std::vector<PatternPath> out;
  std::vector<std::string> trail;
  for (const auto& root : catalog.roots) collect_leaves(root, trail, out);
  return out;
}

std::size_t count_nodes(const PatternCatalog& catalog) {
  std::size_t n = 0;
  for (const auto& root : catalog.roots) n += count_subtree(root);
  return n;
}

PatternCatalog seed_catalog() {
  PatternNode storage = chain({"Network Covert Storage Channels", "Modification of Non-Payload",
                               "Structure Preserving", "Modification of an Attribute",
                               "Value Modulation", "Least Significant Bit (LSB)"});
  storage.children.front().children.push_back(
      chain({"Structure Modifying", "Sequence Pattern", "Number of Elements Pattern"}));
  PatternNode timing = chain({"Network Covert Timing Channels", "Inter-arrival Time Pattern"});

  PatternCatalog catalog;
  catalog.label = "seed";
  catalog.roots.push_back(std::move(storage));
  catalog.roots.push_back(std::move(timing));
  return catalog;
}

}  // namespace nihdl
