// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "nihdl/analyze.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/novelty.hpp"
#include "nihdl/store.hpp"
#include "nihdl/taxonomy.hpp"
#include "nihdl/validate.hpp"
#include "test_support.hpp"

namespace {

using namespace nihdl;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

// Pinned tolerances.
constexpr auto kFuzzInputBudget = std::chrono::milliseconds(100);
constexpr auto kRoundTripBudget = std::chrono::seconds(30);
constexpr auto kStatsBudget = std::chrono::seconds(5);
constexpr auto kFastBudget = std::chrono::seconds(1);
constexpr int kRoundTripIterations = 1000;
constexpr int kFuzzIterations = 10000;
constexpr int kExtensions = 100;

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream s;
      s << what << ": got [" << actual << "] want [" << expected << "]";
      failures.push_back(s.str());
    }
  }
  bool ok() const { return failures.empty(); }
};

std::string strip_final_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

template <typename Duration>
void within(Check& c, clock_type::time_point start, Duration budget, const std::string& what) {
  c.expect(clock_type::now() - start < budget, what + " exceeded its time budget");
}

// --- 1 ---------------------------------------------------------------------

void chain_goldens(Check& c) {
  const auto start = clock_type::now();
  const std::pair<std::string, std::string> cases[] = {
      {testing::kLsbPath, "golden/chain_lsb.txt"},
      {testing::kTimingPath, "golden/chain_timing.txt"},
      {testing::kDhcpPath, "golden/chain_dhcp.txt"},
  };
  for (const auto& [path, golden] : cases) {
    const auto expected = strip_final_newline(testing::read_text(testing::data_file(golden)));
    c.equal(render_chain(PatternPath::from_text(path)), expected, golden);
  }
  const auto lsb = render_chain(PatternPath::from_text(testing::kLsbPath));
  c.equal(std::count(lsb.begin(), lsb.end(), '\n') + 1, 6, "LSB chain line count");
  c.expect(lsb.rfind("\n" + std::string(16, ' ') + "`-- ") != std::string::npos, "LSB deepest indent");
  within(c, start, kFastBudget, "golden rendering");
}

// --- 2 ---------------------------------------------------------------------

void erase_kind(MethodDescription& d, CountermeasureKind kind) {
  std::erase_if(d.countermeasures, [&](const CountermeasureEntry& e) { return e.kind == kind; });
}

CountermeasureEntry& entry_of(MethodDescription& d, CountermeasureKind kind) {
  for (auto& e : d.countermeasures) {
    if (e.kind == kind) return e;
  }
  throw std::logic_error("fixture lacks a countermeasure entry");
}

std::multiset<std::string> error_codes(const std::vector<Diagnostic>& ds) {
  std::multiset<std::string> out;
  for (const auto& d : ds) {
    if (d.severity == Severity::Error) out.insert(d.code);
  }
  return out;
}

void fixture_validation(Check& c) {
  const auto start = clock_type::now();
  const auto catalog = seed_catalog();
  for (const auto* name : {"ex1_interpacket.nihd", "ex2_dhcp.nihd"}) {
    const auto text = testing::read_text(testing::data_file(name));
    const auto parsed = parse_description(text, name);
    c.expect(parsed.ok(), std::string(name) + " parses");
    if (!parsed.ok()) continue;
    const auto ds = validate_document(*parsed.value, catalog, ValidationMode::Survey);
    c.expect(!has_errors(ds), std::string(name) + " has no error diagnostics");
  }

  struct Mutation {
    const char* code;
    std::function<void(MethodDescription&)> apply;
    ValidationMode mode;
  };
  const std::vector<Mutation> mutations = {
      {"E110",
       [](auto& d) { d.pattern.path = PatternPath::from_text("Network Covert Timing Channels / Rate"); },
       ValidationMode::Survey},
      {"E111", [](auto& d) { d.pattern.path = d.pattern.path.prefix(1); }, ValidationMode::Survey},
      {"E112",
       [](auto& d) {
         d.pattern.path = PatternPath::unassigned();
         d.pattern.justifications.clear();
       },
       ValidationMode::Survey},
      {"E120", [](auto& d) { d.channel.directness = {DirectnessKind::Indirect, ""}; }, ValidationMode::Survey},
      {"E130", [](auto& d) { d.channel.cost.reset(); }, ValidationMode::Survey},
      {"E140", [](auto& d) { erase_kind(d, CountermeasureKind::Elimination); }, ValidationMode::Survey},
      {"E140", [](auto& d) { erase_kind(d, CountermeasureKind::Detection); }, ValidationMode::Survey},
      {"E141",
       [](auto& d) {
         erase_kind(d, CountermeasureKind::Limitation);
         entry_of(d, CountermeasureKind::Elimination).applicability = Applicability::NotApplicable;
       },
       ValidationMode::Survey},
      {"E142",
       [](auto& d) {
         auto& e = entry_of(d, CountermeasureKind::Elimination);
         e.applicability = Applicability::NotApplicable;
         e.text.reset();
       },
       ValidationMode::Survey},
      {"E210", [](auto& d) { d.sender.relation = Relation::Unspecified; }, ValidationMode::Strict},
      {"E211", [](auto& d) { d.scenario.reset(); }, ValidationMode::Strict},
  };
  const auto base = testing::parse_fixture("ex1_interpacket.nihd").methods.front();
  for (const auto& m : mutations) {
    auto d = base;
    m.apply(d);
    const auto got = error_codes(validate(d, catalog, m.mode));
    c.expect(got == std::multiset<std::string>{m.code}, std::string("mutation ") + m.code);
  }
  Document twice;
  twice.methods = {base, base};
  c.expect(error_codes(validate_document(twice, catalog, ValidationMode::Survey)) ==
               std::multiset<std::string>{"E150"},
           "mutation E150");
  within(c, start, kFastBudget, "fixture validation");
}

// --- 3 ---------------------------------------------------------------------

void round_trip(Check& c) {
  const auto start = clock_type::now();
  std::mt19937 rng(2016);
  int failures = 0;
  for (int i = 0; i < kRoundTripIterations && failures < 5; ++i) {
    const auto d = testing::random_description(rng);
    const auto text = serialize(d);
    const auto parsed = parse_description(text, "gen.nihd");
    const bool ok = parsed.ok() && parsed.value->methods.size() == 1 &&
                    parsed.value->methods.front() == normalize(d) && serialize(*parsed.value) == text;
    if (!ok) {
      ++failures;
      c.expect(false, "round trip iteration " + std::to_string(i));
    }
  }
  within(c, start, kRoundTripBudget, "round trip");
}

// --- 4 ---------------------------------------------------------------------

void parser_totality(Check& c) {
  std::mt19937 rng(4242);
  std::vector<std::string> seeds;
  for (const auto* f : {"ex1_interpacket.nihd", "ex2_dhcp.nihd"}) {
    seeds.push_back(testing::read_text(testing::data_file(f)));
  }
  auto slowest = clock_type::duration::zero();
  int rejected = 0;
  for (int i = 0; i < kFuzzIterations; ++i) {
    const auto input = testing::mutate_bytes(seeds[static_cast<std::size_t>(i) % seeds.size()], rng);
    const auto start = clock_type::now();
    try {
      const auto r = parse_description(input, "fuzz.nihd");
      c.expect(r.ok() != has_errors(r.diagnostics), "fuzz result consistency " + std::to_string(i));
      if (!r.ok()) ++rejected;
    } catch (const std::exception& e) {
      c.expect(false, "fuzz input " + std::to_string(i) + " threw: " + e.what());
    }
    slowest = std::max(slowest, clock_type::now() - start);
  }
  // Guards against a mutator that leaves the input intact.
  c.expect(rejected > kFuzzIterations / 2, "only " + std::to_string(rejected) + " fuzz inputs were rejected");
  c.expect(slowest < kFuzzInputBudget,
           "slowest fuzz input took " +
               std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(slowest).count()) + " ms");
}

// --- 5, 6 ------------------------------------------------------------------

std::vector<MethodDescription> synthetic_corpus(Check& c) {
  const auto loaded = load_all(open_corpus(testing::data_file("synthetic131")));
  c.equal(loaded.failed_files, 0u, "synthetic corpus failed files");
  std::vector<MethodDescription> out;
  for (const auto& doc : loaded.documents) out.insert(out.end(), doc.methods.begin(), doc.methods.end());
  return out;
}

void coverage_ratios(Check& c) {
  const auto start = clock_type::now();
  const auto corpus = synthetic_corpus(c);
  const auto table = coverage_table(corpus);
  c.equal(table.total, 131u, "corpus size");
  // The counts give 79.4% and 67.2% for the first two attributes. The 78%
  // and 58% often quoted next to these counts do not follow from them, so
  // the exact ratios are asserted.
  const std::pair<Attribute, std::string> expected[] = {
      {Attribute::ApplicationScenario, "79.4"}, {Attribute::CarrierRequirements, "67.2"},
      {Attribute::Countermeasures, "51.9"},     {Attribute::Bandwidth, "52.7"},
      {Attribute::Robustness, "22.1"},          {Attribute::ControlProtocol, "5.3"},
  };
  for (const auto& [attribute, pct] : expected) {
    const auto covered = table[attribute].covered();
    c.expect(covered.has_value(), std::string(keyword(attribute)) + " ratio defined");
    if (covered) c.equal(format_percent(*covered), pct, std::string(keyword(attribute)));
  }
  within(c, start, kStatsBudget, "statistics");
}

void histogram_conservation(Check& c) {
  const auto corpus = synthetic_corpus(c);
  const auto catalog = load_catalog(open_corpus(testing::data_file("synthetic131")));
  c.expect(catalog.ok(), "synthetic catalog parses");
  if (!catalog.ok()) return;
  const auto h = pattern_histogram(corpus, *catalog.value);
  c.equal(h.leaf_total(), 130u, "leaf total");
  c.equal(h.unassigned, 1u, "unassigned");
  c.equal(h.unresolved, 0u, "unresolved");
}

// --- 7 ---------------------------------------------------------------------

void table_reproduction(Check& c) {
  const auto methods = testing::parse_fixture("comparison.nihd").methods;
  const std::vector<std::string> columns = {"application-scenario", "carrier-requirements", "countermeasures",
                                            "relation",             "directness",           "robustness",
                                            "bandwidth"};
  using Rows = std::vector<std::vector<std::string>>;
  const Rows collapsed = {
      {"Link quality", "Yes,combined", "Par", "Yes", "No", "No", "Yes", "Yes"},
      {"Sensor data", "", "Par", "Par", "Yes", "Par", "Yes", "Par"},
      {"SDP o-tag", "Yes,combined", "Par,combined", "No", "No", "No", "Par,combined", "Par,combined"},
      {"SDP a-tag", "", "", "No", "No", "No", "", ""},
  };
  const Rows full = {
      {"Link quality", "Yes,combined", "Par", "Yes", "No", "No", "Yes", "Yes"},
      {"Sensor data", "Yes,combined", "Par", "Par", "Yes", "Par", "Yes", "Par"},
      {"SDP o-tag", "Yes,combined", "Par,combined", "No", "No", "No", "Par,combined", "Par,combined"},
      {"SDP a-tag", "Yes,combined", "Par,combined", "No", "No", "No", "Par,combined", "Par,combined"},
  };
  const auto a = comparison_matrix(methods, std::span<const std::string>(columns), MatrixOptions{true});
  const auto b = comparison_matrix(methods, std::span<const std::string>(columns));
  c.expect(a.rows == collapsed, "collapsed matrix equals the table");
  c.expect(b.rows == full, "uncollapsed matrix labels every group member");
}

// --- 8 ---------------------------------------------------------------------

// Exhaustive search over (state, optimization visited) pairs. The product
// graph is finite, so every path from the initial state is covered.
void workflow_model_check(Check& c) {
  using Node = std::pair<WorkflowState, bool>;
  std::set<Node> seen{{WorkflowState{}, false}};
  std::vector<Node> stack(seen.begin(), seen.end());
  std::size_t big = 0, small = 0;
  while (!stack.empty()) {
    const auto [state, optimized] = stack.back();
    stack.pop_back();
    for (auto e : kWorkflowEvents) {
      const auto s = try_advance(state, e);
      if (!s) continue;
      bool opt = optimized;
      for (const auto& step : advance_trace(state, e)) opt = opt || step.stage == WorkflowStage::PatternOptimization;
      if (s->stage == WorkflowStage::Published) {
        if (s->published_as == Contribution::BigC) {
          ++big;
          c.expect(opt, "Published(Big-C) reached without optimization");
        } else {
          ++small;
          c.expect(!opt, "Published(small-c) reached through optimization");
        }
      }
      if (seen.insert({*s, opt}).second) stack.push_back({*s, opt});
    }
  }
  c.expect(big > 0, "Published(Big-C) reachable");
  c.expect(small > 0, "Published(small-c) reachable");
}

// --- 9 ---------------------------------------------------------------------

void node_paths(const PatternNode& node, PatternPath prefix, std::vector<PatternPath>& out) {
  auto here = prefix.child(node.name);
  out.push_back(here);
  for (const auto& child : node.children) node_paths(child, here, out);
}

std::vector<PatternPath> all_node_paths(const PatternCatalog& catalog) {
  std::vector<PatternPath> out;
  for (const auto& root : catalog.roots) node_paths(root, PatternPath(), out);
  return out;
}

void extension_fixpoint(Check& c) {
  std::mt19937 rng(131);
  auto catalog = seed_catalog();
  const auto base = testing::timing_example();
  for (int i = 0; i < kExtensions; ++i) {
    auto parents = all_node_paths(catalog);
    parents.push_back(PatternPath());
    const auto parent = parents[std::uniform_int_distribution<std::size_t>(0, parents.size() - 1)(rng)];
    const auto name = "Proposed Pattern " + std::to_string(i);

    auto d = base;
    d.pattern.path = parent.child(name);
    d.pattern.justifications = {{name, "Signals through a newly identified property."}};
    const auto verdict = assess(d, catalog);
    const auto* candidate = std::get_if<BigCCandidate>(&verdict);
    c.expect(candidate != nullptr, "extension " + std::to_string(i) + " is a Big-C candidate");
    if (!candidate) continue;
    c.expect(candidate->parent == parent, "extension " + std::to_string(i) + " parent");

    const auto before = all_node_paths(catalog);
    std::map<PatternPath, Resolution> prior;
    for (const auto& p : before) prior[p] = resolve_path(catalog, p);
    const auto extended = accept_big_c(catalog, *candidate);
    c.expect(std::holds_alternative<SmallC>(assess(d, extended)),
             "extension " + std::to_string(i) + " reassesses as small-c");
    // The only change allowed is the parent itself turning from leaf into
    // an internal node when it had no children.
    for (const auto& [p, r] : prior) {
      auto now = resolve_path(extended, p);
      if (p == parent && r.kind == ResolutionKind::ResolvedLeaf) {
        c.expect(now.kind == ResolutionKind::ResolvedInternal, "extended leaf becomes internal");
      } else {
        c.expect(now == r, "extension " + std::to_string(i) + " keeps " + p.to_string());
      }
    }
    c.equal(count_nodes(extended), count_nodes(catalog) + 1, "node count after extension");
    catalog = extended;
  }
}

// --- 10 --------------------------------------------------------------------

std::string run_stats(const fs::path& corpus) {
  std::ostringstream out, err;
  const int status = cli::run({"stats", corpus.string(), "--by-year", "--patterns", "--combined",
                               "--inconsistent", "--format", "json"},
                              out, err);
  return std::to_string(status) + "\n" + out.str() + err.str();
}

void determinism(Check& c) {
  testing::TempDir dir;
  fs::copy(testing::data_file("synthetic131"), dir.path(), fs::copy_options::recursive);
  const auto a = run_stats(dir.path());
  const auto b = run_stats(dir.path());
  c.expect(a.rfind("0\n", 0) == 0, "stats succeeds");
  c.expect(a == b, "stats output identical");

  const auto corpus = open_corpus(dir.path());
  build_index(corpus);
  const auto first = testing::read_text(dir.path() / "index.tsv");
  build_index(corpus);
  const auto second = testing::read_text(dir.path() / "index.tsv");
  c.expect(first == second, "index identical");
  c.expect(!first.empty(), "index written");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"golden chain rendering", chain_goldens},
      {"fixture validation and single-rule mutations", fixture_validation},
      {"parse/serialize round trip", round_trip},
      {"parser totality under byte mutations", parser_totality},
      {"coverage ratios of the synthetic corpus", coverage_ratios},
      {"pattern histogram conservation", histogram_conservation},
      {"comparison matrix reproduction", table_reproduction},
      {"review workflow model check", workflow_model_check},
      {"catalog extension fixpoint", extension_fixpoint},
      {"stats and index determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << ' ' << (i + 1) << ": " << criteria[i].first << '\n';
    for (const auto& f : check.failures) std::cout << "    " << f << '\n';
    if (!check.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
