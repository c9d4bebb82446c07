#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "cli.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/model.hpp"
#include "nihdl/store.hpp"
#include "test_support.hpp"

namespace nihdl {
namespace {

namespace fs = std::filesystem;

// Code points per line, so that columns can be checked against the text.
std::vector<int> line_widths(std::string_view text) {
  std::vector<int> widths{0};
  for (unsigned char c : text) {
    if (c == '\n') {
      widths.push_back(0);
    } else if ((c & 0xC0) != 0x80) {
      ++widths.back();
    }
  }
  return widths;
}

bool in_bounds(const SourceLocation& loc, const std::vector<int>& widths) {
  if (loc.line < 1 || loc.line > static_cast<int>(widths.size())) return false;
  return loc.column >= 1 && loc.column <= widths[static_cast<std::size_t>(loc.line - 1)] + 1;
}

TEST(RoundTripProperty, ParseOfSerializeIsNormalize) {
  std::mt19937 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Document doc;
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < n; ++k) {
      auto d = testing::random_description(rng);
      d.name += " #" + std::to_string(k);
      doc.methods.push_back(std::move(d));
    }
    const auto text = serialize(doc);
    const auto parsed = parse_description(text, "gen.nihd");
    ASSERT_TRUE(parsed.ok()) << "iteration " << i << "\n"
                             << text << "\n"
                             << format_diagnostic(parsed.diagnostics.front());
    ASSERT_EQ(parsed.value->methods.size(), doc.methods.size());
    for (std::size_t k = 0; k < doc.methods.size(); ++k) {
      ASSERT_EQ(parsed.value->methods[k], normalize(doc.methods[k])) << "iteration " << i;
    }
    ASSERT_EQ(serialize(*parsed.value), text) << "iteration " << i;
  }
}

TEST(FuzzProperty, MutatedInputNeverCrashesOrHangs) {
  std::mt19937 rng(11);
  std::vector<std::string> seeds;
  for (const auto* f : {"ex1_interpacket.nihd", "ex2_dhcp.nihd", "comparison.nihd"}) {
    seeds.push_back(testing::read_text(testing::data_file(f)));
  }
  seeds.push_back(testing::read_text(testing::seed_catalog_file()));
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < 10000; ++i) {
    const auto& base = seeds[static_cast<std::size_t>(i) % seeds.size()];
    const auto text = testing::mutate_bytes(base, rng);
    const auto start = clock::now();
    const auto r = parse_description(text, "fuzz.nihd");
    const auto c = parse_catalog(text, "fuzz.nihc");
    const auto elapsed = clock::now() - start;
    ASSERT_LT(elapsed, std::chrono::milliseconds(100)) << "iteration " << i;
    ASSERT_EQ(r.ok(), !has_errors(r.diagnostics)) << "iteration " << i;
    ASSERT_EQ(c.ok(), !has_errors(c.diagnostics)) << "iteration " << i;
    const auto widths = line_widths(text);
    for (const auto* ds : {&r.diagnostics, &c.diagnostics}) {
      for (const auto& d : *ds) {
        ASSERT_TRUE(d.location) << "iteration " << i << ": " << d.code;
        ASSERT_TRUE(in_bounds(*d.location, widths))
            << "iteration " << i << ": " << format_diagnostic(d);
      }
    }
  }
}

TEST(DeterminismProperty, StatsAndIndexAreStable) {
  const auto corpus = testing::data_file("synthetic131");
  std::string first;
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    ASSERT_EQ(cli::run({"stats", corpus.string(), "--by-year", "--patterns", "--combined", "--inconsistent",
                        "--format", "json"},
                       out, err),
              0)
        << err.str();
    if (i == 0) {
      first = out.str();
    } else {
      EXPECT_EQ(out.str(), first);
    }
  }

  testing::TempDir dir;
  fs::copy(corpus, dir.path(), fs::copy_options::recursive);
  build_index(open_corpus(dir.path()));
  const auto a = testing::read_text(dir.path() / "index.tsv");
  build_index(open_corpus(dir.path()));
  EXPECT_EQ(testing::read_text(dir.path() / "index.tsv"), a);
}

}  // namespace
}  // namespace nihdl
