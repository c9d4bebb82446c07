#include <gtest/gtest.h>

#include <set>

#include "nihdl/dsl.hpp"
#include "test_support.hpp"

namespace nihdl {
namespace {

std::string fixture(const std::string& name) { return testing::read_text(testing::data_file(name)); }

std::string replace_once(std::string text, std::string_view from, std::string_view to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
  return text;
}

std::set<std::string> codes(const std::vector<Diagnostic>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) out.insert(d.code);
  return out;
}

TEST(ParseDescriptionTest, TimingFixtureMatchesModel) {
  auto r = parse_description(fixture("ex1_interpacket.nihd"), "ex1_interpacket.nihd");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_EQ(r.value->methods.size(), 1u);
  EXPECT_EQ(r.value->methods[0].name, "Model-based inter-packet gap channel");
  EXPECT_EQ(r.value->methods[0], testing::timing_example());
  EXPECT_EQ(r.value->source_file, "ex1_interpacket.nihd");
}

TEST(ParseDescriptionTest, DhcpFixtureKeepsAuthorOrder) {
  auto r = parse_description(fixture("ex2_dhcp.nihd"), "ex2_dhcp.nihd");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->methods.at(0), testing::dhcp_example());
}

TEST(ParseDescriptionTest, EmptyInputHasNoMethods) {
  for (std::string_view text : {"", "   \n", "# only a comment\n", "nihdl-version 1\n"}) {
    auto r = parse_description(text, "e");
    ASSERT_TRUE(r.ok()) << text;
    EXPECT_TRUE(r.value->methods.empty());
  }
}

TEST(ParseDescriptionTest, UnexpectedEndOfInput) {
  auto r = parse_description("method \"x\" {", "x.nihd");
  ASSERT_FALSE(r.ok());
  ASSERT_FALSE(r.diagnostics.empty());
  const auto& d = r.diagnostics.front();
  EXPECT_EQ(d.code, "E001");
  ASSERT_TRUE(d.location);
  EXPECT_EQ(d.location->line, 1);
  EXPECT_EQ(d.location->column, 13);
}

TEST(ParseDescriptionTest, UnknownRelationToken) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"), "relation: 1:1", "relation: 2:2");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E004");
  EXPECT_EQ(r.diagnostics[0].location->line, 30);
  EXPECT_EQ(r.diagnostics[0].location->column, 17);
}

TEST(ParseDescriptionTest, UnknownEnumWordKeepsParsing) {
  auto text = replace_once(fixture("ex1_interpacket.nihd"), "status: partial", "status: mostly");
  text = replace_once(text, "location: centralized", "location: everywhere");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E004"});
}

TEST(ParseDescriptionTest, DuplicateKey) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"), "year: 2008", "year: 2008\n  year: 2009");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E003"});
  EXPECT_EQ(r.diagnostics[0].location->line, 7);
}

TEST(ParseDescriptionTest, MissingRequiredKey) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"), "      generates-cover: true\n", "");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E005"});
}

TEST(ParseDescriptionTest, MissingSenderBlock) {
  const auto full = fixture("ex1_interpacket.nihd");
  const auto start = full.find("    sender {");
  const auto end = full.find("    receiver {");
  ASSERT_NE(start, std::string::npos);
  auto text = full;
  text.erase(start, end - start);
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E005"});
}

TEST(ParseDescriptionTest, RefOnlyOnUndetectability) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"),
                                 "value: \"5-20 bits per second\"",
                                 "value: \"5-20 bits per second\"\n        ref: countermeasures");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E005"});
}

TEST(ParseDescriptionTest, UnknownKeyAborts) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"), "year: 2008", "yaer: 2008");
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics.back().code, "E001");
}

TEST(ParseDescriptionTest, ModelInvariants) {
  const auto base = fixture("ex2_dhcp.nihd");
  auto year = parse_description(replace_once(base, "year: 2012", "year: 1900"), "f");
  EXPECT_EQ(codes(year.diagnostics), std::set<std::string>{"E007"});

  auto set = parse_description(
      replace_once(base, "single-protocol(\"DHCP\")", "protocol-set(\"DHCP\")"), "f");
  EXPECT_EQ(codes(set.diagnostics), std::set<std::string>{"E007"});

  auto features = parse_description(
      replace_once(base, "status: absent\n", "status: absent\n      feature: reliability\n"), "f");
  EXPECT_EQ(codes(features.diagnostics), std::set<std::string>{"E007"});

  auto stray = parse_description(
      replace_once(base, "justify \"Sequence Pattern\"", "justify \"Elsewhere\""), "f");
  EXPECT_EQ(codes(stray.diagnostics), std::set<std::string>{"E007"});

  auto name = parse_description(replace_once(base, "Sequence Pattern /", " Sequence Pattern /"), "f");
  EXPECT_EQ(codes(name.diagnostics), std::set<std::string>{"E007"});
}

TEST(ParseDescriptionTest, DuplicateScenarioAndJustify) {
  const auto base = fixture("ex1_interpacket.nihd");
  auto scen = parse_description(replace_once(base, "[end-to-end, mitm, hybrid]", "[mitm, mitm]"), "f");
  EXPECT_EQ(codes(scen.diagnostics), std::set<std::string>{"E003"});

  auto just = parse_description(
      replace_once(base, "justify \"Inter-arrival Time Pattern\"", "justify \"Network Covert Timing Channels\""),
      "f");
  EXPECT_EQ(codes(just.diagnostics), std::set<std::string>{"E003"});
}

TEST(ParseDescriptionTest, KeysInAnyOrder) {
  const auto text = replace_once(fixture("ex1_interpacket.nihd"),
                                 "      relation: 1:1\n      location: centralized\n",
                                 "      location: centralized\n      relation: 1:1\n");
  auto r = parse_description(text, "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->methods[0], testing::timing_example());
}

TEST(ParseDescriptionTest, CrlfInput) {
  std::string text;
  for (char c : fixture("ex2_dhcp.nihd")) {
    if (c == '\n') text += '\r';
    text += c;
  }
  auto r = parse_description(text, "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->methods[0], testing::dhcp_example());
}

TEST(ParseDescriptionTest, UnassignedAndEmptyPaths) {
  const auto base = fixture("ex2_dhcp.nihd");
  const auto start = base.find("      path: ");
  const auto end = base.find('\n', start);
  auto with_path = [&](const std::string& line) {
    auto text = base;
    text.replace(start, end - start, line);
    // Justifications would name elements that are no longer on the path.
    while (true) {
      auto j = text.find("      justify ");
      if (j == std::string::npos) break;
      text.erase(j, text.find('\n', j) - j + 1);
    }
    return parse_description(text, "f");
  };
  auto unassigned = with_path("      path: unassigned");
  ASSERT_TRUE(unassigned.ok());
  EXPECT_TRUE(unassigned.value->methods[0].pattern.path.is_unassigned());

  auto empty = with_path("      path: \"\"");
  ASSERT_TRUE(empty.ok());
  EXPECT_TRUE(empty.value->methods[0].pattern.path.empty());
}

TEST(ParseDescriptionTest, DiagnosticsInsideInput) {
  const std::string text = "method \"a\" { source: \"x\"\n  general { pattern { path: 12 } }\n";
  auto r = parse_description(text, "f");
  ASSERT_FALSE(r.ok());
  for (const auto& d : r.diagnostics) {
    ASSERT_TRUE(d.location);
    EXPECT_GE(d.location->line, 1);
    EXPECT_LE(d.location->line, 3);
    EXPECT_GE(d.location->column, 1);
    EXPECT_EQ(d.location->file, "f");
  }
}

TEST(ParseDescriptionTest, LocationsRecorded) {
  auto r = parse_description(fixture("ex1_interpacket.nihd"), "f");
  ASSERT_TRUE(r.ok());
  const auto* loc = r.value->locations_for(0);
  ASSERT_NE(loc, nullptr);
  EXPECT_EQ(loc->method.line, 4);
  EXPECT_EQ(loc->pattern.line, 9);
  EXPECT_EQ(loc->entries.size(), 3u);
  EXPECT_EQ(r.value->locations_for(1), nullptr);
}

TEST(ParseCatalogTest, SeedFileMatchesBuiltIn) {
  auto r = parse_catalog(testing::read_text(testing::seed_catalog_file()), "seed.nihc");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.value, seed_catalog());
}

TEST(ParseCatalogTest, EmptyCatalogParses) {
  auto r = parse_catalog("catalog { }", "c");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.value->empty());
  EXPECT_FALSE(r.value->label);
}

TEST(ParseCatalogTest, DuplicateSibling) {
  auto r = parse_catalog("catalog { node \"A\" {} node \"A\" {} }", "c");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(codes(r.diagnostics), std::set<std::string>{"E003"});
  EXPECT_EQ(r.diagnostics[0].location->column, 28);
}

TEST(ParseCatalogTest, SameNameUnderDifferentParentsIsFine) {
  auto r = parse_catalog("catalog \"x\" { node \"A\" { node \"C\" {} } node \"B\" { node \"C\" {} } }", "c");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.value->label, "x");
}

TEST(ParseCatalogTest, Errors) {
  EXPECT_EQ(codes(parse_catalog("catalog { node \"a/b\" {} }", "c").diagnostics),
            std::set<std::string>{"E007"});
  EXPECT_EQ(codes(parse_catalog("catalog { node \"A\" { }", "c").diagnostics),
            std::set<std::string>{"E001"});
  EXPECT_EQ(codes(parse_catalog("catalog {} catalog {}", "c").diagnostics),
            std::set<std::string>{"E001"});
  EXPECT_EQ(codes(parse_catalog("", "c").diagnostics), std::set<std::string>{"E001"});
}

TEST(ParseCatalogTest, DeepNestingIsBounded) {
  std::string text = "catalog {";
  for (int i = 0; i < 5000; ++i) text += " node \"n\" {";
  auto r = parse_catalog(text, "c");
  EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace nihdl
