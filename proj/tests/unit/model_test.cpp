#include "nihdl/model.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace nihdl {
namespace {

TEST(AttributePresenceTest, CountermeasuresFollowEvaluation) {
  MethodDescription d;
  EXPECT_EQ(attribute_presence(d, Attribute::Countermeasures).presence, Presence::Absent);

  d.countermeasures.push_back({CountermeasureKind::Limitation, Applicability::Applicable, false, {}, {}});
  EXPECT_EQ(attribute_presence(d, Attribute::Countermeasures).presence, Presence::Partial);

  d.countermeasures.push_back({CountermeasureKind::Detection, Applicability::Applicable, true, {}, {}});
  EXPECT_EQ(attribute_presence(d, Attribute::Countermeasures).presence, Presence::Full);
}

TEST(AttributePresenceTest, MissingOptionalBlocksAreAbsent) {
  MethodDescription d;
  EXPECT_EQ(attribute_presence(d, Attribute::ApplicationScenario).presence, Presence::Absent);
  EXPECT_EQ(attribute_presence(d, Attribute::ControlProtocol).presence, Presence::Absent);
  EXPECT_EQ(attribute_presence(d, Attribute::Bandwidth).presence, Presence::Absent);
}

TEST(AttributePresenceTest, SharedGroupIsReported) {
  MethodDescription d;
  d.channel.robustness = ChannelCharacteristic{Presence::Partial, {}, false, SharedGroup{"g"}, {}};
  const auto p = attribute_presence(d, Attribute::Robustness);
  EXPECT_EQ(p.presence, Presence::Partial);
  ASSERT_TRUE(p.shared);
  EXPECT_EQ(p.shared->label, "g");
}

TEST(AttributePresenceTest, TimingExample) {
  const auto d = testing::timing_example();
  EXPECT_EQ(attribute_presence(d, Attribute::ApplicationScenario).presence, Presence::Full);
  EXPECT_EQ(attribute_presence(d, Attribute::CarrierRequirements).presence, Presence::Full);
  EXPECT_EQ(attribute_presence(d, Attribute::Countermeasures).presence, Presence::Full);
  EXPECT_EQ(attribute_presence(d, Attribute::Bandwidth).presence, Presence::Full);
  EXPECT_EQ(attribute_presence(d, Attribute::Robustness).presence, Presence::Full);
  EXPECT_EQ(attribute_presence(d, Attribute::ControlProtocol).presence, Presence::Absent);
}

TEST(NormalizeTest, SortsCountermeasuresStably) {
  const auto d = normalize(testing::dhcp_example());
  ASSERT_EQ(d.countermeasures.size(), 3u);
  EXPECT_EQ(d.countermeasures[0].kind, CountermeasureKind::Elimination);
  EXPECT_EQ(d.countermeasures[1].kind, CountermeasureKind::Limitation);
  EXPECT_EQ(d.countermeasures[2].kind, CountermeasureKind::Detection);

  MethodDescription two;
  two.countermeasures = {{CountermeasureKind::Detection, Applicability::Applicable, false, {}, "first"},
                         {CountermeasureKind::Elimination, Applicability::Applicable, false, {}, {}},
                         {CountermeasureKind::Detection, Applicability::Applicable, false, {}, "second"}};
  const auto n = normalize(two);
  EXPECT_EQ(n.countermeasures[1].text, "first");
  EXPECT_EQ(n.countermeasures[2].text, "second");
}

TEST(NormalizeTest, OrdersJustificationsByPath) {
  MethodDescription d;
  d.pattern.path = PatternPath::from_text("A / B / C");
  d.pattern.justifications = {{"C", "c"}, {"A", "a"}, {"B", "b"}};
  const auto n = normalize(d);
  EXPECT_EQ(n.pattern.justifications[0].element, "A");
  EXPECT_EQ(n.pattern.justifications[1].element, "B");
  EXPECT_EQ(n.pattern.justifications[2].element, "C");
}

TEST(NormalizeTest, Idempotent) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto n = normalize(testing::random_description(rng));
    EXPECT_EQ(normalize(n), n);
  }
}

TEST(KeywordTest, RoundTripsEveryEnumerator) {
  for (auto p : {Presence::Absent, Presence::Partial, Presence::Full}) {
    EXPECT_EQ(from_keyword<Presence>(keyword(p)), p);
  }
  for (auto r : {Relation::OneToOne, Relation::OneToMany, Relation::ManyToOne, Relation::ManyToMany,
                 Relation::Unspecified}) {
    EXPECT_EQ(from_keyword<Relation>(keyword(r)), r);
  }
  for (auto k : kCountermeasureKinds) EXPECT_EQ(from_keyword<CountermeasureKind>(keyword(k)), k);
  for (auto a : kTrackedAttributes) EXPECT_EQ(from_keyword<Attribute>(keyword(a)), a);
  for (auto m : kMetrics) EXPECT_EQ(from_keyword<Metric>(keyword(m)), m);
  EXPECT_EQ(keyword(Relation::ManyToOne), "n:1");
  EXPECT_EQ(keyword(Tristate::Yes), "true");
  EXPECT_EQ(keyword(PurposeKind::AuthenticationPortKnocking), "port-knocking");
  EXPECT_FALSE(from_keyword<Presence>("mostly"));
}

}  // namespace
}  // namespace nihdl
