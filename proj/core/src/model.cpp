#include "nihdl/model.hpp"

#include <algorithm>
#include <utility>

namespace nihdl {

namespace {

template <typename Enum, std::size_t N>
using KeywordTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr KeywordTable<Presence, 3> kPresence{{
    {Presence::Full, "full"}, {Presence::Partial, "partial"}, {Presence::Absent, "absent"}}};

constexpr KeywordTable<PurposeKind, 7> kPurpose{{
    {PurposeKind::GeneralPurpose, "general-purpose"},
    {PurposeKind::AnonymizationBreaking, "anonymization-breaking"},
    {PurposeKind::AuthenticationPortKnocking, "port-knocking"},
    {PurposeKind::TracebackWatermarking, "traceback-watermarking"},
    {PurposeKind::GameCheating, "game-cheating"},
    {PurposeKind::MalwareControlExfiltration, "malware-c2-exfiltration"},
    {PurposeKind::Other, "other"}}};

constexpr KeywordTable<BindingKind, 5> kBinding{{
    {BindingKind::SingleProtocol, "single-protocol"},
    {BindingKind::ProtocolSet, "protocol-set"},
    {BindingKind::FeatureBased, "feature-based"},
    {BindingKind::Generic, "generic"},
    {BindingKind::Unspecified, "unspecified"}}};

constexpr KeywordTable<Relation, 5> kRelation{{
    {Relation::OneToOne, "1:1"}, {Relation::OneToMany, "1:m"},
    {Relation::ManyToOne, "n:1"}, {Relation::ManyToMany, "n:m"},
    {Relation::Unspecified, "unspecified"}}};

constexpr KeywordTable<Location, 3> kLocation{{
    {Location::Centralized, "centralized"}, {Location::Distributed, "distributed"},
    {Location::Unspecified, "unspecified"}}};

constexpr KeywordTable<Tristate, 3> kTristate{{
    {Tristate::Yes, "true"}, {Tristate::No, "false"}, {Tristate::Unspecified, "unspecified"}}};

constexpr KeywordTable<CommunicationScenario, 3> kScenario{{
    {CommunicationScenario::EndToEnd, "end-to-end"},
    {CommunicationScenario::MitM, "mitm"},
    {CommunicationScenario::Hybrid, "hybrid"}}};

constexpr KeywordTable<DirectnessKind, 3> kDirectness{{
    {DirectnessKind::Direct, "direct"}, {DirectnessKind::Indirect, "indirect"},
    {DirectnessKind::Unspecified, "unspecified"}}};

constexpr KeywordTable<Metric, 4> kMetric{{
    {Metric::Bandwidth, "bandwidth"}, {Metric::Undetectability, "undetectability"},
    {Metric::Robustness, "robustness"}, {Metric::Cost, "cost"}}};

constexpr KeywordTable<ControlFeature, 6> kFeature{{
    {ControlFeature::Reliability, "reliability"},
    {ControlFeature::PeerDiscovery, "peer-discovery"},
    {ControlFeature::DynamicRouting, "dynamic-routing"},
    {ControlFeature::SessionManagement, "session-management"},
    {ControlFeature::Adaptiveness, "adaptiveness"},
    {ControlFeature::AppLayerFeatures, "app-layer"}}};

constexpr KeywordTable<CountermeasureKind, 4> kCountermeasure{{
    {CountermeasureKind::Elimination, "elimination"},
    {CountermeasureKind::Limitation, "limitation"},
    {CountermeasureKind::Detection, "detection"},
    {CountermeasureKind::ProtocolRevision, "protocol-revision"}}};

constexpr KeywordTable<Applicability, 2> kApplicability{{
    {Applicability::Applicable, "applicable"},
    {Applicability::NotApplicable, "not-applicable"}}};

constexpr KeywordTable<WardenState, 3> kWardenState{{
    {WardenState::Stateful, "stateful"}, {WardenState::Stateless, "stateless"},
    {WardenState::Unspecified, "unspecified"}}};

constexpr KeywordTable<WardenActivity, 3> kWardenActivity{{
    {WardenActivity::Active, "active"}, {WardenActivity::Passive, "passive"},
    {WardenActivity::Unspecified, "unspecified"}}};

constexpr KeywordTable<Attribute, 6> kAttribute{{
    {Attribute::ApplicationScenario, "application-scenario"},
    {Attribute::CarrierRequirements, "carrier-requirements"},
    {Attribute::Countermeasures, "countermeasures"},
    {Attribute::Bandwidth, "bandwidth"},
    {Attribute::Robustness, "robustness"},
    {Attribute::ControlProtocol, "control-protocol"}}};

template <typename Enum, std::size_t N>
std::string_view lookup(const KeywordTable<Enum, N>& table, Enum value) {
  for (const auto& [e, word] : table) {
    if (e == value) return word;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> reverse_lookup(const KeywordTable<Enum, N>& table, std::string_view word) {
  for (const auto& [e, w] : table) {
    if (w == word) return e;
  }
  return std::nullopt;
}

AttributePresence from_block(const std::optional<ChannelCharacteristic>& c) {
  if (!c) return {};
  return {c->presence, c->shared};
}

}  // namespace

std::string_view keyword(Presence v) { return lookup(kPresence, v); }
std::string_view keyword(PurposeKind v) { return lookup(kPurpose, v); }
std::string_view keyword(BindingKind v) { return lookup(kBinding, v); }
std::string_view keyword(Relation v) { return lookup(kRelation, v); }
std::string_view keyword(Location v) { return lookup(kLocation, v); }
std::string_view keyword(Tristate v) { return lookup(kTristate, v); }
std::string_view keyword(CommunicationScenario v) { return lookup(kScenario, v); }
std::string_view keyword(DirectnessKind v) { return lookup(kDirectness, v); }
std::string_view keyword(Metric v) { return lookup(kMetric, v); }
std::string_view keyword(ControlFeature v) { return lookup(kFeature, v); }
std::string_view keyword(CountermeasureKind v) { return lookup(kCountermeasure, v); }
std::string_view keyword(Applicability v) { return lookup(kApplicability, v); }
std::string_view keyword(WardenState v) { return lookup(kWardenState, v); }
std::string_view keyword(WardenActivity v) { return lookup(kWardenActivity, v); }
std::string_view keyword(Attribute v) { return lookup(kAttribute, v); }

template <> std::optional<Presence> from_keyword(std::string_view w) { return reverse_lookup(kPresence, w); }
template <> std::optional<PurposeKind> from_keyword(std::string_view w) { return reverse_lookup(kPurpose, w); }
template <> std::optional<BindingKind> from_keyword(std::string_view w) { return reverse_lookup(kBinding, w); }
template <> std::optional<Relation> from_keyword(std::string_view w) { return reverse_lookup(kRelation, w); }
template <> std::optional<Location> from_keyword(std::string_view w) { return reverse_lookup(kLocation, w); }
template <> std::optional<Tristate> from_keyword(std::string_view w) { return reverse_lookup(kTristate, w); }
template <> std::optional<CommunicationScenario> from_keyword(std::string_view w) { return reverse_lookup(kScenario, w); }
template <> std::optional<DirectnessKind> from_keyword(std::string_view w) { return reverse_lookup(kDirectness, w); }
template <> std::optional<Metric> from_keyword(std::string_view w) { return reverse_lookup(kMetric, w); }
template <> std::optional<ControlFeature> from_keyword(std::string_view w) { return reverse_lookup(kFeature, w); }
template <> std::optional<CountermeasureKind> from_keyword(std::string_view w) { return reverse_lookup(kCountermeasure, w); }
template <> std::optional<Applicability> from_keyword(std::string_view w) { return reverse_lookup(kApplicability, w); }
template <> std::optional<WardenState> from_keyword(std::string_view w) { return reverse_lookup(kWardenState, w); }
template <> std::optional<WardenActivity> from_keyword(std::string_view w) { return reverse_lookup(kWardenActivity, w); }
template <> std::optional<Attribute> from_keyword(std::string_view w) { return reverse_lookup(kAttribute, w); }

const PatternJustification* PatternAssignment::justification_for(
    std::string_view element) const {
  auto it = std::find_if(justifications.begin(), justifications.end(),
                         [&](const PatternJustification& j) { return j.element == element; });
  return it == justifications.end() ? nullptr : &*it;
}

const std::optional<ChannelCharacteristic>& ChannelProperties::metric(Metric m) const {
  switch (m) {
    case Metric::Bandwidth: return bandwidth;
    case Metric::Undetectability: return undetectability;
    case Metric::Robustness: return robustness;
    case Metric::Cost: return cost;
  }
  return bandwidth;
}

std::optional<ChannelCharacteristic>& ChannelProperties::metric(Metric m) {
  return const_cast<std::optional<ChannelCharacteristic>&>(
      std::as_const(*this).metric(m));
}

AttributePresence attribute_presence(const MethodDescription& d, Attribute attribute) {
  switch (attribute) {
    case Attribute::ApplicationScenario:
      if (!d.scenario) return {};
      return {d.scenario->presence, d.scenario->shared};
    case Attribute::CarrierRequirements:
      return {d.carrier.presence, d.carrier.shared};
    case Attribute::Countermeasures: {
      if (d.countermeasures.empty()) return {};
      const bool any_evaluated =
          std::any_of(d.countermeasures.begin(), d.countermeasures.end(),
                      [](const CountermeasureEntry& e) { return e.evaluated; });
      return {any_evaluated ? Presence::Full : Presence::Partial, std::nullopt};
    }
    case Attribute::Bandwidth:
      return from_block(d.channel.bandwidth);
    case Attribute::Robustness:
      return from_block(d.channel.robustness);
    case Attribute::ControlProtocol:
      if (!d.control_protocol) return {};
      return {d.control_protocol->presence, std::nullopt};
  }
  return {};
}

MethodDescription normalize(MethodDescription d) {
  std::stable_sort(d.countermeasures.begin(), d.countermeasures.end(),
                   [](const CountermeasureEntry& a, const CountermeasureEntry& b) {
                     return a.kind < b.kind;
                   });

  const auto& elements = d.pattern.path.elements();
  auto rank = [&](const PatternJustification& j) {
    auto it = std::find(elements.begin(), elements.end(), j.element);
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::stable_sort(d.pattern.justifications.begin(), d.pattern.justifications.end(),
                   [&](const PatternJustification& a, const PatternJustification& b) {
                     return rank(a) < rank(b);
                   });
  return d;
}

}  // namespace nihdl
