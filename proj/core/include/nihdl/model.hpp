#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nihdl/taxonomy.hpp"

namespace nihdl {

/// How completely an attribute is described. Ordered Absent < Partial < Full.
enum class Presence { Absent, Partial, Full };

/// Marks an attribute that one publication evaluates jointly for several
/// methods ("combined").
struct SharedGroup {
  std::string label;

  friend bool operator==(const SharedGroup&, const SharedGroup&) = default;
  friend auto operator<=>(const SharedGroup&, const SharedGroup&) = default;
};

struct PatternJustification {
  std::string element;
  std::string rationale;

  friend bool operator==(const PatternJustification&,
                         const PatternJustification&) = default;
};

struct PatternAssignment {
  PatternPath path;
  std::vector<PatternJustification> justifications;

  /// Rationale for `element`, if one was given.
  const PatternJustification* justification_for(std::string_view element) const;

  friend bool operator==(const PatternAssignment&,
                         const PatternAssignment&) = default;
};

enum class PurposeKind {
  GeneralPurpose,
  AnonymizationBreaking,
  AuthenticationPortKnocking,
  TracebackWatermarking,
  GameCheating,
  MalwareControlExfiltration,
  Other,
};

struct Purpose {
  PurposeKind kind = PurposeKind::GeneralPurpose;
  std::string other;  // only meaningful for PurposeKind::Other

  friend bool operator==(const Purpose&, const Purpose&) = default;
};

struct ApplicationScenario {
  Presence presence = Presence::Absent;
  std::optional<Purpose> purpose;
  std::optional<SharedGroup> shared;
  std::optional<std::string> text;

  friend bool operator==(const ApplicationScenario&,
                         const ApplicationScenario&) = default;
};

enum class BindingKind {
  SingleProtocol,
  ProtocolSet,
  FeatureBased,
  Generic,
  Unspecified,
};

/// What the method needs from its carrier. `names` holds the protocol for
/// SingleProtocol, the protocols (>= 2) for ProtocolSet and the features
/// (>= 1) for FeatureBased; it is empty otherwise.
struct CarrierBinding {
  BindingKind kind = BindingKind::Unspecified;
  std::vector<std::string> names;

  friend bool operator==(const CarrierBinding&, const CarrierBinding&) = default;
};

struct CarrierRequirements {
  Presence presence = Presence::Absent;
  CarrierBinding binding;
  std::vector<std::string> conditions;
  std::optional<SharedGroup> shared;
  std::optional<std::string> text;

  friend bool operator==(const CarrierRequirements&,
                         const CarrierRequirements&) = default;
};

enum class Relation { OneToOne, OneToMany, ManyToOne, ManyToMany, Unspecified };
enum class Location { Centralized, Distributed, Unspecified };
enum class Tristate { Yes, No, Unspecified };

struct SenderProcess {
  Relation relation = Relation::Unspecified;
  Location sender_location = Location::Unspecified;
  Location data_location = Location::Unspecified;
  Tristate generates_cover = Tristate::Unspecified;
  std::optional<std::string> text;

  friend bool operator==(const SenderProcess&, const SenderProcess&) = default;
};

struct ReceiverProcess {
  Location receiver_location = Location::Unspecified;
  std::optional<std::string> text;

  friend bool operator==(const ReceiverProcess&, const ReceiverProcess&) = default;
};

struct ChannelCharacteristic {
  Presence presence = Presence::Absent;
  std::optional<std::string> value;
  /// Only legal on the undetectability characteristic.
  bool refers_to_countermeasures = false;
  std::optional<SharedGroup> shared;
  std::optional<std::string> text;

  friend bool operator==(const ChannelCharacteristic&,
                         const ChannelCharacteristic&) = default;
};

enum class CommunicationScenario { EndToEnd, MitM, Hybrid };

enum class DirectnessKind { Direct, Indirect, Unspecified };

struct Directness {
  DirectnessKind kind = DirectnessKind::Unspecified;
  std::string intermediary_requirements;  // Indirect only

  friend bool operator==(const Directness&, const Directness&) = default;
};

enum class Metric { Bandwidth, Undetectability, Robustness, Cost };
inline constexpr std::array<Metric, 4> kMetrics = {
    Metric::Bandwidth, Metric::Undetectability, Metric::Robustness,
    Metric::Cost};

struct ChannelProperties {
  std::set<CommunicationScenario> scenarios;
  Directness directness;
  // Optional only so that hand-built values can be checked for missing
  // blocks; parsed descriptions always carry all four.
  std::optional<ChannelCharacteristic> bandwidth;
  std::optional<ChannelCharacteristic> undetectability;
  std::optional<ChannelCharacteristic> robustness;
  std::optional<ChannelCharacteristic> cost;

  const std::optional<ChannelCharacteristic>& metric(Metric m) const;
  std::optional<ChannelCharacteristic>& metric(Metric m);

  friend bool operator==(const ChannelProperties&,
                         const ChannelProperties&) = default;
};

enum class ControlFeature {
  Reliability,
  PeerDiscovery,
  DynamicRouting,
  SessionManagement,
  Adaptiveness,
  AppLayerFeatures,
};

struct ControlProtocol {
  Presence presence = Presence::Absent;
  std::set<ControlFeature> features;
  std::optional<std::string> text;

  friend bool operator==(const ControlProtocol&, const ControlProtocol&) = default;
};

/// Declaration order is the canonical entry order.
enum class CountermeasureKind { Elimination, Limitation, Detection, ProtocolRevision };
inline constexpr std::array<CountermeasureKind, 4> kCountermeasureKinds = {
    CountermeasureKind::Elimination, CountermeasureKind::Limitation,
    CountermeasureKind::Detection, CountermeasureKind::ProtocolRevision};

enum class Applicability { Applicable, NotApplicable };

struct CountermeasureEntry {
  CountermeasureKind kind = CountermeasureKind::Detection;
  Applicability applicability = Applicability::Applicable;
  bool evaluated = false;
  std::optional<std::string> limitations;
  std::optional<std::string> text;

  friend bool operator==(const CountermeasureEntry&,
                         const CountermeasureEntry&) = default;
};

enum class WardenState { Stateful, Stateless, Unspecified };
enum class WardenActivity { Active, Passive, Unspecified };

struct WardenProfile {
  Location placement = Location::Unspecified;
  WardenState state = WardenState::Unspecified;
  WardenActivity activity = WardenActivity::Unspecified;

  friend bool operator==(const WardenProfile&, const WardenProfile&) = default;
};

inline constexpr int kMinYear = 1980;
inline constexpr int kMaxYear = 2100;

/// One hiding method: general information, process, countermeasures.
struct MethodDescription {
  std::string name;
  std::optional<std::string> source;
  std::optional<int> year;

  PatternAssignment pattern;
  std::optional<ApplicationScenario> scenario;
  CarrierRequirements carrier;

  SenderProcess sender;
  ReceiverProcess receiver;
  ChannelProperties channel;
  std::optional<ControlProtocol> control_protocol;

  std::vector<CountermeasureEntry> countermeasures;
  std::optional<WardenProfile> warden;

  friend bool operator==(const MethodDescription&,
                         const MethodDescription&) = default;
};

/// The six attributes tracked by corpus coverage analysis.
enum class Attribute {
  ApplicationScenario,
  CarrierRequirements,
  Countermeasures,
  Bandwidth,
  Robustness,
  ControlProtocol,
};
inline constexpr std::array<Attribute, 6> kTrackedAttributes = {
    Attribute::ApplicationScenario, Attribute::CarrierRequirements,
    Attribute::Countermeasures,     Attribute::Bandwidth,
    Attribute::Robustness,          Attribute::ControlProtocol};

struct AttributePresence {
  Presence presence = Presence::Absent;
  std::optional<SharedGroup> shared;

  friend bool operator==(const AttributePresence&,
                         const AttributePresence&) = default;
};

/// Countermeasures: Full with at least one evaluated entry, Partial with
/// entries but none evaluated, Absent with none. Other attributes report the
/// stored presence, Absent when their optional block is missing.
AttributePresence attribute_presence(const MethodDescription& description,
                                     Attribute attribute);

/// Canonical ordering: countermeasures by kind (stable), justifications by
/// the position of their element in the path (unknown elements last).
MethodDescription normalize(MethodDescription description);

// Keyword spellings shared by the file format and the reports.
std::string_view keyword(Presence value);
std::string_view keyword(PurposeKind value);
std::string_view keyword(BindingKind value);
std::string_view keyword(Relation value);
std::string_view keyword(Location value);
std::string_view keyword(Tristate value);
std::string_view keyword(CommunicationScenario value);
std::string_view keyword(DirectnessKind value);
std::string_view keyword(Metric value);
std::string_view keyword(ControlFeature value);
std::string_view keyword(CountermeasureKind value);
std::string_view keyword(Applicability value);
std::string_view keyword(WardenState value);
std::string_view keyword(WardenActivity value);
std::string_view keyword(Attribute value);

/// Looks up an enumerator by its keyword. Specialized for every enum above.
template <typename Enum>
std::optional<Enum> from_keyword(std::string_view word);

}  // namespace nihdl
