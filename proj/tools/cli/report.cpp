#include "report.hpp"

#include "nihdl/taxonomy.hpp"

namespace nihdl::cli {

namespace {

class Section {
 public:
  explicit Section(std::string& out, std::string_view title) : out_(out) {
    out_ += '\n';
    out_ += title;
    out_ += '\n';
  }
  void field(std::string_view name, std::string_view value) {
    out_ += name;
    out_ += ": ";
    out_ += value;
    out_ += '\n';
  }
  void text(const std::optional<std::string>& value, int indent = 0) {
    if (!value || value->empty()) return;
    out_.append(static_cast<std::size_t>(indent), ' ');
    out_ += *value;
    out_ += '\n';
  }
  void shared(const std::optional<SharedGroup>& group) {
    if (group) field("evaluated together with", group->label);
  }

 private:
  std::string& out_;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

std::string binding_text(const CarrierBinding& binding) {
  std::string out(keyword(binding.kind));
  if (!binding.names.empty()) out += " (" + join(binding.names) + ")";
  return out;
}

void pattern_section(std::string& out, const PatternAssignment& p) {
  Section s(out, "Hiding Pattern");
  if (p.path.is_unassigned() || p.path.empty()) {
    out += "unassigned\n";
  } else {
    out += render_chain(p.path);
    out += '\n';
  }
  for (const auto& j : p.justifications) {
    out += "  " + j.element + ": " + j.rationale + '\n';
  }
}

void scenario_section(std::string& out, const std::optional<ApplicationScenario>& scenario) {
  Section s(out, "Application Scenario");
  if (!scenario) {
    s.field("status", "not described");
    return;
  }
  s.field("status", keyword(scenario->presence));
  if (scenario->purpose) {
    std::string purpose(keyword(scenario->purpose->kind));
    if (!scenario->purpose->other.empty()) purpose += " (" + scenario->purpose->other + ")";
    s.field("purpose", purpose);
  }
  s.shared(scenario->shared);
  s.text(scenario->text);
}

void carrier_section(std::string& out, const CarrierRequirements& c) {
  Section s(out, "Properties of the Carrier");
  s.field("status", keyword(c.presence));
  s.field("binding", binding_text(c.binding));
  for (const auto& condition : c.conditions) s.field("condition", condition);
  s.shared(c.shared);
  s.text(c.text);
}

void sender_section(std::string& out, const SenderProcess& p) {
  Section s(out, "Sender-side Process");
  s.field("relation", keyword(p.relation));
  s.field("sender location", keyword(p.sender_location));
  s.field("data location", keyword(p.data_location));
  s.field("generates cover traffic", keyword(p.generates_cover));
  s.text(p.text);
}

void receiver_section(std::string& out, const ReceiverProcess& p) {
  Section s(out, "Receiver-side Process");
  s.field("receiver location", keyword(p.receiver_location));
  s.text(p.text);
}

void channel_section(std::string& out, const ChannelProperties& c) {
  Section s(out, "Covert Channel Properties");
  std::vector<std::string> scenarios;
  for (auto scenario : c.scenarios) scenarios.emplace_back(keyword(scenario));
  s.field("scenarios", scenarios.empty() ? std::string("none") : join(scenarios));
  std::string directness(keyword(c.directness.kind));
  if (c.directness.kind == DirectnessKind::Indirect && !c.directness.intermediary_requirements.empty()) {
    directness += " (" + c.directness.intermediary_requirements + ")";
  }
  s.field("directness", directness);
  for (auto metric : kMetrics) {
    const auto& m = c.metric(metric);
    if (!m) {
      s.field(keyword(metric), "missing");
      continue;
    }
    std::string line(keyword(m->presence));
    if (m->value) line += ", " + *m->value;
    if (m->refers_to_countermeasures) line += ", see countermeasures";
    s.field(keyword(metric), line);
    if (m->shared) out += "  evaluated together with: " + m->shared->label + '\n';
    s.text(m->text, 2);
  }
}

void control_section(std::string& out, const std::optional<ControlProtocol>& control) {
  Section s(out, "Control Protocol");
  if (!control) {
    s.field("status", "not described");
    return;
  }
  s.field("status", keyword(control->presence));
  std::vector<std::string> features;
  for (auto f : control->features) features.emplace_back(keyword(f));
  if (!features.empty()) s.field("features", join(features));
  s.text(control->text);
}

void countermeasure_section(std::string& out, const MethodDescription& d) {
  Section s(out, "Countermeasures");
  if (d.countermeasures.empty()) out += "none discussed\n";
  for (const auto& e : d.countermeasures) {
    std::string line(keyword(e.applicability));
    line += e.evaluated ? ", evaluated" : ", not evaluated";
    s.field(keyword(e.kind), line);
    s.text(e.text, 2);
    if (e.limitations) out += "  limitations: " + *e.limitations + '\n';
  }
  if (d.warden) {
    s.field("warden", std::string(keyword(d.warden->placement)) + ", " +
                          std::string(keyword(d.warden->state)) + ", " +
                          std::string(keyword(d.warden->activity)));
  }
}

}  // namespace

std::string render_report(const MethodDescription& method) {
  const MethodDescription d = normalize(method);
  std::string out = d.name + '\n';
  if (d.source || d.year) {
    out += "source: " + d.source.value_or("-");
    if (d.year) out += " (" + std::to_string(*d.year) + ")";
    out += '\n';
  }
  pattern_section(out, d.pattern);
  scenario_section(out, d.scenario);
  carrier_section(out, d.carrier);
  sender_section(out, d.sender);
  receiver_section(out, d.receiver);
  channel_section(out, d.channel);
  control_section(out, d.control_protocol);
  countermeasure_section(out, d);
  return out;
}

std::string render_reports(const std::vector<MethodDescription>& methods) {
  std::string out;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (i > 0) out += std::string("\n") + kRuleLine + "\n\n";
    out += render_report(methods[i]);
  }
  return out;
}

}  // namespace nihdl::cli
