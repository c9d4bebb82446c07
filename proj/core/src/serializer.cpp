#include "nihdl/dsl.hpp"

namespace nihdl {

namespace {

class Writer {
 public:
  void line(std::string_view text) {
    out_.append(static_cast<std::size_t>(depth_) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }
  void open(std::string_view head) {
    line(std::string(head) + " {");
    ++depth_;
  }
  void close() {
    --depth_;
    line("}");
  }
  void key(std::string_view name, std::string_view value) {
    line(std::string(name) + ": " + std::string(value));
  }
  void key_string(std::string_view name, const std::optional<std::string>& value) {
    if (value) key(name, quote(*value));
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  int depth_ = 0;
};

std::string joined_strings(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += quote(names[i]);
  }
  return out + ")";
}

void write_shared(Writer& w, const std::optional<SharedGroup>& shared) {
  if (shared) w.key("shared-with", quote(shared->label));
}

void write_pattern(Writer& w, const PatternAssignment& p) {
  w.open("pattern");
  w.key("path", p.path.is_unassigned() ? std::string("unassigned") : quote(p.path.to_string()));
  for (const auto& j : p.justifications) {
    w.line("justify " + quote(j.element) + ": " + quote(j.rationale));
  }
  w.close();
}

void write_scenario(Writer& w, const ApplicationScenario& s) {
  w.open("application-scenario");
  w.key("status", keyword(s.presence));
  if (s.purpose) {
    std::string value(keyword(s.purpose->kind));
    if (s.purpose->kind == PurposeKind::Other && !s.purpose->other.empty()) {
      value += "(" + quote(s.purpose->other) + ")";
    }
    w.key("purpose", value);
  }
  write_shared(w, s.shared);
  w.key_string("text", s.text);
  w.close();
}

void write_carrier(Writer& w, const CarrierRequirements& c) {
  w.open("carrier-requirements");
  w.key("status", keyword(c.presence));
  switch (c.binding.kind) {
    case BindingKind::SingleProtocol:
    case BindingKind::ProtocolSet:
    case BindingKind::FeatureBased:
      w.key("binding", std::string(keyword(c.binding.kind)) + joined_strings(c.binding.names));
      break;
    case BindingKind::Generic:
      w.key("binding", "generic");
      break;
    case BindingKind::Unspecified:
      break;
  }
  for (const auto& condition : c.conditions) w.key("condition", quote(condition));
  write_shared(w, c.shared);
  w.key_string("text", c.text);
  w.close();
}

void write_metric(Writer& w, Metric metric, const ChannelCharacteristic& c) {
  w.open(keyword(metric));
  w.key("status", keyword(c.presence));
  w.key_string("value", c.value);
  if (c.refers_to_countermeasures) w.key("ref", "countermeasures");
  write_shared(w, c.shared);
  w.key_string("text", c.text);
  w.close();
}

void write_channel(Writer& w, const ChannelProperties& c) {
  w.open("channel");
  std::string scenarios = "[";
  bool first = true;
  for (auto s : c.scenarios) {
    if (!first) scenarios += ", ";
    scenarios += keyword(s);
    first = false;
  }
  w.key("scenario", scenarios + "]");
  if (c.directness.kind == DirectnessKind::Indirect) {
    w.key("directness", "indirect(" + quote(c.directness.intermediary_requirements) + ")");
  } else {
    w.key("directness", keyword(c.directness.kind));
  }
  for (auto metric : kMetrics) {
    if (const auto& m = c.metric(metric)) write_metric(w, metric, *m);
  }
  w.close();
}

void write_process(Writer& w, const MethodDescription& m) {
  w.open("process");
  w.open("sender");
  w.key("relation", keyword(m.sender.relation));
  w.key("location", keyword(m.sender.sender_location));
  w.key("data-location", keyword(m.sender.data_location));
  w.key("generates-cover", keyword(m.sender.generates_cover));
  w.key_string("text", m.sender.text);
  w.close();

  w.open("receiver");
  w.key("location", keyword(m.receiver.receiver_location));
  w.key_string("text", m.receiver.text);
  w.close();

  write_channel(w, m.channel);

  if (m.control_protocol) {
    const auto& p = *m.control_protocol;
    w.open("control-protocol");
    w.key("status", keyword(p.presence));
    for (auto f : p.features) w.key("feature", keyword(f));
    w.key_string("text", p.text);
    w.close();
  }
  w.close();
}

void write_countermeasures(Writer& w, const MethodDescription& m) {
  w.open("countermeasures");
  for (const auto& e : m.countermeasures) {
    w.open("entry");
    w.key("type", keyword(e.kind));
    w.key("applicability", keyword(e.applicability));
    w.key("evaluated", e.evaluated ? "true" : "false");
    w.key_string("limitations", e.limitations);
    w.key_string("text", e.text);
    w.close();
  }
  if (m.warden) {
    w.open("warden");
    w.key("placement", keyword(m.warden->placement));
    w.key("state", keyword(m.warden->state));
    w.key("activity", keyword(m.warden->activity));
    w.close();
  }
  w.close();
}

void write_method(Writer& w, const MethodDescription& original) {
  const MethodDescription m = normalize(original);
  w.open("method " + quote(m.name));
  w.key_string("source", m.source);
  if (m.year) w.key("year", std::to_string(*m.year));

  w.open("general");
  write_pattern(w, m.pattern);
  if (m.scenario) write_scenario(w, *m.scenario);
  write_carrier(w, m.carrier);
  w.close();

  write_process(w, m);
  write_countermeasures(w, m);
  w.close();
}

void write_node(Writer& w, const PatternNode& node) {
  if (node.children.empty()) {
    w.line("node " + quote(node.name) + " {}");
    return;
  }
  w.open("node " + quote(node.name));
  for (const auto& child : node.children) write_node(w, child);
  w.close();
}

}  // namespace

std::string quote(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out += '"';
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string serialize(const MethodDescription& method) {
  Writer w;
  write_method(w, method);
  return w.take();
}

std::string serialize(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.methods.size(); ++i) {
    if (i > 0) out += '\n';
    out += serialize(doc.methods[i]);
  }
  return out;
}

std::string serialize_catalog(const PatternCatalog& catalog) {
  Writer w;
  const std::string head =
      catalog.label ? "catalog " + quote(*catalog.label) : std::string("catalog");
  if (catalog.roots.empty()) {
    w.line(head + " {}");
    return w.take();
  }
  w.open(head);
  for (const auto& root : catalog.roots) write_node(w, root);
  w.close();
  return w.take();
}

}  // namespace nihdl
