#include "nihdl/validate.hpp"

#include <algorithm>
#include <set>

namespace nihdl {

namespace {

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

bool blank(const std::string& text) { return is_blank(text); }
bool blank(const std::optional<std::string>& text) { return !text || is_blank(*text); }

class RuleContext {
 public:
  RuleContext(const MethodDescription& d, const MethodLocations* locations,
              std::string_view file_name, std::vector<Diagnostic>& out)
      : d_(d), locations_(locations), file_(file_name), out_(out) {}

  const MethodDescription& method() const { return d_; }
  const MethodLocations* locations() const { return locations_; }

  // `pick` selects the most specific location; ignored for constructed values.
  template <typename Pick>
  void emit(std::string code, std::string message, Pick&& pick) {
    std::optional<SourceLocation> location;
    if (locations_ != nullptr) location = pick(*locations_);
    if (location && location->file.empty()) location->file = std::string(file_);
    out_.push_back(make_diagnostic(std::move(code), std::move(message), std::move(location),
                                   d_.name));
  }

 private:
  const MethodDescription& d_;
  const MethodLocations* locations_;
  std::string_view file_;
  std::vector<Diagnostic>& out_;
};

const auto at_method = [](const MethodLocations& l) { return l.method; };
const auto at_pattern = [](const MethodLocations& l) { return l.pattern; };
const auto at_sender = [](const MethodLocations& l) { return l.sender; };
const auto at_receiver = [](const MethodLocations& l) { return l.receiver; };
const auto at_directness = [](const MethodLocations& l) { return l.directness; };
const auto at_carrier = [](const MethodLocations& l) { return l.carrier; };
const auto at_channel = [](const MethodLocations& l) { return l.channel; };
const auto at_countermeasures = [](const MethodLocations& l) { return l.countermeasures; };

auto at_metric(Metric m) {
  return [m](const MethodLocations& l) { return l.metrics[static_cast<std::size_t>(m)]; };
}

auto at_entry(std::size_t i) {
  return [i](const MethodLocations& l) {
    return i < l.entries.size() ? l.entries[i] : l.countermeasures;
  };
}

const auto at_warden = [](const MethodLocations& l) {
  return l.warden.value_or(l.countermeasures);
};

const auto at_scenario = [](const MethodLocations& l) {
  return l.scenario.value_or(l.method);
};

void check_pattern(RuleContext& ctx, const PatternCatalog& catalog) {
  const auto& p = ctx.method().pattern;
  if (p.path.is_unassigned()) {
    const bool justified = std::any_of(
        p.justifications.begin(), p.justifications.end(),
        [](const PatternJustification& j) { return !blank(j.rationale); });
    if (!justified) {
      ctx.emit("E112", "unassigned pattern requires a justification explaining why no pattern fits",
               at_pattern);
    }
    return;
  }
  if (p.path.empty()) {
    ctx.emit("E110", "pattern path is empty", at_pattern);
    return;
  }

  const Resolution r = resolve_path(catalog, p.path);
  if (r.kind == ResolutionKind::NotFound) {
    ctx.emit("E110",
             "pattern path element '" + p.path[r.failing_index] + "' (level " +
                 std::to_string(r.failing_index + 1) + ") not found in catalog",
             at_pattern);
  } else if (r.kind == ResolutionKind::ResolvedInternal) {
    ctx.emit("E111", "pattern path '" + p.path.to_string() + "' ends at an internal node, not a leaf",
             at_pattern);
  }

  for (const auto& element : p.path.elements()) {
    const auto* j = p.justification_for(element);
    if (j == nullptr || blank(j->rationale)) {
      ctx.emit("W200", "path element '" + element + "' has no justify entry", at_pattern);
    }
  }
}

void check_scenario(RuleContext& ctx, ValidationMode mode) {
  const auto& s = ctx.method().scenario;
  if (!s) {
    if (mode == ValidationMode::Strict) {
      ctx.emit("E211", "application-scenario block is required in strict mode", at_method);
    }
    return;
  }
  if (s->purpose && s->purpose->kind != PurposeKind::GeneralPurpose && blank(s->text)) {
    ctx.emit("W201",
             "purpose '" + std::string(keyword(s->purpose->kind)) +
                 "' should be described in detail (no scenario text)",
             at_scenario);
  }
}

void check_channel(RuleContext& ctx) {
  const auto& c = ctx.method().channel;
  if (c.directness.kind == DirectnessKind::Indirect &&
      blank(c.directness.intermediary_requirements)) {
    ctx.emit("E120", "indirect channel must describe the requirements on the intermediary",
             at_directness);
  }
  for (auto metric : kMetrics) {
    if (!c.metric(metric)) {
      ctx.emit("E130", "missing '" + std::string(keyword(metric)) + "' block", at_channel);
    }
  }

  const auto& cms = ctx.method().countermeasures;
  const bool has_detection =
      std::any_of(cms.begin(), cms.end(), [](const CountermeasureEntry& e) {
        return e.kind == CountermeasureKind::Detection;
      });
  if (c.undetectability && c.undetectability->presence == Presence::Absent && !has_detection) {
    ctx.emit("W203", "undetectability is absent and no detection countermeasure is discussed",
             at_metric(Metric::Undetectability));
  }

  const bool has_rate = c.bandwidth && !blank(c.bandwidth->value);
  const bool robustness_absent = !c.robustness || c.robustness->presence == Presence::Absent;
  if (has_rate && robustness_absent) {
    ctx.emit("I300", "bandwidth is quantified but robustness is not described",
             at_metric(Metric::Robustness));
  }
}

void check_countermeasures(RuleContext& ctx) {
  const auto& cms = ctx.method().countermeasures;
  auto has_kind = [&](CountermeasureKind kind) {
    return std::any_of(cms.begin(), cms.end(),
                       [&](const CountermeasureEntry& e) { return e.kind == kind; });
  };

  for (auto kind : {CountermeasureKind::Elimination, CountermeasureKind::Detection}) {
    if (!has_kind(kind)) {
      ctx.emit("E140",
               "no '" + std::string(keyword(kind)) +
                   "' entry: state whether it is applicable or not",
               at_countermeasures);
    }
  }

  const bool eliminable = std::any_of(cms.begin(), cms.end(), [](const CountermeasureEntry& e) {
    return e.kind == CountermeasureKind::Elimination &&
           e.applicability == Applicability::Applicable;
  });
  if (!has_kind(CountermeasureKind::Limitation) && !eliminable) {
    ctx.emit("E141", "no 'limitation' entry and the channel is not shown to be eliminable",
             at_countermeasures);
  }

  for (std::size_t i = 0; i < cms.size(); ++i) {
    const auto& e = cms[i];
    if (e.applicability == Applicability::NotApplicable && blank(e.text)) {
      ctx.emit("E142",
               "not-applicable '" + std::string(keyword(e.kind)) + "' entry needs a justification",
               at_entry(i));
    }
    if (e.evaluated && blank(e.limitations)) {
      ctx.emit("W202",
               "evaluated '" + std::string(keyword(e.kind)) +
                   "' entry should point out the limitations of its evaluation",
               at_entry(i));
    }
  }
}

void check_unspecified(RuleContext& ctx, ValidationMode mode) {
  const auto& d = ctx.method();
  const std::string code = mode == ValidationMode::Strict ? "E210" : "W210";
  auto flag = [&](bool unspecified, std::string_view field, auto pick) {
    if (unspecified) ctx.emit(code, std::string(field) + " is unspecified", pick);
  };

  if (d.carrier.presence != Presence::Absent) {
    flag(d.carrier.binding.kind == BindingKind::Unspecified, "carrier binding", at_carrier);
  }
  flag(d.sender.relation == Relation::Unspecified, "sender relation", at_sender);
  flag(d.sender.sender_location == Location::Unspecified, "sender location", at_sender);
  flag(d.sender.data_location == Location::Unspecified, "data location", at_sender);
  flag(d.sender.generates_cover == Tristate::Unspecified, "generates-cover", at_sender);
  flag(d.receiver.receiver_location == Location::Unspecified, "receiver location", at_receiver);
  flag(d.channel.directness.kind == DirectnessKind::Unspecified, "directness", at_directness);
  if (d.warden) {
    flag(d.warden->placement == Location::Unspecified, "warden placement", at_warden);
    flag(d.warden->state == WardenState::Unspecified, "warden state", at_warden);
    flag(d.warden->activity == WardenActivity::Unspecified, "warden activity", at_warden);
  }
}

}  // namespace

std::vector<Diagnostic> validate(const MethodDescription& description,
                                 const PatternCatalog& catalog, ValidationMode mode,
                                 const MethodLocations* locations, std::string_view file_name) {
  std::vector<Diagnostic> out;
  RuleContext ctx(description, locations, file_name, out);
  check_pattern(ctx, catalog);
  check_scenario(ctx, mode);
  check_channel(ctx);
  check_countermeasures(ctx);
  check_unspecified(ctx, mode);
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> check_catalog_usable(const PatternCatalog& catalog,
                                             std::string_view file_name) {
  if (!catalog.empty()) return {};
  return {make_diagnostic("E006", "catalog has no patterns and cannot be used for classification",
                          SourceLocation{std::string(file_name), 1, 1})};
}

std::vector<Diagnostic> validate_document(const Document& doc, const PatternCatalog& catalog,
                                          ValidationMode mode) {
  std::vector<Diagnostic> out;
  if (catalog.empty()) {
    out.push_back(make_diagnostic("E006",
                                  "catalog has no patterns and cannot be used for classification"));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc.methods.size(); ++i) {
    const auto& method = doc.methods[i];
    const auto* locations = doc.locations_for(i);
    auto diagnostics = validate(method, catalog, mode, locations, doc.source_file);
    out.insert(out.end(), std::make_move_iterator(diagnostics.begin()),
               std::make_move_iterator(diagnostics.end()));
    if (!seen.insert(method.name).second) {
      std::optional<SourceLocation> location;
      if (locations != nullptr) location = locations->method;
      out.push_back(make_diagnostic("E150", "duplicate method name '" + method.name + "'",
                                    std::move(location), method.name));
    }
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace nihdl
