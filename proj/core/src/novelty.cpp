#include "nihdl/novelty.hpp"

#include <algorithm>

namespace nihdl {

namespace {

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

std::string_view to_string(WorkflowStage stage) {
  switch (stage) {
    case WorkflowStage::PatternDatabaseReady: return "PatternDatabaseReady";
    case WorkflowStage::IdeaCreated: return "IdeaCreated";
    case WorkflowStage::DraftDescribed: return "DraftDescribed";
    case WorkflowStage::UnderReview: return "UnderReview";
    case WorkflowStage::PatternOptimization: return "PatternOptimization";
    case WorkflowStage::Published: return "Published";
  }
  return "?";
}

}  // namespace

NoveltyVerdict assess(const MethodDescription& description, const PatternCatalog& catalog) {
  const auto& assignment = description.pattern;
  const auto& path = assignment.path;
  if (path.is_unassigned()) {
    return Rejected{"no pattern assigned; an unassigned method cannot be classified"};
  }
  if (path.empty()) return Rejected{"empty pattern path"};

  const Resolution r = resolve_path(catalog, path);
  switch (r.kind) {
    case ResolutionKind::ResolvedLeaf:
      return SmallC{path};
    case ResolutionKind::ResolvedInternal:
      return Rejected{"pattern path ends at an internal node; assign a leaf pattern"};
    case ResolutionKind::NotFound:
      break;
  }

  for (std::size_t i = r.failing_index; i < path.size(); ++i) {
    const auto* j = assignment.justification_for(path[i]);
    if (j == nullptr || blank(j->rationale)) {
      return Rejected{"new pattern requires detailed explanation"};
    }
  }
  const std::string& proposed = path[r.failing_index];
  return BigCCandidate{path.prefix(r.failing_index), proposed,
                       assignment.justification_for(proposed)->rationale};
}

std::string render_verdict(const NoveltyVerdict& verdict) {
  struct Visitor {
    std::string operator()(const SmallC& v) const { return "small-c: " + v.path.to_string(); }
    std::string operator()(const BigCCandidate& v) const {
      const std::string parent = v.parent.empty() ? std::string("(root)") : v.parent.to_string();
      return "Big-C candidate: " + parent + " + \"" + v.name + "\"";
    }
    std::string operator()(const Rejected& v) const { return "rejected: " + v.reason; }
  };
  return std::visit(Visitor{}, verdict);
}

PatternCatalog accept_big_c(const PatternCatalog& catalog, const BigCCandidate& candidate) {
  return extend_catalog(catalog, candidate.parent, candidate.name);
}

// --- workflow ------------------------------------------------------------

UndefinedTransition::UndefinedTransition(WorkflowState state, WorkflowEvent event)
    : std::logic_error("undefined transition: " + nihdl::to_string(state) + " + " +
                       std::string(nihdl::to_string(event))),
      state_(state),
      event_(event) {}

std::optional<WorkflowState> try_advance(const WorkflowState& state, WorkflowEvent event) {
  using S = WorkflowStage;
  using E = WorkflowEvent;
  switch (state.stage) {
    case S::PatternDatabaseReady:
      if (event == E::StartIdea) return WorkflowState::at(S::IdeaCreated);
      break;
    case S::IdeaCreated:
    case S::DraftDescribed:
      // Submitting the described draft puts it under review.
      if (event == E::SubmitDraft) return WorkflowState::at(S::UnderReview);
      break;
    case S::UnderReview:
      if (event == E::ReviewAcceptBigC) return WorkflowState::at(S::PatternOptimization);
      if (event == E::ReviewAcceptSmallC) return WorkflowState::published(Contribution::SmallC);
      if (event == E::ReviewReject) return WorkflowState::at(S::IdeaCreated);
      break;
    case S::PatternOptimization:
      if (event == E::FinishOptimization) return WorkflowState::published(Contribution::BigC);
      break;
    case S::Published:
      break;
  }
  return std::nullopt;
}

WorkflowState advance(const WorkflowState& state, WorkflowEvent event) {
  if (auto next = try_advance(state, event)) return *next;
  throw UndefinedTransition(state, event);
}

std::vector<WorkflowState> advance_trace(const WorkflowState& state, WorkflowEvent event) {
  WorkflowState next = advance(state, event);
  if (state.stage == WorkflowStage::IdeaCreated && event == WorkflowEvent::SubmitDraft) {
    return {WorkflowState::at(WorkflowStage::DraftDescribed), next};
  }
  return {next};
}

std::string to_string(const WorkflowState& state) {
  std::string out(to_string(state.stage));
  if (state.published_as) {
    out += *state.published_as == Contribution::BigC ? "(Big-C)" : "(small-c)";
  }
  return out;
}

std::string_view to_string(WorkflowEvent event) {
  switch (event) {
    case WorkflowEvent::StartIdea: return "StartIdea";
    case WorkflowEvent::SubmitDraft: return "SubmitDraft";
    case WorkflowEvent::ReviewAcceptBigC: return "ReviewAcceptBigC";
    case WorkflowEvent::ReviewAcceptSmallC: return "ReviewAcceptSmallC";
    case WorkflowEvent::ReviewReject: return "ReviewReject";
    case WorkflowEvent::FinishOptimization: return "FinishOptimization";
  }
  return "?";
}

}  // namespace nihdl
