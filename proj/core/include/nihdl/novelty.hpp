#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nihdl/model.hpp"
#include "nihdl/taxonomy.hpp"

namespace nihdl {

/// The method fits an existing leaf pattern.
struct SmallC {
  PatternPath path;
  friend bool operator==(const SmallC&, const SmallC&) = default;
};

/// The method proposes one new pattern below the longest resolvable prefix
/// of its path. An empty parent proposes a new root.
struct BigCCandidate {
  PatternPath parent;
  std::string name;
  std::string justification;
  friend bool operator==(const BigCCandidate&, const BigCCandidate&) = default;
};

struct Rejected {
  std::string reason;
  friend bool operator==(const Rejected&, const Rejected&) = default;
};

using NoveltyVerdict = std::variant<SmallC, BigCCandidate, Rejected>;

NoveltyVerdict assess(const MethodDescription& description,
                      const PatternCatalog& catalog);

/// `small-c: <path>`, `Big-C candidate: <parent> + "<name>"`,
/// `rejected: <reason>`.
std::string render_verdict(const NoveltyVerdict& verdict);

/// Adds the candidate's pattern to the catalog. Errors propagate from
/// extend_catalog as TaxonomyError.
PatternCatalog accept_big_c(const PatternCatalog& catalog,
                            const BigCCandidate& candidate);

// --- review workflow -----------------------------------------------------

enum class Contribution { SmallC, BigC };

enum class WorkflowStage {
  PatternDatabaseReady,
  IdeaCreated,
  DraftDescribed,
  UnderReview,
  PatternOptimization,
  Published,
};

struct WorkflowState {
  WorkflowStage stage = WorkflowStage::PatternDatabaseReady;
  std::optional<Contribution> published_as;  // set iff stage == Published

  static WorkflowState at(WorkflowStage stage) { return {stage, std::nullopt}; }
  static WorkflowState published(Contribution c) {
    return {WorkflowStage::Published, c};
  }

  friend bool operator==(const WorkflowState&, const WorkflowState&) = default;
  friend auto operator<=>(const WorkflowState&, const WorkflowState&) = default;
};

enum class WorkflowEvent {
  StartIdea,
  SubmitDraft,
  ReviewAcceptBigC,
  ReviewAcceptSmallC,
  ReviewReject,
  FinishOptimization,
};
inline constexpr WorkflowEvent kWorkflowEvents[] = {
    WorkflowEvent::StartIdea,          WorkflowEvent::SubmitDraft,
    WorkflowEvent::ReviewAcceptBigC,   WorkflowEvent::ReviewAcceptSmallC,
    WorkflowEvent::ReviewReject,       WorkflowEvent::FinishOptimization};

class UndefinedTransition : public std::logic_error {
 public:
  UndefinedTransition(WorkflowState state, WorkflowEvent event);
  WorkflowState state() const { return state_; }
  WorkflowEvent event() const { return event_; }

 private:
  WorkflowState state_;
  WorkflowEvent event_;
};

std::optional<WorkflowState> try_advance(const WorkflowState& state,
                                         WorkflowEvent event);

/// Throws UndefinedTransition for pairs outside the review process.
WorkflowState advance(const WorkflowState& state, WorkflowEvent event);

/// States entered by one event, including the implicit DraftDescribed step
/// when a draft is submitted straight from IdeaCreated.
std::vector<WorkflowState> advance_trace(const WorkflowState& state,
                                         WorkflowEvent event);

std::string to_string(const WorkflowState& state);
std::string_view to_string(WorkflowEvent event);

}  // namespace nihdl
