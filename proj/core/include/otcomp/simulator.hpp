#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "otcomp/component.hpp"

namespace otcomp {

// A batch of mutually concurrent operations issued from one base state.
// Every site receives the whole batch in its own delivery order and
// integrates it with IT* against what it has already executed.

struct ScenarioOp {
  SiteId site = 0;
  Method method = Method::nop();
};

struct Scenario {
  std::string expression;
  ComponentPtr component;
  State base = State::seq({});
  std::vector<ScenarioOp> ops;
  /// Empty means every permutation of the ops.
  std::vector<std::vector<std::size_t>> delivery;
  /// false replays the batch raw, without transformation.
  bool transform = true;
};

/// Parses a scenario document and builds its component. Throws
/// Error(kInvalidScenario) for malformed documents; literal, parse and
/// admissibility errors surface with their own codes.
Scenario load_scenario(const Json& j, const Bounds& b = {});
Scenario load_scenario_file(const std::filesystem::path& path, const Bounds& b = {});

struct TraceStep {
  std::size_t op = 0;     // index into the batch
  Method delivered = Method::nop();
  bool applied = false;   // false when the delivered form was not enabled
};

struct PermutationRun {
  std::vector<std::size_t> order;
  State final_state = State::seq({});
  std::vector<TraceStep> trace;
  bool fully_legal = true;
};

struct RunReport {
  std::string component;
  std::vector<PermutationRun> runs;
  bool converged = true;
  bool partially_legal = false;
  /// Indices into `runs` of the first pair with different finals.
  std::optional<std::pair<std::size_t, std::size_t>> divergence;
  double elapsed_ms = 0;
};

/// Delivers `ops` in `order`: each op is rewritten by IT* against the
/// already executed (transformed) ops and applied if enabled, otherwise
/// skipped and recorded. With `with_transform` = false ops are applied as
/// issued.
PermutationRun integrate(const Component& c, const State& base, const std::vector<Method>& ops,
                         const std::vector<std::size_t>& order, bool with_transform = true);

/// Throws Error(kTooManyPermutations) for more than 6 ops without an
/// explicit delivery list, and Error(kInvalidScenario) when two ops share a
/// site or a delivery entry is not a permutation.
RunReport run_scenario(const Scenario& s);

Json to_json(const Component& c, const RunReport& r, bool with_elapsed = true);
std::string to_text(const RunReport& r);

}  // namespace otcomp
