#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "wordmaps/evaluator.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// One inequality instance: satisfied iff lhs >= rhs.
struct ConditionCheck {
  int index = 0;  // the interior index j, or l for the final-letter check
  long long lhs = 0;
  long long rhs = 0;
  bool satisfied() const { return lhs >= rhs; }
  long long slack() const { return lhs - rhs; }
};

/// The four families of inequalities that guarantee a distance-d witness can
/// be built for the word. Empty families are vacuously satisfied.
struct LemmaConditions {
  int d = 0;
  std::vector<ConditionCheck> variable_change;  // one per index with i(j) != i(j+1)
  std::vector<ConditionCheck> same_sign;        // one per index with equal letters' repeat
  std::vector<ConditionCheck> critical;         // one per critical index
  ConditionCheck final_letter;
  bool all_satisfied() const;
};

/// Evaluates the four inequality families for the given target distance.
/// Requires a non-constant word and d >= 1.
LemmaConditions check_conditions(const Word& w, int d);

/// Largest d >= 1 passing check_conditions, or 0 when even d = 1 fails.
/// All four families are monotone in d, so the feasible set is {1, ..., dmax}.
int max_feasible_distance(const Word& w);

/// One record per inserted arrow, for inspection and for the counting checks.
struct ArrowTrace {
  int basepoint_round = 0;  // k, 1-based
  int step = 0;             // j, 1-based
  int variable = 0;         // 0-based
  int sign = 0;
  int source = 0;  // 0-based points
  int target = 0;
  int admissible = 0;        // how many targets were admissible at this step
  long long lower_bound = 0; // the counting guarantee for this step
};

struct WitnessCertificate {
  explicit WitnessCertificate(Word w) : word(std::move(w)) {}

  Word word;
  int d = 0;
  Permutation tau;
  Permutation sigma;
  Assignment assignment;
  /// Trajectory start points, 0-based. When the word's leading constant was
  /// stripped for the construction, the points where sigma and tau are known
  /// to disagree are basepoint.lead^-1 instead of the basepoints themselves.
  std::vector<int> basepoints;
  /// trajectories[k][j]: image of basepoint k under the j-th prefix of the
  /// lead-stripped word, j = 0..l.
  std::vector<std::vector<int>> trajectories;
  bool lead_stripped = false;
  std::vector<ArrowTrace> trace;

  /// Points at which sigma and tau provably disagree (d many).
  std::vector<int> disagreement_points() const;
  /// Re-derives every invariant from scratch; throws InternalError on any
  /// mismatch.
  void verify() const;
};

struct WitnessOptions {
  /// Choose targets uniformly among the admissible ones instead of taking the
  /// smallest; for stress testing.
  std::optional<std::uint64_t> selection_seed;
  /// Receives one line-delimited JSON record per inserted arrow.
  std::ostream* trace_sink = nullptr;
};

/// Builds an assignment whose value sigma differs from tau on at least d
/// points, by growing per-variable partial injective maps one arrow at a
/// time. Requires check_conditions(w, d) to be fully satisfied; tau defaults
/// to the word's value at the all-identity assignment.
WitnessCertificate construct_witness(const Word& w, int d,
                                     std::optional<Permutation> tau = std::nullopt,
                                     const WitnessOptions& options = {});

/// Extends per-variable partial injective maps (entries -1 where undefined)
/// to full permutations, pairing leftover sources with leftover targets in
/// increasing order.
Assignment complete_partial(const std::vector<std::vector<int>>& partial, int degree);

}  // namespace wordmaps
