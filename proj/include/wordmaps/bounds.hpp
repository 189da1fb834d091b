#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordmaps/word.hpp"

namespace wordmaps {

struct WordSummary {
  int length = 0;
  int max_per_variable = 0;
  int critical_support = 0;
  bool strong = false;
  bool content_trivial = false;
};

WordSummary summarize(const Word& w);

/// One inequality verdict. `holds` is computed with exact arithmetic where
/// both sides are rational (everything except the content bound, whose right
/// side is transcendental and carries a 1e-12 relative tolerance).
struct BoundCheck {
  std::string name;
  bool applicable = false;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct BoundReport {
  WordSummary summary;
  int diameter = 0;
  std::string method;  // "exhaustive" diameters certify; lower bounds cannot
  std::vector<BoundCheck> checks;
};

/// critical_support <= 2 (diam + 1) length, plus the equivalent floor form
/// diam >= floor(critical_support / (2 max_per_variable)). Requires the exact
/// diameter and a non-constant word.
BoundReport master_inequality(const Word& w, int exact_diameter);

/// The two image-size guarantees: the content bound
///   (diam+1)/n >= exp(-log(5 l) l / 2) / 2        (nontrivial content)
/// and the strong bound
///   (diam+1)/n >= 1/(2 l)                          (strong, non-constant).
/// Checks whichever hypotheses hold and marks the others inapplicable.
BoundReport theorem_bounds(const Word& w, int exact_diameter);

/// When the strong bound is violated, some critical constant has support at
/// most 2 (diam + 1) length; returns the smallest such (by support, then by
/// index). Requires a non-constant word, the exact diameter, and an actual
/// violation.
std::pair<int, Permutation> find_small_critical_constant(const Word& w, int exact_diameter);

}  // namespace wordmaps
