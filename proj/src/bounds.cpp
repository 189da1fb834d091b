#include "wordmaps/bounds.hpp"

#include <cmath>
#include <limits>

#include "wordmaps/errors.hpp"

namespace wordmaps {

namespace {
constexpr double kContentBoundTolerance = 1e-12;
}

WordSummary summarize(const Word& w) {
  const Norms nm = norms(w);
  WordSummary out;
  out.length = nm.length;
  out.max_per_variable = nm.max_per_variable;
  out.critical_support = nm.critical_support;
  out.strong = w.is_strong();
  out.content_trivial = has_trivial_content(w);
  return out;
}

BoundReport master_inequality(const Word& w, int exact_diameter) {
  if (w.length() == 0) throw InvalidInput("the master inequality needs a non-constant word");
  if (exact_diameter < 0) throw InvalidInput("diameter must be non-negative");
  BoundReport report;
  report.summary = summarize(w);
  report.diameter = exact_diameter;
  report.method = "exhaustive";

  const long long crit = report.summary.critical_support;
  const long long len = report.summary.length;
  const long long rhs = 2 * (static_cast<long long>(exact_diameter) + 1) * len;
  report.checks.push_back({"master", true, crit <= rhs, static_cast<double>(crit),
                           static_cast<double>(rhs), ""});

  const long long floor_bound = crit / (2 * report.summary.max_per_variable);
  report.checks.push_back({"floor", true, exact_diameter >= floor_bound,
                           static_cast<double>(exact_diameter), static_cast<double>(floor_bound),
                           "diam >= floor(crit / (2 max))"});
  return report;
}

BoundReport theorem_bounds(const Word& w, int exact_diameter) {
  if (exact_diameter < 0) throw InvalidInput("diameter must be non-negative");
  BoundReport report;
  report.summary = summarize(w);
  report.diameter = exact_diameter;
  report.method = "exhaustive";

  const int n = w.degree();
  const long long len = report.summary.length;
  const double lhs = (static_cast<double>(exact_diameter) + 1.0) / n;

  BoundCheck content_check{"content_bound", false, false, lhs, 0.0, ""};
  if (!report.summary.content_trivial) {
    content_check.applicable = true;
    content_check.rhs =
        0.5 * std::exp(-std::log(5.0 * static_cast<double>(len)) * static_cast<double>(len) / 2.0);
    content_check.holds = lhs >= content_check.rhs * (1.0 - kContentBoundTolerance);
  } else {
    content_check.note = "content is trivial";
  }
  report.checks.push_back(content_check);

  BoundCheck strong_check{"strong_bound", false, false, lhs, 0.0, ""};
  if (report.summary.strong && len >= 1) {
    strong_check.applicable = true;
    strong_check.rhs = 1.0 / (2.0 * static_cast<double>(len));
    // Exact rational comparison: (diam+1) * 2l >= n.
    strong_check.holds = (static_cast<long long>(exact_diameter) + 1) * 2 * len >= n;
  } else {
    strong_check.note = report.summary.strong ? "constant word" : "word is not strong";
  }
  report.checks.push_back(strong_check);
  return report;
}

std::pair<int, Permutation> find_small_critical_constant(const Word& w, int exact_diameter) {
  if (w.length() == 0) throw InvalidInput("constant words have no critical constants");
  if (exact_diameter < 0) throw InvalidInput("diameter must be non-negative");
  const long long len = w.length();
  const long long budget = 2 * (static_cast<long long>(exact_diameter) + 1) * len;
  // Precondition: the strong bound fails, i.e. (diam+1)/n < 1/(2l).
  if (budget >= w.degree())
    throw InvalidInput("the strong bound holds at this diameter; nothing to find");

  const Classification cls = classify(w);
  int best = -1;
  int best_support = std::numeric_limits<int>::max();
  for (int j : cls.critical) {
    const int support = hamming_norm(w.constant(j));
    if (support < best_support) {
      best = j;
      best_support = support;
    }
  }
  // The master inequality pins critical_support <= budget < n, so a critical
  // index must exist and its constant fits the budget.
  if (best < 0 || best_support > budget)
    throw InternalError("no critical constant within the guaranteed budget; "
                        "was the diameter exact?");
  return {best, w.constant(best)};
}

}  // namespace wordmaps
