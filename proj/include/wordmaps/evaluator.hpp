#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wordmaps/word.hpp"

namespace wordmaps {

/// One permutation per variable, all of the word's degree.
using Assignment = std::vector<Permutation>;

/// Substitutes the assignment into the word and composes left to right.
Permutation evaluate(const Word& w, const Assignment& assignment);

/// Independent of Word's normal form: folds an arbitrary raw sequence.
Permutation evaluate_raw(const RawWord& raw, const Assignment& assignment, int degree);

/// Evaluates a one-variable word at each substitution, sharing the flattened
/// word across all of them.
std::vector<Permutation> evaluate_many(const Word& w, const std::vector<Permutation>& values);

struct EnumerationBudget {
  std::uint64_t max_evaluations = 10'000'000;
};

struct ImageReport {
  std::string method;  // "exhaustive" or "sampled"
  int diameter = 0;
  /// In sampled mode this is a certified lower bound on the true diameter.
  std::pair<Permutation, Permutation> witnesses;
  std::uint64_t evaluations = 0;
  /// Exhaustive mode only: the full image, sorted.
  std::optional<std::vector<Permutation>> image;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// Enumerates all (n!)^rank assignments in lexicographic order and returns
/// the exact image and diameter. Throws BudgetExceeded when (n!)^rank exceeds
/// the budget.
ImageReport image_exhaustive(const Word& w, const EnumerationBudget& budget = {});

/// Evaluates the word on seeded pseudo-random assignments; the reported
/// diameter is the max pairwise distance among the results, hence a lower
/// bound on the true diameter. Reproducible for a fixed seed.
ImageReport diameter_sampled(const Word& w, std::uint64_t samples, std::uint64_t seed);

struct MixedIdentityReport {
  bool is_identity = false;
  std::uint64_t evaluations = 0;
  /// First assignment (in enumeration order) with a non-identity value.
  std::optional<Assignment> counterexample;
  std::optional<Permutation> counterexample_value;
};

/// Exhaustively decides whether the word evaluates to the identity on every
/// assignment; exits early at the first counterexample.
MixedIdentityReport is_mixed_identity(const Word& w, const EnumerationBudget& budget = {});

/// Uniform via Fisher-Yates driven by the given engine; bit-reproducible
/// across platforms (no std::distribution involved).
Permutation random_permutation(std::mt19937_64& rng, int degree);
Assignment random_assignment(std::mt19937_64& rng, int rank, int degree);

}  // namespace wordmaps
