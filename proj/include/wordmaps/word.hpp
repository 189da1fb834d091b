#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wordmaps/permutation.hpp"

namespace wordmaps {

/// One occurrence of a variable: x_{variable}^{sign}. Variables are 0-based
/// internally and printed 1-based ("x1").
struct Letter {
  int variable = 0;
  int sign = +1;

  Letter inverse() const { return Letter{variable, -sign}; }
  bool operator==(const Letter&) const = default;
};

using RawItem = std::variant<Permutation, Letter>;
using RawWord = std::vector<RawItem>;

/// A word with constants in reduced normal form
///   c_0 x_{i(1)}^{e(1)} c_1 ... x_{i(l)}^{e(l)} c_l,
/// where adjacent mutually-inverse letters are always separated by a
/// non-identity constant. Instances are immutable values; every constructor
/// and operation re-establishes the normal form.
class Word {
public:
  /// The identity constant word.
  Word(int rank, int degree);
  /// A constant word.
  Word(int rank, Permutation constant);

  /// Normalizes an arbitrary alternating sequence of constants and letters:
  /// consecutive constants are merged, and every letter pair x c x^-1 with c
  /// the identity is deleted (cascading until no such pair remains).
  static Word reduce(int rank, int degree, const RawWord& raw);

  int rank() const { return rank_; }
  int degree() const { return degree_; }
  /// The number of letters l.
  int length() const { return static_cast<int>(body_.size()); }

  const Permutation& lead() const { return lead_; }
  /// j in 1..l.
  const Letter& letter(int j) const { return body_[static_cast<std::size_t>(j - 1)].first; }
  /// j in 0..l.
  const Permutation& constant(int j) const;
  const std::vector<std::pair<Letter, Permutation>>& body() const { return body_; }

  bool is_constant() const { return body_.empty(); }
  /// True when no adjacent letter pair cancels once constants are removed.
  bool is_strong() const;

  /// The normal form spelled out as a raw sequence.
  RawWord raw() const;

  Word inverse() const;
  /// c^-1 w c.
  Word conjugated_by(const Permutation& c) const;
  Word repeated(long long times) const;

  /// Concatenation followed by reduction. Ranks and degrees must match.
  friend Word operator*(const Word& a, const Word& b);
  friend Word operator*(Word&& a, const Word& b);
  /// a^-1 b^-1 a b, reduced.
  static Word commutator(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;

private:
  /// In-place concatenation; cancellation can only cascade at the junction.
  void append(const Word& b);

  int rank_ = 0;
  int degree_ = 0;
  Permutation lead_;
  std::vector<std::pair<Letter, Permutation>> body_;
};

/// Partition of the interior indices {1, ..., l-1} by how letters j and j+1
/// relate, plus the per-prefix variable counts.
struct Classification {
  std::vector<int> variable_change;  // i(j) != i(j+1)
  std::vector<int> same_sign;        // i(j) == i(j+1), e(j) == e(j+1)
  std::vector<int> critical;         // i(j) == i(j+1), e(j) == -e(j+1)
  /// prefix_counts[j][i]: occurrences of x_i^{+-1} among the first j letters;
  /// row l holds the counts for the whole word.
  std::vector<std::vector<int>> prefix_counts;
};

Classification classify(const Word& w);

struct Norms {
  int length = 0;
  std::vector<int> per_variable;  // occurrences of each variable
  int max_per_variable = 0;
  /// min{n, min support of constants at critical indices}; n when none.
  int critical_support = 0;
};

Norms norms(const Word& w);

/// The freely reduced variable word left after erasing all constants.
std::vector<Letter> content(const Word& w);
bool has_trivial_content(const Word& w);

/// Deletes the constant at a critical index and reduces the outcome.
Word elementary_reduction(const Word& w, int critical_index);

struct ReductionStep {
  int index = 0;          // the critical index removed from the previous word
  Permutation removed;    // the deleted constant
  int support = 0;        // its Hamming norm
};

/// w = words[0], ..., words[m]: each step removes a critical constant of
/// minimal support (ties to the smallest index) until the word is strong.
struct ReductionChain {
  std::vector<Word> words;
  std::vector<ReductionStep> steps;
};

ReductionChain reduction_chain(const Word& w);

/// "x1 (1 2 3) x2^-1 ..."; the identity constant word prints as "e".
std::string format_word(const Word& w);
std::string format_letters(const std::vector<Letter>& letters);

}  // namespace wordmaps
