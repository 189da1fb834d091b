#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wordmaps/word.hpp"

namespace wordmaps {

/// Abstract syntax of the word DSL:
///
///   word   := factor+
///   factor := atom ('^' signed-int)?
///   atom   := var | const | group | comm
///   var    := 'x' int
///   const  := 'e' | cycle+              (cycles adjacent, no whitespace)
///   group  := '(' word ')'
///   comm   := '[' word ',' word ']'
///
/// Whitespace separates factors. After '(' an integer means a cycle constant,
/// anything else opens a grouped sub-expression, so no input is ambiguous.
struct WordExpression {
  struct Factor {
    enum class Kind { variable, constant, group, commutator };
    Kind kind = Kind::variable;
    int variable = 0;                      // 0-based, Kind::variable
    Permutation constant;                  // Kind::constant
    std::vector<WordExpression> children;  // 1 for group, 2 for commutator
    long long exponent = 1;
  };
  std::vector<Factor> factors;

  /// Unrolls powers, rewrites [u,v] as u^-1 v^-1 u v, and distributes
  /// inverses with reversal. Throws BudgetExceeded past `letter_cap` letters.
  RawWord expand(std::size_t letter_cap) const;
};

struct ParseLimits {
  std::size_t letter_cap = 1'000'000;
};

WordExpression parse_expression(std::string_view text, int rank, int degree);

/// Parse, expand, and reduce in one step.
Word parse_word(std::string_view text, int rank, int degree, const ParseLimits& limits = {});

}  // namespace wordmaps
