#include "wordmaps/parser.hpp"

#include <cctype>
#include <string>

#include "wordmaps/errors.hpp"

namespace wordmaps {

namespace {

class Scanner {
public:
  Scanner(std::string_view text, int rank, int degree)
      : text_(text), rank_(rank), degree_(degree) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void expect(char c) {
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    std::size_t start = pos_;
    long long sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000'000LL) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return sign * value;
  }

  WordExpression word(bool inside_brackets) {
    WordExpression expr;
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c == ',' || c == ']') {
        if (!inside_brackets) fail("unexpected '" + std::string(1, c) + "'");
        break;
      }
      if (c == ')') break;  // closed by the enclosing group
      expr.factors.push_back(factor());
    }
    if (expr.factors.empty()) fail("expected a word");
    return expr;
  }

  WordExpression::Factor factor() {
    WordExpression::Factor out = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      out.exponent = integer();
    }
    return out;
  }

  WordExpression::Factor atom() {
    WordExpression::Factor out;
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a variable index after 'x'");
      const long long index = integer();
      if (index < 1 || index > rank_)
        fail("variable x" + std::to_string(index) + " exceeds rank " + std::to_string(rank_));
      out.kind = WordExpression::Factor::Kind::variable;
      out.variable = static_cast<int>(index - 1);
      return out;
    }
    if (c == 'e') {
      ++pos_;
      if (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
        fail("unexpected characters after 'e'");
      out.kind = WordExpression::Factor::Kind::constant;
      out.constant = Permutation(degree_);
      return out;
    }
    if (c == '(') {
      // An integer right after '(' starts a cycle; anything else a group.
      std::size_t probe = pos_ + 1;
      while (probe < text_.size() && std::isspace(static_cast<unsigned char>(text_[probe]))) ++probe;
      if (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) {
        out.kind = WordExpression::Factor::Kind::constant;
        out.constant = parse_cycle_run(text_, pos_, degree_);
        return out;
      }
      ++pos_;
      out.kind = WordExpression::Factor::Kind::group;
      out.children.push_back(word(false));  // a group resets the bracket context
      skip_space();
      expect(')');
      return out;
    }
    if (c == '[') {
      ++pos_;
      out.kind = WordExpression::Factor::Kind::commutator;
      out.children.push_back(word(true));
      skip_space();
      expect(',');
      out.children.push_back(word(true));
      skip_space();
      expect(']');
      return out;
    }
    fail("expected a variable, constant, '(' or '['");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int rank_;
  int degree_;
};

void append_reversed_inverse(const RawWord& seq, RawWord& out) {
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (const auto* constant = std::get_if<Permutation>(&*it))
      out.push_back(constant->inverse());
    else
      out.push_back(std::get<Letter>(*it).inverse());
  }
}

std::size_t count_letters(const RawWord& seq) {
  std::size_t count = 0;
  for (const RawItem& item : seq)
    if (std::holds_alternative<Letter>(item)) ++count;
  return count;
}

void expand_into(const WordExpression& expr, RawWord& out, std::size_t letter_cap);

void expand_factor(const WordExpression::Factor& factor, RawWord& out, std::size_t letter_cap) {
  using Kind = WordExpression::Factor::Kind;
  RawWord base;
  switch (factor.kind) {
    case Kind::variable:
      base.push_back(Letter{factor.variable, +1});
      break;
    case Kind::constant:
      base.push_back(factor.constant);
      break;
    case Kind::group:
      expand_into(factor.children[0], base, letter_cap);
      break;
    case Kind::commutator: {
      RawWord left, right;
      expand_into(factor.children[0], left, letter_cap);
      expand_into(factor.children[1], right, letter_cap);
      append_reversed_inverse(left, base);
      append_reversed_inverse(right, base);
      base.insert(base.end(), left.begin(), left.end());
      base.insert(base.end(), right.begin(), right.end());
      break;
    }
  }
  const long long repeats = factor.exponent >= 0 ? factor.exponent : -factor.exponent;
  const std::size_t base_letters = count_letters(base);
  if (base_letters == 0) {
    // Pure constants fold to a single permutation power, whatever the
    // exponent.
    if (base.empty()) return;
    Permutation net(std::get<Permutation>(base.front()).degree());
    for (const RawItem& item : base) net *= std::get<Permutation>(item);
    out.push_back(net.power(factor.exponent));
    return;
  }
  if (static_cast<unsigned long long>(repeats) > (letter_cap - count_letters(out)) / base_letters)
    throw BudgetExceeded("expanded word exceeds the letter cap");
  RawWord unit;
  if (factor.exponent >= 0)
    unit = std::move(base);
  else
    append_reversed_inverse(base, unit);
  for (long long t = 0; t < repeats; ++t) out.insert(out.end(), unit.begin(), unit.end());
}

void expand_into(const WordExpression& expr, RawWord& out, std::size_t letter_cap) {
  for (const auto& factor : expr.factors) expand_factor(factor, out, letter_cap);
}

}  // namespace

RawWord WordExpression::expand(std::size_t letter_cap) const {
  RawWord out;
  expand_into(*this, out, letter_cap);
  return out;
}

WordExpression parse_expression(std::string_view text, int rank, int degree) {
  if (degree < 1) throw InvalidInput("degree must be positive");
  if (rank < 1) throw InvalidInput("rank must be positive");
  Scanner scanner(text, rank, degree);
  WordExpression expr = scanner.word(false);
  scanner.skip_space();
  if (!scanner.at_end()) scanner.fail("trailing input");
  return expr;
}

Word parse_word(std::string_view text, int rank, int degree, const ParseLimits& limits) {
  const WordExpression expr = parse_expression(text, rank, degree);
  return Word::reduce(rank, degree, expr.expand(limits.letter_cap));
}

}  // namespace wordmaps
