#include "wordmaps/word.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "wordmaps/errors.hpp"

namespace wordmaps {

Word::Word(int rank, int degree) : rank_(rank), degree_(degree), lead_(degree) {
  if (rank < 0) throw InvalidInput("rank must be non-negative");
  if (degree < 1) throw InvalidInput("degree must be positive");
}

Word::Word(int rank, Permutation constant) : Word(rank, constant.degree()) {
  lead_ = std::move(constant);
}

const Permutation& Word::constant(int j) const {
  return j == 0 ? lead_ : body_[static_cast<std::size_t>(j - 1)].second;
}

Word Word::reduce(int rank, int degree, const RawWord& raw) {
  Word out(rank, degree);
  for (const RawItem& item : raw) {
    if (const auto* constant = std::get_if<Permutation>(&item)) {
      if (constant->degree() != degree) throw InvalidInput("constant degree mismatch");
      Permutation& trailing = out.body_.empty() ? out.lead_ : out.body_.back().second;
      trailing *= *constant;
    } else {
      const Letter letter = std::get<Letter>(item);
      if (letter.variable < 0 || letter.variable >= rank)
        throw InvalidInput("variable index exceeds rank");
      if (letter.sign != 1 && letter.sign != -1) throw InvalidInput("letter sign must be +-1");
      if (!out.body_.empty() && out.body_.back().first == letter.inverse() &&
          out.body_.back().second.is_identity()) {
        out.body_.pop_back();
      } else {
        out.body_.emplace_back(letter, Permutation(degree));
      }
    }
  }
  return out;
}

bool Word::is_strong() const {
  for (std::size_t j = 1; j < body_.size(); ++j)
    if (body_[j].first == body_[j - 1].first.inverse()) return false;
  return true;
}

RawWord Word::raw() const {
  RawWord out;
  out.push_back(lead_);
  for (const auto& [letter, constant] : body_) {
    out.push_back(letter);
    out.push_back(constant);
  }
  return out;
}

Word Word::inverse() const {
  RawWord out;
  for (auto it = body_.rbegin(); it != body_.rend(); ++it) {
    out.push_back(it->second.inverse());
    out.push_back(it->first.inverse());
  }
  out.push_back(lead_.inverse());
  return reduce(rank_, degree_, out);
}

Word Word::conjugated_by(const Permutation& c) const {
  RawWord out;
  out.push_back(c.inverse());
  const RawWord middle = raw();
  out.insert(out.end(), middle.begin(), middle.end());
  out.push_back(c);
  return reduce(rank_, degree_, out);
}

Word Word::repeated(long long times) const {
  const Word base = times >= 0 ? *this : inverse();
  const long long count = times >= 0 ? times : -times;
  RawWord out;
  const RawWord one = base.raw();
  for (long long t = 0; t < count; ++t) out.insert(out.end(), one.begin(), one.end());
  return reduce(rank_, degree_, out);
}

void Word::append(const Word& b) {
  (body_.empty() ? lead_ : body_.back().second) *= b.lead_;
  for (const auto& [letter, constant] : b.body_) {
    if (!body_.empty() && body_.back().first == letter.inverse() &&
        body_.back().second.is_identity()) {
      body_.pop_back();
      (body_.empty() ? lead_ : body_.back().second) *= constant;
    } else {
      body_.emplace_back(letter, constant);
    }
  }
}

Word operator*(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_)
    throw InvalidInput("rank/degree mismatch in word product");
  Word out = a;
  out.append(b);
  return out;
}

Word operator*(Word&& a, const Word& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_)
    throw InvalidInput("rank/degree mismatch in word product");
  a.append(b);
  return std::move(a);
}

Word Word::commutator(const Word& a, const Word& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_)
    throw InvalidInput("rank/degree mismatch in commutator");
  RawWord out;
  for (const Word* part : {&a, &b}) {
    const RawWord inv = part->inverse().raw();
    out.insert(out.end(), inv.begin(), inv.end());
  }
  for (const Word* part : {&a, &b}) {
    const RawWord fwd = part->raw();
    out.insert(out.end(), fwd.begin(), fwd.end());
  }
  return reduce(a.rank_, a.degree_, out);
}

Classification classify(const Word& w) {
  const int l = w.length();
  Classification out;
  out.prefix_counts.assign(static_cast<std::size_t>(l) + 1,
                           std::vector<int>(static_cast<std::size_t>(w.rank()), 0));
  for (int j = 1; j <= l; ++j) {
    out.prefix_counts[static_cast<std::size_t>(j)] = out.prefix_counts[static_cast<std::size_t>(j - 1)];
    ++out.prefix_counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(w.letter(j).variable)];
  }
  for (int j = 1; j <= l - 1; ++j) {
    const Letter& a = w.letter(j);
    const Letter& b = w.letter(j + 1);
    if (a.variable != b.variable)
      out.variable_change.push_back(j);
    else if (a.sign == b.sign)
      out.same_sign.push_back(j);
    else
      out.critical.push_back(j);
  }
  return out;
}

Norms norms(const Word& w) {
  const Classification cls = classify(w);
  Norms out;
  out.length = w.length();
  out.per_variable = cls.prefix_counts.back();
  out.max_per_variable = 0;
  for (int count : out.per_variable) out.max_per_variable = std::max(out.max_per_variable, count);
  out.critical_support = w.degree();
  for (int j : cls.critical)
    out.critical_support = std::min(out.critical_support, hamming_norm(w.constant(j)));
  return out;
}

std::vector<Letter> content(const Word& w) {
  std::vector<Letter> out;
  for (const auto& [letter, constant] : w.body()) {
    if (!out.empty() && out.back() == letter.inverse())
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

bool has_trivial_content(const Word& w) { return content(w).empty(); }

Word elementary_reduction(const Word& w, int critical_index) {
  const int j = critical_index;
  if (j < 1 || j > w.length() - 1 || w.letter(j) != w.letter(j + 1).inverse())
    throw InvalidInput("index " + std::to_string(j) + " is not critical");
  RawWord raw = w.raw();
  raw[2 * static_cast<std::size_t>(j)] = Permutation(w.degree());  // delete c_j
  return Word::reduce(w.rank(), w.degree(), raw);
}

ReductionChain reduction_chain(const Word& w) {
  ReductionChain chain;
  chain.words.push_back(w);
  for (;;) {
    const Word& current = chain.words.back();
    const Classification cls = classify(current);
    if (cls.critical.empty()) break;
    int best = -1;
    int best_support = std::numeric_limits<int>::max();
    for (int j : cls.critical) {
      const int support = hamming_norm(current.constant(j));
      if (support < best_support) {
        best = j;
        best_support = support;
      }
    }
    chain.steps.push_back({best, current.constant(best), best_support});
    chain.words.push_back(elementary_reduction(current, best));
  }
  return chain;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  const auto emit = [&](const std::string& part) {
    if (!first) out << ' ';
    out << part;
    first = false;
  };
  if (!w.lead().is_identity()) emit(format_permutation(w.lead()));
  for (const auto& [letter, constant] : w.body()) {
    std::string text = "x" + std::to_string(letter.variable + 1);
    if (letter.sign < 0) text += "^-1";
    emit(text);
    if (!constant.is_identity()) emit(format_permutation(constant));
  }
  if (first) return "e";
  return out.str();
}

std::string format_letters(const std::vector<Letter>& letters) {
  if (letters.empty()) return "e";
  std::ostringstream out;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (t) out << ' ';
    out << 'x' << letters[t].variable + 1;
    if (letters[t].sign < 0) out << "^-1";
  }
  return out.str();
}

}  // namespace wordmaps
