#include "wordmaps/evaluator.hpp"

#include <algorithm>
#include <numeric>

#include "wordmaps/errors.hpp"

namespace wordmaps {

namespace {

void check_assignment(const Word& w, const Assignment& assignment) {
  if (static_cast<int>(assignment.size()) != w.rank())
    throw InvalidInput("assignment size does not match rank");
  for (const auto& p : assignment)
    if (p.degree() != w.degree()) throw InvalidInput("assignment degree mismatch");
}

/// Flattened view of a word plus scratch space, for tight evaluation loops.
/// The assignment is supplied as plain image arrays (forward and inverse).
class CompiledWord {
public:
  explicit CompiledWord(const Word& w) : degree_(w.degree()) {
    lead_ = w.lead().images();
    for (const auto& [letter, constant] : w.body()) {
      variables_.push_back(letter.variable);
      signs_.push_back(letter.sign);
      constants_.push_back(constant.is_identity() ? std::vector<int>() : constant.images());
    }
  }

  int degree() const { return degree_; }

  void evaluate_into(const std::vector<std::vector<int>>& forward,
                     const std::vector<std::vector<int>>& backward, std::vector<int>& out) const {
    out.resize(static_cast<std::size_t>(degree_));
    for (int p = 0; p < degree_; ++p) {
      int x = lead_[static_cast<std::size_t>(p)];
      for (std::size_t j = 0; j < variables_.size(); ++j) {
        const auto& pi = signs_[j] > 0 ? forward[static_cast<std::size_t>(variables_[j])]
                                       : backward[static_cast<std::size_t>(variables_[j])];
        x = pi[static_cast<std::size_t>(x)];
        if (!constants_[j].empty()) x = constants_[j][static_cast<std::size_t>(x)];
      }
      out[static_cast<std::size_t>(p)] = x;
    }
  }

private:
  int degree_;
  std::vector<int> lead_;
  std::vector<int> variables_;
  std::vector<int> signs_;
  std::vector<std::vector<int>> constants_;  // empty vector stands for the identity
};

void invert_into(const std::vector<int>& images, std::vector<int>& out) {
  out.resize(images.size());
  for (std::size_t p = 0; p < images.size(); ++p)
    out[static_cast<std::size_t>(images[p])] = static_cast<int>(p);
}

/// Calls fn(forward, backward) for every assignment tuple, iterating each
/// coordinate through S_n in lexicographic order with the last coordinate
/// moving fastest. fn returning false stops the walk.
template <typename Fn>
std::uint64_t for_each_assignment(int rank, int degree, Fn&& fn) {
  std::vector<std::vector<int>> forward(static_cast<std::size_t>(rank)),
      backward(static_cast<std::size_t>(rank));
  for (auto& images : forward) {
    images.resize(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
  }
  for (std::size_t i = 0; i < forward.size(); ++i) invert_into(forward[i], backward[i]);

  std::uint64_t count = 0;
  for (;;) {
    ++count;
    if (!fn(std::as_const(forward), std::as_const(backward))) return count;
    int pos = rank - 1;
    while (pos >= 0) {
      if (std::next_permutation(forward[static_cast<std::size_t>(pos)].begin(),
                                forward[static_cast<std::size_t>(pos)].end())) {
        invert_into(forward[static_cast<std::size_t>(pos)], backward[static_cast<std::size_t>(pos)]);
        break;
      }
      // wrapped back to the identity
      invert_into(forward[static_cast<std::size_t>(pos)], backward[static_cast<std::size_t>(pos)]);
      --pos;
    }
    if (pos < 0) return count;
  }
}

std::uint64_t assignment_count(int rank, int degree, const EnumerationBudget& budget) {
  const std::uint64_t single = std::max<std::uint64_t>(factorial(degree), 1);
  std::uint64_t total = 1;
  for (int i = 0; i < rank; ++i) {
    if (total > budget.max_evaluations / single) return std::uint64_t(-1);  // would overflow the budget
    total *= single;
  }
  return total;
}

void require_budget(const Word& w, const EnumerationBudget& budget) {
  if (w.degree() > 20 ||
      assignment_count(w.rank(), w.degree(), budget) > budget.max_evaluations)
    throw BudgetExceeded("exhaustive enumeration over S_" + std::to_string(w.degree()) + "^" +
                         std::to_string(w.rank()) + " exceeds the evaluation budget");
}

/// Lexicographic rank of an image sequence, for compact seen-markers.
std::uint64_t permutation_rank(const std::vector<int>& images) {
  const std::size_t n = images.size();
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < n; ++j) {
    int smaller = 0;
    for (std::size_t t = j + 1; t < n; ++t)
      if (images[t] < images[j]) ++smaller;
    rank = rank * (n - j) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

int diameter_of(const std::vector<Permutation>& members, std::pair<Permutation, Permutation>& witnesses) {
  int best = 0;
  if (members.empty()) return 0;
  witnesses = {members.front(), members.front()};
  const int n = members.front().degree();
  for (std::size_t a = 0; a < members.size() && best < n; ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const int d = hamming_distance(members[a], members[b]);
      if (d > best) {
        best = d;
        witnesses = {members[a], members[b]};
        if (best == n) break;  // nothing can beat the degree
      }
    }
  }
  return best;
}

}  // namespace

Permutation evaluate(const Word& w, const Assignment& assignment) {
  check_assignment(w, assignment);
  std::vector<Permutation> inverses;
  inverses.reserve(assignment.size());
  for (const auto& p : assignment) inverses.push_back(p.inverse());
  const int n = w.degree();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    int x = w.lead().image_of(p);
    for (const auto& [letter, constant] : w.body()) {
      const Permutation& pi = letter.sign > 0
                                  ? assignment[static_cast<std::size_t>(letter.variable)]
                                  : inverses[static_cast<std::size_t>(letter.variable)];
      x = constant.image_of(pi.image_of(x));
    }
    out[static_cast<std::size_t>(p)] = x;
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> evaluate_many(const Word& w, const std::vector<Permutation>& values) {
  if (w.rank() != 1) throw InvalidInput("evaluate_many expects a one-variable word");
  const CompiledWord compiled(w);
  std::vector<std::vector<int>> forward(1), backward(1);
  std::vector<Permutation> out;
  out.reserve(values.size());
  std::vector<int> scratch;
  for (const auto& value : values) {
    if (value.degree() != w.degree()) throw InvalidInput("assignment degree mismatch");
    forward[0] = value.images();
    backward[0] = value.inverse().images();
    compiled.evaluate_into(forward, backward, scratch);
    out.push_back(Permutation(scratch));
  }
  return out;
}

Permutation evaluate_raw(const RawWord& raw, const Assignment& assignment, int degree) {
  Permutation result(degree);
  for (const RawItem& item : raw) {
    if (const auto* constant = std::get_if<Permutation>(&item)) {
      result *= *constant;
    } else {
      const Letter letter = std::get<Letter>(item);
      const Permutation& pi = assignment.at(static_cast<std::size_t>(letter.variable));
      result *= letter.sign > 0 ? pi : pi.inverse();
    }
  }
  return result;
}

ImageReport image_exhaustive(const Word& w, const EnumerationBudget& budget) {
  if (w.is_constant()) {
    ImageReport report;
    report.method = "exhaustive";
    report.evaluations = 1;
    report.witnesses = {w.lead(), w.lead()};
    report.image = std::vector<Permutation>{w.lead()};
    return report;
  }
  require_budget(w, budget);
  const CompiledWord compiled(w);
  std::vector<char> seen(factorial(w.degree()), 0);
  std::vector<Permutation> image;
  std::vector<int> scratch;
  ImageReport report;
  report.method = "exhaustive";
  report.evaluations = for_each_assignment(
      w.rank(), w.degree(), [&](const auto& forward, const auto& backward) {
        compiled.evaluate_into(forward, backward, scratch);
        const std::uint64_t rank = permutation_rank(scratch);
        if (!seen[rank]) {
          seen[rank] = 1;
          image.push_back(Permutation(scratch));
        }
        return true;
      });
  std::sort(image.begin(), image.end());
  report.diameter = diameter_of(image, report.witnesses);
  report.image = std::move(image);
  return report;
}

ImageReport diameter_sampled(const Word& w, std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw InvalidInput("sampled diameter needs at least 2 samples");
  std::mt19937_64 rng(seed);
  std::vector<Permutation> values;
  values.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s)
    values.push_back(evaluate(w, random_assignment(rng, w.rank(), w.degree())));
  ImageReport report;
  report.method = "sampled";
  report.sample_count = samples;
  report.seed = seed;
  report.evaluations = samples;
  report.diameter = diameter_of(values, report.witnesses);
  return report;
}

MixedIdentityReport is_mixed_identity(const Word& w, const EnumerationBudget& budget) {
  require_budget(w, budget);
  const CompiledWord compiled(w);
  std::vector<int> scratch;
  MixedIdentityReport report;
  report.is_identity = true;
  std::vector<std::vector<int>> found;
  report.evaluations = for_each_assignment(
      w.rank(), w.degree(), [&](const auto& forward, const auto& backward) {
        compiled.evaluate_into(forward, backward, scratch);
        for (std::size_t p = 0; p < scratch.size(); ++p) {
          if (scratch[p] != static_cast<int>(p)) {
            report.is_identity = false;
            found = forward;
            report.counterexample_value = Permutation(scratch);
            return false;
          }
        }
        return true;
      });
  if (!report.is_identity) {
    Assignment assignment;
    for (auto& images : found) assignment.push_back(Permutation(std::move(images)));
    report.counterexample = std::move(assignment);
  }
  return report;
}

namespace {
std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform and fully portable.
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}
}  // namespace

Permutation random_permutation(std::mt19937_64& rng, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[bounded_random(rng, i)]);
  return Permutation(std::move(images));
}

Assignment random_assignment(std::mt19937_64& rng, int rank, int degree) {
  Assignment out;
  out.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) out.push_back(random_permutation(rng, degree));
  return out;
}

}  // namespace wordmaps
