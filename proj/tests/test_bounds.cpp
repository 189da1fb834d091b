#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "wordmaps/bounds.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluator.hpp"
#include "wordmaps/group.hpp"
#include "wordmaps/parser.hpp"

using namespace wordmaps;

namespace {

const BoundCheck& check_named(const BoundReport& report, const std::string& name) {
  for (const auto& check : report.checks)
    if (check.name == name) return check;
  REQUIRE(false);
  return report.checks.front();
}

// Exact diameter of the conjugacy class of `rep` in S_n, by enumerating the
// class directly (orbit of rep under conjugation by transpositions).
int class_diameter(const Permutation& rep, int n) {
  std::vector<Permutation> members{rep};
  std::set<Permutation> seen{rep};
  for (std::size_t at = 0; at < members.size(); ++at) {
    const Permutation current = members[at];
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 0);
        std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
        const Permutation conjugate = current.conjugated_by(Permutation(images));
        if (seen.insert(conjugate).second) members.push_back(conjugate);
      }
  }
  int best = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      best = std::max(best, hamming_distance(members[i], members[j]));
  return best;
}

}  // namespace

TEST_CASE("master inequality on exhaustive diameters") {
  const Word conj3 = parse_word("x1^-1 (1 2 3) x1", 1, 5);
  const int diam3 = image_exhaustive(conj3).diameter;
  CHECK(diam3 == 5);
  auto report = master_inequality(conj3, diam3);
  const auto& master = check_named(report, "master");
  CHECK(master.holds);
  CHECK(master.lhs == 3);
  CHECK(master.rhs == 24);

  const Word free_letter = parse_word("x1", 1, 5);
  const int diam_free = image_exhaustive(free_letter).diameter;
  CHECK(diam_free == 5);
  report = master_inequality(free_letter, diam_free);
  CHECK(check_named(report, "master").lhs == 5);   // strong: crit = n
  CHECK(check_named(report, "master").rhs == 12);
  CHECK(check_named(report, "master").holds);
  CHECK(check_named(report, "floor").holds);

  const Word conj2 = parse_word("x1^-1 (1 2) x1", 1, 6);
  for (int diam = 0; diam <= 6; ++diam)
    CHECK(check_named(master_inequality(conj2, diam), "master").holds);

  CHECK_THROWS_AS(master_inequality(Word(1, 5), 0), InvalidInput);
}

TEST_CASE("theorem bounds on exhaustive diameters") {
  const Word x = parse_word("x1", 1, 5);
  auto report = theorem_bounds(x, image_exhaustive(x).diameter);
  const auto& strong = check_named(report, "strong_bound");
  CHECK(strong.applicable);
  CHECK(strong.holds);
  CHECK(strong.lhs == doctest::Approx(1.2));
  CHECK(strong.rhs == doctest::Approx(0.5));
  // x1 also has nontrivial content, so the content bound applies too.
  CHECK(check_named(report, "content_bound").applicable);
  CHECK(check_named(report, "content_bound").holds);

  const Word two = parse_word("x1 (1 2 3) x2", 2, 5);
  REQUIRE(two.is_strong());
  const int diam = image_exhaustive(two).diameter;
  report = theorem_bounds(two, diam);
  CHECK(check_named(report, "strong_bound").holds);
  CHECK((diam + 1) * 4 >= 5);

  const Word neither = parse_word("x1^-1 (1 2) x1", 1, 5);
  report = theorem_bounds(neither, image_exhaustive(neither).diameter);
  CHECK_FALSE(check_named(report, "content_bound").applicable);
  CHECK_FALSE(check_named(report, "strong_bound").applicable);
  CHECK(check_named(report, "content_bound").note == "content is trivial");
}

TEST_CASE("small critical constant for a transposition conjugation") {
  // Image = all transpositions of S_24; its exact diameter is 4.
  const int n = 24;
  const Word w = parse_word("x1 (1 2) x1^-1", 1, n);
  const int diam = class_diameter(parse_permutation("(1 2)", n), n);
  CHECK(diam == 4);
  // (4+1)/24 < 1/(2*2): the strong bound fails, so a small constant exists.
  const auto [index, constant] = find_small_critical_constant(w, diam);
  CHECK(index == 1);
  CHECK(hamming_norm(constant) == 2);
  CHECK(hamming_norm(constant) <= 2 * (diam + 1) * w.length());
}

TEST_CASE("small critical constant picks the smallest support") {
  // Image elements are products of a conjugate transposition and a conjugate
  // 12-cycle, so their norms are at most 14 and the diameter is at most 28;
  // two disjointly-supported values realize it.
  const int n = 240;
  const Word w = parse_word("x1 (1 2) x1^-1 x2 (1 2 3 4 5 6 7 8 9 10 11 12) x2^-1", 2, n);

  // The value at an assignment (pi, rho) is the product of (1 2) conjugated
  // by pi^-1 and the 12-cycle conjugated by rho^-1; placing the four supports
  // pairwise disjointly realizes distance 2 + 12 + 2 + 12.
  const auto placing = [n](int transposition_at, int cycle_at) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::swap(a[0], a[static_cast<std::size_t>(transposition_at)]);
    std::swap(a[1], a[static_cast<std::size_t>(transposition_at + 1)]);
    std::vector<int> b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 0);
    for (int i = 0; i < 12; ++i)
      std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(cycle_at + i)]);
    return Assignment{Permutation(a).inverse(), Permutation(b).inverse()};
  };
  const Permutation u = evaluate(w, placing(30, 50));
  const Permutation v = evaluate(w, placing(100, 120));
  CHECK(hamming_norm(u) == 14);
  CHECK(hamming_norm(v) == 14);
  const int diam = 28;
  CHECK(hamming_distance(u, v) == diam);  // realized, and 28 bounds any pair

  REQUIRE(2 * (diam + 1) * w.length() < n);  // the strong bound fails
  const auto [index, constant] = find_small_critical_constant(w, diam);
  CHECK(index == 1);
  CHECK(hamming_norm(constant) == 2);
}

TEST_CASE("no small constant to find when the strong bound holds") {
  const Word strong = parse_word("x1 (1 2) x1", 1, 8);
  CHECK_THROWS_AS(find_small_critical_constant(strong, image_exhaustive(strong).diameter),
                  InvalidInput);
  // Transpositions of S_20: diameter 4 and (4+1)/20 = 1/4 exactly; the strong
  // bound holds with equality, so the finder refuses.
  const Word marginal = parse_word("x1 (1 2) x1^-1", 1, 20);
  CHECK(class_diameter(parse_permutation("(1 2)", 20), 20) == 4);
  CHECK_THROWS_AS(find_small_critical_constant(marginal, 4), InvalidInput);
}

TEST_CASE("master inequality holds across a random exhaustive corpus") {
  std::mt19937_64 rng(73);
  int tested = 0;
  while (tested < 40) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const int n = 4 + static_cast<int>(rng() % (rank == 1 ? 3 : 2));
    RawWord raw;
    const int letters = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < letters; ++t) {
      raw.push_back(Letter{static_cast<int>(rng() % static_cast<unsigned>(rank)),
                           rng() % 2 ? +1 : -1});
      raw.push_back(rng() % 3 == 0 ? Permutation(n) : random_permutation(rng, n));
    }
    const Word w = Word::reduce(rank, n, raw);
    if (w.length() == 0) continue;
    const auto image = image_exhaustive(w);
    const auto report = master_inequality(w, image.diameter);
    CHECK(check_named(report, "master").holds);
    CHECK(check_named(report, "floor").holds);
    if (w.is_strong()) CHECK(check_named(theorem_bounds(w, image.diameter), "strong_bound").holds);
    if (!has_trivial_content(w))
      CHECK(check_named(theorem_bounds(w, image.diameter), "content_bound").holds);
    ++tested;
  }
}

TEST_CASE("chains only inflate the diameter within the induction factor") {
  std::mt19937_64 rng(79);
  int tested = 0;
  while (tested < 15) {
    const int n = 4 + static_cast<int>(rng() % 3);
    RawWord raw;
    for (int t = 0; t < 4; ++t) {
      raw.push_back(Letter{0, rng() % 2 ? +1 : -1});
      raw.push_back(rng() % 2 ? Permutation(n) : random_permutation(rng, n));
    }
    const Word w = Word::reduce(1, n, raw);
    if (w.length() == 0 || classify(w).critical.empty()) continue;
    const auto chain = reduction_chain(w);
    const long long base = image_exhaustive(w).diameter + 1;
    long long factor = 1;
    for (std::size_t i = 1; i < chain.words.size(); ++i) {
      factor *= 1 + 4 * static_cast<long long>(w.length());
      CHECK(image_exhaustive(chain.words[i]).diameter + 1 <= factor * base);
    }
    ++tested;
  }
}
