#include <doctest.h>

#include <random>

#include "wordmaps/errors.hpp"
#include "wordmaps/evaluator.hpp"
#include "wordmaps/word.hpp"

using namespace wordmaps;

namespace {

const Letter x1{0, +1};
const Letter x1i{0, -1};

Word conjugation_word(const std::string& constant, int n) {
  // g^{x1} spelled out as x1^-1 g x1.
  return Word::reduce(1, n,
                      {Permutation(n), x1i, parse_permutation(constant, n), x1, Permutation(n)});
}

Word commutator_power_word(int n, int times) {
  const Word x = Word::reduce(1, n, {Permutation(n), x1, Permutation(n)});
  return Word::commutator(x, Word(1, parse_permutation("(1 2)", n))).repeated(times);
}

}  // namespace

TEST_CASE("evaluate substitutes and composes left to right") {
  const int n = 5;
  std::mt19937_64 rng(3);
  const Permutation sigma = random_permutation(rng, n);
  const Word x = Word::reduce(1, n, {Permutation(n), x1, Permutation(n)});
  CHECK(evaluate(x, {sigma}) == sigma);

  CHECK_THROWS_AS(evaluate(x, {}), InvalidInput);
  CHECK_THROWS_AS(evaluate(x, {Permutation(4)}), InvalidInput);

  const Word conj = conjugation_word("(1 2 3)", n);
  CHECK(evaluate(conj, {sigma}) == parse_permutation("(1 2 3)", n).conjugated_by(sigma));
}

TEST_CASE("power words hit the identity at the group exponent") {
  const Word w = Word::reduce(1, 4, RawWord{Permutation(4), x1, Permutation(4)}).repeated(24);
  const auto report = is_mixed_identity(w);
  CHECK(report.is_identity);
  CHECK(report.evaluations == 24);
}

TEST_CASE("commutator with a transposition to the sixth power is a mixed identity") {
  const auto report = is_mixed_identity(commutator_power_word(5, 6));
  CHECK(report.is_identity);
  CHECK(report.evaluations == 120);
}

TEST_CASE("mixed identity counterexamples come with a witness") {
  const Word x = Word::reduce(1, 3, {Permutation(3), x1, Permutation(3)});
  const auto report = is_mixed_identity(x);
  CHECK_FALSE(report.is_identity);
  REQUIRE(report.counterexample.has_value());
  CHECK(evaluate(x, *report.counterexample) == *report.counterexample_value);
  CHECK_FALSE(report.counterexample_value->is_identity());
}

TEST_CASE("exhaustive image of a constant word") {
  const Permutation c = parse_permutation("(1 2 3)", 5);
  const auto report = image_exhaustive(Word(1, c));
  CHECK(report.diameter == 0);
  REQUIRE(report.image.has_value());
  CHECK(*report.image == std::vector<Permutation>{c});
}

TEST_CASE("conjugation words realize min(2c, n)") {
  auto report = image_exhaustive(conjugation_word("(1 2 3)", 5));
  CHECK(report.diameter == 5);
  CHECK(report.image->size() == 20);  // all 3-cycles of S_5

  report = image_exhaustive(conjugation_word("(1 2)", 6));
  CHECK(report.diameter == 4);
  CHECK(report.image->size() == 15);
  CHECK(hamming_distance(report.witnesses.first, report.witnesses.second) == 4);
}

TEST_CASE("enumeration budget") {
  const Word w = Word::reduce(1, 11, {Permutation(11), x1, Permutation(11)});
  CHECK_THROWS_AS(image_exhaustive(w), BudgetExceeded);
  CHECK_THROWS_AS(is_mixed_identity(w), BudgetExceeded);
  EnumerationBudget small{100};
  CHECK_THROWS_AS(image_exhaustive(Word::reduce(1, 5, {Permutation(5), x1, Permutation(5)}), small),
                  BudgetExceeded);
}

TEST_CASE("sampled diameter") {
  const auto constant = diameter_sampled(Word(1, parse_permutation("(1 2)", 8)), 10, 1);
  CHECK(constant.diameter == 0);

  const Word x = Word::reduce(1, 20, {Permutation(20), x1, Permutation(20)});
  const auto spread = diameter_sampled(x, 200, 12345);
  CHECK(spread.diameter <= 20);
  CHECK(spread.diameter >= 18);
  CHECK(hamming_distance(spread.witnesses.first, spread.witnesses.second) == spread.diameter);
  // Reproducible for a fixed seed.
  CHECK(diameter_sampled(x, 200, 12345).diameter == spread.diameter);

  const auto conj = diameter_sampled(conjugation_word("(1 2)", 30), 100, 7);
  CHECK(conj.diameter <= 4);  // the image is the set of transpositions
  CHECK(conj.diameter == 4);

  CHECK_THROWS_AS(diameter_sampled(x, 1, 0), InvalidInput);
}

TEST_CASE("sampled diameter never exceeds the exhaustive diameter") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const int n = 4 + static_cast<int>(rng() % (rank == 1 ? 3 : 2));
    RawWord raw;
    const int letters = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < letters; ++t) {
      raw.push_back(Letter{static_cast<int>(rng() % static_cast<unsigned>(rank)),
                           rng() % 2 ? +1 : -1});
      raw.push_back(random_permutation(rng, n));
    }
    const Word w = Word::reduce(rank, n, raw);
    const auto exact = image_exhaustive(w);
    const auto sampled = diameter_sampled(w, 40, rng());
    CHECK(sampled.diameter <= exact.diameter);
  }
}

TEST_CASE("strong words of positive length are not identities once n is large enough") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    RawWord raw;
    // Keep (n!)^rank within the default budget: n stays <= 8 for rank 1 and
    // <= 6 for rank 2.
    const int letters = 1 + static_cast<int>(rng() % (rank == 1 ? 3 : 2));
    Letter previous{-1, 0};
    for (int t = 0; t < letters; ++t) {
      Letter next;
      do {
        next = Letter{static_cast<int>(rng() % static_cast<unsigned>(rank)),
                      rng() % 2 ? +1 : -1};
      } while (t > 0 && next == previous.inverse());
      raw.push_back(next);
      previous = next;
    }
    const int n = 2 * letters + static_cast<int>(rng() % (rank == 1 ? 3 : 2));
    RawWord sized;
    for (const RawItem& item : raw) {
      sized.push_back(item);
      sized.push_back(rng() % 2 ? random_permutation(rng, n) : Permutation(n));
    }
    const Word w = Word::reduce(rank, n, sized);
    REQUIRE(w.is_strong());
    if (w.length() == 0) continue;
    CHECK_FALSE(is_mixed_identity(w).is_identity);
  }
}
