// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wordmaps/bounds.hpp"
#include "wordmaps/cli.hpp"
#include "wordmaps/errors.hpp"
#include "wordmaps/evaluator.hpp"
#include "wordmaps/group.hpp"
#include "wordmaps/interpolator.hpp"
#include "wordmaps/parser.hpp"
#include "wordmaps/schreier.hpp"

using namespace wordmaps;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      failures.push_back(what);
    }
  }
};

int g_failures = 0;

void run_criterion(int number, const std::string& title, double time_limit_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.failures.push_back(std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_seconds > 0 && seconds > time_limit_seconds) {
    outcome.pass = false;
    outcome.failures.push_back("runtime " + std::to_string(seconds) + "s exceeds " +
                               std::to_string(time_limit_seconds) + "s");
  }
  std::printf("criterion %2d [%s] %s (%s%.2fs)\n", number, outcome.pass ? "PASS" : "FAIL",
              title.c_str(), outcome.detail.empty() ? "" : (outcome.detail + ", ").c_str(),
              seconds);
  if (!outcome.pass) {
    ++g_failures;
    for (const auto& failure : outcome.failures)
      std::printf("              - %s\n", failure.c_str());
  }
  std::fflush(stdout);
}

// ---- corpus generators (fixed seeds; regenerated identically every run) ----

Word random_strong_word(std::mt19937_64& rng, int rank, int degree, int letters) {
  RawWord raw;
  Letter previous{-1, 0};
  for (int t = 0; t < letters; ++t) {
    Letter next;
    do {
      next = Letter{static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2 ? +1 : -1};
    } while (t > 0 && next == previous.inverse());
    raw.push_back(next);
    raw.push_back(rng() % 3 == 0 ? Permutation(degree) : random_permutation(rng, degree));
    previous = next;
  }
  return Word::reduce(rank, degree, raw);
}

Word random_word(std::mt19937_64& rng, int rank, int degree, int letters) {
  RawWord raw;
  for (int t = 0; t < letters; ++t) {
    raw.push_back(Letter{static_cast<int>(rng() % static_cast<unsigned>(rank)), rng() % 2 ? +1 : -1});
    raw.push_back(rng() % 4 == 0 ? Permutation(degree) : random_permutation(rng, degree));
  }
  return Word::reduce(rank, degree, raw);
}

// 300 strong non-constant words, r <= 2, l <= 6, n in {4,5,6}.
std::vector<Word> strong_corpus() {
  std::mt19937_64 rng(20240004);
  std::vector<Word> corpus;
  while (corpus.size() < 300) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const int degree = 4 + static_cast<int>(rng() % 3);
    const int letters = 1 + static_cast<int>(rng() % 6);
    Word w = random_strong_word(rng, rank, degree, letters);
    if (w.length() >= 1) corpus.push_back(std::move(w));
  }
  return corpus;
}

// 300 words with nontrivial content and at least one critical constant.
std::vector<Word> critical_corpus() {
  std::mt19937_64 rng(20240005);
  std::vector<Word> corpus;
  while (corpus.size() < 300) {
    const int rank = 1 + static_cast<int>(rng() % 2);
    const int degree = 4 + static_cast<int>(rng() % 3);
    const int letters = 2 + static_cast<int>(rng() % 5);
    Word w = random_word(rng, rank, degree, letters);
    if (w.length() < 1 || has_trivial_content(w) || classify(w).critical.empty()) continue;
    corpus.push_back(std::move(w));
  }
  return corpus;
}

const EnumeratedGroup& alternating5() {
  static const EnumeratedGroup group = EnumeratedGroup::closure(
      {parse_permutation("(1 2 3)", 5), parse_permutation("(3 4 5)", 5)}, 5);
  return group;
}

}  // namespace

int main() {
  std::printf("acceptance suite, tool version %s\n", kToolVersion);

  run_criterion(1, "commutator-with-transposition sixth power is a mixed identity on S_4..S_8", 5.0,
                [](Outcome& outcome) {
                  std::uint64_t total = 0;
                  for (int n = 4; n <= 8; ++n) {
                    const Word w = parse_word("[x1,(1 2)]^6", 1, n);
                    const auto report = is_mixed_identity(w);
                    outcome.require(report.is_identity,
                                    "not an identity at n=" + std::to_string(n));
                    outcome.require(report.evaluations == factorial(n),
                                    "early exit at n=" + std::to_string(n));
                    total += report.evaluations;
                  }
                  outcome.detail = std::to_string(total) + " evaluations";
                });

  run_criterion(2, "x^(n!) evaluates to the identity on S_3..S_5", 0, [](Outcome& outcome) {
    for (int n = 3; n <= 5; ++n) {
      const Word w = parse_word("x1^" + std::to_string(factorial(n)), 1, n);
      outcome.require(is_mixed_identity(w).is_identity,
                      "x^(n!) not an identity at n=" + std::to_string(n));
    }
  });

  run_criterion(
      3, "conjugated c-cycles have image diameter min(2c, n), 2 <= c <= n <= 7", 10.0,
      [](Outcome& outcome) {
        int pairs = 0;
        for (int n = 2; n <= 7; ++n) {
          for (int c = 2; c <= n; ++c) {
            std::string cycle = "(";
            for (int i = 1; i <= c; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
            cycle += ")";
            const Word w = parse_word("x1^-1 " + cycle + " x1", 1, n);
            const int diameter = image_exhaustive(w).diameter;
            const int expected = std::min(2 * c, n);
            outcome.require(diameter == expected,
                            "c=" + std::to_string(c) + " n=" + std::to_string(n) + ": diameter " +
                                std::to_string(diameter) + " != min(2c,n) = " +
                                std::to_string(expected) +
                                (c == 2 && n == 2
                                     ? " [the class of (1 2) in the abelian S_2 is a singleton, "
                                       "so the image diameter is 0; the formula needs n >= 3]"
                                     : ""));
            ++pairs;
          }
        }
        outcome.detail = std::to_string(pairs) + " (c,n) pairs";
      });

  // Criteria 4-6 and 11 share the two 300-word corpora and their exhaustive
  // diameters.
  const std::vector<Word> strong_words = strong_corpus();
  const std::vector<Word> critical_words = critical_corpus();
  std::vector<int> strong_diameters, critical_diameters;

  run_criterion(4, "strong corpus: (diam+1)/n >= 1/(2 length), 300 words", 0,
                [&](Outcome& outcome) {
                  int violations = 0;
                  for (const Word& w : strong_words) {
                    const int diameter = image_exhaustive(w).diameter;
                    strong_diameters.push_back(diameter);
                    const long long lhs = 2LL * (diameter + 1) * w.length();
                    if (lhs < w.degree()) ++violations;
                  }
                  outcome.require(violations == 0,
                                  std::to_string(violations) + " violations of the strong bound");
                  outcome.detail = "0 violations";
                });

  run_criterion(
      5, "critical corpus: (diam+1)/n >= exp(-log(5 l) l/2)/2, 300 words", 0,
      [&](Outcome& outcome) {
        int violations = 0;
        for (const Word& w : critical_words) {
          const int diameter = image_exhaustive(w).diameter;
          critical_diameters.push_back(diameter);
          const double lhs = (diameter + 1.0) / w.degree();
          const double rhs =
              0.5 * std::exp(-std::log(5.0 * w.length()) * static_cast<double>(w.length()) / 2.0);
          if (lhs < rhs * (1.0 - 1e-12)) ++violations;
        }
        outcome.require(violations == 0,
                        std::to_string(violations) + " violations of the content bound");
        outcome.detail = "0 violations";
      });

  run_criterion(6, "master inequality crit <= 2 (diam+1) length over both corpora", 0,
                [&](Outcome& outcome) {
                  int violations = 0;
                  const auto check = [&](const std::vector<Word>& words,
                                         const std::vector<int>& diameters) {
                    for (std::size_t i = 0; i < words.size(); ++i) {
                      const Norms nm = norms(words[i]);
                      if (nm.critical_support > 2LL * (diameters[i] + 1) * nm.length)
                        ++violations;
                    }
                  };
                  check(strong_words, strong_diameters);
                  check(critical_words, critical_diameters);
                  outcome.require(violations == 0,
                                  std::to_string(violations) + " violations of the master bound");
                  outcome.detail = "600 words, 0 violations";
                });

  run_criterion(
      7, "witness certificates at the largest feasible distance, 100 words, n <= 64", 30.0,
      [](Outcome& outcome) {
        std::mt19937_64 rng(20240007);
        int built = 0;
        int internal_errors = 0;
        while (built < 100) {
          const int rank = 1 + static_cast<int>(rng() % 2);
          const int degree = 16 << (rng() % 3);  // 16, 32, 64
          const Word w = random_word(rng, rank, degree, 1 + static_cast<int>(rng() % 6));
          if (w.length() < 1) continue;
          const int d = max_feasible_distance(w);
          if (d < 1) continue;
          try {
            const WitnessCertificate cert = construct_witness(w, d);
            cert.verify();
            outcome.require(hamming_distance(cert.sigma, cert.tau) >= d, "distance below d");
          } catch (const InternalError& e) {
            ++internal_errors;
            outcome.require(false, std::string("internal contradiction: ") + e.what());
          }
          ++built;
        }
        outcome.require(internal_errors == 0, "internal-contradiction errors occurred");
        outcome.detail = "100 certificates, 0 internal contradictions";
      });

  run_criterion(
      8, "strong words with length < n/2 induce non-constant maps, 50 words", 0,
      [](Outcome& outcome) {
        std::mt19937_64 rng(20240008);
        int built = 0;
        while (built < 50) {
          const int rank = 1 + static_cast<int>(rng() % 2);
          const int degree = 6 + static_cast<int>(rng() % 59);  // 6..64
          const int letters = 1 + static_cast<int>(rng() % 6);
          if (2 * letters >= degree) continue;
          const Word w = random_strong_word(rng, rank, degree, letters);
          const int d = degree / (2 * w.length());
          outcome.require(d >= 1, "degenerate target distance");
          const WitnessCertificate cert = construct_witness(w, d);
          cert.verify();
          // sigma and tau are two values of the word map at distance >= d >= 1.
          outcome.require(cert.sigma != cert.tau, "witness failed to separate two values");
          ++built;
        }
        outcome.detail = "50 non-constant maps certified";
      });

  run_criterion(9, "covering numbers: cn(A_6) = 3 and cd <= cn on A_5, A_6", 60.0,
                [](Outcome& outcome) {
                  const auto a6 = EnumeratedGroup::closure(
                      {parse_permutation("(1 2 3)", 6), parse_permutation("(2 3 4)", 6),
                       parse_permutation("(3 4 5)", 6), parse_permutation("(4 5 6)", 6)},
                      6);
                  outcome.require(a6.size() == 360, "A_6 closure has the wrong order");
                  const CoveringData cover6 = covering_number(a6);
                  outcome.require(cover6.covering_number == 3,
                                  "cn(A_6) = " + std::to_string(cover6.covering_number) +
                                      ", expected floor(6/2) = 3");
                  outcome.require(cover6.covering_diameter <= cover6.covering_number,
                                  "cd(A_6) > cn(A_6)");
                  const CoveringData cover5 = covering_number(alternating5());
                  outcome.require(cover5.covering_diameter <= cover5.covering_number,
                                  "cd(A_5) > cn(A_5)");
                  outcome.detail = "cn(A_5) = " + std::to_string(cover5.covering_number) +
                                   ", cn(A_6) = 3";
                });

  run_criterion(
      10, "ten seeded self-maps of A_5 compile to words, exact at all 60 points", 0,
      [](Outcome& outcome) {
        const auto& group = alternating5();
        Interpolator interpolator(group);
        std::mt19937_64 rng(20240010);
        double slowest = 0;
        for (int map_index = 0; map_index < 10; ++map_index) {
          std::vector<int> map;
          for (std::size_t g = 0; g < group.size(); ++g)
            map.push_back(static_cast<int>(rng() % group.size()));
          const auto start = std::chrono::steady_clock::now();
          // interpolate() re-verifies the 60-point table and the length
          // ledger; separators assert the per-stage 4^e budget as they build.
          const InterpolationCertificate cert = interpolator.interpolate(map);
          const double seconds =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          slowest = std::max(slowest, seconds);
          outcome.require(cert.table == map, "map mismatch");
          outcome.require(cert.length <= cert.cubic_bound, "length above 4|G|^3 cn");
          outcome.require(seconds < 120.0, "a single map exceeded two minutes");
        }
        std::ostringstream detail;
        detail.precision(2);
        detail << std::fixed << "slowest map " << slowest << "s";
        outcome.detail = detail.str();
      });

  run_criterion(
      11, "chain induction diam(w_i)+1 <= (1+4l)^i (diam(w)+1) over the critical corpus", 0,
      [&](Outcome& outcome) {
        int violations = 0;
        int chains = 0;
        for (std::size_t i = 0; i < critical_words.size(); ++i) {
          const Word& w = critical_words[i];
          const ReductionChain chain = reduction_chain(w);
          const long long base = critical_diameters[i] + 1;
          long long factor = 1;
          for (std::size_t step = 1; step < chain.words.size(); ++step) {
            factor *= 1 + 4LL * w.length();
            const long long lhs = image_exhaustive(chain.words[step]).diameter + 1;
            if (lhs > factor * base) ++violations;
          }
          ++chains;
        }
        outcome.require(violations == 0, std::to_string(violations) + " chain violations");
        outcome.detail = std::to_string(chains) + " chains, 0 violations";
      });

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", g_failures);
  return 1;
}
