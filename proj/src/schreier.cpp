#include "wordmaps/schreier.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <string>

#include "wordmaps/errors.hpp"

namespace wordmaps {

bool LemmaConditions::all_satisfied() const {
  const auto ok = [](const std::vector<ConditionCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ConditionCheck& c) { return c.satisfied(); });
  };
  return ok(variable_change) && ok(same_sign) && ok(critical) && final_letter.satisfied();
}

LemmaConditions check_conditions(const Word& w, int d) {
  if (w.length() == 0) throw InvalidInput("conditions are defined for non-constant words only");
  if (d < 1) throw InvalidInput("target distance must be at least 1");
  const int l = w.length();
  const long long n = w.degree();
  const Classification cls = classify(w);
  const std::vector<int>& totals = cls.prefix_counts.back();
  const auto total = [&](int j) {
    return static_cast<long long>(totals[static_cast<std::size_t>(w.letter(j).variable)]);
  };
  const auto prefix = [&](int j, int variable_of) {
    return static_cast<long long>(
        cls.prefix_counts[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(w.letter(variable_of).variable)]);
  };

  LemmaConditions out;
  out.d = d;
  for (int j : cls.variable_change)
    out.variable_change.push_back(
        {j, n,
         (d - 1) * (total(j) + total(j + 1)) + prefix(j, j) + prefix(j + 1, j + 1) - 1});
  for (int j : cls.same_sign)
    out.same_sign.push_back({j, n, 2 * ((d - 1) * total(j) + prefix(j + 1, j) - 1)});
  for (int j : cls.critical)
    out.critical.push_back({j, hamming_norm(w.constant(j)),
                            2 * ((d - 1) * total(j) + prefix(j + 1, j)) - 3});
  out.final_letter = {l, n, static_cast<long long>(d) * total(l) + 1};
  return out;
}

int max_feasible_distance(const Word& w) {
  int best = 0;
  for (int d = 1; d <= w.degree(); ++d) {
    if (!check_conditions(w, d).all_satisfied()) break;
    best = d;
  }
  return best;
}

Assignment complete_partial(const std::vector<std::vector<int>>& partial, int degree) {
  Assignment out;
  for (const auto& map : partial) {
    if (static_cast<int>(map.size()) != degree) throw InvalidInput("partial map size mismatch");
    std::vector<int> images(static_cast<std::size_t>(degree), -1);
    std::vector<char> taken(static_cast<std::size_t>(degree), 0);
    for (int s = 0; s < degree; ++s) {
      const int t = map[static_cast<std::size_t>(s)];
      if (t < 0) continue;
      if (t >= degree || taken[static_cast<std::size_t>(t)])
        throw InvalidInput("partial map is not injective");
      images[static_cast<std::size_t>(s)] = t;
      taken[static_cast<std::size_t>(t)] = 1;
    }
    std::vector<int> free_targets;
    for (int t = 0; t < degree; ++t)
      if (!taken[static_cast<std::size_t>(t)]) free_targets.push_back(t);
    std::size_t next = 0;
    for (int s = 0; s < degree; ++s)
      if (images[static_cast<std::size_t>(s)] < 0) images[static_cast<std::size_t>(s)] = free_targets[next++];
    out.push_back(Permutation(std::move(images)));
  }
  return out;
}

namespace {

std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

void write_trace_line(std::ostream& os, const ArrowTrace& t) {
  os << "{\"round\":" << t.basepoint_round << ",\"step\":" << t.step
     << ",\"variable\":" << t.variable + 1 << ",\"sign\":" << t.sign
     << ",\"source\":" << t.source + 1 << ",\"target\":" << t.target + 1
     << ",\"admissible\":" << t.admissible << ",\"lower_bound\":" << t.lower_bound << "}\n";
}

}  // namespace

WitnessCertificate construct_witness(const Word& w, int d, std::optional<Permutation> tau,
                                     const WitnessOptions& options) {
  const LemmaConditions conditions = check_conditions(w, d);
  if (!conditions.all_satisfied())
    throw InvalidInput("the distance-" + std::to_string(d) +
                       " conditions are not satisfied for this word");

  const int n = w.degree();
  const int rank = w.rank();
  const int l = w.length();

  WitnessCertificate cert(w);
  cert.d = d;
  cert.lead_stripped = !w.lead().is_identity();
  cert.tau = tau.value_or(evaluate(w, Assignment(static_cast<std::size_t>(rank), Permutation(n))));
  if (cert.tau.degree() != n) throw InvalidInput("tau degree mismatch");

  // The construction works on the lead-stripped word; bi-invariance of the
  // Hamming metric transfers the distance bound back to w.
  const Permutation tau_stripped = w.lead().inverse() * cert.tau;
  std::vector<int> tau_images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) tau_images[static_cast<std::size_t>(p)] = tau_stripped.image_of(p);

  const Classification cls = classify(w);
  const std::vector<int>& totals = cls.prefix_counts.back();
  const Letter first = w.letter(1);

  for (int k = 0; k < d; ++k) cert.basepoints.push_back(k);

  // Per-variable partial injective maps: forward[v][s] = t and backward[v][t]
  // = s exactly when the map sends s to t.
  std::vector<std::vector<int>> forward(static_cast<std::size_t>(rank),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<std::vector<int>> backward = forward;

  std::optional<std::mt19937_64> rng;
  if (options.selection_seed) rng.emplace(*options.selection_seed);

  cert.trajectories.assign(static_cast<std::size_t>(d), {});
  std::vector<int> admissible;
  for (int k = 1; k <= d; ++k) {
    auto& trajectory = cert.trajectories[static_cast<std::size_t>(k - 1)];
    trajectory.push_back(cert.basepoints[static_cast<std::size_t>(k - 1)]);
    for (int j = 1; j <= l; ++j) {
      const Letter letter = w.letter(j);
      const int v = letter.variable;
      const Permutation& cj = w.constant(j);
      const int source = trajectory.back();

      auto& source_map = letter.sign > 0 ? forward[static_cast<std::size_t>(v)]
                                         : backward[static_cast<std::size_t>(v)];
      auto& target_map = letter.sign > 0 ? backward[static_cast<std::size_t>(v)]
                                         : forward[static_cast<std::size_t>(v)];
      if (source_map[static_cast<std::size_t>(source)] != -1)
        throw InternalError("witness construction: source already in use at round " +
                            std::to_string(k) + " step " + std::to_string(j));

      // Reservation of later basepoints: (b) guards the chosen endpoint when
      // this arrow could serve as a first-step arrow of a later round; (b')
      // guards the next step's start point the same way.
      const bool reserve_here = v == first.variable && letter.sign == -first.sign;
      const bool reserve_next = j < l && w.letter(j + 1).variable == first.variable &&
                                w.letter(j + 1).sign == first.sign;

      admissible.clear();
      for (int t = 0; t < n; ++t) {
        if (target_map[static_cast<std::size_t>(t)] != -1) continue;  // keep the map injective
        if (reserve_here && t >= k && t < d) continue;
        const int after = cj.image_of(t);
        if (reserve_next && after >= k && after < d) continue;
        if (j < l) {
          const Letter next = w.letter(j + 1);
          const auto& next_sources = next.sign > 0 ? forward[static_cast<std::size_t>(next.variable)]
                                                   : backward[static_cast<std::size_t>(next.variable)];
          if (next_sources[static_cast<std::size_t>(after)] != -1) continue;
          if (next.variable == v) {
            // The arrow being added is itself labeled with this variable and
            // is not in the tables yet.
            const int own_next_source = next.sign == letter.sign ? source : t;
            if (after == own_next_source) continue;
          }
        } else {
          // Last letter: the endpoint must witness a disagreement with tau.
          if (after == tau_images[static_cast<std::size_t>(trajectory.front())]) continue;
        }
        admissible.push_back(t);
      }

      // Counting guarantee for this step, from the per-case tallies; the
      // admissible set can only be larger because exclusions may overlap.
      const long long total_v = totals[static_cast<std::size_t>(v)];
      const long long prefix_next =
          j < l ? cls.prefix_counts[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(v)] : 0;
      const long long reserve_cost =
          (reserve_here ? d - k : 0) + (reserve_next ? d - k : 0);
      long long bound = 0;
      if (j == l) {
        bound = n - ((k - 1) * total_v +
                     cls.prefix_counts[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] - 1) -
                (reserve_here ? d - k : 0) - 1;
      } else if (w.letter(j + 1).variable != v) {
        const long long total_u = totals[static_cast<std::size_t>(w.letter(j + 1).variable)];
        const long long prefix_u =
            cls.prefix_counts[static_cast<std::size_t>(j + 1)]
                             [static_cast<std::size_t>(w.letter(j + 1).variable)];
        const long long prefix_v =
            cls.prefix_counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
        bound = n - ((k - 1) * (total_v + total_u) + prefix_v + prefix_u - 2) - reserve_cost;
      } else if (w.letter(j + 1).sign == letter.sign) {
        bound = n - (2 * ((k - 1) * total_v + prefix_next - 2) + 1) - reserve_cost;
      } else {
        bound = hamming_norm(cj) - (2 * ((k - 1) * total_v + prefix_next) - 4) - reserve_cost;
      }

      if (admissible.empty())
        throw InternalError("witness construction: no admissible target at round " +
                            std::to_string(k) + " step " + std::to_string(j));
      if (static_cast<long long>(admissible.size()) < bound)
        throw InternalError("witness construction: admissible count below its guarantee");

      const int target =
          rng ? admissible[bounded_random(*rng, admissible.size())] : admissible.front();
      source_map[static_cast<std::size_t>(source)] = target;
      target_map[static_cast<std::size_t>(target)] = source;
      trajectory.push_back(cj.image_of(target));

      const ArrowTrace record{k,      j,      v,
                              letter.sign, source, target,
                              static_cast<int>(admissible.size()), bound};
      cert.trace.push_back(record);
      if (options.trace_sink) write_trace_line(*options.trace_sink, record);
    }
  }

  cert.assignment = complete_partial(forward, n);
  cert.sigma = evaluate(w, cert.assignment);
  cert.verify();
  return cert;
}

std::vector<int> WitnessCertificate::disagreement_points() const {
  const Permutation lead_inverse = word.lead().inverse();
  std::vector<int> out;
  for (int base : basepoints) out.push_back(lead_inverse.image_of(base));
  return out;
}

void WitnessCertificate::verify() const {
  const int n = word.degree();
  const int l = word.length();
  if (static_cast<int>(basepoints.size()) != d || static_cast<int>(trajectories.size()) != d)
    throw InternalError("certificate: wrong number of basepoints or trajectories");

  if (evaluate(word, assignment) != sigma)
    throw InternalError("certificate: sigma does not match the assignment's value");
  if (hamming_distance(sigma, tau) < d)
    throw InternalError("certificate: sigma and tau are closer than d");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int base : basepoints) {
    if (base < 0 || base >= n || seen[static_cast<std::size_t>(base)])
      throw InternalError("certificate: basepoints not distinct points");
    seen[static_cast<std::size_t>(base)] = 1;
  }

  // Trajectories follow the prefixes of the lead-stripped word.
  std::vector<Permutation> inverses;
  for (const auto& pi : assignment) inverses.push_back(pi.inverse());
  const Permutation tau_stripped = word.lead().inverse() * tau;
  for (int k = 0; k < d; ++k) {
    const auto& trajectory = trajectories[static_cast<std::size_t>(k)];
    if (static_cast<int>(trajectory.size()) != l + 1)
      throw InternalError("certificate: trajectory length mismatch");
    int point = basepoints[static_cast<std::size_t>(k)];
    if (trajectory.front() != point) throw InternalError("certificate: trajectory start mismatch");
    for (int j = 1; j <= l; ++j) {
      const Letter letter = word.letter(j);
      const Permutation& pi = letter.sign > 0
                                  ? assignment[static_cast<std::size_t>(letter.variable)]
                                  : inverses[static_cast<std::size_t>(letter.variable)];
      point = word.constant(j).image_of(pi.image_of(point));
      if (trajectory[static_cast<std::size_t>(j)] != point)
        throw InternalError("certificate: trajectory does not match the assignment");
    }
    if (point == tau_stripped.image_of(trajectory.front()))
      throw InternalError("certificate: trajectory endpoint collides with tau");
  }

  // The certified disagreement points really separate sigma from tau.
  for (int p : disagreement_points())
    if (sigma.image_of(p) == tau.image_of(p))
      throw InternalError("certificate: sigma and tau agree at a certified point");

  // Arrow bookkeeping: after every step the per-variable arrow counts equal
  // (k-1)*||w||_v + ||w_j||_v, and each step met its counting guarantee.
  const Classification cls = classify(word);
  std::vector<int> arrows(static_cast<std::size_t>(word.rank()), 0);
  std::size_t at = 0;
  for (int k = 1; k <= d; ++k) {
    for (int j = 1; j <= l; ++j, ++at) {
      if (at >= trace.size()) throw InternalError("certificate: trace too short");
      const ArrowTrace& record = trace[at];
      ++arrows[static_cast<std::size_t>(record.variable)];
      for (int v = 0; v < word.rank(); ++v) {
        const int expected =
            (k - 1) * cls.prefix_counts.back()[static_cast<std::size_t>(v)] +
            cls.prefix_counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
        if (arrows[static_cast<std::size_t>(v)] != expected)
          throw InternalError("certificate: arrow count deviates from the step formula");
      }
      if (record.admissible < 1 || record.admissible < record.lower_bound)
        throw InternalError("certificate: a step had fewer admissible targets than guaranteed");
    }
  }
}

}  // namespace wordmaps
