#include "wordmaps/interpolator.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "wordmaps/errors.hpp"
#include "wordmaps/evaluator.hpp"

namespace wordmaps {

namespace {

int depth_for(std::size_t set_size) {
  int e = 0;
  while ((std::size_t{1} << e) < set_size) ++e;
  return e;
}

long long power_of_four(int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out *= 4;
  return out;
}

std::vector<char> multiply_set(const EnumeratedGroup& group, const std::vector<char>& lhs,
                               const std::vector<int>& rhs) {
  std::vector<char> out(group.size(), 0);
  for (int x = 0; x < static_cast<int>(group.size()); ++x) {
    if (!lhs[static_cast<std::size_t>(x)]) continue;
    for (int c : rhs) out[static_cast<std::size_t>(group.multiply(x, c))] = 1;
  }
  return out;
}

bool is_full(const std::vector<char>& set) {
  return std::all_of(set.begin(), set.end(), [](char c) { return c != 0; });
}

}  // namespace

const ClassCovering& CoveringData::covering_of_class_member(int element) const {
  const int cls = class_of[static_cast<std::size_t>(element)];
  for (const auto& entry : per_class)
    if (entry.class_index == cls) return entry;
  throw InvalidInput("element belongs to the trivial class");
}

CoveringData covering_number(const EnumeratedGroup& group) {
  if (group.size() < 2) throw InvalidInput("covering numbers need a non-trivial group");
  CoveringData out;
  out.classes = conjugacy_classes(group);
  out.class_of.assign(group.size(), -1);
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (int member : out.classes[c].members)
      out.class_of[static_cast<std::size_t>(member)] = static_cast<int>(c);

  const int cap = 2 * static_cast<int>(group.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const auto& members = out.classes[c].members;
    if (members.size() == 1 && members.front() == 0) continue;  // trivial class

    ClassCovering cover;
    cover.class_index = static_cast<int>(c);

    // Minimal m with C^{*m} = G. The product sets need not grow, so detect
    // cycles by remembering every set seen.
    {
      std::vector<char> current(group.size(), 0);
      for (int member : members) current[static_cast<std::size_t>(member)] = 1;
      std::set<std::vector<char>> seen{current};
      int m = 1;
      while (!is_full(current)) {
        current = multiply_set(group, current, members);
        ++m;
        if (!seen.insert(current).second || m > cap)
          throw InvalidInput("class of " + format_permutation(group.element(members.front())) +
                             " never covers the group; covering number undefined");
      }
      cover.steps_to_cover = m;
    }

    // Minimal m with ({1} u C u C^-1)^{*m} = G; this product set grows
    // monotonically, so a fixed point before full coverage is conclusive.
    {
      std::vector<int> symmetric{0};
      for (int member : members) {
        symmetric.push_back(member);
        symmetric.push_back(group.inverse(member));
      }
      std::sort(symmetric.begin(), symmetric.end());
      symmetric.erase(std::unique(symmetric.begin(), symmetric.end()), symmetric.end());
      std::vector<char> current(group.size(), 0);
      for (int member : symmetric) current[static_cast<std::size_t>(member)] = 1;
      int m = 1;
      while (!is_full(current)) {
        std::vector<char> next = multiply_set(group, current, symmetric);
        ++m;
        if (next == current)
          throw InvalidInput("class of " + format_permutation(group.element(members.front())) +
                             " generates a proper subgroup; covering diameter undefined");
        current = std::move(next);
      }
      cover.steps_to_cover_symmetric = m;
    }

    // Breadth-first first appearances give one shortest decomposition per
    // element: an element first reached at m has all its product-predecessors
    // first reached at exactly m-1.
    cover.distance.assign(group.size(), -1);
    cover.predecessor.assign(group.size(), -1);
    cover.last_factor.assign(group.size(), -1);
    std::vector<int> frontier;
    for (int member : members) {
      cover.distance[static_cast<std::size_t>(member)] = 1;
      frontier.push_back(member);
    }
    int level = 1;
    while (!frontier.empty()) {
      std::vector<int> next_frontier;
      for (int x : frontier) {
        for (int member : members) {
          const int y = group.multiply(x, member);
          if (cover.distance[static_cast<std::size_t>(y)] >= 0) continue;
          cover.distance[static_cast<std::size_t>(y)] = level + 1;
          cover.predecessor[static_cast<std::size_t>(y)] = x;
          cover.last_factor[static_cast<std::size_t>(y)] = member;
          next_frontier.push_back(y);
        }
      }
      frontier = std::move(next_frontier);
      ++level;
    }

    out.per_class.push_back(std::move(cover));
  }

  out.covering_number = 0;
  out.covering_diameter = 0;
  for (const auto& cover : out.per_class) {
    out.covering_number = std::max(out.covering_number, cover.steps_to_cover);
    out.covering_diameter = std::max(out.covering_diameter, cover.steps_to_cover_symmetric);
  }
  return out;
}

SeparatorWord build_separator(const EnumeratedGroup& group, int target, std::vector<int> killed) {
  std::sort(killed.begin(), killed.end());
  killed.erase(std::unique(killed.begin(), killed.end()), killed.end());
  if (killed.empty()) throw InvalidInput("separator needs a non-empty kill set");
  if (std::binary_search(killed.begin(), killed.end(), target))
    throw InvalidInput("separator target lies in the kill set");

  const int n = group.degree();
  SeparatorWord out{Word(1, n), target, killed, 0, depth_for(killed.size())};
  if (killed.size() == 1) {
    // x s^-1 vanishes exactly at s.
    const Permutation s_inverse = group.element(killed.front()).inverse();
    out.word = Word::reduce(1, n, {Permutation(n), Letter{0, +1}, s_inverse});
    out.value_at_target = group.multiply(target, group.index_of(s_inverse));
  } else {
    const std::size_t half = (killed.size() + 1) / 2;
    SeparatorWord left =
        build_separator(group, target, {killed.begin(), killed.begin() + static_cast<std::ptrdiff_t>(half)});
    SeparatorWord right =
        build_separator(group, target, {killed.begin() + static_cast<std::ptrdiff_t>(half), killed.end()});

    // Find conjugators making the two values fail to commute; simplicity
    // guarantees a pair exists. Identity-first keeps the output canonical.
    int found_a = -1, found_b = -1, value = -1;
    for (int b = 0; found_a < 0 && b < static_cast<int>(group.size()); ++b) {
      const int commutator = group.multiply(
          group.multiply(group.inverse(left.value_at_target),
                         group.inverse(group.conjugate(right.value_at_target, b))),
          group.multiply(left.value_at_target, group.conjugate(right.value_at_target, b)));
      if (commutator != 0) {
        found_a = 0;
        found_b = b;
        value = commutator;
      }
    }
    for (int a = 0; found_a < 0 && a < static_cast<int>(group.size()); ++a) {
      for (int b = 0; found_a < 0 && b < static_cast<int>(group.size()); ++b) {
        const int va = group.conjugate(left.value_at_target, a);
        const int vb = group.conjugate(right.value_at_target, b);
        const int commutator = group.multiply(
            group.multiply(group.inverse(va), group.inverse(vb)), group.multiply(va, vb));
        if (commutator != 0) {
          found_a = a;
          found_b = b;
          value = commutator;
        }
      }
    }
    if (found_a < 0)
      throw InvalidInput("no conjugator pair separates the halves; the group is not simple");

    out.word = Word::commutator(left.word.conjugated_by(group.element(found_a)),
                                right.word.conjugated_by(group.element(found_b)));
    out.value_at_target = value;
    if (out.word.length() > 2 * (left.word.length() + right.word.length()))
      throw InternalError("separator grew beyond twice the halves");
  }

  if (out.word.length() > power_of_four(out.depth))
    throw InternalError("separator exceeds its 4^e length budget");
  // Direct evaluation over killed u {target}.
  for (int s : out.killed)
    if (!evaluate(out.word, {group.element(s)}).is_identity())
      throw InternalError("separator fails to vanish on its kill set");
  const Permutation at_target = evaluate(out.word, {group.element(target)});
  if (at_target.is_identity() || group.index_of(at_target) != out.value_at_target)
    throw InternalError("separator value at the target is wrong");
  return out;
}

Word build_delta(const EnumeratedGroup& group, const CoveringData& covering,
                 const SeparatorWord& separator, int value) {
  const int n = group.degree();
  if (value == 0) return Word(1, n);

  const int v = separator.value_at_target;
  const ClassCovering& cover = covering.covering_of_class_member(v);
  const ConjugacyClass& cls = covering.classes[static_cast<std::size_t>(cover.class_index)];

  // Walk the decomposition value = c_1 ... c_m with every c_t in the class
  // of v, back to front.
  std::vector<int> factors;
  for (int x = value; x != -1; x = cover.predecessor[static_cast<std::size_t>(x)]) {
    if (cover.distance[static_cast<std::size_t>(x)] == 1) {
      factors.push_back(x);
      break;
    }
    factors.push_back(cover.last_factor[static_cast<std::size_t>(x)]);
  }
  std::reverse(factors.begin(), factors.end());
  {
    int product = 0;
    for (int c : factors) product = group.multiply(product, c);
    if (product != value) throw InternalError("class decomposition does not multiply back");
  }

  // Each factor is v conjugated by (conjugator of v)^-1 (conjugator of c).
  const int to_v = cls.conjugator[static_cast<std::size_t>(v)];
  Word out(1, n);
  for (int c : factors) {
    const int conj = group.multiply(group.inverse(to_v), cls.conjugator[static_cast<std::size_t>(c)]);
    out = out * separator.word.conjugated_by(group.element(conj));
  }
  return out;
}

Interpolator::Interpolator(const EnumeratedGroup& group)
    : group_(group), covering_(covering_number(group)), separators_(group.size()) {}

const SeparatorWord& Interpolator::separator(int target) {
  auto& slot = separators_[static_cast<std::size_t>(target)];
  if (!slot) {
    std::vector<int> killed;
    for (int x = 0; x < static_cast<int>(group_.size()); ++x)
      if (x != target) killed.push_back(x);
    slot = build_separator(group_, target, std::move(killed));
  }
  return *slot;
}

Word Interpolator::delta(int target, int value) {
  if (value == 0) return Word(1, group_.degree());  // skip the separator build
  return build_delta(group_, covering_, separator(target), value);
}

InterpolationCertificate Interpolator::interpolate(const std::vector<int>& map) {
  const int order = static_cast<int>(group_.size());
  if (static_cast<int>(map.size()) != order) throw InvalidInput("map must be total on the group");
  for (int value : map)
    if (value < 0 || value >= order) throw InvalidInput("map value out of range");

  Word word(1, group_.degree());
  std::vector<int> delta_lengths;
  for (int g = 0; g < order; ++g) {
    const Word part = delta(g, map[static_cast<std::size_t>(g)]);
    delta_lengths.push_back(part.length());
    word = std::move(word) * part;
  }

  InterpolationCertificate cert(std::move(word));
  cert.target = map;
  cert.delta_lengths = std::move(delta_lengths);
  cert.length = cert.word.length();
  cert.sharp_bound = static_cast<long long>(order) *
                     power_of_four(depth_for(group_.size() - 1)) * covering_.covering_number;
  cert.cubic_bound = 4LL * order * order * order * covering_.covering_number;
  for (const Permutation& value : evaluate_many(cert.word, group_.elements()))
    cert.table.push_back(group_.index_of(value));
  cert.verify(group_);
  return cert;
}

void InterpolationCertificate::verify(const EnumeratedGroup& group) const {
  const int order = static_cast<int>(group.size());
  if (static_cast<int>(target.size()) != order || static_cast<int>(table.size()) != order)
    throw InternalError("interpolation certificate has the wrong table size");
  const std::vector<Permutation> values = evaluate_many(word, group.elements());
  for (int g = 0; g < order; ++g) {
    if (table[static_cast<std::size_t>(g)] != target[static_cast<std::size_t>(g)])
      throw InternalError("interpolation disagrees with the requested map at " +
                          format_permutation(group.element(g)));
    if (group.index_of(values[static_cast<std::size_t>(g)]) != table[static_cast<std::size_t>(g)])
      throw InternalError("interpolation table does not match the word");
  }
  if (length != word.length() || length > sharp_bound || sharp_bound > cubic_bound)
    throw InternalError("interpolation length ledger violated");
}

bool counting_lower_bound(const EnumeratedGroup& group, int length) {
  namespace mp = boost::multiprecision;
  if (length < 0) throw InvalidInput("length must be non-negative");
  const mp::cpp_int order(group.size());
  const mp::cpp_int words = mp::pow(mp::cpp_int(3), static_cast<unsigned>(length)) *
                            mp::pow(order, static_cast<unsigned>(length) + 1);
  const mp::cpp_int maps = mp::pow(order, static_cast<unsigned>(group.size()));
  return words >= maps;
}

std::vector<int> parse_map_table(const EnumeratedGroup& group, std::istream& in) {
  std::vector<int> map(group.size(), -1);
  std::string line;
  std::size_t line_number = 0;
  std::size_t defined = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw InvalidInput("line " + std::to_string(line_number) + ": expected '<perm> -> <perm>'");
    const Permutation from = parse_permutation(line.substr(0, arrow), group.degree());
    const Permutation to = parse_permutation(line.substr(arrow + 2), group.degree());
    const int from_index = group.index_of(from);
    const int to_index = group.index_of(to);
    if (from_index < 0 || to_index < 0)
      throw InvalidInput("line " + std::to_string(line_number) + ": permutation not in the group");
    if (map[static_cast<std::size_t>(from_index)] != -1)
      throw InvalidInput("line " + std::to_string(line_number) + ": element mapped twice");
    map[static_cast<std::size_t>(from_index)] = to_index;
    ++defined;
  }
  if (defined != group.size())
    throw InvalidInput("map defines " + std::to_string(defined) + " of " +
                       std::to_string(group.size()) + " elements");
  return map;
}

}  // namespace wordmaps
