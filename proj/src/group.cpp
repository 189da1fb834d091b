#include "wordmaps/group.hpp"

#include <deque>
#include <string>

#include "wordmaps/errors.hpp"

namespace wordmaps {

EnumeratedGroup EnumeratedGroup::closure(std::vector<Permutation> generators, int degree,
                                         std::size_t cap) {
  EnumeratedGroup g;
  g.degree_ = degree;
  for (const auto& gen : generators)
    if (gen.degree() != degree) throw InvalidInput("generator degree mismatch");
  g.generators_ = std::move(generators);

  g.elements_.push_back(Permutation(degree));
  g.index_.emplace(g.elements_.front(), 0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int current = frontier.front();
    frontier.pop_front();
    for (const auto& gen : g.generators_) {
      Permutation next = g.elements_[static_cast<std::size_t>(current)] * gen;
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= cap)
        throw BudgetExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
      const int id = static_cast<int>(g.elements_.size());
      g.index_.emplace(next, id);
      g.elements_.push_back(std::move(next));
      frontier.push_back(id);
    }
  }

  g.inverse_.resize(g.elements_.size());
  for (std::size_t e = 0; e < g.elements_.size(); ++e) {
    const int inv = g.index_of(g.elements_[e].inverse());
    if (inv < 0) throw InternalError("closure not closed under inverse");
    g.inverse_[e] = inv;
  }
  if (g.elements_.size() <= kTableCap) {
    const std::size_t n = g.elements_.size();
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = g.index_of(g.elements_[a] * g.elements_[b]);
  }
  return g;
}

int EnumeratedGroup::index_of(const Permutation& p) const {
  const auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int EnumeratedGroup::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)];
  const int out = index_of(element(a) * element(b));
  if (out < 0) throw InternalError("product left the group");
  return out;
}

int EnumeratedGroup::inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

int EnumeratedGroup::conjugate(int a, int g) const {
  return multiply(multiply(inverse(g), a), g);
}

std::vector<ConjugacyClass> conjugacy_classes(const EnumeratedGroup& group) {
  const int order = static_cast<int>(group.size());
  std::vector<ConjugacyClass> classes;
  std::vector<char> assigned(static_cast<std::size_t>(order), 0);
  std::vector<int> generator_ids;
  for (const auto& gen : group.generators()) generator_ids.push_back(group.index_of(gen));

  for (int rep = 0; rep < order; ++rep) {
    if (assigned[static_cast<std::size_t>(rep)]) continue;
    ConjugacyClass cls;
    cls.representative = rep;
    cls.conjugator.assign(static_cast<std::size_t>(order), -1);
    cls.conjugator[static_cast<std::size_t>(rep)] = 0;  // identity conjugates rep to itself
    assigned[static_cast<std::size_t>(rep)] = 1;
    std::deque<int> frontier{rep};
    cls.members.push_back(rep);
    while (!frontier.empty()) {
      const int m = frontier.front();
      frontier.pop_front();
      for (int gen : generator_ids) {
        const int next = group.conjugate(m, gen);
        if (cls.conjugator[static_cast<std::size_t>(next)] >= 0) continue;
        cls.conjugator[static_cast<std::size_t>(next)] =
            group.multiply(cls.conjugator[static_cast<std::size_t>(m)], gen);
        assigned[static_cast<std::size_t>(next)] = 1;
        cls.members.push_back(next);
        frontier.push_back(next);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace wordmaps
