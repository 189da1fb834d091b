#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "wordmaps/permutation.hpp"

namespace wordmaps {

/// A finite permutation group held as an explicit element list.
///
/// Elements are indexed in breadth-first order from the identity, with the
/// generators applied in their given order; index 0 is always the identity.
/// A full multiplication table is precomputed for small groups so that
/// index-level arithmetic is cheap.
class EnumeratedGroup {
public:
  static constexpr std::size_t kDefaultCap = 20'000;

  static EnumeratedGroup closure(std::vector<Permutation> generators, int degree,
                                 std::size_t cap = kDefaultCap);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }

  /// -1 when the permutation is not a member.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  int multiply(int a, int b) const;
  int inverse(int a) const;
  /// g^-1 a g as an element index.
  int conjugate(int a, int g) const;

private:
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::unordered_map<Permutation, int> index_;
  std::vector<int> inverse_;
  std::vector<int> table_;  // size*size when built, else empty
  static constexpr std::size_t kTableCap = 2'048;
};

struct ConjugacyClass {
  int representative = 0;        // element index; the smallest in the class
  std::vector<int> members;      // ascending element indices
  std::vector<int> conjugator;   // per group element e: g with rep^g = e, or -1 off-class
};

/// Partition of the group into conjugation orbits, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const EnumeratedGroup& group);

}  // namespace wordmaps
