#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wordmaps/group.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

/// Coverage of one non-trivial conjugacy class C by iterated products.
struct ClassCovering {
  int class_index = 0;
  /// Minimal m with C^{*m} = G.
  int steps_to_cover = 0;
  /// Minimal m with ({1} u C u C^-1)^{*m} = G.
  int steps_to_cover_symmetric = 0;
  /// Per element: minimal m with the element in C^{*m}, plus one shortest
  /// decomposition retained as predecessor links.
  std::vector<int> distance;
  std::vector<int> predecessor;  // -1 at distance 1
  std::vector<int> last_factor;  // the class member applied last
};

struct CoveringData {
  int covering_number = 0;    // max over classes of steps_to_cover
  int covering_diameter = 0;  // max over classes of steps_to_cover_symmetric
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;  // element index -> index into `classes`
  std::vector<ClassCovering> per_class;  // non-trivial classes only
  /// Entry of `per_class` handling the given element's class.
  const ClassCovering& covering_of_class_member(int element) const;
};

/// Iterated class products until every non-trivial class covers the group.
/// Throws InvalidInput when some class never covers (the group is not simple
/// enough), naming the class.
CoveringData covering_number(const EnumeratedGroup& group);

/// A one-variable word vanishing on `killed` and not at `target`.
struct SeparatorWord {
  Word word;
  int target = 0;                 // element index g
  std::vector<int> killed;        // ascending element indices, g not among them
  int value_at_target = 0;        // element index of word(g), never identity
  int depth = 0;                  // e with 2^e >= |killed|
};

/// Builds the separator recursively: a single kill is x s^-1, larger sets are
/// commutators of conjugated half-separators. Every node's invariants are
/// re-verified by direct evaluation.
SeparatorWord build_separator(const EnumeratedGroup& group, int target, std::vector<int> killed);

/// A word evaluating to `value` at the separator's target and to the identity
/// everywhere else, assembled from at most covering-number many conjugates of
/// the separator.
Word build_delta(const EnumeratedGroup& group, const CoveringData& covering,
                 const SeparatorWord& separator, int value);

struct InterpolationCertificate {
  explicit InterpolationCertificate(Word w) : word(std::move(w)) {}

  Word word;
  std::vector<int> target;        // requested map, element index -> element index
  std::vector<int> table;         // actual evaluation map of `word`
  std::vector<int> delta_lengths; // letters contributed per group element
  long long length = 0;
  long long sharp_bound = 0;      // |G| * 4^ceil(log2(|G|-1)) * cn
  long long cubic_bound = 0;      // 4 |G|^3 * cn

  /// Re-evaluates the word on all of G and checks the ledger; throws
  /// InternalError on any mismatch.
  void verify(const EnumeratedGroup& group) const;
};

/// Compiles an arbitrary self-map of the group into a one-variable word with
/// constants. Separators are cached across calls.
class Interpolator {
public:
  explicit Interpolator(const EnumeratedGroup& group);

  const EnumeratedGroup& group() const { return group_; }
  const CoveringData& covering() const { return covering_; }
  const SeparatorWord& separator(int target);
  Word delta(int target, int value);
  /// map: element index -> element index, total on the group.
  InterpolationCertificate interpolate(const std::vector<int>& map);

private:
  const EnumeratedGroup& group_;
  CoveringData covering_;
  std::vector<std::optional<SeparatorWord>> separators_;
};

/// Whether 3^length |G|^(length+1) >= |G|^|G|, i.e. whether words of the
/// given length are not already ruled out from expressing all self-maps by
/// counting. Exact big-integer arithmetic.
bool counting_lower_bound(const EnumeratedGroup& group, int length);

/// Reads lines "<perm> -> <perm>" into an element-index map; every group
/// element must occur exactly once on the left.
std::vector<int> parse_map_table(const EnumeratedGroup& group, std::istream& in);

}  // namespace wordmaps
