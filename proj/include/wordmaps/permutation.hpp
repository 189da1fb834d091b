#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wordmaps {

/// A permutation of {0, ..., n-1} acting on the right: points transform as
/// p -> p.image_of(p), and a * b means "apply a, then b".
///
/// Points are 0-based internally; all textual I/O (cycle notation) is 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int image_of(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;
  /// g^-1 * (*this) * g, i.e. the conjugate under the right action.
  Permutation conjugated_by(const Permutation& g) const;
  /// Cycle-wise power; the exponent may be arbitrarily large or negative.
  Permutation power(long long exponent) const;
  long long order() const;

  int support_size() const;
  std::vector<int> support() const;
  std::vector<int> fixed_points() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that
  /// point. 0-based.
  std::vector<std::vector<int>> cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation& operator*=(const Permutation& rhs);

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

/// |supp(p)|, the (unnormalized) Hamming norm.
int hamming_norm(const Permutation& p);
/// ||a^-1 b||; bi-invariant.
int hamming_distance(const Permutation& a, const Permutation& b);

/// Parses 'e' or a sequence of disjoint cycles such as "(1 2 3)(4 6)".
/// Entries are 1-based and separated by whitespace or commas.
Permutation parse_permutation(std::string_view text, int degree);

/// Starting at `pos`, parses one run of cycles with no whitespace between a
/// closing ')' and the next cycle's '('. Used by the word DSL, where
/// whitespace ends an atom. Advances `pos` past the run.
Permutation parse_cycle_run(std::string_view text, std::size_t& pos, int degree);

/// Disjoint cycles sorted by smallest moved point; fixed points omitted;
/// identity prints as "e". 1-based.
std::string format_permutation(const Permutation& p);
std::ostream& operator<<(std::ostream& os, const Permutation& p);

std::uint64_t factorial(int n);

/// The `index`-th permutation of degree n in lexicographic order of image
/// sequences (factorial number system). index < n!.
Permutation nth_permutation(int degree, std::uint64_t index);

}  // namespace wordmaps

template <>
struct std::hash<wordmaps::Permutation> {
  std::size_t operator()(const wordmaps::Permutation& p) const noexcept;
};
