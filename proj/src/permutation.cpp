#include "wordmaps/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wordmaps/errors.hpp"

namespace wordmaps {

Permutation::Permutation(int degree) : images_(static_cast<std::size_t>(std::max(degree, 0))) {
  if (degree < 0) throw InvalidInput("permutation degree must be non-negative");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw InvalidInput("image sequence is not a bijection");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int p = 0; p < degree(); ++p)
    if (images_[static_cast<std::size_t>(p)] != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int p = 0; p < degree(); ++p) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(p)])] = p;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in permutation product");
  std::vector<int> out(a.images_.size());
  for (std::size_t p = 0; p < out.size(); ++p)
    out[p] = b.images_[static_cast<std::size_t>(a.images_[p])];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  *this = *this * rhs;
  return *this;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = images_[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::power(long long exponent) const {
  std::vector<int> out(images_.size());
  std::iota(out.begin(), out.end(), 0);
  for (const auto& cycle : cycles()) {
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((exponent % len) + len) % len;
    for (std::size_t t = 0; t < cycle.size(); ++t)
      out[static_cast<std::size_t>(cycle[t])] =
          cycle[(t + static_cast<std::size_t>(shift)) % cycle.size()];
  }
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

long long Permutation::order() const {
  long long ord = 1;
  for (const auto& cycle : cycles()) ord = std::lcm(ord, static_cast<long long>(cycle.size()));
  return ord;
}

int Permutation::support_size() const {
  int count = 0;
  for (int p = 0; p < degree(); ++p)
    if (images_[static_cast<std::size_t>(p)] != p) ++count;
  return count;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int p = 0; p < degree(); ++p)
    if (images_[static_cast<std::size_t>(p)] != p) out.push_back(p);
  return out;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int p = 0; p < degree(); ++p)
    if (images_[static_cast<std::size_t>(p)] == p) out.push_back(p);
  return out;
}

int hamming_norm(const Permutation& p) { return p.support_size(); }

int hamming_distance(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in Hamming distance");
  int count = 0;
  for (int p = 0; p < a.degree(); ++p)
    if (a.image_of(p) != b.image_of(p)) ++count;
  return count;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

int parse_point(std::string_view text, std::size_t& pos, int degree) {
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw InvalidInput("expected a point at position " + std::to_string(pos));
  long long value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1'000'000) throw InvalidInput("point out of range at position " + std::to_string(pos));
    ++pos;
  }
  if (value < 1 || value > degree)
    throw InvalidInput("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree));
  return static_cast<int>(value - 1);  // to 0-based
}

// One parenthesized cycle; `pos` sits on '('.
std::vector<int> parse_one_cycle(std::string_view text, std::size_t& pos, int degree) {
  ++pos;  // '('
  std::vector<int> cycle;
  skip_space(text, pos);
  cycle.push_back(parse_point(text, pos, degree));
  for (;;) {
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_space(text, pos);
    }
    if (pos >= text.size()) throw InvalidInput("unterminated cycle");
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    cycle.push_back(parse_point(text, pos, degree));
  }
  if (cycle.size() < 2) throw InvalidInput("a cycle needs at least two points");
  return cycle;
}

Permutation build_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (used[static_cast<std::size_t>(p)])
        throw InvalidInput("point " + std::to_string(p + 1) + " repeated across cycles");
      used[static_cast<std::size_t>(p)] = 1;
    }
    for (std::size_t t = 0; t < cycle.size(); ++t)
      images[static_cast<std::size_t>(cycle[t])] = cycle[(t + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation parse_cycle_run(std::string_view text, std::size_t& pos, int degree) {
  std::vector<std::vector<int>> cycles;
  if (pos >= text.size() || text[pos] != '(')
    throw InvalidInput("expected '(' at position " + std::to_string(pos));
  while (pos < text.size() && text[pos] == '(') {
    // Lookahead: a cycle must open with an integer. The caller handles any
    // other meaning of '('.
    std::size_t probe = pos + 1;
    skip_space(text, probe);
    if (probe >= text.size() || !std::isdigit(static_cast<unsigned char>(text[probe]))) break;
    cycles.push_back(parse_one_cycle(text, pos, degree));
  }
  if (cycles.empty()) throw InvalidInput("expected a cycle at position " + std::to_string(pos));
  return build_from_cycles(cycles, degree);
}

Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw InvalidInput("degree must be positive");
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_space(text, pos);
    if (pos != text.size()) throw InvalidInput("trailing input after 'e'");
    return Permutation(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidInput("expected '(' at position " + std::to_string(pos));
    cycles.push_back(parse_one_cycle(text, pos, degree));
    skip_space(text, pos);
  }
  if (cycles.empty()) throw InvalidInput("empty permutation text");
  return build_from_cycles(cycles, degree);
}

std::string format_permutation(const Permutation& p) {
  const auto cycles = p.cycles();
  if (cycles.empty()) return "e";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (t) out << ' ';
      out << cycle[t] + 1;
    }
    out << ')';
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << format_permutation(p);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidInput("factorial argument out of range");
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

Permutation nth_permutation(int degree, std::uint64_t index) {
  if (degree > 20 || index >= factorial(degree)) throw InvalidInput("permutation index out of range");
  std::vector<int> remaining(static_cast<std::size_t>(degree));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(degree));
  std::uint64_t radix = factorial(degree);
  for (int k = degree; k >= 1; --k) {
    radix /= static_cast<std::uint64_t>(k);
    const std::size_t digit = static_cast<std::size_t>(index / radix);
    index %= radix;
    images.push_back(remaining[digit]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

}  // namespace wordmaps

std::size_t std::hash<wordmaps::Permutation>::operator()(const wordmaps::Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 1;
    h *= 1099511628211ull;
  }
  return h;
}
