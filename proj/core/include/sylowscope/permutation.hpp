#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sylowscope {

class CycleType;

/// A permutation of the points {1, ..., n}. Immutable after construction.
///
/// Composition is right-to-left throughout: compose(a, b) applies b first,
/// so compose(a, b)(x) == a(b(x)).
class Permutation {
public:
  /// Identity on {1..n}. n must be >= 1.
  static Permutation identity(unsigned degree);

  /// From an image list: images[i] is the image of point i+1 (values 1..n).
  /// Rejects anything that is not a bijection.
  static Permutation from_images(std::vector<unsigned> images);

  /// From disjoint cycles over {1..n}, e.g. {{1,2,3},{5,6}}.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles);

  /// Parses cycle notation, e.g. "(1 2 3)(5 6)" or "()".
  static Permutation parse(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  /// Image of a point (1-based).
  unsigned operator()(unsigned point) const { return images_[point - 1]; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation power(long long exponent) const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  unsigned fixed_point_count() const;

  /// Smallest point moved, or 0 for the identity.
  unsigned smallest_moved_point() const;

  CycleType cycle_type() const;

  /// Nontrivial cycles, each rotated to start at its smallest point,
  /// sorted by that point.
  std::vector<std::vector<unsigned>> cycles() const;

  /// Cycle notation; the identity renders as "()".
  std::string cycle_string() const;

  /// images()[i] is the image of point i+1.
  const std::vector<unsigned>& images() const { return images_; }

  friend Permutation compose(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

private:
  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {}
  std::vector<unsigned> images_;
};

/// compose(a, b)(x) == a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// g^-1 * p * g (so conjugating a cycle relabels its points through g).
Permutation conjugated(const Permutation& p, const Permutation& g);

/// Some g with g^-1 * a * g == b, if a and b have equal cycle types.
/// Throws std::invalid_argument otherwise.
Permutation conjugating_permutation(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

/// Multiset of cycle lengths (fixed points included as parts of size 1),
/// stored in decreasing order. Total weight equals the degree.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const;
  std::string to_string() const;

  auto operator<=>(const CycleType&) const = default;

private:
  std::vector<unsigned> parts_;
};

}  // namespace sylowscope
