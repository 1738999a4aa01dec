#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sylowscope/permutation.hpp"

namespace sylowscope {

/// Deterministic stream of uniform indices. mt19937_64 plus rejection
/// sampling, so the draw sequence is identical on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed);
  /// Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n);

private:
  std::uint64_t next();
  // mt19937_64 state kept behind the raw engine to avoid <random> in headers
  struct State;
  std::shared_ptr<State> state_;
};

/// A permutation group given by generators, backed by a stabilizer chain
/// (deterministic Schreier generator closure, no randomization).
///
/// Immutable after construction; all member functions are safe to call
/// concurrently. Copies share the underlying chain.
class PermutationGroup {
public:
  /// Builds the chain. Throws on degree 0 or generator degree mismatch.
  PermutationGroup(unsigned degree, std::vector<Permutation> generators);

  /// Same, but base points are preferred in the given order while they
  /// remain moved by the relevant stabilizer. Used to read off point
  /// stabilizers from the chain.
  PermutationGroup(unsigned degree, std::vector<Permutation> generators,
                   std::vector<unsigned> preferred_base);

  static PermutationGroup trivial(unsigned degree);

  unsigned degree() const;
  const std::vector<Permutation>& generators() const;

  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& p) const;

  /// All elements, sorted by image array. Cached after the first call.
  /// Throws CapExceeded if order() > cap (default: limits().element_cap).
  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& elements(std::uint64_t cap) const;

  std::vector<unsigned> orbit(unsigned point) const;
  bool is_transitive() const;

  /// Uniformly distributed element, deterministic for a fixed seed.
  Permutation random_element(std::uint64_t seed) const;
  Permutation random_element(SeededRng& rng) const;

  /// Stabilizer of a point, read off the chain.
  PermutationGroup point_stabilizer(unsigned point) const;

  // Chain internals, exposed for verification.
  std::vector<unsigned> base() const;
  std::vector<std::uint64_t> basic_orbit_lengths() const;

  bool same_group(const PermutationGroup& other) const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit PermutationGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

}  // namespace sylowscope
