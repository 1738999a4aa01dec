#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sylowscope/perm_group.hpp"
#include "sylowscope/universe.hpp"

namespace sylowscope {

using uint128 = unsigned __int128;

std::string to_decimal(uint128 value);
/// n! as a 128-bit integer; throws std::overflow_error for n > 33.
uint128 factorial128(unsigned n);

/// The group a subgroup lives in: either an explicit permutation group or
/// the whole symmetric group Sym(n), which is handled symbolically (its
/// elements are never materialized).
class Ambient {
public:
  static Ambient group(PermutationGroup g, std::string id = "");
  static Ambient symmetric(unsigned degree);

  bool is_symmetric_whole() const;
  unsigned degree() const;

  /// Explicit groups only; throws for Sym(n) ambients.
  const PermutationGroup& group() const;

  /// Indexed element table (explicit groups only, subject to the
  /// explicit-mode cap). Built once on first use.
  const Universe& universe() const;

  bool contains(const Permutation& p) const;
  uint128 order128() const;
  std::string order_string() const;
  const std::string& id() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// A subgroup of an ambient group: generators plus the generated group.
/// Construction verifies every generator lies in the ambient.
class Subgroup {
public:
  Subgroup(Ambient ambient, std::vector<Permutation> generators, std::string name = "");

  const Ambient& ambient() const;
  const PermutationGroup& group() const;
  const std::string& name() const;

  unsigned degree() const { return group().degree(); }
  std::uint64_t order() const { return group().order(); }
  const std::vector<Permutation>& elements() const { return group().elements(); }
  bool contains(const Permutation& p) const { return group().contains(p); }

  uint128 index128() const;
  std::string index_string() const;

  /// Element index set within the ambient universe (explicit ambients only).
  IndexSet indices() const;

  bool same_subgroup(const Subgroup& other) const;

private:
  Ambient ambient_;
  PermutationGroup group_;
  std::string name_;
};

}  // namespace sylowscope
