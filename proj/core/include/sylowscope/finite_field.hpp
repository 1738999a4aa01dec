#pragma once

#include <vector>

namespace sylowscope {

/// Table-built finite field of order q <= 16 (q a prime power). Prime fields
/// use modular arithmetic; F4, F8, F9, F16 are built from the irreducible
/// polynomials x^2+x+1, x^3+x+1, x^2+1, x^4+x+1. Field axioms are checked
/// over the full tables at construction.
///
/// Elements are indices 0..q-1; for q = p^k, index sum(c_i p^i) stands for
/// the polynomial-basis element with digits c_i.
class FiniteField {
public:
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a][b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a][b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a][neg_[b]]; }
  unsigned inv(unsigned a) const;  // a != 0

  /// Generator of the (cyclic) multiplicative group; the least one.
  unsigned primitive_element() const { return primitive_; }

private:
  void validate() const;
  unsigned q_ = 0, p_ = 0, primitive_ = 0;
  std::vector<std::vector<unsigned>> add_, mul_;
  std::vector<unsigned> neg_, inv_;
};

}  // namespace sylowscope
