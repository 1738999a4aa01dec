#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sylowscope {

/// A univariate integer polynomial, constant term first. Coefficients are
/// 64-bit; construction rejects anything larger (the bundled data's largest
/// coefficient is ~3.2e13, far inside the safe range for reduction mod
/// primes up to 1e7).
struct IntegerPolynomial {
  std::string name;
  std::vector<std::int64_t> coeffs;  // c0, c1, ..., leading coefficient nonzero

  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
  std::int64_t leading() const { return coeffs.back(); }

  static IntegerPolynomial make(std::string name, std::vector<std::int64_t> coeffs);

  /// Exact product/sum arithmetic with overflow checks (128-bit intermediates).
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
  IntegerPolynomial scaled(std::int64_t k) const;
};

/// Dense polynomial over F_p (p prime), coefficients in [0, p), trailing
/// zeros trimmed. The zero polynomial has an empty coefficient vector.
class ModPoly {
public:
  ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  unsigned degree() const;  // throws on the zero polynomial
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  ModPoly monic() const;
  ModPoly derivative() const;

  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  ModPoly mod(const ModPoly& divisor) const;
  ModPoly divided_exactly_by(const ModPoly& divisor) const;

  static ModPoly x(std::uint32_t p);
  /// x^e mod f, by repeated squaring.
  static ModPoly pow_x_mod(std::uint64_t e, const ModPoly& f);

  friend ModPoly poly_gcd(ModPoly a, ModPoly b);  // monic gcd

  bool operator==(const ModPoly&) const = default;

private:
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
  void trim();
};

struct Reduction {
  ModPoly poly;
  bool leading_dropped;  // p divides the integer leading coefficient
};

/// Coefficientwise reduction into [0, p).
Reduction reduce_mod_p(const IntegerPolynomial& f, std::uint32_t p);

/// gcd(f, f') = 1.
bool is_squarefree(const ModPoly& f);

/// Multiset of irreducible-factor degrees (decreasing), summing to the
/// polynomial degree.
class DegreePattern {
public:
  DegreePattern() = default;
  explicit DegreePattern(std::vector<unsigned> parts);
  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const;
  std::string to_string() const;
  auto operator<=>(const DegreePattern&) const = default;

private:
  std::vector<unsigned> parts_;
};

/// Factor-degree pattern of a squarefree polynomial over F_p, by
/// distinct-degree factorization (deterministic; the degree-d part is
/// extracted as gcd(f, x^(p^d) - x), contributing deg/d factors of degree d;
/// no equal-degree splitting is needed). Throws on non-squarefree input.
DegreePattern degree_pattern(const ModPoly& f);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

}  // namespace sylowscope
