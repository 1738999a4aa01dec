#include "sylowscope/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sylowscope {

namespace {

std::int64_t checked_narrow(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error(std::string(what) + ": coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntegerPolynomial IntegerPolynomial::make(std::string name,
                                          std::vector<std::int64_t> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty() || coeffs.back() == 0)
    throw std::invalid_argument("polynomial must have a nonzero leading coefficient");
  return IntegerPolynomial{std::move(name), std::move(coeffs)};
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<__int128> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      acc[i + j] += static_cast<__int128>(a.coeffs[i]) * b.coeffs[j];
  std::vector<std::int64_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = checked_narrow(acc[i], "poly mul");
  return IntegerPolynomial::make(a.name + "*" + b.name, std::move(out));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<std::int64_t> out(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    __int128 v = 0;
    if (i < a.coeffs.size()) v += a.coeffs[i];
    if (i < b.coeffs.size()) v += b.coeffs[i];
    out[i] = checked_narrow(v, "poly add");
  }
  return IntegerPolynomial::make(a.name + "+" + b.name, std::move(out));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  return a + b.scaled(-1);
}

IntegerPolynomial IntegerPolynomial::scaled(std::int64_t k) const {
  std::vector<std::int64_t> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out[i] = checked_narrow(static_cast<__int128>(coeffs[i]) * k, "poly scale");
  return IntegerPolynomial::make(name, std::move(out));
}

// --- ModPoly -----------------------------------------------------------------

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t out = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) out = out * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return out;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

ModPoly::ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
  for (std::uint32_t& v : c_) v %= p;
  trim();
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

unsigned ModPoly::degree() const {
  if (c_.empty()) throw std::logic_error("degree of the zero polynomial");
  return static_cast<unsigned>(c_.size()) - 1;
}

ModPoly ModPoly::monic() const {
  if (is_zero()) throw std::logic_error("monic of the zero polynomial");
  if (c_.back() == 1) return *this;
  const std::uint64_t inv = mod_inv(c_.back(), p_);
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i] = static_cast<std::uint32_t>(c_[i] * inv % p_);
  return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_, {});
  std::vector<std::uint32_t> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[i]) * (i % p_) % p_);
  return ModPoly(p_, std::move(out));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
  if (a.is_zero() || b.is_zero()) return ModPoly(a.p_, {});
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
      // p <= 1e7 keeps p^2 ~ 1e14; reduce eagerly so sums stay far below 2^64
      acc[i + j] %= a.p_;
    }
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return ModPoly(a.p_, std::move(out));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
  std::vector<std::uint32_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = a.p_;
    if (i < a.c_.size()) v += a.c_[i];
    if (i < b.c_.size()) v -= b.c_[i];
    out[i] = static_cast<std::uint32_t>(v % a.p_);
  }
  return ModPoly(a.p_, std::move(out));
}

ModPoly ModPoly::mod(const ModPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<std::uint32_t> rem = c_;
  const auto& d = divisor.c_;
  const std::uint64_t lead_inv = mod_inv(d.back(), p_);
  while (rem.size() >= d.size() && !rem.empty()) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    const std::uint64_t q = rem.back() * lead_inv % p_;
    const std::size_t shift = rem.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = q * d[i] % p_;
      rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p_ - sub) % p_);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return ModPoly(p_, std::move(rem));
}

ModPoly ModPoly::divided_exactly_by(const ModPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<std::uint32_t> rem = c_;
  const auto& d = divisor.c_;
  if (rem.size() < d.size()) throw std::invalid_argument("division is not exact");
  std::vector<std::uint32_t> quot(rem.size() - d.size() + 1, 0);
  const std::uint64_t lead_inv = mod_inv(d.back(), p_);
  for (std::size_t k = quot.size(); k > 0; --k) {
    const std::size_t top = k - 1 + d.size() - 1;
    const std::uint64_t q = rem[top] * lead_inv % p_;
    quot[k - 1] = static_cast<std::uint32_t>(q);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = q * d[i] % p_;
      rem[k - 1 + i] = static_cast<std::uint32_t>((rem[k - 1 + i] + p_ - sub) % p_);
    }
  }
  for (std::uint32_t v : rem)
    if (v != 0) throw std::invalid_argument("division is not exact");
  return ModPoly(p_, std::move(quot));
}

ModPoly ModPoly::x(std::uint32_t p) { return ModPoly(p, {0, 1}); }

ModPoly ModPoly::pow_x_mod(std::uint64_t e, const ModPoly& f) {
  ModPoly result(f.p_, {1});
  ModPoly base = ModPoly::x(f.p_).mod(f);
  while (e) {
    if (e & 1) result = (result * base).mod(f);
    base = (base * base).mod(f);
    e >>= 1;
  }
  return result;
}

ModPoly poly_gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

Reduction reduce_mod_p(const IntegerPolynomial& f, std::uint32_t p) {
  std::vector<std::uint32_t> c(f.coeffs.size());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const std::int64_t r = f.coeffs[i] % static_cast<std::int64_t>(p);
    c[i] = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  const bool dropped = c.back() == 0;
  return {ModPoly(p, std::move(c)), dropped};
}

bool is_squarefree(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (f.degree() == 0) return true;
  const ModPoly d = f.derivative();
  if (d.is_zero()) return false;  // p-th power
  return poly_gcd(f, d).degree() == 0;
}

DegreePattern::DegreePattern(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

unsigned DegreePattern::weight() const {
  unsigned w = 0;
  for (unsigned p : parts_) w += p;
  return w;
}

std::string DegreePattern::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

DegreePattern degree_pattern(const ModPoly& input) {
  if (input.is_zero() || input.degree() == 0)
    throw std::invalid_argument("degree_pattern: need a nonconstant polynomial");
  if (!is_squarefree(input))
    throw std::invalid_argument("degree_pattern: polynomial is not squarefree");
  const std::uint32_t p = input.modulus();
  ModPoly f = input.monic();
  std::vector<unsigned> parts;
  ModPoly frob = ModPoly::x(p).mod(f);  // x^(p^d) mod f as d advances
  unsigned d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {  // what is left is a single irreducible factor
      parts.push_back(f.degree());
      break;
    }
    // advance Frobenius: frob <- frob^p mod f
    ModPoly next(p, {1});
    ModPoly base = frob;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) next = (next * base).mod(f);
      base = (base * base).mod(f);
      e >>= 1;
    }
    frob = std::move(next);
    const ModPoly g = poly_gcd(f, frob - ModPoly::x(p).mod(f));
    if (!g.is_zero() && g.degree() > 0) {
      for (unsigned i = 0; i < g.degree() / d; ++i) parts.push_back(d);
      f = f.divided_exactly_by(g).monic();
      if (f.degree() == 0) break;
      frob = frob.mod(f);
    }
  }
  DegreePattern pattern{std::move(parts)};
  if (pattern.weight() != input.degree())
    throw std::logic_error("degree_pattern: parts do not sum to the degree");
  return pattern;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
      composite[j] = true;
  }
  return out;
}

}  // namespace sylowscope
