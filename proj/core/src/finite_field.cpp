#include "sylowscope/finite_field.hpp"

#include <stdexcept>

namespace sylowscope {

namespace {

// digits of x base p, lowest first, padded to k
std::vector<unsigned> digits(unsigned x, unsigned p, unsigned k) {
  std::vector<unsigned> d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (std::size_t i = d.size(); i > 0; --i) x = x * p + d[i - 1];
  return x;
}

// irreducible polynomial for F_{p^k}, as coefficients of x^0..x^{k-1}
// (the x^k coefficient is implicitly 1)
std::vector<unsigned> modulus_tail(unsigned p, unsigned k) {
  if (p == 2 && k == 2) return {1, 1};        // x^2 + x + 1
  if (p == 2 && k == 3) return {1, 1, 0};     // x^3 + x + 1
  if (p == 3 && k == 2) return {1, 0};        // x^2 + 1
  if (p == 2 && k == 4) return {1, 1, 0, 0};  // x^4 + x + 1
  throw std::invalid_argument("unsupported field extension");
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  if (q < 2 || q > 16) throw std::invalid_argument("field order must be in 2..16");
  unsigned p = 0, k = 0;
  for (unsigned cand = 2; cand <= q; ++cand) {
    bool prime = true;
    for (unsigned d = 2; d * d <= cand; ++d)
      if (cand % d == 0) prime = false;
    if (!prime) continue;
    unsigned power = cand, e = 1;
    while (power < q) {
      power *= cand;
      ++e;
    }
    if (power == q) {
      p = cand;
      k = e;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("field order must be a prime power");
  p_ = p;

  add_.assign(q, std::vector<unsigned>(q));
  mul_.assign(q, std::vector<unsigned>(q));
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  if (k == 1) {
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        add_[a][b] = (a + b) % q;
        mul_[a][b] = (a * b) % q;
      }
  } else {
    const auto tail = modulus_tail(p, k);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        const auto da = digits(a, p, k);
        const auto db = digits(b, p, k);
        std::vector<unsigned> sum(k);
        for (unsigned i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
        add_[a][b] = undigits(sum, p);
        // polynomial product reduced by x^k = -tail
        std::vector<unsigned> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
          const unsigned c = prod[deg];
          if (c) {
            prod[deg] = 0;
            for (unsigned i = 0; i < k; ++i)
              prod[deg - k + i] = (prod[deg - k + i] + c * (p - tail[i] % p)) % p;
          }
        }
        prod.resize(k);
        mul_[a][b] = undigits(prod, p);
      }
  }
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a][b] == 0) neg_[a] = b;
      if (a != 0 && mul_[a][b] == 1) inv_[a] = b;
    }
  validate();
  for (unsigned a = 2; a < q; ++a) {
    unsigned x = a, ord = 1;
    while (x != 1) {
      x = mul_[x][a];
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = a;
      break;
    }
  }
  if (q == 2) primitive_ = 1;
  if (primitive_ == 0) throw std::logic_error("no primitive element found");
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::invalid_argument("division by zero field element");
  return inv_[a];
}

void FiniteField::validate() const {
  const unsigned q = q_;
  for (unsigned a = 0; a < q; ++a) {
    if (add_[a][0] != a || mul_[a][1] != a || mul_[a][0] != 0)
      throw std::logic_error("field identity axiom failed");
    if (a != 0 && mul_[a][inv_[a]] != 1)
      throw std::logic_error("field inverse axiom failed");
    if (add_[a][neg_[a]] != 0) throw std::logic_error("field negation axiom failed");
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a][b] != add_[b][a] || mul_[a][b] != mul_[b][a])
        throw std::logic_error("field commutativity failed");
      for (unsigned c = 0; c < q; ++c) {
        if (add_[add_[a][b]][c] != add_[a][add_[b][c]])
          throw std::logic_error("field additive associativity failed");
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw std::logic_error("field multiplicative associativity failed");
        if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]])
          throw std::logic_error("field distributivity failed");
      }
    }
  }
}

}  // namespace sylowscope
