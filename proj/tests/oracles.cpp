#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracles {

using sylowscope::ModPoly;
using sylowscope::Permutation;

std::vector<Permutation> closure_elements(unsigned degree,
                                          const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const Permutation& g : gens) {
      Permutation next = compose(queue[k], g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  return {seen.begin(), seen.end()};
}

std::uint64_t closure_order(unsigned degree, const std::vector<Permutation>& gens) {
  return closure_elements(degree, gens).size();
}

std::uint64_t join_closure_subgroup_count(unsigned degree,
                                          const std::vector<Permutation>& gens) {
  using ElementSet = std::vector<Permutation>;  // sorted
  const std::vector<Permutation> all = closure_elements(degree, gens);

  std::set<ElementSet> subgroups;
  // every cyclic subgroup, from element powers
  for (const Permutation& g : all) {
    ElementSet cyc{Permutation::identity(degree)};
    Permutation x = g;
    while (!x.is_identity()) {
      cyc.push_back(x);
      x = compose(x, g);
    }
    std::sort(cyc.begin(), cyc.end());
    subgroups.insert(std::move(cyc));
  }
  // close under pairwise join
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElementSet> snapshot(subgroups.begin(), subgroups.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (std::includes(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                          snapshot[j].end()) ||
            std::includes(snapshot[j].begin(), snapshot[j].end(), snapshot[i].begin(),
                          snapshot[i].end()))
          continue;
        std::vector<Permutation> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        ElementSet join = closure_elements(degree, seed);
        if (subgroups.insert(std::move(join)).second) grew = true;
      }
  }
  return subgroups.size();
}

std::vector<std::uint64_t> conjugacy_class_sizes(unsigned degree,
                                                 const std::vector<Permutation>& gens) {
  const std::vector<Permutation> all = closure_elements(degree, gens);
  std::set<Permutation> remaining(all.begin(), all.end());
  std::vector<std::uint64_t> sizes;
  while (!remaining.empty()) {
    const Permutation rep = *remaining.begin();
    std::set<Permutation> orbit;
    for (const Permutation& g : all) orbit.insert(conjugated(rep, g));
    for (const Permutation& x : orbit) remaining.erase(x);
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// local polynomial remainder (divisor monic), sharing no code with the
// library's factorization path
Coeffs local_mod(Coeffs rem, const Coeffs& div, std::uint64_t p) {
  while (rem.size() >= div.size() && !rem.empty()) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    const std::uint64_t q = rem.back();
    const std::size_t shift = rem.size() - div.size();
    for (std::size_t i = 0; i < div.size(); ++i)
      rem[shift + i] =
          static_cast<std::uint32_t>((rem[shift + i] + p * p - q * div[i] % p) % p);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return rem;
}

Coeffs local_exact_quotient(const Coeffs& num, const Coeffs& div, std::uint64_t p) {
  Coeffs quot(num.size() - div.size() + 1, 0);
  Coeffs rem = num;
  for (std::size_t k = quot.size(); k > 0; --k) {
    const std::uint64_t q = rem[k - 1 + div.size() - 1];
    quot[k - 1] = static_cast<std::uint32_t>(q);
    for (std::size_t i = 0; i < div.size(); ++i)
      rem[k - 1 + i] =
          static_cast<std::uint32_t>((rem[k - 1 + i] + p * p - q * div[i] % p) % p);
  }
  return quot;
}

// complete factorization into monic irreducibles (with multiplicity), by
// exhaustive minimal-degree divisor search
std::vector<Coeffs> local_factors(const ModPoly& f) {
  const std::uint32_t p = f.modulus();
  if (f.is_zero() || f.degree() == 0)
    throw std::invalid_argument("trial division oracle needs a nonconstant polynomial");
  Coeffs current = f.monic().coeffs();
  std::vector<Coeffs> factors;
  while (current.size() > 1) {
    const unsigned deg = static_cast<unsigned>(current.size()) - 1;
    bool split = false;
    for (unsigned d = 1; !split && 2 * d <= deg; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs cand(d + 1, 0);
        std::uint64_t x = code;
        for (unsigned i = 0; i < d; ++i) {
          cand[i] = static_cast<std::uint32_t>(x % p);
          x /= p;
        }
        cand[d] = 1;
        if (local_mod(current, cand, p).empty()) {
          current = local_exact_quotient(current, cand, p);
          factors.push_back(std::move(cand));
          split = true;
          break;
        }
      }
    }
    if (!split) {  // what is left is irreducible
      factors.push_back(current);
      break;
    }
  }
  return factors;
}

}  // namespace

std::vector<unsigned> trial_division_factor_degrees(const ModPoly& f) {
  std::vector<unsigned> degrees;
  for (const Coeffs& factor : local_factors(f))
    degrees.push_back(static_cast<unsigned>(factor.size()) - 1);
  std::sort(degrees.begin(), degrees.end(), std::greater<unsigned>());
  return degrees;
}

bool trial_division_squarefree(const ModPoly& f) {
  std::vector<Coeffs> factors = local_factors(f);
  std::sort(factors.begin(), factors.end());
  return std::adjacent_find(factors.begin(), factors.end()) == factors.end();
}

}  // namespace oracles
