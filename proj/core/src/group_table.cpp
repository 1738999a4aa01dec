#include "sylowscope/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

void GroupTable::finish_init() {
  const unsigned n = order();
  if (n == 0) throw std::invalid_argument("group table must be nonempty");
  if (n > 65535) throw std::invalid_argument("group table too large for uint16 indexing");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (std::uint16_t a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("element 0 is not an identity");
  inverse_.assign(n, 0);
  for (std::uint16_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint16_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw std::invalid_argument("one-sided inverse");
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("element without inverse");
  }
  // Light's associativity test: checking g(ab) == (ga)b for g in a generating
  // set implies full associativity.
  const auto gens = generating_set();
  for (std::uint16_t g : gens)
    for (std::uint16_t a = 0; a < n; ++a)
      for (std::uint16_t b = 0; b < n; ++b)
        if (table_[g][table_[a][b]] != table_[table_[g][a]][b])
          throw std::invalid_argument("multiplication table is not associative");
}

GroupTable GroupTable::from_table(std::vector<std::vector<std::uint16_t>> table) {
  GroupTable g;
  g.table_ = std::move(table);
  g.finish_init();
  return g;
}

GroupTable GroupTable::from_permutations(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw std::invalid_argument("empty element set");
  std::vector<Permutation> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // identity first, remaining elements stay in image-array order
  auto id_pos = std::find_if(sorted.begin(), sorted.end(),
                             [](const Permutation& p) { return p.is_identity(); });
  if (id_pos == sorted.end()) throw std::invalid_argument("element set has no identity");
  std::rotate(sorted.begin(), id_pos, id_pos + 1);

  std::map<Permutation, std::uint16_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    index[sorted[i]] = static_cast<std::uint16_t>(i);

  const unsigned n = static_cast<unsigned>(sorted.size());
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      auto it = index.find(compose(sorted[a], sorted[b]));
      if (it == index.end())
        throw std::invalid_argument("element set is not closed under composition");
      table[a][b] = it->second;
    }
  GroupTable g;
  g.table_ = std::move(table);
  g.finish_init();
  return g;
}

GroupTable GroupTable::cyclic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic(0)");
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) table[a][b] = static_cast<std::uint16_t>((a + b) % n);
  return from_table(std::move(table));
}

GroupTable GroupTable::dihedral(unsigned order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral order must be even");
  const unsigned n = order / 2;
  // elements: r^i (index i), r^i s (index n + i); s r s = r^-1
  auto idx = [n](unsigned rot, unsigned flip) { return flip ? n + rot : rot; };
  std::vector<std::vector<std::uint16_t>> table(order, std::vector<std::uint16_t>(order));
  for (unsigned f1 = 0; f1 < 2; ++f1)
    for (unsigned r1 = 0; r1 < n; ++r1)
      for (unsigned f2 = 0; f2 < 2; ++f2)
        for (unsigned r2 = 0; r2 < n; ++r2) {
          // (r^r1 s^f1)(r^r2 s^f2) = r^(r1 + r2 or r1 - r2) s^(f1 xor f2)
          unsigned rot = f1 ? (r1 + n - r2 % n) % n : (r1 + r2) % n;
          table[idx(r1, f1)][idx(r2, f2)] =
              static_cast<std::uint16_t>(idx(rot, f1 ^ f2));
        }
  return from_table(std::move(table));
}

GroupTable GroupTable::elementary_abelian(unsigned p, unsigned k) {
  if (k == 0) throw std::invalid_argument("elementary_abelian: k must be >= 1");
  unsigned n = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n > 65535 / p) throw std::invalid_argument("elementary_abelian: too large");
    n *= p;
  }
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      // componentwise addition in base p
      unsigned x = a, y = b, out = 0, mul = 1;
      for (unsigned i = 0; i < k; ++i) {
        out += ((x % p + y % p) % p) * mul;
        x /= p;
        y /= p;
        mul *= p;
      }
      table[a][b] = static_cast<std::uint16_t>(out);
    }
  return from_table(std::move(table));
}

GroupTable GroupTable::heisenberg(unsigned p) {
  if (p == 2)
    throw std::invalid_argument(
        "heisenberg(2) rejected: the group has exponent 4, not exponent p");
  if (p < 2) throw std::invalid_argument("heisenberg: p must be an odd prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("heisenberg: p must be an odd prime");
  const unsigned n = p * p * p;
  if (n > 65535) throw std::invalid_argument("heisenberg: p too large");
  // element (a,b,c) = [[1,a,b],[0,1,c],[0,0,1]], index a*p^2 + b*p + c
  auto idx = [p](unsigned a, unsigned b, unsigned c) { return (a * p + b) * p + c; };
  std::vector<std::vector<std::uint16_t>> table(n, std::vector<std::uint16_t>(n));
  for (unsigned a1 = 0; a1 < p; ++a1)
    for (unsigned b1 = 0; b1 < p; ++b1)
      for (unsigned c1 = 0; c1 < p; ++c1)
        for (unsigned a2 = 0; a2 < p; ++a2)
          for (unsigned b2 = 0; b2 < p; ++b2)
            for (unsigned c2 = 0; c2 < p; ++c2)
              table[idx(a1, b1, c1)][idx(a2, b2, c2)] = static_cast<std::uint16_t>(
                  idx((a1 + a2) % p, (b1 + b2 + a1 * c2) % p, (c1 + c2) % p));
  return from_table(std::move(table));
}

unsigned GroupTable::element_order(std::uint16_t a) const {
  unsigned ord = 1;
  std::uint16_t x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool GroupTable::is_abelian() const {
  const unsigned n = order();
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

unsigned GroupTable::exponent() const {
  unsigned e = 1;
  for (unsigned a = 0; a < order(); ++a)
    e = std::lcm(e, element_order(static_cast<std::uint16_t>(a)));
  return e;
}

std::vector<std::uint16_t> GroupTable::center() const {
  std::vector<std::uint16_t> out;
  for (unsigned a = 0; a < order(); ++a) {
    bool central = true;
    for (unsigned b = 0; b < order() && central; ++b)
      central = table_[a][b] == table_[b][a];
    if (central) out.push_back(static_cast<std::uint16_t>(a));
  }
  return out;
}

std::vector<std::pair<unsigned, unsigned>> GroupTable::order_histogram() const {
  std::map<unsigned, unsigned> hist;
  for (unsigned a = 0; a < order(); ++a) ++hist[element_order(static_cast<std::uint16_t>(a))];
  return {hist.begin(), hist.end()};
}

std::vector<std::uint16_t> GroupTable::closure(std::vector<std::uint16_t> seed) const {
  std::vector<bool> in(order(), false);
  std::vector<std::uint16_t> members{0};
  in[0] = true;
  for (std::uint16_t s : seed)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::uint16_t s : seed) {
      const std::uint16_t t = table_[members[k]][s];
      if (!in[t]) {
        in[t] = true;
        members.push_back(t);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::uint16_t> GroupTable::generating_set() const {
  // elements by decreasing order, greedily added until the closure is everything
  std::vector<std::uint16_t> by_order(order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [this](std::uint16_t a, std::uint16_t b) {
    return element_order(a) > element_order(b);
  });
  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> generated{0};
  for (std::uint16_t cand : by_order) {
    if (generated.size() == order()) break;
    if (std::binary_search(generated.begin(), generated.end(), cand)) continue;
    gens.push_back(cand);
    generated = closure(gens);
  }
  return gens;
}

namespace {

// Extends the partial map img (identity and some generators assigned) to a
// homomorphism by product closure; returns false on any conflict.
bool extend_homomorphism(const GroupTable& a, const GroupTable& b, std::vector<int>& img) {
  std::vector<std::uint16_t> defined;
  for (unsigned x = 0; x < a.order(); ++x)
    if (img[x] >= 0) defined.push_back(static_cast<std::uint16_t>(x));
  for (std::size_t k = 0; k < defined.size(); ++k) {
    for (std::size_t l = 0; l < defined.size(); ++l) {
      for (auto [x, y] : {std::pair{defined[k], defined[l]}, std::pair{defined[l], defined[k]}}) {
        const std::uint16_t z = a.mul(x, y);
        const int m = b.mul(static_cast<std::uint16_t>(img[x]), static_cast<std::uint16_t>(img[y]));
        if (img[z] < 0) {
          img[z] = m;
          defined.push_back(z);
        } else if (img[z] != m) {
          return false;
        }
      }
    }
  }
  return true;
}

bool search_isomorphism(const GroupTable& a, const GroupTable& b,
                        const std::vector<std::uint16_t>& gens, std::size_t depth,
                        std::vector<int>& img, std::vector<std::uint16_t>& out) {
  if (depth == gens.size()) {
    std::vector<bool> hit(b.order(), false);
    for (unsigned x = 0; x < a.order(); ++x) {
      if (img[x] < 0 || hit[img[x]]) return false;
      hit[img[x]] = true;
    }
    out.assign(img.begin(), img.end());
    return true;
  }
  const std::uint16_t g = gens[depth];
  const unsigned want = a.element_order(g);
  for (unsigned cand = 0; cand < b.order(); ++cand) {
    if (b.element_order(static_cast<std::uint16_t>(cand)) != want) continue;
    std::vector<int> next = img;
    next[g] = static_cast<int>(cand);
    if (!extend_homomorphism(a, b, next)) continue;
    if (search_isomorphism(a, b, gens, depth + 1, next, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::uint16_t>> find_isomorphism(const GroupTable& a,
                                                           const GroupTable& b) {
  if (a.order() > limits().abstract_iso_cap || b.order() > limits().abstract_iso_cap)
    throw CapExceeded("abstract isomorphism search refused: order exceeds cap");
  if (a.order() != b.order()) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (a.order_histogram() != b.order_histogram()) return std::nullopt;
  const auto gens = a.generating_set();
  std::vector<int> img(a.order(), -1);
  img[0] = 0;
  std::vector<std::uint16_t> out;
  if (search_isomorphism(a, b, gens, 0, img, out)) return out;
  return std::nullopt;
}

bool abstract_isomorphic(const GroupTable& a, const GroupTable& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace sylowscope
