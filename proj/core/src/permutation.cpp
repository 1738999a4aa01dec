#include "sylowscope/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sylowscope {

Permutation Permutation::identity(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 1u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
  const auto n = static_cast<unsigned>(images.size());
  if (n == 0) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<bool> seen(n, false);
  for (unsigned v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("image list is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::vector<std::vector<unsigned>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned from = cyc[i];
      unsigned to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw std::invalid_argument("cycle point out of range");
      if (p.images_[from - 1] != from)
        throw std::invalid_argument("cycles are not disjoint");
      p.images_[from - 1] = to;
    }
  }
  // from_images re-checks bijectivity (catches a repeated point within one cycle)
  return from_images(std::move(p.images_));
}

Permutation Permutation::parse(unsigned degree, std::string_view text) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<unsigned> current;
  bool in_cycle = false;
  unsigned value = 0;
  bool have_value = false;
  auto flush_value = [&] {
    if (have_value) {
      current.push_back(value);
      value = 0;
      have_value = false;
    }
  };
  for (char c : text) {
    if (c == '(') {
      if (in_cycle) throw std::invalid_argument("nested '(' in cycle notation");
      in_cycle = true;
    } else if (c == ')') {
      if (!in_cycle) throw std::invalid_argument("unmatched ')' in cycle notation");
      flush_value();
      if (!current.empty()) cycles.push_back(std::move(current));
      current.clear();
      in_cycle = false;
    } else if (c >= '0' && c <= '9') {
      if (!in_cycle) throw std::invalid_argument("digit outside cycle");
      value = value * 10 + static_cast<unsigned>(c - '0');
      have_value = true;
    } else if (c == ' ' || c == ',' || c == '\t') {
      flush_value();
    } else {
      throw std::invalid_argument("unexpected character in cycle notation");
    }
  }
  if (in_cycle) throw std::invalid_argument("unterminated cycle");
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(degree());
  for (unsigned i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::power(long long exponent) const {
  const auto m = static_cast<long long>(order());
  long long e = exponent % m;
  if (e < 0) e += m;
  Permutation result = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  const CycleType type = cycle_type();
  std::uint64_t ord = 1;
  for (unsigned part : type.parts()) ord = std::lcm(ord, std::uint64_t{part});
  return ord;
}

unsigned Permutation::fixed_point_count() const {
  unsigned count = 0;
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] == i + 1) ++count;
  return count;
}

unsigned Permutation::smallest_moved_point() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return i + 1;
  return 0;
}

CycleType Permutation::cycle_type() const {
  std::vector<unsigned> parts;
  std::vector<bool> seen(degree(), false);
  for (unsigned start = 1; start <= degree(); ++start) {
    if (seen[start - 1]) continue;
    unsigned len = 0;
    unsigned pt = start;
    do {
      seen[pt - 1] = true;
      pt = (*this)(pt);
      ++len;
    } while (pt != start);
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

std::vector<std::vector<unsigned>> Permutation::cycles() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> seen(degree(), false);
  for (unsigned start = 1; start <= degree(); ++start) {
    if (seen[start - 1] || images_[start - 1] == start) continue;
    std::vector<unsigned> cyc;
    unsigned pt = start;
    do {
      seen[pt - 1] = true;
      cyc.push_back(pt);
      pt = (*this)(pt);
    } while (pt != start);
    result.push_back(std::move(cyc));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  const auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cyc : cycs) {
    out << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0) out << ' ';
      out << cyc[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<unsigned> img(a.degree());
  for (unsigned p = 1; p <= a.degree(); ++p) img[p - 1] = a(b(p));
  return Permutation(std::move(img));
}

Permutation conjugated(const Permutation& p, const Permutation& g) {
  return compose(g.inverse(), compose(p, g));
}

Permutation conjugating_permutation(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree() || !(a.cycle_type() == b.cycle_type()))
    throw std::invalid_argument("conjugating_permutation: cycle types differ");
  const unsigned n = a.degree();
  // Write out both permutations as a sequence of cycles of matching lengths
  // (fixed points included) and map the supports of a onto the supports of b.
  auto full_cycles = [n](const Permutation& p) {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(n, false);
    for (unsigned start = 1; start <= n; ++start) {
      if (seen[start - 1]) continue;
      std::vector<unsigned> cyc;
      unsigned pt = start;
      do {
        seen[pt - 1] = true;
        cyc.push_back(pt);
        pt = p(pt);
      } while (pt != start);
      out.push_back(std::move(cyc));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
  };
  const auto ca = full_cycles(a);
  const auto cb = full_cycles(b);
  std::vector<unsigned> img(n, 0);
  for (std::size_t c = 0; c < ca.size(); ++c)
    for (std::size_t i = 0; i < ca[c].size(); ++i) img[ca[c][i] - 1] = cb[c][i];
  // g maps the cycle structure of a pointwise onto b: g^-1 a g... check direction.
  Permutation g = Permutation::from_images(std::move(img));
  if (!(conjugated(a, g) == b)) g = g.inverse();
  if (!(conjugated(a, g) == b))
    throw std::logic_error("conjugating_permutation: construction failed");
  return g;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

CycleType::CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

unsigned CycleType::weight() const {
  unsigned w = 0;
  for (unsigned p : parts_) w += p;
  return w;
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ',';
    out << parts_[i];
  }
  out << ']';
  return out.str();
}

}  // namespace sylowscope
