#include "sylowscope/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>

#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

Limits& limits() {
  static Limits instance;
  return instance;
}

struct SeededRng::State {
  std::mt19937_64 engine;
};

SeededRng::SeededRng(std::uint64_t seed) : state_(std::make_shared<State>()) {
  state_->engine.seed(seed);
}

std::uint64_t SeededRng::next() { return state_->engine(); }

std::uint64_t SeededRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("SeededRng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

namespace {

struct ChainLevel {
  unsigned base_point = 0;
  std::vector<Permutation> gens;         // strong generators fixing base[0..level-1]
  std::vector<int> orbit_pos;            // point-1 -> position in orbit, -1 if absent
  std::vector<unsigned> orbit;           // basic orbit in BFS discovery order
  std::vector<Permutation> transversal;  // transversal[k] maps base_point to orbit[k]
};

}  // namespace

struct PermutationGroup::Impl {
  unsigned degree = 0;
  std::vector<Permutation> input_gens;
  std::vector<unsigned> preferred_base;
  std::vector<ChainLevel> levels;
  std::uint64_t order = 1;

  mutable std::once_flag elements_once;
  mutable std::vector<Permutation> cached_elements;

  void build();
  void rebuild_orbit(std::size_t i);
  void verify_level(std::size_t i);
  // Sifts g through levels [from, end); returns residue and the level reached.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  unsigned pick_base_point(const Permutation& mover) const;
  void enumerate(std::vector<Permutation>& out, const Permutation& prefix,
                 std::size_t level) const;
};

unsigned PermutationGroup::Impl::pick_base_point(const Permutation& mover) const {
  for (unsigned pref : preferred_base)
    if (mover(pref) != pref) return pref;
  return mover.smallest_moved_point();
}

void PermutationGroup::Impl::rebuild_orbit(std::size_t i) {
  ChainLevel& level = levels[i];
  level.orbit_pos.assign(degree, -1);
  level.orbit.clear();
  level.transversal.clear();
  level.orbit.push_back(level.base_point);
  level.orbit_pos[level.base_point - 1] = 0;
  level.transversal.push_back(Permutation::identity(degree));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const Permutation& s : level.gens) {
      const unsigned image = s(level.orbit[k]);
      if (level.orbit_pos[image - 1] < 0) {
        level.orbit_pos[image - 1] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(image);
        level.transversal.push_back(compose(s, level.transversal[k]));
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::Impl::strip(Permutation g,
                                                                  std::size_t from) const {
  for (std::size_t l = from; l < levels.size(); ++l) {
    const ChainLevel& level = levels[l];
    const unsigned image = g(level.base_point);
    const int pos = level.orbit_pos[image - 1];
    if (pos < 0) return {std::move(g), l};
    g = compose(level.transversal[pos].inverse(), g);
  }
  return {std::move(g), levels.size()};
}

void PermutationGroup::Impl::verify_level(std::size_t i) {
  rebuild_orbit(i);
  ChainLevel& level = levels[i];
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    // level.gens is never mutated inside this loop; deeper levels are.
    for (std::size_t si = 0; si < level.gens.size(); ++si) {
      const Permutation& s = level.gens[si];
      const int target = level.orbit_pos[s(level.orbit[k]) - 1];
      Permutation schreier =
          compose(level.transversal[target].inverse(), compose(s, level.transversal[k]));
      auto [residue, j] = strip(std::move(schreier), i + 1);
      if (residue.is_identity()) continue;
      if (j == levels.size()) {
        ChainLevel fresh;
        fresh.base_point = pick_base_point(residue);
        levels.push_back(std::move(fresh));
      }
      for (std::size_t l = i + 1; l <= j; ++l) levels[l].gens.push_back(residue);
      for (std::size_t l = j; l > i; --l) verify_level(l);
    }
  }
}

void PermutationGroup::Impl::build() {
  std::vector<Permutation> nontrivial;
  for (const Permutation& g : input_gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  // at most one level per point, so references into `levels` stay valid
  // while verify_level appends new levels
  levels.reserve(degree);
  if (!nontrivial.empty()) {
    ChainLevel root;
    // Smallest moved (or first preferred moved) point across all generators.
    unsigned best = 0;
    for (unsigned pref : preferred_base) {
      for (const Permutation& g : nontrivial)
        if (g(pref) != pref) {
          best = pref;
          break;
        }
      if (best) break;
    }
    if (!best) {
      best = degree + 1;
      for (const Permutation& g : nontrivial)
        best = std::min(best, g.smallest_moved_point());
    }
    root.base_point = best;
    root.gens = nontrivial;
    levels.push_back(std::move(root));
    verify_level(0);
  }
  order = 1;
  for (const ChainLevel& level : levels) {
    const auto len = static_cast<std::uint64_t>(level.orbit.size());
    if (order > UINT64_MAX / len)
      throw std::overflow_error("group order exceeds 64 bits");
    order *= len;
  }
}

void PermutationGroup::Impl::enumerate(std::vector<Permutation>& out,
                                       const Permutation& prefix, std::size_t l) const {
  if (l == levels.size()) {
    out.push_back(prefix);
    return;
  }
  for (const Permutation& t : levels[l].transversal)
    enumerate(out, compose(prefix, t), l + 1);
}

PermutationGroup::PermutationGroup(unsigned degree, std::vector<Permutation> generators)
    : PermutationGroup(degree, std::move(generators), {}) {}

PermutationGroup::PermutationGroup(unsigned degree, std::vector<Permutation> generators,
                                   std::vector<unsigned> preferred_base) {
  if (degree == 0) throw std::invalid_argument("group degree must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->input_gens = std::move(generators);
  impl->preferred_base = std::move(preferred_base);
  impl->build();
  impl_ = std::move(impl);
}

PermutationGroup PermutationGroup::trivial(unsigned degree) {
  return PermutationGroup(degree, {});
}

unsigned PermutationGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermutationGroup::generators() const {
  return impl_->input_gens;
}

std::uint64_t PermutationGroup::order() const { return impl_->order; }

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) return false;
  auto [residue, level] = impl_->strip(p, 0);
  return level == impl_->levels.size() && residue.is_identity();
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  return elements(limits().element_cap);
}

const std::vector<Permutation>& PermutationGroup::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw CapExceeded("element enumeration refused: order " + std::to_string(order()) +
                      " exceeds cap " + std::to_string(cap));
  std::call_once(impl_->elements_once, [this] {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order()));
    impl_->enumerate(out, Permutation::identity(degree()), 0);
    std::sort(out.begin(), out.end());
    impl_->cached_elements = std::move(out);
  });
  return impl_->cached_elements;
}

std::vector<unsigned> PermutationGroup::orbit(unsigned point) const {
  if (point < 1 || point > degree()) throw std::invalid_argument("orbit: point out of range");
  std::vector<bool> seen(degree(), false);
  std::vector<unsigned> out{point};
  seen[point - 1] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const Permutation& g : generators()) {
      const unsigned image = g(out[k]);
      if (!seen[image - 1]) {
        seen[image - 1] = true;
        out.push_back(image);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermutationGroup::is_transitive() const {
  return orbit(1).size() == degree();
}

Permutation PermutationGroup::random_element(std::uint64_t seed) const {
  SeededRng rng(seed);
  return random_element(rng);
}

Permutation PermutationGroup::random_element(SeededRng& rng) const {
  Permutation result = Permutation::identity(degree());
  for (const ChainLevel& level : impl_->levels) {
    const auto k = rng.below(level.transversal.size());
    result = compose(result, level.transversal[k]);
  }
  return result;
}

PermutationGroup PermutationGroup::point_stabilizer(unsigned point) const {
  bool moved = false;
  for (const Permutation& g : generators())
    if (g(point) != point) {
      moved = true;
      break;
    }
  if (!moved) return *this;
  PermutationGroup rebased(degree(), generators(), {point});
  // Level 0 has base `point`; its stabilizer is generated by level-1 gens.
  if (rebased.impl_->levels.size() < 2) return trivial(degree());
  return PermutationGroup(degree(), rebased.impl_->levels[1].gens);
}

std::vector<unsigned> PermutationGroup::base() const {
  std::vector<unsigned> out;
  for (const ChainLevel& level : impl_->levels) out.push_back(level.base_point);
  return out;
}

std::vector<std::uint64_t> PermutationGroup::basic_orbit_lengths() const {
  std::vector<std::uint64_t> out;
  for (const ChainLevel& level : impl_->levels) out.push_back(level.orbit.size());
  return out;
}

bool PermutationGroup::same_group(const PermutationGroup& other) const {
  if (degree() != other.degree() || order() != other.order()) return false;
  for (const Permutation& g : generators())
    if (!other.contains(g)) return false;
  return true;
}

}  // namespace sylowscope
