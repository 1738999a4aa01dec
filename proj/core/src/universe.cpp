#include "sylowscope/universe.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

std::size_t IndexSetHash::operator()(const IndexSet& s) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : s) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
// Cayley tables are built only for groups this small (memory: cap^2 * 2 bytes).
constexpr std::uint32_t kCayleyCap = 2048;
}  // namespace

struct Universe::Impl {
  PermutationGroup group;
  std::vector<Permutation> elements;  // sorted
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  std::vector<std::uint16_t> cayley;  // size*size when size <= kCayleyCap
  std::vector<std::uint32_t> inverse;
  std::vector<std::uint64_t> orders;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> gen_indices;

  mutable std::once_flag classes_once;
  mutable ConjugacyClasses classes;

  explicit Impl(PermutationGroup g) : group(std::move(g)) {}
};

Universe::Universe(PermutationGroup group) {
  if (group.order() > limits().explicit_ambient_cap)
    throw CapExceeded("explicit-mode universe refused: order " +
                      std::to_string(group.order()) + " exceeds cap " +
                      std::to_string(limits().explicit_ambient_cap));
  auto impl = std::make_shared<Impl>(std::move(group));
  impl->elements = impl->group.elements(limits().explicit_ambient_cap);
  const auto n = static_cast<std::uint32_t>(impl->elements.size());
  impl->index.reserve(n * 2);
  for (std::uint32_t i = 0; i < n; ++i) impl->index.emplace(impl->elements[i], i);
  impl->identity = impl->index.at(Permutation::identity(impl->group.degree()));
  impl->inverse.resize(n);
  impl->orders.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    impl->inverse[i] = impl->index.at(impl->elements[i].inverse());
    impl->orders[i] = impl->elements[i].order();
  }
  if (n <= kCayleyCap) {
    impl->cayley.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        impl->cayley[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
            impl->index.at(compose(impl->elements[a], impl->elements[b])));
  }
  for (const Permutation& g : impl->group.generators())
    impl->gen_indices.push_back(impl->index.at(g));
  impl_ = std::move(impl);
}

const PermutationGroup& Universe::group() const { return impl_->group; }
std::uint32_t Universe::size() const {
  return static_cast<std::uint32_t>(impl_->elements.size());
}
const Permutation& Universe::at(std::uint32_t i) const { return impl_->elements[i]; }

std::uint32_t Universe::index_of(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end())
    throw std::invalid_argument("permutation is not an element of this group");
  return it->second;
}

std::optional<std::uint32_t> Universe::find(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Universe::identity_index() const { return impl_->identity; }

std::uint32_t Universe::mul(std::uint32_t a, std::uint32_t b) const {
  if (!impl_->cayley.empty())
    return impl_->cayley[static_cast<std::size_t>(a) * size() + b];
  return impl_->index.at(compose(impl_->elements[a], impl_->elements[b]));
}

std::uint32_t Universe::inv(std::uint32_t a) const { return impl_->inverse[a]; }

std::uint32_t Universe::conjugate(std::uint32_t x, std::uint32_t g) const {
  return mul(mul(impl_->inverse[g], x), g);
}

std::uint64_t Universe::element_order(std::uint32_t a) const { return impl_->orders[a]; }

const std::vector<std::uint32_t>& Universe::generator_indices() const {
  return impl_->gen_indices;
}

const ConjugacyClasses& Universe::classes() const {
  std::call_once(impl_->classes_once, [this] {
    ConjugacyClasses out;
    const std::uint32_t n = size();
    out.class_of.assign(n, UINT32_MAX);
    for (std::uint32_t start = 0; start < n; ++start) {
      if (out.class_of[start] != UINT32_MAX) continue;
      const auto cls = static_cast<std::uint32_t>(out.reps.size());
      std::vector<std::uint32_t> orbit{start};
      out.class_of[start] = cls;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (std::uint32_t g : impl_->gen_indices) {
          const std::uint32_t image = conjugate(orbit[k], g);
          if (out.class_of[image] == UINT32_MAX) {
            out.class_of[image] = cls;
            orbit.push_back(image);
          }
        }
      out.reps.push_back(impl_->elements[start]);
      out.sizes.push_back(orbit.size());
    }
    impl_->classes = std::move(out);
  });
  return impl_->classes;
}

IndexSet Universe::closure(const IndexSet& seed) const {
  std::vector<char> in(size(), 0);
  std::vector<std::uint32_t> members{identity_index()};
  in[identity_index()] = 1;
  for (std::uint32_t s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::uint32_t s : seed) {
      const std::uint32_t t = mul(members[k], s);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

IndexSet Universe::conjugate_set(const IndexSet& s, std::uint32_t g) const {
  IndexSet out;
  out.reserve(s.size());
  for (std::uint32_t x : s) out.push_back(conjugate(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet Universe::to_indices(const std::vector<Permutation>& perms) const {
  IndexSet out;
  out.reserve(perms.size());
  for (const Permutation& p : perms) out.push_back(index_of(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> Universe::to_permutations(const IndexSet& s) const {
  std::vector<Permutation> out;
  out.reserve(s.size());
  for (std::uint32_t i : s) out.push_back(impl_->elements[i]);
  return out;
}

}  // namespace sylowscope
