#include "sylowscope/subgroup.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace sylowscope {

std::string to_decimal(uint128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

uint128 factorial128(unsigned n) {
  if (n > 33) throw std::overflow_error("factorial128: n! exceeds 128 bits");
  uint128 out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

struct Ambient::Impl {
  bool symmetric = false;
  unsigned degree = 0;
  std::optional<PermutationGroup> grp;
  std::string id;
  std::once_flag universe_once;
  std::optional<Universe> universe;
};

Ambient Ambient::group(PermutationGroup g, std::string id) {
  Ambient a;
  a.impl_ = std::make_shared<Impl>();
  a.impl_->degree = g.degree();
  a.impl_->grp = std::move(g);
  a.impl_->id = id.empty() ? "group-of-order-" + std::to_string(a.impl_->grp->order())
                           : std::move(id);
  return a;
}

Ambient Ambient::symmetric(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("symmetric ambient degree must be >= 1");
  Ambient a;
  a.impl_ = std::make_shared<Impl>();
  a.impl_->symmetric = true;
  a.impl_->degree = degree;
  a.impl_->id = "Sym(" + std::to_string(degree) + ")";
  return a;
}

bool Ambient::is_symmetric_whole() const { return impl_->symmetric; }
unsigned Ambient::degree() const { return impl_->degree; }

const PermutationGroup& Ambient::group() const {
  if (impl_->symmetric)
    throw std::logic_error("symmetric ambient has no materialized group");
  return *impl_->grp;
}

const Universe& Ambient::universe() const {
  if (impl_->symmetric)
    throw std::logic_error("symmetric ambient has no element universe");
  std::call_once(impl_->universe_once, [this] { impl_->universe.emplace(*impl_->grp); });
  return *impl_->universe;
}

bool Ambient::contains(const Permutation& p) const {
  if (p.degree() != impl_->degree) return false;
  return impl_->symmetric || impl_->grp->contains(p);
}

uint128 Ambient::order128() const {
  if (impl_->symmetric) return factorial128(impl_->degree);
  return impl_->grp->order();
}

std::string Ambient::order_string() const { return to_decimal(order128()); }

const std::string& Ambient::id() const { return impl_->id; }

Subgroup::Subgroup(Ambient ambient, std::vector<Permutation> generators, std::string name)
    : ambient_(std::move(ambient)),
      group_(ambient_.degree(), std::move(generators)),
      name_(std::move(name)) {
  for (const Permutation& g : group_.generators())
    if (!ambient_.contains(g))
      throw std::invalid_argument("subgroup generator is not in the ambient group");
}

const Ambient& Subgroup::ambient() const { return ambient_; }
const PermutationGroup& Subgroup::group() const { return group_; }
const std::string& Subgroup::name() const { return name_; }

uint128 Subgroup::index128() const { return ambient_.order128() / order(); }

std::string Subgroup::index_string() const { return to_decimal(index128()); }

IndexSet Subgroup::indices() const {
  return ambient_.universe().to_indices(elements());
}

bool Subgroup::same_subgroup(const Subgroup& other) const {
  return group_.same_group(other.group());
}

}  // namespace sylowscope
