#include "sylowscope/subgroup_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

bool is_prime_power(std::uint64_t n) {
  if (n == 0) return false;
  return prime_divisors(n).size() <= 1;
}

// --- group-level operations ------------------------------------------------

PermutationGroup sylow_subgroup(const PermutationGroup& g, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  const std::uint64_t target = p_part(g.order(), p);
  if (target == 1) return PermutationGroup::trivial(g.degree());
  const auto& els = g.elements(limits().explicit_ambient_cap);

  auto is_p_power = [p](std::uint64_t n) {
    while (n % p == 0) n /= p;
    return n == 1;
  };

  // Seed with the p-part of the first element of order divisible by p.
  std::vector<Permutation> gens;
  for (const Permutation& x : els) {
    const std::uint64_t ord = x.order();
    if (ord % p == 0) {
      std::uint64_t rest = ord;
      while (rest % p == 0) rest /= p;
      gens.push_back(x.power(static_cast<long long>(rest)));
      break;
    }
  }
  PermutationGroup sub(g.degree(), gens);

  auto normalizes = [&](const Permutation& x) {
    for (const Permutation& s : sub.generators())
      if (!sub.contains(conjugated(s, x))) return false;
    return true;
  };

  while (sub.order() < target) {
    bool extended = false;
    for (const Permutation& x : els) {
      const std::uint64_t ord = x.order();
      if (ord == 1 || !is_p_power(ord)) continue;
      if (sub.contains(x) || !normalizes(x)) continue;
      gens.push_back(x);
      sub = PermutationGroup(g.degree(), gens);
      extended = true;
      break;
    }
    if (!extended)
      throw std::logic_error("sylow_subgroup: no normalizing p-element found");
  }
  return sub;
}

Subgroup sylow_subgroup(const Subgroup& u, unsigned p) {
  PermutationGroup s = sylow_subgroup(u.group(), p);
  return Subgroup(u.ambient(), s.generators(),
                  u.name().empty() ? "" : u.name() + "_" + std::to_string(p));
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> gens;
  auto push_new = [&](const Permutation& p, PermutationGroup& d) {
    if (p.is_identity() || d.contains(p)) return false;
    gens.push_back(p);
    d = PermutationGroup(g.degree(), gens);
    return true;
  };
  PermutationGroup d = PermutationGroup::trivial(g.degree());
  for (const Permutation& a : g.generators())
    for (const Permutation& b : g.generators()) {
      const Permutation comm =
          compose(compose(a.inverse(), b.inverse()), compose(a, b));
      push_new(comm, d);
    }
  // normal closure under conjugation by the parent's generators
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> snapshot = gens;
    for (const Permutation& s : snapshot)
      for (const Permutation& c : g.generators())
        grew |= push_new(conjugated(s, c), d);
  }
  return d;
}

bool is_solvable(const PermutationGroup& g) {
  PermutationGroup current = g;
  while (current.order() > 1) {
    PermutationGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = next;
  }
  return true;
}

bool is_nilpotent(const PermutationGroup& g) {
  for (unsigned p : prime_divisors(g.order())) {
    PermutationGroup syl = sylow_subgroup(g, p);
    for (const Permutation& s : syl.generators())
      for (const Permutation& c : g.generators())
        if (!syl.contains(conjugated(s, c))) return false;
  }
  return true;
}

bool is_semiregular(const PermutationGroup& g) {
  for (const Permutation& x : g.elements())
    if (!x.is_identity() && x.fixed_point_count() > 0) return false;
  return true;
}

std::optional<Permutation> cyclic_generator(const PermutationGroup& g) {
  for (const Permutation& x : g.elements())
    if (x.order() == g.order()) return x;
  return std::nullopt;
}

GroupTable to_table(const PermutationGroup& g) {
  return GroupTable::from_permutations(g.elements());
}

std::vector<Permutation> greedy_generators(const std::vector<Permutation>& elements) {
  if (elements.empty()) throw std::invalid_argument("greedy_generators: empty set");
  const unsigned degree = elements.front().degree();
  std::vector<Permutation> gens;
  PermutationGroup span = PermutationGroup::trivial(degree);
  for (const Permutation& x : elements)
    if (!span.contains(x)) {
      gens.push_back(x);
      span = PermutationGroup(degree, gens);
    }
  return gens;
}

PermutationGroup direct_product(const PermutationGroup& a, const PermutationGroup& b) {
  const unsigned n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<unsigned> img(n);
    for (unsigned p = 1; p <= a.degree(); ++p) img[p - 1] = g(p);
    for (unsigned p = a.degree() + 1; p <= n; ++p) img[p - 1] = p;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<unsigned> img(n);
    for (unsigned p = 1; p <= a.degree(); ++p) img[p - 1] = p;
    for (unsigned p = 1; p <= b.degree(); ++p) img[a.degree() + p - 1] = a.degree() + g(p);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermutationGroup(n, std::move(gens));
}

// --- universe-relative operations ------------------------------------------

IndexSet core_in(const Universe& u, const std::vector<std::uint32_t>& acting_gens,
                 const IndexSet& s) {
  IndexSet c = s;
  bool changed = true;
  while (changed && c.size() > 1) {
    changed = false;
    for (std::uint32_t g : acting_gens) {
      IndexSet cg = u.conjugate_set(c, g);
      IndexSet inter;
      std::set_intersection(c.begin(), c.end(), cg.begin(), cg.end(),
                            std::back_inserter(inter));
      if (inter.size() < c.size()) {
        c = std::move(inter);
        changed = true;
      }
    }
  }
  return c;
}

IndexSet normalizer_in(const Universe& u, const IndexSet& acting_elements,
                       const IndexSet& s, const IndexSet& s_gens) {
  IndexSet out;
  for (std::uint32_t g : acting_elements) {
    bool ok = true;
    for (std::uint32_t x : s_gens)
      if (!std::binary_search(s.begin(), s.end(), u.conjugate(x, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

namespace {

std::map<CycleType, unsigned> type_multiset(const Universe& u, const IndexSet& s) {
  std::map<CycleType, unsigned> out;
  for (std::uint32_t x : s) ++out[u.at(x).cycle_type()];
  return out;
}

}  // namespace

std::optional<Permutation> conjugator_in(const Universe& u,
                                         const std::vector<std::uint32_t>& acting_gens,
                                         const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a == b) return u.at(u.identity_index());
  if (type_multiset(u, a) != type_multiset(u, b)) return std::nullopt;

  std::unordered_map<IndexSet, std::uint32_t, IndexSetHash> witness;
  std::vector<IndexSet> queue{a};
  witness.emplace(a, u.identity_index());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const IndexSet current = queue[k];
    const std::uint32_t w = witness.at(current);
    for (std::uint32_t g : acting_gens) {
      IndexSet next = u.conjugate_set(current, g);
      const std::uint32_t nw = u.mul(w, g);
      if (next == b) return u.at(nw);
      if (witness.emplace(next, nw).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

std::vector<IndexSet> conjugation_orbit(const Universe& u,
                                        const std::vector<std::uint32_t>& acting_gens,
                                        const IndexSet& s) {
  std::unordered_map<IndexSet, bool, IndexSetHash> seen;
  std::vector<IndexSet> queue{s};
  seen.emplace(s, true);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const IndexSet current = queue[k];
    for (std::uint32_t g : acting_gens) {
      IndexSet next = u.conjugate_set(current, g);
      if (seen.emplace(next, true).second) queue.push_back(std::move(next));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

CosetTable left_cosets(const Universe& u, const IndexSet& s) {
  CosetTable t;
  t.coset_of.assign(u.size(), UINT32_MAX);
  for (std::uint32_t x = 0; x < u.size(); ++x) {
    if (t.coset_of[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(t.reps.size());
    t.reps.push_back(x);
    for (std::uint32_t m : s) t.coset_of[u.mul(x, m)] = id;
  }
  return t;
}

Permutation coset_permutation(const Universe& u, const CosetTable& t, std::uint32_t g) {
  std::vector<unsigned> img(t.reps.size());
  for (std::uint32_t c = 0; c < t.reps.size(); ++c)
    img[c] = t.coset_of[u.mul(g, t.reps[c])] + 1;
  return Permutation::from_images(std::move(img));
}

CosetActionResult coset_action_in(const Universe& u, const IndexSet& s) {
  const std::uint64_t index = u.size() / s.size();
  if (index > limits().coset_index_cap)
    throw CapExceeded("coset action refused: index " + std::to_string(index) +
                      " exceeds cap " + std::to_string(limits().coset_index_cap));
  CosetActionResult out{PermutationGroup::trivial(1), {}, left_cosets(u, s), {}};
  for (std::uint32_t g : u.generator_indices())
    out.generator_images.push_back(coset_permutation(u, out.cosets, g));
  out.image = PermutationGroup(static_cast<unsigned>(out.cosets.reps.size()),
                               out.generator_images);
  for (std::uint32_t e = 0; e < u.size(); ++e) {
    bool fixes_all = true;
    for (std::uint32_t c = 0; c < out.cosets.reps.size() && fixes_all; ++c)
      fixes_all = out.cosets.coset_of[u.mul(e, out.cosets.reps[c])] == c;
    if (fixes_all) out.kernel.push_back(e);
  }
  return out;
}

Subgroup core(const Subgroup& u) {
  const Ambient& amb = u.ambient();
  if (!amb.is_symmetric_whole()) {
    const Universe& uni = amb.universe();
    IndexSet c = core_in(uni, uni.generator_indices(), u.indices());
    return Subgroup(amb, group_from_indices(uni, c).generators(), "core");
  }
  const unsigned n = amb.degree();
  if (n <= 4) {
    // small enough to materialize Sym(n)
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(Permutation::parse(n, "(1 2)"));
    if (n >= 3) {
      std::vector<std::vector<unsigned>> cyc(1);
      for (unsigned p = 1; p <= n; ++p) cyc[0].push_back(p);
      gens.push_back(Permutation::from_cycles(n, cyc));
    }
    PermutationGroup sym(n, gens);
    Universe uni(sym);
    IndexSet c = core_in(uni, uni.generator_indices(), uni.to_indices(u.elements()));
    return Subgroup(amb, group_from_indices(uni, c).generators(), "core");
  }
  // Normal subgroups of Sym(n) for n >= 5 are 1, Alt(n), Sym(n); a proper
  // subgroup of order < n!/2 therefore has trivial core.
  const uint128 half = factorial128(n) / 2;
  if (static_cast<uint128>(u.order()) < half)
    return Subgroup(amb, {}, "core");
  return Subgroup(amb, u.group().generators(), "core");
}

Subgroup normalizer(const Subgroup& u) {
  const Ambient& amb = u.ambient();
  if (amb.is_symmetric_whole())
    throw ModeUnavailable("normalizer needs an explicit ambient group");
  const Universe& uni = amb.universe();
  IndexSet all(uni.size());
  for (std::uint32_t i = 0; i < uni.size(); ++i) all[i] = i;
  const IndexSet sub = u.indices();
  const IndexSet sub_gens = uni.to_indices(u.group().generators());
  IndexSet norm = normalizer_in(uni, all, sub, sub_gens);
  return Subgroup(amb, group_from_indices(uni, norm).generators(), "normalizer");
}

CosetActionResult coset_action(const Subgroup& u) {
  const Ambient& amb = u.ambient();
  if (amb.is_symmetric_whole())
    throw ModeUnavailable("coset action needs an explicit ambient group");
  return coset_action_in(amb.universe(), u.indices());
}

QuotientResult quotient_group(const Subgroup& n) {
  if (!is_normal(n))
    throw std::invalid_argument("quotient_group: subgroup is not normal");
  CosetActionResult act = coset_action(n);
  return {std::move(act.image), std::move(act.generator_images)};
}

bool is_normal(const Subgroup& u) {
  const Ambient& amb = u.ambient();
  if (amb.is_symmetric_whole()) {
    // conjugate generators by Coxeter generators of Sym(n)
    const unsigned n = amb.degree();
    for (unsigned i = 1; i < n; ++i) {
      const Permutation t = Permutation::from_cycles(n, {{i, i + 1}});
      for (const Permutation& g : u.group().generators())
        if (!u.contains(conjugated(g, t))) return false;
    }
    return true;
  }
  for (const Permutation& c : amb.group().generators())
    for (const Permutation& g : u.group().generators())
      if (!u.contains(conjugated(g, c))) return false;
  return true;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersection: ambient mismatch");
  const std::vector<Permutation>& ea = a.elements();
  const std::vector<Permutation>& eb = b.elements();
  std::vector<Permutation> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                        std::back_inserter(common));
  return Subgroup(a.ambient(), greedy_generators(common), "intersection");
}

PermutationGroup group_from_indices(const Universe& u, const IndexSet& s) {
  return PermutationGroup(u.group().degree(), greedy_generators(u.to_permutations(s)));
}

// --- complete subgroup enumeration ------------------------------------------

SubgroupLattice all_subgroups(const Universe& u) {
  if (u.size() > limits().subgroup_enum_cap)
    throw CapExceeded("all_subgroups refused: order " + std::to_string(u.size()) +
                      " exceeds cap " + std::to_string(limits().subgroup_enum_cap));
  const std::uint32_t n = u.size();

  std::unordered_map<IndexSet, std::uint32_t, IndexSetHash> ids;
  std::vector<IndexSet> subs;
  std::vector<std::vector<std::uint32_t>> gens;
  auto add = [&](IndexSet s, std::vector<std::uint32_t> g) -> bool {
    auto [it, fresh] = ids.emplace(std::move(s), static_cast<std::uint32_t>(subs.size()));
    if (fresh) {
      subs.push_back(it->first);
      gens.push_back(std::move(g));
    }
    return fresh;
  };

  // seed: the trivial subgroup and every cyclic subgroup
  add(IndexSet{u.identity_index()}, {});
  for (std::uint32_t x = 0; x < n; ++x) add(u.closure({x}), {x});

  std::vector<std::uint32_t> prime_power_elements;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint64_t ord = u.element_order(x);
    if (ord > 1 && is_prime_power(ord)) prime_power_elements.push_back(x);
  }

  // closure-extension to a fixpoint; each subgroup is processed exactly once
  for (std::uint32_t id = 0; id < subs.size(); ++id) {
    const IndexSet current = subs[id];
    const std::vector<std::uint32_t> current_gens = gens[id];
    if (current.size() == n) continue;

    std::vector<char> covered(n, 0);
    for (std::uint32_t m : current) covered[m] = 1;
    const bool full_marking =
        current.size() * current.size() <= (std::size_t{1} << 22);

    for (std::uint32_t g : prime_power_elements) {
      if (covered[g]) continue;
      std::vector<std::uint32_t> next_gens = current_gens;
      next_gens.push_back(g);
      IndexSet next = u.closure(IndexSet(next_gens.begin(), next_gens.end()));
      add(std::move(next), std::move(next_gens));
      // ⟨S, s1·g·s2⟩ = ⟨S, g⟩, so the whole double coset SgS is settled
      if (full_marking) {
        for (std::uint32_t a : current) {
          const std::uint32_t ag = u.mul(a, g);
          for (std::uint32_t b : current) covered[u.mul(ag, b)] = 1;
        }
      } else {
        for (std::uint32_t a : current) {
          covered[u.mul(a, g)] = 1;
          covered[u.mul(g, a)] = 1;
        }
      }
    }
  }

  // canonical order: by (order, element list)
  std::vector<std::uint32_t> perm(subs.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (subs[a].size() != subs[b].size()) return subs[a].size() < subs[b].size();
    return subs[a] < subs[b];
  });
  SubgroupLattice lat;
  lat.subgroups.reserve(subs.size());
  lat.gens.reserve(subs.size());
  ids.clear();
  for (std::uint32_t i : perm) {
    ids.emplace(subs[i], static_cast<std::uint32_t>(lat.subgroups.size()));
    lat.subgroups.push_back(std::move(subs[i]));
    lat.gens.push_back(std::move(gens[i]));
  }

  // conjugacy classes of subgroups: orbits under conjugation by the generators
  lat.class_of.assign(lat.subgroups.size(), UINT32_MAX);
  for (std::uint32_t id = 0; id < lat.subgroups.size(); ++id) {
    if (lat.class_of[id] != UINT32_MAX) continue;
    const auto cls = static_cast<std::uint32_t>(lat.classes.size());
    std::vector<std::uint32_t> members{id};
    lat.class_of[id] = cls;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::uint32_t g : u.generator_indices()) {
        IndexSet image = u.conjugate_set(lat.subgroups[members[k]], g);
        auto it = ids.find(image);
        if (it == ids.end())
          throw std::logic_error("all_subgroups: enumeration not conjugation-closed");
        if (lat.class_of[it->second] == UINT32_MAX) {
          lat.class_of[it->second] = cls;
          members.push_back(it->second);
        }
      }
    std::sort(members.begin(), members.end());
    lat.classes.push_back(std::move(members));
  }
  return lat;
}

std::vector<std::uint32_t> normal_subgroup_ids(const Universe& u,
                                               const SubgroupLattice& lat) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = 0; id < lat.subgroups.size(); ++id) {
    bool normal = true;
    for (std::uint32_t g : u.generator_indices()) {
      if (u.conjugate_set(lat.subgroups[id], g) != lat.subgroups[id]) {
        normal = false;
        break;
      }
    }
    if (normal) out.push_back(id);
  }
  return out;
}

}  // namespace sylowscope
