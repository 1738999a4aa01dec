#include "sylowscope/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sylowscope/catalog.hpp"
#include "sylowscope/config.hpp"
#include "sylowscope/errors.hpp"

namespace sylowscope {

namespace {

// elements in the order GroupTable::from_permutations indexes them:
// identity first, the rest sorted by image array
std::vector<Permutation> table_ordered_elements(const PermutationGroup& g) {
  std::vector<Permutation> els = g.elements();
  auto id_pos = std::find_if(els.begin(), els.end(),
                             [](const Permutation& p) { return p.is_identity(); });
  std::rotate(els.begin(), id_pos, id_pos + 1);
  return els;
}

bool conjugates_onto(const Subgroup& u, const Subgroup& v, const Permutation& w) {
  if (u.order() != v.order()) return false;
  for (const Permutation& s : u.group().generators())
    if (!v.contains(conjugated(s, w))) return false;
  return true;
}

ConjugacyOutcome verified(const Subgroup& u, const Subgroup& v, Permutation w,
                          std::string mode) {
  if (!conjugates_onto(u, v, w)) {
    w = w.inverse();
    if (!conjugates_onto(u, v, w))
      throw std::logic_error("conjugacy witness failed verification (mode " + mode + ")");
  }
  return {true, std::move(w), std::move(mode)};
}

ConjugacyOutcome conjugate_cyclic(const Subgroup& u, const Subgroup& v) {
  const auto a = cyclic_generator(u.group());
  const auto b = cyclic_generator(v.group());
  if (!a || !b) return {false, std::nullopt, "cyclic"};
  const auto m = static_cast<long long>(b->order());
  const CycleType want = a->cycle_type();
  for (long long k = 1; k < std::max<long long>(m, 2); ++k) {
    if (std::gcd(k, m) != 1) continue;
    const Permutation bk = b->power(k);
    if (bk.cycle_type() == want)
      return verified(u, v, conjugating_permutation(*a, bk), "cyclic");
  }
  return {false, std::nullopt, "cyclic"};
}

ConjugacyOutcome conjugate_semiregular(const Subgroup& u, const Subgroup& v) {
  const auto iso = find_isomorphism(to_table(u.group()), to_table(v.group()));
  if (!iso) return {false, std::nullopt, "regular"};
  const unsigned n = u.degree();
  const std::vector<Permutation> eu = table_ordered_elements(u.group());
  const std::vector<Permutation> ev = table_ordered_elements(v.group());
  auto orbit_bases = [n](const std::vector<Permutation>& els) {
    std::vector<unsigned> bases;
    std::vector<bool> seen(n, false);
    for (unsigned pt = 1; pt <= n; ++pt) {
      if (seen[pt - 1]) continue;
      bases.push_back(pt);
      for (const Permutation& x : els) seen[x(pt) - 1] = true;
    }
    return bases;
  };
  const auto bu = orbit_bases(eu);
  const auto bv = orbit_bases(ev);
  if (bu.size() != bv.size())
    return {false, std::nullopt, "regular"};
  std::vector<unsigned> img(n, 0);
  for (std::size_t i = 0; i < bu.size(); ++i)
    for (std::size_t t = 0; t < eu.size(); ++t)
      img[eu[t](bu[i]) - 1] = ev[(*iso)[t]](bv[i]);
  return verified(u, v, Permutation::from_images(std::move(img)), "regular");
}

}  // namespace

ConjugacyOutcome is_conjugate(const Subgroup& u, const Subgroup& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("is_conjugate: ambient mismatch");
  if (u.order() != v.order()) return {false, std::nullopt, "order"};

  const Ambient& amb = u.ambient();
  if (!amb.is_symmetric_whole()) {
    const Universe& uni = amb.universe();
    auto w = conjugator_in(uni, uni.generator_indices(), u.indices(), v.indices());
    if (!w) return {false, std::nullopt, "explicit"};
    return verified(u, v, *w, "explicit");
  }

  const bool u_cyclic = cyclic_generator(u.group()).has_value();
  const bool v_cyclic = cyclic_generator(v.group()).has_value();
  if (u_cyclic != v_cyclic) return {false, std::nullopt, "cyclic"};
  if (u_cyclic) return conjugate_cyclic(u, v);

  const bool u_semi = is_semiregular(u.group());
  const bool v_semi = is_semiregular(v.group());
  if (u_semi != v_semi) return {false, std::nullopt, "regular"};
  if (u_semi) return conjugate_semiregular(u, v);

  throw ModeUnavailable(
      "no conjugacy mode applies: ambient Sym(" + std::to_string(amb.degree()) +
      ") with subgroups that are neither cyclic nor semiregular");
}

SylowOutcome is_sylow_conjugate(const Subgroup& u, const Subgroup& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("is_sylow_conjugate: ambient mismatch");
  SylowOutcome out;
  if (u.order() != v.order()) {
    out.value = false;
    out.mode = "order";
    for (unsigned p : prime_divisors(std::max(u.order(), v.order())))
      if (p_part(u.order(), p) != p_part(v.order(), p)) {
        out.failing_prime = p;
        break;
      }
    return out;
  }
  const auto primes = prime_divisors(u.order());
  if (primes.empty()) {  // both trivial
    out.value = true;
    out.mode = "trivial";
    return out;
  }
  if (primes.size() == 1) {
    // A p-group is its own Sylow subgroup: Sylow-conjugate iff conjugate.
    ConjugacyOutcome c = is_conjugate(u, v);
    out.value = c.value;
    out.mode = "prime-power/" + c.mode;
    if (c.value)
      out.witnesses.emplace_back(primes.front(), *c.witness);
    else
      out.failing_prime = primes.front();
    return out;
  }
  out.mode = "per-prime";
  for (unsigned p : primes) {
    Subgroup up = sylow_subgroup(u, p);
    Subgroup vp = sylow_subgroup(v, p);
    ConjugacyOutcome c = is_conjugate(up, vp);
    if (!c.value) {
      out.value = false;
      out.failing_prime = p;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace_back(p, *c.witness);
  }
  out.value = true;
  return out;
}

GassmannOutcome is_gassmann(const Subgroup& u, const Subgroup& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("is_gassmann: ambient mismatch");
  const Ambient& amb = u.ambient();
  GassmannOutcome out;
  if (!amb.is_symmetric_whole()) {
    out.mode = "classes";
    const Universe& uni = amb.universe();
    const ConjugacyClasses& cls = uni.classes();
    std::vector<std::uint64_t> cu(cls.reps.size(), 0), cv(cls.reps.size(), 0);
    for (std::uint32_t i : u.indices()) ++cu[cls.class_of[i]];
    for (std::uint32_t i : v.indices()) ++cv[cls.class_of[i]];
    for (std::size_t c = 0; c < cls.reps.size(); ++c)
      if (cu[c] != cv[c]) {
        out.value = false;
        out.distinguishing_class = "class of " + cls.reps[c].cycle_string() + " (|C∩U|=" +
                                   std::to_string(cu[c]) + ", |C∩V|=" +
                                   std::to_string(cv[c]) + ")";
        return out;
      }
    out.value = true;
    return out;
  }
  // Sym(n) ambient: classes are cycle types, so compare the full multisets
  // of cycle types (counts per type, not just supports).
  out.mode = "cycle-types";
  std::map<CycleType, std::uint64_t> mu, mv;
  for (const Permutation& x : u.elements()) ++mu[x.cycle_type()];
  for (const Permutation& x : v.elements()) ++mv[x.cycle_type()];
  if (mu == mv) {
    out.value = true;
    return out;
  }
  out.value = false;
  for (const auto& [type, count] : mu) {
    const auto it = mv.find(type);
    const std::uint64_t other = it == mv.end() ? 0 : it->second;
    if (count != other) {
      out.distinguishing_class = "cycle type " + type.to_string() + " (|C∩U|=" +
                                 std::to_string(count) + ", |C∩V|=" +
                                 std::to_string(other) + ")";
      return out;
    }
  }
  for (const auto& [type, count] : mv)
    if (mu.find(type) == mu.end()) {
      out.distinguishing_class =
          "cycle type " + type.to_string() + " (|C∩U|=0, |C∩V|=" + std::to_string(count) + ")";
      return out;
    }
  throw std::logic_error("is_gassmann: multisets differ but no witness found");
}

std::vector<std::uint64_t> permutation_character(const Subgroup& u) {
  const Ambient& amb = u.ambient();
  if (amb.is_symmetric_whole())
    throw ModeUnavailable("permutation_character needs an explicit ambient group");
  const Universe& uni = amb.universe();
  const ConjugacyClasses& cls = uni.classes();
  const CosetTable cosets = left_cosets(uni, u.indices());
  std::vector<std::uint64_t> out(cls.reps.size(), 0);
  for (std::size_t c = 0; c < cls.reps.size(); ++c) {
    const std::uint32_t rep = uni.index_of(cls.reps[c]);
    std::uint64_t fixed = 0;
    for (std::uint32_t k = 0; k < cosets.reps.size(); ++k)
      if (cosets.coset_of[uni.mul(rep, cosets.reps[k])] == k) ++fixed;
    out[c] = fixed;
  }
  return out;
}

namespace {

bool same_core_of(const Subgroup& u, const Subgroup& v) {
  const Ambient& amb = u.ambient();
  if (!amb.is_symmetric_whole()) {
    const Universe& uni = amb.universe();
    return core_in(uni, uni.generator_indices(), u.indices()) ==
           core_in(uni, uni.generator_indices(), v.indices());
  }
  const Subgroup cu = core(u);
  const Subgroup cv = core(v);
  if (cu.order() != cv.order()) return false;
  for (const Permutation& g : cu.group().generators())
    if (!cv.contains(g)) return false;
  return true;
}

std::vector<std::string> gen_strings(const Subgroup& s) {
  std::vector<std::string> out;
  for (const Permutation& g : s.group().generators()) out.push_back(g.cycle_string());
  if (out.empty()) out.push_back("()");
  return out;
}

}  // namespace

PairReport classify_pair(const Subgroup& u, const Subgroup& v) {
  PairReport r;
  r.ambient_id = u.ambient().id();
  r.u_name = u.name().empty() ? "U" : u.name();
  r.v_name = v.name().empty() ? "V" : v.name();
  r.degree = u.degree();
  r.ambient_order = u.ambient().order_string();
  r.u_order = u.order();
  r.v_order = v.order();
  r.u_index = u.index_string();
  r.v_index = v.index_string();
  r.u_gens = gen_strings(u);
  r.v_gens = gen_strings(v);
  r.conjugacy = is_conjugate(u, v);
  r.sylow = is_sylow_conjugate(u, v);
  r.gassmann = is_gassmann(u, v);
  r.same_core = same_core_of(u, v);
  r.same_index = u.order() == v.order();

  if (r.conjugacy.value &&
      !(r.sylow.value && r.gassmann.value && r.same_core && r.same_index))
    throw std::logic_error("pair report violates: conjugate => all weaker equivalences");
  if (r.sylow.value && !(r.same_core && r.same_index))
    throw std::logic_error("pair report violates: sylow-conjugate => same core and index");
  if (r.gassmann.value && !r.same_index)
    throw std::logic_error("pair report violates: gassmann => same index");
  return r;
}

nlohmann::ordered_json pair_report_json(const PairReport& r) {
  nlohmann::ordered_json j;
  j["ambient"] = r.ambient_id;
  j["degree"] = r.degree;
  j["ambient_order"] = r.ambient_order;
  j["u"] = {{"name", r.u_name}, {"gens", r.u_gens}, {"order", r.u_order},
            {"index", r.u_index}};
  j["v"] = {{"name", r.v_name}, {"gens", r.v_gens}, {"order", r.v_order},
            {"index", r.v_index}};
  j["conjugate"] = r.conjugacy.value;
  if (r.conjugacy.witness && r.conjugacy.value)
    j["conjugate_witness"] = r.conjugacy.witness->cycle_string();
  j["sylow_conjugate"] = r.sylow.value;
  if (r.sylow.value && !r.sylow.witnesses.empty()) {
    nlohmann::ordered_json w;
    for (const auto& [p, perm] : r.sylow.witnesses)
      w[std::to_string(p)] = perm.cycle_string();
    j["sylow_witnesses"] = w;
  }
  if (r.sylow.failing_prime) j["sylow_failing_prime"] = *r.sylow.failing_prime;
  j["gassmann"] = r.gassmann.value;
  if (r.gassmann.distinguishing_class)
    j["gassmann_distinguishing_class"] = *r.gassmann.distinguishing_class;
  j["same_core"] = r.same_core;
  j["same_index"] = r.same_index;
  j["modes"] = {{"conjugacy", r.conjugacy.mode},
                {"sylow", r.sylow.mode},
                {"gassmann", r.gassmann.mode}};
  return j;
}

std::vector<PairReport> search_pairs(const PermutationGroup& g, const std::string& ambient_id) {
  Ambient amb = Ambient::group(g, ambient_id);
  const Universe& uni = amb.universe();
  SubgroupLattice lat = all_subgroups(uni);
  std::vector<PairReport> out;
  for (std::size_t a = 0; a < lat.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.classes.size(); ++b) {
      const IndexSet& sa = lat.subgroups[lat.classes[a].front()];
      const IndexSet& sb = lat.subgroups[lat.classes[b].front()];
      if (sa.size() != sb.size()) continue;
      Subgroup u(amb, group_from_indices(uni, sa).generators(),
                 "class" + std::to_string(a));
      Subgroup v(amb, group_from_indices(uni, sb).generators(),
                 "class" + std::to_string(b));
      SylowOutcome s = is_sylow_conjugate(u, v);
      if (!s.value) continue;
      PairReport r = classify_pair(u, v);
      if (r.conjugacy.value)
        throw std::logic_error("search_pairs: distinct classes reported conjugate");
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset to_bitset(const IndexSet& s, std::uint32_t n) {
  Bitset b((n + 63) / 64, 0);
  for (std::uint32_t x : s) b[x >> 6] |= std::uint64_t{1} << (x & 63);
  return b;
}

bool subset_of(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

DegreeSearchResult degree_search(unsigned d) {
  DegreeSearchResult result;
  result.degree = d;
  PermutationGroup sd = symmetric_group(d);
  Ambient amb = Ambient::group(sd, "sym_" + std::to_string(d));
  const Universe& uni = amb.universe();
  SubgroupLattice lat = all_subgroups(uni);
  result.subgroup_count = lat.count();

  std::vector<Bitset> bits;
  bits.reserve(lat.count());
  for (const IndexSet& s : lat.subgroups) bits.push_back(to_bitset(s, uni.size()));

  for (const auto& cls : lat.classes) {
    const std::uint32_t rep_id = cls.front();
    PermutationGroup g = group_from_indices(uni, lat.subgroups[rep_id]);
    if (!g.is_transitive()) continue;
    ++result.transitive_classes;
    result.transitive_subgroups += cls.size();
    if (g.order() % d != 0) continue;
    const std::uint64_t target = g.order() / d;
    const std::vector<std::uint32_t> g_gens = uni.to_indices(g.generators());

    // index-d subgroups of g with trivial core, as lattice ids
    std::vector<std::uint32_t> faithful;
    for (std::uint32_t id = 0; id < lat.count(); ++id) {
      if (lat.subgroups[id].size() != target) continue;
      if (!subset_of(bits[id], bits[rep_id])) continue;
      if (core_in(uni, g_gens, lat.subgroups[id]).size() != 1) continue;
      faithful.push_back(id);
    }
    // group them into g-conjugacy classes
    std::unordered_map<IndexSet, std::uint32_t, IndexSetHash> member_of;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t id : faithful) {
      if (member_of.count(lat.subgroups[id])) continue;
      const auto cls_id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(id);
      std::vector<IndexSet> orbit{lat.subgroups[id]};
      member_of.emplace(lat.subgroups[id], cls_id);
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (std::uint32_t c : g_gens) {
          IndexSet next = uni.conjugate_set(orbit[k], c);
          if (member_of.emplace(next, cls_id).second) orbit.push_back(std::move(next));
        }
    }
    result.faithful_classes += reps.size();

    const bool target_prime_power = is_prime_power(target);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        ++result.pairs_checked;
        // Distinct classes are nonconjugate; for prime-power order,
        // Sylow-conjugate would mean conjugate, so nothing to test.
        if (target_prime_power) continue;
        const IndexSet& su = lat.subgroups[reps[a]];
        const IndexSet& sv = lat.subgroups[reps[b]];
        PermutationGroup gu = group_from_indices(uni, su);
        PermutationGroup gv = group_from_indices(uni, sv);
        bool sylow_conj = true;
        for (unsigned p : prime_divisors(target)) {
          const IndexSet up = uni.to_indices(sylow_subgroup(gu, p).elements());
          const IndexSet vp = uni.to_indices(sylow_subgroup(gv, p).elements());
          if (!conjugator_in(uni, g_gens, up, vp)) {
            sylow_conj = false;
            break;
          }
        }
        if (sylow_conj) {
          ++result.lemma_core_index_checked;  // cores both trivial, index both d
          Ambient sub_amb = Ambient::group(g, "sym_" + std::to_string(d) +
                                                  "/transitive-order-" +
                                                  std::to_string(g.order()));
          Subgroup u(sub_amb, gu.generators(), "U");
          Subgroup v(sub_amb, gv.generators(), "V");
          result.violations.push_back(classify_pair(u, v));
        }
      }
  }
  return result;
}

}  // namespace sylowscope
