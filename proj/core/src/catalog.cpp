#include "sylowscope/catalog.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "sylowscope/errors.hpp"
#include "sylowscope/subgroup_ops.hpp"

namespace sylowscope {

PermutationGroup symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("symmetric_group(0)");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
  if (n >= 3) {
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i + 1;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup alternating_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("alternating_group(0)");
  std::vector<Permutation> gens;
  for (unsigned i = 1; i + 2 <= n; ++i)
    gens.push_back(Permutation::from_cycles(n, {{i, i + 1, i + 2}}));
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclic_group(0)");
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<unsigned> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = i + 1;
  return PermutationGroup(n, {Permutation::from_cycles(n, {cyc})});
}

PermutationGroup dihedral_group(unsigned order) {
  if (order < 6 || order % 2 != 0)
    throw std::invalid_argument("dihedral_group: order must be even and >= 6");
  const unsigned n = order / 2;
  std::vector<unsigned> rot(n);
  for (unsigned i = 0; i < n; ++i) rot[i] = i + 1;
  std::vector<unsigned> flip(n);
  for (unsigned i = 1; i <= n; ++i) flip[i - 1] = n + 1 - i;
  return PermutationGroup(n, {Permutation::from_cycles(n, {rot}),
                              Permutation::from_images(std::move(flip))});
}

PermutationGroup elementary_abelian_group(unsigned p, unsigned k) {
  if (!is_prime(p) || k == 0)
    throw std::invalid_argument("elementary_abelian_group: need prime p, k >= 1");
  const unsigned n = p * k;
  std::vector<Permutation> gens;
  for (unsigned block = 0; block < k; ++block) {
    std::vector<unsigned> cyc(p);
    for (unsigned i = 0; i < p; ++i) cyc[i] = block * p + i + 1;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermutationGroup(n, std::move(gens));
}

Subgroup regular_embedding(const GroupTable& h) {
  const unsigned m = h.order();
  if (m > 1000) throw CapExceeded("regular_embedding refused: order exceeds 1000");
  std::vector<Permutation> gens;
  for (std::uint16_t g : h.generating_set()) {
    std::vector<unsigned> img(m);
    for (unsigned x = 0; x < m; ++x) img[x] = h.mul(g, static_cast<std::uint16_t>(x)) + 1u;
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(std::max(m, 1u)));
  return Subgroup(Ambient::symmetric(m), std::move(gens), "regular");
}

Subgroup regular_embedding(const PermutationGroup& h) {
  return regular_embedding(to_table(h));
}

FieldVector apply_matrix(const FiniteField& f, const FieldMatrix& m, const FieldVector& v) {
  const auto d = m.size();
  FieldVector out(d, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out[r] = f.add(out[r], f.mul(m[r][c], v[c]));
  return out;
}

namespace {

std::vector<FieldVector> nonzero_vectors(const FiniteField& f, unsigned d) {
  const unsigned q = f.order();
  unsigned total = 1;
  for (unsigned i = 0; i < d; ++i) total *= q;
  std::vector<FieldVector> out;
  out.reserve(total - 1);
  for (unsigned code = 1; code < total; ++code) {
    FieldVector v(d);
    unsigned x = code;
    for (unsigned i = d; i > 0; --i) {
      v[i - 1] = x % q;
      x /= q;
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldVector normalize_projective(const FiniteField& f, FieldVector v) {
  for (unsigned c : v)
    if (c != 0) {
      const unsigned scale = f.inv(c);
      for (unsigned& x : v) x = f.mul(x, scale);
      return v;
    }
  throw std::invalid_argument("zero vector has no projective class");
}

unsigned rank_of(const std::vector<FieldVector>& sorted, const FieldVector& v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) throw std::logic_error("vector not in table");
  return static_cast<unsigned>(it - sorted.begin()) + 1;
}

FieldMatrix transvection(unsigned d, unsigned i, unsigned j, unsigned alpha) {
  FieldMatrix m(d, FieldVector(d, 0));
  for (unsigned r = 0; r < d; ++r) m[r][r] = 1;
  m[i][j] = alpha;
  return m;
}

}  // namespace

std::vector<FieldVector> projective_points(const FiniteField& f, unsigned d) {
  std::vector<FieldVector> out;
  for (const FieldVector& v : nonzero_vectors(f, d)) {
    FieldVector n = normalize_projective(f, v);
    if (n == v) out.push_back(v);
  }
  return out;  // already lexicographically sorted
}

Permutation projective_permutation(const FiniteField& f, unsigned d, const FieldMatrix& m) {
  const auto pts = projective_points(f, d);
  std::vector<unsigned> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[i] = rank_of(pts, normalize_projective(f, apply_matrix(f, m, pts[i])));
  return Permutation::from_images(std::move(img));
}

Permutation vector_permutation(const FiniteField& f, unsigned d, const FieldMatrix& m) {
  const auto vecs = nonzero_vectors(f, d);
  std::vector<unsigned> img(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    img[i] = rank_of(vecs, apply_matrix(f, m, vecs[i]));
  return Permutation::from_images(std::move(img));
}

const Subgroup& CatalogEntry::sub(const std::string& name) const {
  auto it = marked.find(name);
  if (it == marked.end())
    throw std::invalid_argument("catalog entry '" + id + "' has no subgroup '" + name + "'");
  return it->second;
}

CatalogEntry make_gl2_3() {
  FiniteField f3(3);
  const unsigned two = 2;  // -1 in F_3
  const FieldMatrix p{{1, 1}, {0, 1}};
  const FieldMatrix e21{{1, 0}, {1, 1}};
  const FieldMatrix a{{1, 0}, {0, two}};
  const FieldMatrix b{{two, 0}, {0, 1}};
  const Permutation P = vector_permutation(f3, 2, p);
  const Permutation E21 = vector_permutation(f3, 2, e21);
  const Permutation A = vector_permutation(f3, 2, a);
  const Permutation B = vector_permutation(f3, 2, b);
  PermutationGroup g(8, {P, E21, A});
  Ambient amb = Ambient::group(g, "gl2_3");
  CatalogEntry entry{"gl2_3", "GL(2,3) on the 8 nonzero vectors of F_3^2", amb, {}};
  entry.marked.emplace("U", Subgroup(amb, {P, A}, "U"));
  entry.marked.emplace("V", Subgroup(amb, {P, B}, "V"));
  entry.marked.emplace("P", Subgroup(amb, {P}, "P"));
  return entry;
}

CatalogEntry make_psl(unsigned d, unsigned q) {
  if (d < 2) throw std::invalid_argument("make_psl: d must be >= 2");
  FiniteField f(q);
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      for (unsigned alpha = 1; alpha < q; ++alpha)
        gens.push_back(projective_permutation(f, d, transvection(d, i, j, alpha)));
    }
  const auto pts = projective_points(f, d);
  PermutationGroup g(static_cast<unsigned>(pts.size()), gens);
  const std::string id = "psl_" + std::to_string(d) + "_" + std::to_string(q);
  Ambient amb = Ambient::group(g, id);
  CatalogEntry entry{id,
                     "PSL(" + std::to_string(d) + "," + std::to_string(q) +
                         ") on its " + std::to_string(pts.size()) + " projective points",
                     amb,
                     {}};

  // U: stabilizer of the point [e1] = (1,0,...,0)
  FieldVector e1(d, 0);
  e1[0] = 1;
  const unsigned e1_point = rank_of(pts, e1);
  PermutationGroup stab = g.point_stabilizer(e1_point);
  entry.marked.emplace("U", Subgroup(amb, stab.generators(), "U"));

  // V: setwise stabilizer of the hyperplane spanned by e2..ed
  // (the projective points with first coordinate 0)
  std::vector<bool> in_hyp(pts.size() + 1, false);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i][0] == 0) in_hyp[i + 1] = true;
  const Universe& uni = amb.universe();
  std::vector<Permutation> v_els;
  for (std::uint32_t e = 0; e < uni.size(); ++e) {
    const Permutation& perm = uni.at(e);
    bool stabilizes = true;
    for (unsigned pt = 1; pt <= pts.size() && stabilizes; ++pt)
      if (in_hyp[pt] && !in_hyp[perm(pt)]) stabilizes = false;
    if (stabilizes) v_els.push_back(perm);
  }
  entry.marked.emplace("V", Subgroup(amb, greedy_generators(v_els), "V"));
  return entry;
}

CatalogEntry make_psl_2_11(std::uint64_t seed_base, unsigned attempts) {
  CatalogEntry entry = make_psl(2, 11);
  entry.id = "psl_2_11";
  entry.summary = "PSL(2,11) on the 12 points of the projective line";
  entry.marked.clear();
  const Ambient& amb = entry.ambient;
  const Universe& uni = amb.universe();
  const PermutationGroup& g = amb.group();

  // Order-60 subgroups by seeded (2,3)-generated search: draw x of order 2
  // and y of order 3, keep <x,y> iff its order is exactly 60. The order
  // filter makes false positives impossible.
  std::vector<IndexSet> found;
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    SeededRng rng(seed_base + attempt);
    auto draw_of_order = [&](std::uint64_t want) -> std::optional<Permutation> {
      for (unsigned tries = 0; tries < 64; ++tries) {
        Permutation x = g.random_element(rng);
        if (x.order() == want) return x;
      }
      return std::nullopt;
    };
    auto x = draw_of_order(2);
    auto y = draw_of_order(3);
    if (!x || !y) continue;
    PermutationGroup candidate(g.degree(), {*x, *y});
    if (candidate.order() != 60) continue;
    IndexSet set = uni.to_indices(candidate.elements());
    if (std::find(found.begin(), found.end(), set) == found.end())
      found.push_back(std::move(set));
  }
  // Partition the finds into conjugacy classes, canonicalized by the least
  // member of each full conjugation orbit.
  std::vector<IndexSet> class_reps;
  for (const IndexSet& s : found) {
    bool known = false;
    for (const IndexSet& rep : class_reps)
      if (conjugator_in(uni, uni.generator_indices(), s, rep)) {
        known = true;
        break;
      }
    if (!known) {
      auto orbit = conjugation_orbit(uni, uni.generator_indices(), s);
      class_reps.push_back(orbit.front());
    }
  }
  std::sort(class_reps.begin(), class_reps.end());
  if (class_reps.size() != 2)
    throw std::runtime_error(
        "psl_2_11 discovery failed: seed schedule exhausted with " +
        std::to_string(class_reps.size()) + " classes of order-60 subgroups");

  Subgroup u(amb, group_from_indices(uni, class_reps[0]).generators(), "U");
  Subgroup v(amb, group_from_indices(uni, class_reps[1]).generators(), "V");

  // a4: an order-12 subgroup of U (the A4 class inside an order-60 group).
  Subgroup a4 = [&] {
    Universe local(u.group());
    SubgroupLattice lat = all_subgroups(local);
    for (const auto& cls : lat.classes) {
      const IndexSet& rep = lat.subgroups[cls.front()];
      if (rep.size() == 12)
        return Subgroup(amb, group_from_indices(local, rep).generators(), "a4");
    }
    throw std::logic_error("no order-12 subgroup found inside an order-60 subgroup");
  }();

  // d6: the normalizer of the cyclic group on the least order-6 element
  // (dihedral of order 12).
  Subgroup d6 = [&] {
    for (std::uint32_t e = 0; e < uni.size(); ++e) {
      if (uni.element_order(e) != 6) continue;
      IndexSet c6 = uni.closure({e});
      IndexSet all(uni.size());
      for (std::uint32_t i = 0; i < uni.size(); ++i) all[i] = i;
      IndexSet norm = normalizer_in(uni, all, c6, {e});
      return Subgroup(amb, group_from_indices(uni, norm).generators(), "d6");
    }
    throw std::logic_error("PSL(2,11) has an order-6 element; none found");
  }();
  if (!abstract_isomorphic(to_table(d6.group()), GroupTable::dihedral(12)))
    throw std::logic_error("normalizer of C6 in PSL(2,11) is not dihedral of order 12");
  if (!abstract_isomorphic(to_table(a4.group()),
                           to_table(alternating_group(4))))
    throw std::logic_error("order-12 subgroup of A5 is not A4");

  entry.marked.emplace("U", std::move(u));
  entry.marked.emplace("V", std::move(v));
  entry.marked.emplace("a4", std::move(a4));
  entry.marked.emplace("d6", std::move(d6));
  return entry;
}

CatalogEntry make_frobenius_42() {
  PermutationGroup s7 = symmetric_group(7);
  std::vector<unsigned> seven(7);
  for (unsigned i = 0; i < 7; ++i) seven[i] = i + 1;
  const Permutation sigma = Permutation::from_cycles(7, {seven});
  Ambient s7_amb = Ambient::group(s7, "sym_7");
  Subgroup c7(s7_amb, {sigma}, "C7");
  Subgroup norm = normalizer(c7);
  PermutationGroup f42(7, norm.group().generators());
  Ambient amb = Ambient::group(f42, "frobenius_42");
  CatalogEntry entry{"frobenius_42",
                     "the transitive group of order 42 and degree 7 "
                     "(normalizer of a 7-cycle in Sym(7))",
                     amb,
                     {}};
  entry.marked.emplace("C7", Subgroup(amb, {sigma}, "C7"));
  return entry;
}

CatalogEntry make_semidirect_c3sq_c4() {
  // points: vectors of F_3^2 in lexicographic order, (0,0) first
  std::vector<std::pair<unsigned, unsigned>> pts;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) pts.emplace_back(a, b);
  auto rank = [&](unsigned a, unsigned b) { return a * 3 + b + 1; };
  auto perm_of = [&](auto&& fn) {
    std::vector<unsigned> img(9);
    for (const auto& [a, b] : pts) {
      auto [x, y] = fn(a, b);
      img[rank(a, b) - 1] = rank(x % 3, y % 3);
    }
    return Permutation::from_images(std::move(img));
  };
  const Permutation t1 = perm_of([](unsigned a, unsigned b) {
    return std::pair<unsigned, unsigned>{a + 1, b};
  });
  const Permutation t2 = perm_of([](unsigned a, unsigned b) {
    return std::pair<unsigned, unsigned>{a, b + 1};
  });
  // order-4 rotation (x,y) -> (-y,x)
  const Permutation r = perm_of([](unsigned a, unsigned b) {
    return std::pair<unsigned, unsigned>{(3 - b) % 3, a};
  });
  PermutationGroup g(9, {t1, t2, r});
  Ambient amb = Ambient::group(g, "semidirect_c3sq_c4");
  CatalogEntry entry{"semidirect_c3sq_c4",
                     "C3^2 x| C4 on the 9 points of F_3^2 "
                     "(translations and the order-4 rotation)",
                     amb,
                     {}};
  entry.marked.emplace("A", Subgroup(amb, {t1, t2}, "A"));
  entry.marked.emplace("K", Subgroup(amb, {r}, "K"));
  return entry;
}

CatalogEntry make_regular_cyclic_vs_dihedral(unsigned p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("regular pair needs an odd prime p");
  const unsigned n = 2 * p;
  Ambient amb = Ambient::symmetric(n);
  Subgroup u = regular_embedding(GroupTable::cyclic(n));
  Subgroup v = regular_embedding(GroupTable::dihedral(n));
  CatalogEntry entry{"regular_c" + std::to_string(n) + "_vs_d" + std::to_string(n),
                     "regular C_" + std::to_string(n) + " vs regular D_" +
                         std::to_string(n) + " inside Sym(" + std::to_string(n) + ")",
                     amb,
                     {}};
  entry.marked.emplace("U", Subgroup(amb, u.group().generators(), "U"));
  entry.marked.emplace("V", Subgroup(amb, v.group().generators(), "V"));
  return entry;
}

CatalogEntry make_regular_ea27_vs_heis3() {
  Ambient amb = Ambient::symmetric(27);
  Subgroup u = regular_embedding(GroupTable::elementary_abelian(3, 3));
  Subgroup v = regular_embedding(GroupTable::heisenberg(3));
  CatalogEntry entry{"regular_ea27_vs_heis3",
                     "regular C_3^3 vs regular Heisenberg(3) inside Sym(27)",
                     amb,
                     {}};
  entry.marked.emplace("U", Subgroup(amb, u.group().generators(), "U"));
  entry.marked.emplace("V", Subgroup(amb, v.group().generators(), "V"));
  return entry;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{
      "gl2_3",          "psl_3_2",
      "psl_3_3",        "psl_2_11",
      "frobenius_42",   "semidirect_c3sq_c4",
      "regular_c6_vs_d6", "regular_c10_vs_d10",
      "regular_c14_vs_d14", "regular_ea27_vs_heis3",
  };
  return ids;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  static std::mutex mutex;
  static std::map<std::string, CatalogEntry> cache;
  static const std::map<std::string, std::function<CatalogEntry()>> builders{
      {"gl2_3", [] { return make_gl2_3(); }},
      {"psl_3_2", [] { return make_psl(3, 2); }},
      {"psl_3_3", [] { return make_psl(3, 3); }},
      {"psl_2_11", [] { return make_psl_2_11(); }},
      {"frobenius_42", [] { return make_frobenius_42(); }},
      {"semidirect_c3sq_c4", [] { return make_semidirect_c3sq_c4(); }},
      {"regular_c6_vs_d6", [] { return make_regular_cyclic_vs_dihedral(3); }},
      {"regular_c10_vs_d10", [] { return make_regular_cyclic_vs_dihedral(5); }},
      {"regular_c14_vs_d14", [] { return make_regular_cyclic_vs_dihedral(7); }},
      {"regular_ea27_vs_heis3", [] { return make_regular_ea27_vs_heis3(); }},
  };
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  auto builder = builders.find(id);
  if (builder == builders.end())
    throw std::invalid_argument("unknown catalog id '" + id + "'");
  return cache.emplace(id, builder->second()).first->second;
}

}  // namespace sylowscope
