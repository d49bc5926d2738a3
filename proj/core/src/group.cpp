#include "cohomolib/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cohomolib {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

std::vector<char> mask_of(int order, const std::vector<int>& elements) {
  std::vector<char> m(order, 0);
  for (int e : elements) m[e] = 1;
  return m;
}

} // namespace

int FiniteGroup::pow(int a, long long e) const {
  int d = order_of(a);
  e %= d;
  if (e < 0) e += d;
  int r = 0, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::cyclic() const {
  for (int a = 0; a < order; ++a)
    if (order_of(a) == order) return true;
  return order == 1;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& raw,
                        std::string name, std::vector<std::string> labels) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) fail("NoIdentity", "empty table");
  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->name = std::move(name);
  g->labels = std::move(labels);
  g->table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n)
      fail("NotClosed", "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      int v = raw[i][j];
      if (v < 0 || v >= n)
        fail("NotClosed", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + std::to_string(v) + " is out of range");
      g->table[i * n + j] = v;
    }
  }
  // identity must be element 0
  for (int j = 0; j < n; ++j)
    if (g->mul(0, j) != j || g->mul(j, 0) != j)
      fail("NoIdentity", "element 0 is not the identity at index " + std::to_string(j));
  // Latin square: rows and columns are permutations
  for (int i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row[g->mul(i, j)]++)
        fail("NotClosed", "row " + std::to_string(i) + " repeats value " +
                              std::to_string(g->mul(i, j)));
      if (col[g->mul(j, i)]++)
        fail("NotClosed", "column " + std::to_string(i) + " repeats value " +
                              std::to_string(g->mul(j, i)));
    }
  }
  // inverses
  g->inverses.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g->mul(i, j) == 0 && g->mul(j, i) == 0) {
        g->inverses[i] = j;
        break;
      }
    if (g->inverses[i] < 0)
      fail("NoInverse", "element " + std::to_string(i) + " has no two-sided inverse");
  }
  // associativity, all triples (tables are capped well below 256 in practice)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = g->mul(a, b);
      for (int c = 0; c < n; ++c)
        if (g->mul(ab, c) != g->mul(a, g->mul(b, c)))
          fail("NotAssociative", "triple (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    }
  // element orders and exponent
  g->elt_orders.assign(n, 1);
  long long exp = 1;
  for (int a = 0; a < n; ++a) {
    int x = a, d = 1;
    while (x != 0) {
      x = g->mul(x, a);
      ++d;
    }
    g->elt_orders[a] = d;
    exp = lcm_ll(exp, d);
  }
  g->exponent = static_cast<int>(exp);
  return g;
}

GroupHom make_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> images) {
  if (static_cast<int>(images.size()) != domain->order)
    fail("NotHomomorphism", "image array length mismatch");
  for (int v : images)
    if (v < 0 || v >= codomain->order) fail("NotHomomorphism", "image out of range");
  if (images[0] != 0) fail("NotHomomorphism", "identity not mapped to identity");
  for (int a = 0; a < domain->order; ++a)
    for (int b = 0; b < domain->order; ++b)
      if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b]))
        fail("NotHomomorphism",
             "fails at pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return GroupHom{std::move(domain), std::move(codomain), std::move(images)};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  std::vector<int> images(first.domain->order);
  for (int x = 0; x < first.domain->order; ++x) images[x] = second.images[first.images[x]];
  return GroupHom{first.domain, second.codomain, std::move(images)};
}

bool is_surjective(const GroupHom& h) {
  std::vector<char> hit(h.codomain->order, 0);
  int count = 0;
  for (int v : h.images)
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  return count == h.codomain->order;
}

Subgroup kernel(const GroupHom& h) {
  std::vector<int> elems;
  for (int x = 0; x < h.domain->order; ++x)
    if (h.images[x] == 0) elems.push_back(x);
  return Subgroup{h.domain, elems, mask_of(h.domain->order, elems)};
}

Subgroup trivial_subgroup(GroupPtr g) {
  return Subgroup{g, {0}, mask_of(g->order, {0})};
}

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> elems(g->order);
  std::iota(elems.begin(), elems.end(), 0);
  return Subgroup{g, elems, std::vector<char>(g->order, 1)};
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= g->order) fail("IndexOutOfRange", "element " + std::to_string(e));
  auto m = mask_of(g->order, elements);
  if (elements.empty() || !m[0]) fail("NotSubgroup", "missing identity");
  for (int a : elements) {
    if (!m[g->inv(a)]) fail("NotSubgroup", "not closed under inverse");
    for (int b : elements)
      if (!m[g->mul(a, b)]) fail("NotSubgroup", "not closed under product");
  }
  return Subgroup{std::move(g), std::move(elements), std::move(m)};
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& gens) {
  for (int e : gens)
    if (e < 0 || e >= g->order) fail("IndexOutOfRange", "generator " + std::to_string(e));
  std::vector<char> m(g->order, 0);
  std::vector<int> elems{0};
  m[0] = 1;
  std::vector<int> queue{0};
  for (int e : gens)
    if (!m[e]) {
      m[e] = 1;
      elems.push_back(e);
      queue.push_back(e);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int a = queue[qi];
    for (size_t i = 0; i < elems.size(); ++i) {
      for (int p : {g->mul(a, elems[i]), g->mul(elems[i], a)}) {
        if (!m[p]) {
          m[p] = 1;
          elems.push_back(p);
          queue.push_back(p);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(g), std::move(elems), std::move(m)};
}

bool is_normal(const Subgroup& h) {
  const auto& g = *h.parent;
  for (int x = 0; x < g.order; ++x)
    for (int a : h.elements)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

bool is_cyclic_subgroup(const Subgroup& h) {
  const auto& g = *h.parent;
  for (int a : h.elements)
    if (g.order_of(a) == h.size()) return true;
  return h.size() == 1;
}

bool is_abelian_subgroup(const Subgroup& h) {
  const auto& g = *h.parent;
  for (int a : h.elements)
    for (int b : h.elements)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, int x) {
  const auto& g = *h.parent;
  std::vector<int> elems;
  elems.reserve(h.elements.size());
  for (int a : h.elements) elems.push_back(g.mul(g.mul(x, a), g.inv(x)));
  std::sort(elems.begin(), elems.end());
  return Subgroup{h.parent, elems, mask_of(g.order, elems)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> elems;
  for (int e : a.elements)
    if (b.contains(e)) elems.push_back(e);
  return Subgroup{a.parent, elems, mask_of(a.parent->order, elems)};
}

Subgroup normal_core(GroupPtr g, const Subgroup& h) {
  Subgroup core = h;
  for (int x = 0; x < g->order; ++x) core = intersect(core, conjugate_subgroup(h, x));
  return core;
}

Subgroup center(GroupPtr g) {
  std::vector<int> elems;
  for (int a = 0; a < g->order; ++a) {
    bool central = true;
    for (int b = 0; b < g->order && central; ++b)
      if (g->mul(a, b) != g->mul(b, a)) central = false;
    if (central) elems.push_back(a);
  }
  return Subgroup{g, elems, mask_of(g->order, elems)};
}

Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens;
  for (int x : a.elements)
    for (int y : b.elements) gens.push_back(g->commutator(x, y));
  return subgroup_generated(g, gens);
}

std::vector<Subgroup> derived_series(GroupPtr g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  for (;;) {
    Subgroup next = commutator_subgroup(g, series.back(), series.back());
    if (next.elements == series.back().elements) break;
    series.push_back(std::move(next));
    if (series.back().size() == 1) break;
  }
  return series;
}

bool is_solvable(GroupPtr g) { return derived_series(g).back().size() == 1; }

Subgroup ell_torsion(GroupPtr a, int ell) {
  if (!a->abelian()) fail("NotAbelian", "ell_torsion requires an abelian group");
  std::vector<int> elems;
  for (int x = 0; x < a->order; ++x) {
    int d = a->order_of(x);
    while (d % ell == 0) d /= ell;
    if (d == 1) elems.push_back(x);
  }
  return Subgroup{a, elems, mask_of(a->order, elems)};
}

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier{{0}};
  seen.insert({0});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& elems : frontier) {
      auto m = mask_of(g->order, elems);
      for (int x = 0; x < g->order; ++x) {
        if (m[x]) continue;
        auto gens = elems;
        gens.push_back(x);
        auto h = subgroup_generated(g, gens);
        if (seen.insert(h.elements).second) next.push_back(h.elements);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& elems : seen) out.push_back(Subgroup{g, elems, mask_of(g->order, elems)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<int> small_generating_set(GroupPtr g) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  while (cur.size() < g->order) {
    int best = -1, best_size = cur.size();
    for (int x = 0; x < g->order; ++x) {
      if (cur.contains(x)) continue;
      auto cand_gens = gens;
      cand_gens.push_back(x);
      int sz = subgroup_generated(g, cand_gens).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    cur = subgroup_generated(g, gens);
  }
  return gens;
}

QuotientGroup quotient_group(GroupPtr g, const Subgroup& n) {
  if (!is_normal(n)) fail("NotNormal", "subgroup is not normal");
  const int order = g->order;
  // coset of x, canonically the least member
  std::vector<int> coset_rep(order);
  for (int x = 0; x < order; ++x) {
    int least = x;
    for (int a : n.elements) least = std::min(least, g->mul(x, a));
    coset_rep[x] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < order; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end()); // rep 0 first
  std::map<int, int> idx;
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = idx[coset_rep[g->mul(reps[i], reps[j])]];
  std::vector<std::string> labels;
  labels.reserve(q);
  for (int r : reps) labels.push_back(g->label_of(r) + "N");
  auto qg = validate_group(table, g->name.empty() ? "" : g->name + "/N", labels);
  std::vector<int> proj(order);
  for (int x = 0; x < order; ++x) proj[x] = idx[coset_rep[x]];
  return QuotientGroup{qg, GroupHom{g, qg, std::move(proj)}};
}

EmbeddedGroup subgroup_as_group(const Subgroup& h) {
  const auto& g = *h.parent;
  const int n = h.size();
  std::vector<int> from_parent(g.order, -1);
  for (int i = 0; i < n; ++i) from_parent[h.elements[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = from_parent[g.mul(h.elements[i], h.elements[j])];
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int e : h.elements) labels.push_back(g.label_of(e));
  auto grp = validate_group(table, "", labels);
  return EmbeddedGroup{grp, h.elements, std::move(from_parent)};
}

namespace {

// Extends a partial map fixed on {0, gens[0..depth]} to the subgroup those
// elements generate. Returns false on any inconsistency or non-injectivity.
bool close_partial_hom(const FiniteGroup& g, std::vector<int>& map) {
  std::vector<int> known;
  for (int x = 0; x < g.order; ++x)
    if (map[x] >= 0) known.push_back(x);
  std::vector<char> used(g.order, 0);
  for (int x : known) {
    if (used[map[x]]) return false;
    used[map[x]] = 1;
  }
  for (size_t i = 0; i < known.size(); ++i) {
    for (size_t j = 0; j < known.size(); ++j) {
      int p = g.mul(known[i], known[j]);
      int img = g.mul(map[known[i]], map[known[j]]);
      if (map[p] >= 0) {
        if (map[p] != img) return false;
      } else {
        if (used[img]) return false;
        map[p] = img;
        used[img] = 1;
        known.push_back(p);
      }
    }
  }
  return true;
}

void aut_backtrack(const FiniteGroup& g, const std::vector<int>& gens, size_t depth,
                   const std::vector<int>& map, std::vector<std::vector<int>>& out) {
  if (depth == gens.size()) {
    // map is total iff gens generate G; closure reached all elements
    for (int x = 0; x < g.order; ++x)
      if (map[x] < 0) return;
    out.push_back(map);
    return;
  }
  int gen = gens[depth];
  if (map[gen] >= 0) { // already determined by earlier generators
    aut_backtrack(g, gens, depth + 1, map, out);
    return;
  }
  for (int c = 0; c < g.order; ++c) {
    if (g.order_of(c) != g.order_of(gen)) continue;
    auto next = map;
    next[gen] = c;
    if (!close_partial_hom(g, next)) continue;
    aut_backtrack(g, gens, depth + 1, next, out);
  }
}

} // namespace

int AutGroupData::index_of(const std::vector<int>& perm) const {
  for (size_t i = 0; i < perms.size(); ++i)
    if (perms[i] == perm) return static_cast<int>(i);
  return -1;
}

AutPtr automorphisms(GroupPtr g, int bound) {
  if (g->order > bound)
    fail("BoundExceeded", "automorphism enumeration bound " + std::to_string(bound) +
                              " exceeded by group of order " + std::to_string(g->order));
  auto gens = small_generating_set(g);
  std::vector<int> map(g->order, -1);
  map[0] = 0;
  std::vector<std::vector<int>> perms;
  if (g->order == 1) {
    perms.push_back({0});
  } else {
    aut_backtrack(*g, gens, 0, map, perms);
  }
  // identity first, rest lex-sorted
  std::sort(perms.begin(), perms.end());
  std::vector<int> ident(g->order);
  std::iota(ident.begin(), ident.end(), 0);
  auto it = std::find(perms.begin(), perms.end(), ident);
  std::rotate(perms.begin(), it, it + 1);
  std::sort(perms.begin() + 1, perms.end());

  const int na = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < na; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> table(na, std::vector<int>(na));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      std::vector<int> comp(g->order);
      for (int x = 0; x < g->order; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index.at(comp);
    }
  auto data = std::make_shared<AutGroupData>();
  data->base = g;
  data->aut = validate_group(table, "Aut(" + (g->name.empty() ? "G" : g->name) + ")");
  data->perms = std::move(perms);
  data->inner_of.resize(g->order);
  std::vector<int> inner_elems;
  for (int x = 0; x < g->order; ++x) {
    std::vector<int> conj(g->order);
    for (int y = 0; y < g->order; ++y) conj[y] = g->mul(g->mul(x, y), g->inv(x));
    int idx = index.at(conj);
    data->inner_of[x] = idx;
    inner_elems.push_back(idx);
  }
  std::sort(inner_elems.begin(), inner_elems.end());
  inner_elems.erase(std::unique(inner_elems.begin(), inner_elems.end()), inner_elems.end());
  data->inn = Subgroup{data->aut, inner_elems, mask_of(na, inner_elems)};
  auto q = quotient_group(data->aut, data->inn);
  data->out = q.group;
  data->out_projection = q.projection;
  return data;
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& gens, int degree,
                                 int max_order, std::string name) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) fail("NotClosed", "generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]) fail("NotClosed", "invalid permutation generator");
      seen[v] = 1;
    }
  }
  std::vector<int> ident(degree);
  std::iota(ident.begin(), ident.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{ident};
  index[ident] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& p : gens) {
      std::vector<int> comp(degree);
      for (int x = 0; x < degree; ++x) comp[x] = elems[qi][p[x]];
      if (!index.count(comp)) {
        if (static_cast<int>(elems.size()) >= max_order)
          fail("BoundExceeded", "permutation group exceeds order bound " +
                                    std::to_string(max_order));
        index[comp] = static_cast<int>(elems.size());
        elems.push_back(comp);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(degree);
      for (int x = 0; x < degree; ++x) comp[x] = elems[i][elems[j][x]];
      table[i][j] = index.at(comp);
    }
  return validate_group(table, std::move(name));
}

} // namespace cohomolib
