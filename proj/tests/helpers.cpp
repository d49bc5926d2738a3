#include "helpers.hpp"

#include <algorithm>
#include <functional>

namespace cohomolib::testing {

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return validate_group(table, "C" + std::to_string(n));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
  int n = a->order * b->order;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x][y] = a->mul(x / b->order, y / b->order) * b->order +
                    b->mul(x % b->order, y % b->order);
  return validate_group(table, a->name + "x" + b->name);
}

GroupPtr symmetric3() {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3, 6, "S3");
}

GroupPtr dihedral8() {
  return group_from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}, 4, 8, "D4");
}

GroupPtr quaternion8() {
  // left-regular action of 1,-1,i,-i,j,-j,k,-k under multiplication by i, j
  return group_from_permutations({{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}, 8,
                                 8, "Q8");
}

GroupPtr heisenberg27() {
  auto idx = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  std::vector<std::vector<int>> table(27, std::vector<int>(27));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              table[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
  return validate_group(table, "Heis27");
}

GroupPtr alternating4() {
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4, 12, "A4");
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<int> perm_power(const std::vector<int>& p, int k) {
  auto out = identity_perm(static_cast<int>(p.size()));
  for (int i = 0; i < k; ++i) {
    std::vector<int> next(p.size());
    for (size_t x = 0; x < p.size(); ++x) next[x] = p[out[x]];
    out = std::move(next);
  }
  return out;
}

std::vector<int> inversion_perm(const GroupPtr& g) {
  std::vector<int> p(g->order);
  for (int x = 0; x < g->order; ++x) p[x] = g->inv(x);
  return p;
}

ActionPtr cyclic_action(const GroupPtr& gamma, const GroupPtr& target,
                        const std::vector<int>& gen_perm) {
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < gamma->order; ++k) perms.push_back(perm_power(gen_perm, k));
  return make_action(gamma, target, perms);
}

ActionPtr product_action(const GroupPtr& gamma, int b_order, const GroupPtr& target,
                         const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<std::vector<int>> perms;
  for (int s = 0; s < gamma->order; ++s) {
    auto ui = perm_power(u, s / b_order);
    auto vj = perm_power(v, s % b_order);
    std::vector<int> p(target->order);
    for (int x = 0; x < target->order; ++x) p[x] = ui[vj[x]];
    perms.push_back(std::move(p));
  }
  return make_action(gamma, target, perms);
}

std::vector<CohClass1> h1_oracle_cyclic(const ActionPtr& ctx) {
  const auto& gg = *ctx->gamma;
  const auto& g = *ctx->target;
  int s = -1;
  for (int e = 0; e < gg.order; ++e)
    if (gg.order_of(e) == gg.order) {
      s = e;
      break;
    }
  if (s < 0) fail("NotCyclic", "oracle requires a cyclic acting group");
  std::vector<CohClass1> out;
  for (int val = 0; val < g.order; ++val) {
    std::vector<int> values(gg.order, 0);
    int elt = 0, acc = 0;
    for (int k = 0; k < gg.order; ++k) {
      values[elt] = acc;
      acc = g.mul(acc, ctx->act(elt, val));
      elt = gg.mul(elt, s);
    }
    if (acc != 0) continue; // the would-be value at s^m must close up
    out.push_back(class_of(make_cocycle1(ctx, std::move(values))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CohClass1> h1_oracle_scan(const ActionPtr& ctx) {
  const auto& gg = *ctx->gamma;
  const auto& g = *ctx->target;
  const int m = gg.order;
  std::vector<CohClass1> out;
  std::vector<int> values(m, 0);
  bool more = true;
  while (more) {
    bool law = true;
    for (int s = 0; s < m && law; ++s)
      for (int t = 0; t < m && law; ++t)
        if (values[gg.mul(s, t)] != g.mul(values[s], ctx->act(s, values[t]))) law = false;
    if (law) out.push_back(class_of(make_cocycle1(ctx, values)));
    more = false;
    for (int i = m; i-- > 1;) {
      if (++values[i] < g.order) {
        more = true;
        break;
      }
      values[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long long h2_oracle_count(const ActionPtr& ctx) {
  const auto& gg = *ctx->gamma;
  const auto& g = *ctx->target;
  const int m = gg.order;
  // Z²: scan all normalized 2-cochains on the non-identity slots
  std::vector<std::pair<int, int>> slots;
  for (int s = 1; s < m; ++s)
    for (int t = 1; t < m; ++t) slots.emplace_back(s, t);
  long long cocycles = 0;
  std::vector<int> vals(slots.size(), 0);
  std::vector<int> full(m * m, 0);
  bool more = true;
  while (more) {
    for (size_t i = 0; i < slots.size(); ++i)
      full[slots[i].first * m + slots[i].second] = vals[i];
    bool law = true;
    for (int s = 0; s < m && law; ++s)
      for (int t = 0; t < m && law; ++t)
        for (int u = 0; u < m && law; ++u) {
          // additive law σ·ξ_{τ,υ} − ξ_{στ,υ} + ξ_{σ,τυ} − ξ_{σ,τ} = 0, read as
          // σ·ξ_{τ,υ} + ξ_{σ,τυ} = ξ_{στ,υ} + ξ_{σ,τ} in the abelian target
          int lhs = g.mul(ctx->act(s, full[t * m + u]), full[s * m + gg.mul(t, u)]);
          int rhs = g.mul(full[gg.mul(s, t) * m + u], full[s * m + t]);
          if (lhs != rhs) law = false;
        }
    if (law) ++cocycles;
    more = false;
    for (size_t i = vals.size(); i-- > 0;) {
      if (++vals[i] < g.order) {
        more = true;
        break;
      }
      vals[i] = 0;
    }
    if (vals.empty()) break;
  }
  // B²: distinct coboundaries of normalized 1-cochains
  std::vector<std::vector<int>> boundaries;
  std::vector<int> h(m, 0);
  more = true;
  while (more) {
    std::vector<int> dh(m * m);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        dh[s * m + t] =
            g.mul(g.mul(ctx->act(s, h[t]), g.inv(h[gg.mul(s, t)])), h[s]);
    boundaries.push_back(std::move(dh));
    more = false;
    for (int i = m; i-- > 1;) {
      if (++h[i] < g.order) {
        more = true;
        break;
      }
      h[i] = 0;
    }
    if (m == 1) break;
  }
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
  return cocycles / static_cast<long long>(boundaries.size());
}

std::vector<GroupPtr> abelian_groups_upto(int max_order) {
  std::vector<GroupPtr> out;
  // multiplicative partitions with non-increasing factors >= 2
  std::vector<int> factors;
  auto build = [&]() {
    GroupPtr g = cyclic_group(factors.empty() ? 1 : factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) g = product_group(g, cyclic_group(factors[i]));
    out.push_back(std::move(g));
  };
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 1) {
      build();
      return;
    }
    for (int f = std::min(cap, remaining); f >= 2; --f)
      if (remaining % f == 0) {
        factors.push_back(f);
        rec(remaining / f, f);
        factors.pop_back();
      }
  };
  for (int n = 1; n <= max_order; ++n) rec(n, n);
  return out;
}

PlaceSpec unramified_place(const GroupPtr& gamma, const std::string& name, int gen,
                           int q_mod_n) {
  return make_place(name, PlaceKind::Finite, subgroup_generated(gamma, {gen}),
                    trivial_subgroup(gamma), gen, 0, q_mod_n);
}

DatumBundle datum_c2c2c3() {
  auto c2 = cyclic_group(2);
  auto gamma = product_group(product_group(c2, c2), cyclic_group(3));
  // index of (a, b, c) is (a*2 + b)*3 + c
  auto idx = [](int a, int b, int c) { return (a * 2 + b) * 3 + c; };
  std::vector<int> chi(12);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 3; ++c) chi[idx(a, b, c)] = b == 0 ? 1 : 2;
  auto n_prime = subgroup_generated(gamma, {idx(0, 1, 0), idx(0, 0, 1)});
  auto n_l = subgroup_generated(gamma, {idx(0, 0, 1)});
  // one place per cyclic subgroup, Frobenius a generator, q matching chi
  std::vector<int> gens = {0,           idx(1, 0, 0), idx(0, 1, 0), idx(1, 1, 0),
                           idx(0, 0, 1), idx(1, 0, 1), idx(0, 1, 1), idx(1, 1, 1)};
  std::vector<PlaceSpec> places;
  for (size_t i = 0; i < gens.size(); ++i)
    places.push_back(
        unramified_place(gamma, "v" + std::to_string(i), gens[i], chi[gens[i]]));
  auto d = make_global_datum(gamma, 3, chi, n_prime, n_l, std::move(places));
  // constant coefficients keep H¹ = Hom(Γ, Z/3) nontrivial
  auto action = trivial_action(gamma, cyclic_group(3));
  return {std::move(d), std::move(action)};
}

std::optional<CohClass1> solve_oracle(const GlobalDatum& d, const ActionPtr& action,
                                      const LocalTargets& targets) {
  auto report = datum_validate(d, action);
  auto is_p = [&](const std::string& name) {
    return std::find(report.p_places.begin(), report.p_places.end(), name) !=
           report.p_places.end();
  };
  for (const auto& c : h1_enumerate(action)) {
    bool good = true;
    for (const auto& v : d.places) {
      auto it = std::find(targets.places.begin(), targets.places.end(), v.name);
      if (it != targets.places.end()) {
        const auto& want = targets.classes[it - targets.places.begin()];
        if (restrict_class(c, v.gamma_v).rep.values != want.rep.values) {
          good = false;
          break;
        }
        continue;
      }
      auto loc = localize(d, c, v.name);
      if (!loc.cyclic_at_v ||
          (loc.ramified_at_v && !(loc.totally_ramified_at_v && is_p(v.name)))) {
        good = false;
        break;
      }
    }
    if (good) return c;
  }
  return std::nullopt;
}

} // namespace cohomolib::testing
