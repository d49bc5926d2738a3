#include "cohomolib/h2.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cohomolib {

namespace {

void require_abelian(const GammaAction& ctx) {
  if (!ctx.target->abelian()) fail("NotAbelian", "abelian target required");
}

} // namespace

Cocycle2 make_cocycle2(ActionPtr ctx, std::vector<int> values) {
  require_abelian(*ctx);
  const auto& g = *ctx->gamma;
  const auto& a = *ctx->target;
  if (static_cast<int>(values.size()) != g.order * g.order)
    fail("CocycleInvalid", "values length mismatch");
  for (int v : values)
    if (v < 0 || v >= a.order) fail("CocycleInvalid", "value out of range");
  Cocycle2 x{std::move(ctx), std::move(values)};
  for (int s = 0; s < g.order; ++s)
    if (x.at(0, s) != 0 || x.at(s, 0) != 0)
      fail("CocycleInvalid", "not normalized at gamma element " + std::to_string(s));
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t)
      for (int u = 0; u < g.order; ++u) {
        int lhs = a.mul(x.ctx->act(s, x.at(t, u)), a.inv(x.at(g.mul(s, t), u)));
        lhs = a.mul(lhs, a.mul(x.at(s, g.mul(t, u)), a.inv(x.at(s, t))));
        if (lhs != 0)
          fail("CocycleInvalid", "2-cocycle identity fails at (" + std::to_string(s) + "," +
                                     std::to_string(t) + "," + std::to_string(u) + ")");
      }
  return x;
}

Cocycle2 trivial_cocycle2(ActionPtr ctx) {
  require_abelian(*ctx);
  return Cocycle2{ctx, std::vector<int>(ctx->gamma->order * ctx->gamma->order, 0)};
}

std::vector<int> H2Context::to_vec(const Cocycle2& x) const {
  const int r = coords.rank();
  std::vector<int> v(slots.size() * r);
  for (size_t i = 0; i < slots.size(); ++i) {
    const auto& c = coords.coords(x.at(slots[i].first, slots[i].second));
    std::copy(c.begin(), c.end(), v.begin() + i * r);
  }
  return v;
}

Cocycle2 H2Context::from_vec(const std::vector<int>& v) const {
  const int m = ctx->gamma->order;
  const int r = coords.rank();
  std::vector<int> values(m * m, 0);
  for (size_t i = 0; i < slots.size(); ++i) {
    std::vector<int> c(v.begin() + i * r, v.begin() + (i + 1) * r);
    values[slots[i].first * m + slots[i].second] = coords.element(c);
  }
  return Cocycle2{ctx, std::move(values)};
}

namespace {

// d of the 1-cochain supported at s with value a: (σ,τ) ↦ σ·h_τ − h_{στ} + h_σ.
std::vector<int> coboundary1(const GammaAction& ctx, int s, int a) {
  const auto& g = *ctx.gamma;
  const auto& tg = *ctx.target;
  std::vector<int> h(g.order, 0);
  h[s] = a;
  std::vector<int> out(g.order * g.order);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      out[x * g.order + y] = tg.mul(tg.mul(ctx.act(x, h[y]), tg.inv(h[g.mul(x, y)])), h[x]);
  return out;
}

} // namespace

H2Ptr h2_context(ActionPtr ctx) {
  require_abelian(*ctx);
  auto h2 = std::make_shared<H2Context>();
  h2->ctx = ctx;
  h2->coords = abelian_coords(ctx->target);
  const int m = ctx->gamma->order;
  for (int s = 1; s < m; ++s)
    for (int t = 1; t < m; ++t) h2->slots.emplace_back(s, t);
  const int r = h2->coords.rank();
  ZnMat b2{h2->coords.n, static_cast<int>(h2->slots.size()) * r, {}};
  for (int s = 1; s < m; ++s)
    for (int i = 0; i < r; ++i) {
      Cocycle2 d{ctx, coboundary1(*ctx, s, h2->coords.basis[i])};
      b2.rows.push_back(h2->to_vec(d));
    }
  h2->b2 = howell_form(std::move(b2));
  return h2;
}

Cocycle2 h2_reduce(const H2Context& h2, const Cocycle2& x) {
  return h2.from_vec(coset_reduce(h2.b2, h2.to_vec(x)));
}

bool h2_is_zero(const H2Context& h2, const Cocycle2& x) {
  return in_span(h2.b2, h2.to_vec(x));
}

bool h2_equal(const H2Context& h2, const Cocycle2& x, const Cocycle2& y) {
  return h2_is_zero(h2, h2_sub(x, y));
}

Cocycle2 h2_add(const Cocycle2& x, const Cocycle2& y) {
  const auto& a = *x.ctx->target;
  std::vector<int> values(x.values.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = a.mul(x.values[i], y.values[i]);
  return Cocycle2{x.ctx, std::move(values)};
}

Cocycle2 h2_sub(const Cocycle2& x, const Cocycle2& y) { return h2_add(x, h2_neg(y)); }

Cocycle2 h2_neg(const Cocycle2& x) {
  const auto& a = *x.ctx->target;
  std::vector<int> values(x.values.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = a.inv(x.values[i]);
  return Cocycle2{x.ctx, std::move(values)};
}

namespace {

// All classes expressible in terms of a zero point and generating cocycle
// vectors, as reduced slot vectors (BFS closure in the quotient).
std::vector<std::vector<int>> span_classes(const H2Context& h2,
                                           const std::vector<std::vector<int>>& gens) {
  const int n = h2.coords.n;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{coset_reduce(h2.b2, std::vector<int>(h2.b2.cols, 0))};
  seen.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const auto& g : gens) {
      std::vector<int> next(queue[qi]);
      for (size_t i = 0; i < next.size(); ++i) next[i] = zn_norm(next[i] + g[i], n);
      next = coset_reduce(h2.b2, next);
      if (seen.insert(next).second) queue.push_back(next);
    }
  return {seen.begin(), seen.end()};
}

// Elementary normalized 2-cochain generators and their degree-2 coboundary
// images over the triple space (all entries in scaled coordinates).
struct D2System {
  std::vector<std::vector<int>> gen_vecs; // slot-space vector per generator
  ZnMat images;                           // rows: d² image per generator
};

D2System d2_system(const H2Context& h2) {
  const auto& ctx = *h2.ctx;
  const auto& g = *ctx.gamma;
  const auto& a = *ctx.target;
  const int m = g.order;
  const int r = h2.coords.rank();
  // triple coordinate layout: ((s-1)(m-1)² + (t-1)(m-1) + (u-1)) * r + i
  const int ntrip = (m - 1) * (m - 1) * (m - 1);
  D2System sys;
  sys.images = ZnMat{h2.coords.n, ntrip * r, {}};
  std::vector<int> values(m * m, 0);
  for (const auto& [s, t] : h2.slots)
    for (int i = 0; i < r; ++i) {
      values.assign(m * m, 0);
      values[s * m + t] = h2.coords.basis[i];
      Cocycle2 x{h2.ctx, values};
      sys.gen_vecs.push_back(h2.to_vec(x));
      std::vector<int> row(sys.images.cols, 0);
      for (int p = 1; p < m; ++p)
        for (int q = 1; q < m; ++q)
          for (int u = 1; u < m; ++u) {
            int val = a.mul(ctx.act(p, x.at(q, u)), a.inv(x.at(g.mul(p, q), u)));
            val = a.mul(val, a.mul(x.at(p, g.mul(q, u)), a.inv(x.at(p, q))));
            if (val == 0) continue;
            const auto& c = h2.coords.coords(val);
            int base = (((p - 1) * (m - 1) + (q - 1)) * (m - 1) + (u - 1)) * r;
            std::copy(c.begin(), c.end(), row.begin() + base);
          }
      sys.images.rows.push_back(std::move(row));
    }
  return sys;
}

} // namespace

std::vector<Cocycle2> h2_abelian_enumerate(ActionPtr ctx, const Budget& budget) {
  require_abelian(*ctx);
  budget.check_gamma(ctx->gamma->order);
  budget.check_target(ctx->target->order);
  auto h2 = h2_context(ctx);
  const auto& g = *ctx->gamma;
  const auto& a = *ctx->target;
  const int m = g.order;
  std::vector<std::vector<int>> reduced;
  if (m == 1 || a.order == 1) {
    reduced.push_back(coset_reduce(h2->b2, std::vector<int>(h2->b2.cols, 0)));
  } else if (g.cyclic()) {
    // H²(C_m, A) ≅ A^Γ / N(A), represented by ξ_z(s^i,s^j) = z iff i+j ≥ m
    int s = 1;
    while (g.order_of(s) != m) ++s;
    std::vector<int> dlog(m);
    for (int k = 0, x = 0; k < m; ++k, x = g.mul(x, s)) dlog[x] = k;
    std::set<std::vector<int>> seen;
    for (int z = 0; z < a.order; ++z) {
      bool fixed = true;
      for (int q = 0; q < m && fixed; ++q)
        if (ctx->act(q, z) != z) fixed = false;
      if (!fixed) continue;
      std::vector<int> values(m * m, 0);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          if (dlog[x] + dlog[y] >= m) values[x * m + y] = z;
      auto vec = coset_reduce(h2->b2, h2->to_vec(Cocycle2{ctx, std::move(values)}));
      seen.insert(std::move(vec));
    }
    reduced.assign(seen.begin(), seen.end());
  } else {
    auto sys = d2_system(*h2);
    ZnMat ker = left_kernel(sys.images);
    const int n = h2->coords.n;
    std::vector<std::vector<int>> zgens;
    for (const auto& comb : ker.rows) {
      std::vector<int> vec(h2->b2.cols, 0);
      for (size_t k = 0; k < sys.gen_vecs.size(); ++k) {
        if (comb[k] == 0) continue;
        for (int i = 0; i < h2->b2.cols; ++i)
          vec[i] = zn_norm(vec[i] + static_cast<long long>(comb[k]) * sys.gen_vecs[k][i], n);
      }
      zgens.push_back(std::move(vec));
    }
    reduced = span_classes(*h2, zgens);
  }
  std::sort(reduced.begin(), reduced.end());
  std::vector<Cocycle2> out;
  out.reserve(reduced.size());
  for (const auto& v : reduced) out.push_back(h2->from_vec(v));
  return out;
}

std::optional<std::vector<int>> d2_solve(const H2Context& h2, const std::vector<int>& target) {
  const int m = h2.ctx->gamma->order;
  const int r = h2.coords.rank();
  const int ntrip = (m - 1) * (m - 1) * (m - 1);
  if (static_cast<int>(target.size()) != ntrip)
    fail("CocycleInvalid", "target must assign a value to each non-identity triple");
  std::vector<int> b(ntrip * r);
  for (int k = 0; k < ntrip; ++k) {
    const auto& c = h2.coords.coords(target[k]);
    std::copy(c.begin(), c.end(), b.begin() + k * r);
  }
  auto sys = d2_system(h2);
  auto comb = left_solve(sys.images, b);
  if (!comb) return std::nullopt;
  const int n = h2.coords.n;
  std::vector<int> vec(h2.b2.cols, 0);
  for (size_t k = 0; k < sys.gen_vecs.size(); ++k) {
    if ((*comb)[k] == 0) continue;
    for (int i = 0; i < h2.b2.cols; ++i)
      vec[i] = zn_norm(vec[i] + static_cast<long long>((*comb)[k]) * sys.gen_vecs[k][i], n);
  }
  return h2.from_vec(vec).values;
}

std::optional<std::vector<int>> d1_solve(const H2Context& h2, const Cocycle2& target) {
  const auto& ctx = *h2.ctx;
  const int m = ctx.gamma->order;
  const int r = h2.coords.rank();
  ZnMat rows{h2.coords.n, h2.b2.cols, {}};
  for (int s = 1; s < m; ++s)
    for (int i = 0; i < r; ++i)
      rows.rows.push_back(h2.to_vec(Cocycle2{h2.ctx, coboundary1(ctx, s, h2.coords.basis[i])}));
  auto comb = left_solve(rows, h2.to_vec(target));
  if (!comb) return std::nullopt;
  const auto& a = *ctx.target;
  std::vector<int> h(m, 0);
  for (int s = 1; s < m; ++s)
    for (int i = 0; i < r; ++i) {
      int c = (*comb)[(s - 1) * r + i];
      h[s] = a.mul(h[s], a.pow(h2.coords.basis[i], c));
    }
  return h;
}

RestrictedCocycle2 h2_restrict(const H2Context& h2, const Cocycle2& x, const Subgroup& sub) {
  auto r = restrict_action(h2.ctx, sub);
  auto rctx2 = h2_context(r.ctx);
  const int m = r.ctx->gamma->order;
  std::vector<int> values(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      values[i * m + j] = x.at(r.gamma.to_parent[i], r.gamma.to_parent[j]);
  Cocycle2 rx = make_cocycle2(r.ctx, std::move(values));
  return RestrictedCocycle2{rctx2, h2_reduce(*rctx2, rx)};
}

KernelData kernel_data(ActionPtr ctx_g, const Subgroup& a, bool require_characteristic) {
  if (a.parent->table != ctx_g->target->table)
    fail("ContextMismatch", "subgroup belongs to a different group");
  if (!is_abelian_subgroup(a)) fail("NotAbelianKernel", "kernel must be abelian");
  if (require_characteristic) {
    for (const auto& perm : ctx_g->aut->perms)
      for (int x : a.elements)
        if (!a.contains(perm[x]))
          fail("NotCharacteristic", "an automorphism of the ambient group moves the kernel");
  } else {
    if (!is_normal(a)) fail("NotStable", "kernel must be normal");
    for (int s = 0; s < ctx_g->gamma->order; ++s)
      for (int x : a.elements)
        if (!a.contains(ctx_g->act(s, x)))
          fail("NotStable", "the action moves the kernel");
  }
  KernelData kd;
  kd.ctx_g = ctx_g;
  kd.a = a;
  kd.a_emb = subgroup_as_group(a);
  kd.quot = quotient_group(ctx_g->target, a);
  const int m = ctx_g->gamma->order;
  std::vector<std::vector<int>> hperms(m), aperms(m);
  for (int s = 0; s < m; ++s) {
    std::vector<int> hp(kd.quot.group->order, -1);
    for (int g = 0; g < ctx_g->target->order; ++g)
      hp[kd.quot.projection(g)] = kd.quot.projection(ctx_g->act(s, g));
    hperms[s] = std::move(hp);
    std::vector<int> ap(kd.a_emb.group->order);
    for (int i = 0; i < kd.a_emb.group->order; ++i)
      ap[i] = kd.a_emb.from_parent[ctx_g->act(s, kd.a_emb.to_parent[i])];
    aperms[s] = std::move(ap);
  }
  kd.ctx_h = make_action(ctx_g->gamma, kd.quot.group, hperms);
  kd.ctx_a = make_action(ctx_g->gamma, kd.a_emb.group, aperms);
  return kd;
}

namespace {

// Obstruction cocycle values (in A's own indexing) of the least-preimage lift
// of the canonical representative of gamma.
std::vector<int> obstruction_values(const KernelData& kd, const CohClass1& gamma) {
  if (!same_action(*gamma.ctx, *kd.ctx_h))
    fail("ContextMismatch", "class is not over the quotient action");
  const auto& gg = *kd.ctx_g->gamma;
  const auto& G = *kd.ctx_g->target;
  std::vector<int> lift(kd.quot.group->order, -1);
  for (int g = 0; g < G.order; ++g)
    if (lift[kd.quot.projection(g)] < 0) lift[kd.quot.projection(g)] = g;
  const auto& c = gamma.rep.values;
  const int m = gg.order;
  std::vector<int> values(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int b = G.mul(G.mul(lift[c[s]], kd.ctx_g->act(s, lift[c[t]])), G.inv(lift[c[gg.mul(s, t)]]));
      int ai = kd.a_emb.from_parent[b];
      if (ai < 0) fail("NotAbelianKernel", "internal: obstruction landed outside the kernel");
      values[s * m + t] = ai;
    }
  return values;
}

} // namespace

Obstruction2 springer_obstruction(const KernelData& kd, const CohClass1& gamma) {
  auto values = obstruction_values(kd, gamma);
  // conjugation of H on A via least lifts defines the twist ₍c₎A
  const auto& G = *kd.ctx_g->target;
  std::vector<int> lift(kd.quot.group->order, -1);
  for (int g = 0; g < G.order; ++g)
    if (lift[kd.quot.projection(g)] < 0) lift[kd.quot.projection(g)] = g;
  std::vector<int> value_auts(kd.quot.group->order);
  for (int h = 0; h < kd.quot.group->order; ++h) {
    std::vector<int> perm(kd.a_emb.group->order);
    for (int i = 0; i < kd.a_emb.group->order; ++i)
      perm[i] = kd.a_emb.from_parent[G.mul(G.mul(lift[h], kd.a_emb.to_parent[i]), G.inv(lift[h]))];
    int idx = kd.ctx_a->aut->index_of(perm);
    if (idx < 0) fail("NotCharacteristic", "conjugation does not preserve the kernel");
    value_auts[h] = idx;
  }
  auto twisted = twist_action(kd.ctx_a, gamma.rep, value_auts);
  auto ctx2 = h2_context(twisted);
  return Obstruction2{ctx2, h2_reduce(*ctx2, make_cocycle2(twisted, std::move(values)))};
}

Obstruction2 delta_central(const KernelData& kd, const CohClass1& psi) {
  Subgroup z = center(kd.ctx_g->target);
  if (!(z == kd.a)) fail("NotCentral", "kernel is not the center");
  auto values = obstruction_values(kd, psi);
  auto ctx2 = h2_context(kd.ctx_a);
  return Obstruction2{ctx2, h2_reduce(*ctx2, make_cocycle2(kd.ctx_a, std::move(values)))};
}

ActionPtr dual_module(const DualModuleSpec& spec) {
  const auto& base = *spec.base;
  require_abelian(base);
  auto coords = abelian_coords(base.target);
  const int n = coords.n;
  const auto& g = *base.gamma;
  if (static_cast<int>(spec.chi.size()) != g.order)
    fail("ChiNotHom", "chi length mismatch");
  for (int v : spec.chi)
    if (v < 0 || v >= n || std::gcd(v == 0 ? n : v, n) != 1)
      fail("ChiNotHom", "chi value is not a unit mod " + std::to_string(n));
  if (spec.chi[0] % n != 1 % n) fail("ChiNotHom", "chi at identity must be 1");
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t)
      if (spec.chi[g.mul(s, t)] % n != spec.chi[s] * spec.chi[t] % n)
        fail("ChiNotHom", "chi fails multiplicativity at (" + std::to_string(s) + "," +
                              std::to_string(t) + ")");
  const int r = coords.rank();
  // elements of A* = tuples (c_i), c_i in [0, d_i), f(b_i) = (n/d_i)c_i;
  // zero map sits at index 0
  std::vector<int> stride(r, 1);
  for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * coords.orders[i + 1];
  const int order = base.target->order;
  auto tuple_of = [&](int idx) {
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) {
      c[i] = idx / stride[i];
      idx %= stride[i];
    }
    return c;
  };
  auto index_of = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < r; ++i) idx += c[i] * stride[i];
    return idx;
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      auto cx = tuple_of(x), cy = tuple_of(y);
      std::vector<int> cz(r);
      for (int i = 0; i < r; ++i) cz[i] = (cx[i] + cy[i]) % coords.orders[i];
      table[x][y] = index_of(cz);
    }
  auto dual = validate_group(table, base.target->name.empty() ? "A*" : base.target->name + "*");
  // evaluation f(a) in Z/n from a tuple
  auto evaluate = [&](const std::vector<int>& f, int a) {
    const auto& y = coords.coords(a);
    long long acc = 0;
    for (int i = 0; i < r; ++i) {
      int ca = y[i] / (n / coords.orders[i]);
      acc += static_cast<long long>(ca) * ((n / coords.orders[i]) * f[i]);
    }
    return zn_norm(acc, n);
  };
  std::vector<std::vector<int>> perms(g.order);
  for (int s = 0; s < g.order; ++s) {
    std::vector<int> perm(order);
    int sinv = g.inv(s);
    for (int x = 0; x < order; ++x) {
      auto f = tuple_of(x);
      std::vector<int> c(r);
      for (int i = 0; i < r; ++i) {
        int val = zn_norm(static_cast<long long>(spec.chi[s]) *
                              evaluate(f, base.act(sinv, coords.basis[i])),
                          n);
        c[i] = val / (n / coords.orders[i]);
      }
      perm[x] = index_of(c);
    }
    perms[s] = std::move(perm);
  }
  return make_action(base.gamma, dual, perms);
}

std::vector<CohClass1> dual_h1(const DualModuleSpec& spec, const Budget& budget) {
  return h1_enumerate(dual_module(spec), budget);
}

} // namespace cohomolib
