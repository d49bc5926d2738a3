#include "cohomolib/lien.hpp"

#include <algorithm>

namespace cohomolib {

namespace {

// Least group element whose conjugation is the given automorphism; -1 if the
// automorphism is not inner.
int least_inner_lift(const AutGroupData& aut, int aut_idx) {
  for (int g = 0; g < aut.base->order; ++g)
    if (aut.inner_of[g] == aut_idx) return g;
  return -1;
}

} // namespace

LienPtr make_lien(GroupPtr gamma, GroupPtr g, const std::vector<int>& kappa, int aut_bound) {
  auto lien = std::make_shared<Lien>();
  lien->gamma = gamma;
  lien->g = g;
  lien->aut = automorphisms(g, aut_bound);
  const auto& out = *lien->aut->out;
  if (static_cast<int>(kappa.size()) != gamma->order)
    fail("NotHomomorphism", "kappa length mismatch");
  for (int v : kappa)
    if (v < 0 || v >= out.order) fail("NotHomomorphism", "kappa value out of range");
  if (kappa[0] != 0) fail("NotHomomorphism", "kappa must send identity to identity");
  for (int s = 0; s < gamma->order; ++s)
    for (int t = 0; t < gamma->order; ++t)
      if (kappa[gamma->mul(s, t)] != out.mul(kappa[s], kappa[t]))
        fail("NotHomomorphism",
             "kappa fails at (" + std::to_string(s) + "," + std::to_string(t) + ")");
  lien->kappa = kappa;
  lien->lift_phi.resize(gamma->order);
  for (int s = 0; s < gamma->order; ++s) {
    int pick = -1;
    for (int a = 0; a < lien->aut->aut->order; ++a)
      if (lien->aut->out_projection(a) == kappa[s]) {
        pick = a;
        break;
      }
    lien->lift_phi[s] = pick; // surjective projection: always found
  }
  lien->z = center(g);
  lien->z_emb = subgroup_as_group(lien->z);
  std::vector<std::vector<int>> perms(gamma->order);
  for (int s = 0; s < gamma->order; ++s) {
    std::vector<int> p(lien->z_emb.group->order);
    for (int i = 0; i < lien->z_emb.group->order; ++i)
      p[i] = lien->z_emb.from_parent[lien->aut->apply(lien->lift_phi[s],
                                                      lien->z_emb.to_parent[i])];
    perms[s] = std::move(p);
  }
  lien->center_ctx = make_action(gamma, lien->z_emb.group, perms);
  return lien;
}

bool same_lien(const Lien& a, const Lien& b) {
  return a.gamma->table == b.gamma->table && a.g->table == b.g->table && a.kappa == b.kappa;
}

ExtensionCocycle make_extension(LienPtr lien, std::vector<int> phi, std::vector<int> gvals) {
  const auto& gg = *lien->gamma;
  const auto& G = *lien->g;
  const auto& aut = *lien->aut;
  const int m = gg.order;
  if (static_cast<int>(phi.size()) != m || static_cast<int>(gvals.size()) != m * m)
    fail("PairInvalid", "length mismatch");
  for (int a : phi)
    if (a < 0 || a >= aut.aut->order) fail("PairInvalid", "automorphism index out of range");
  for (int v : gvals)
    if (v < 0 || v >= G.order) fail("PairInvalid", "group value out of range");
  if (phi[0] != 0) fail("PairInvalid", "phi must be the identity at 1");
  for (int s = 0; s < m; ++s)
    if (gvals[s] != 0 || gvals[s * m] != 0)
      fail("PairInvalid", "values not normalized at gamma element " + std::to_string(s));
  for (int s = 0; s < m; ++s)
    if (aut.out_projection(phi[s]) != lien->kappa[s])
      fail("PairInvalid", "phi does not lift kappa at gamma element " + std::to_string(s));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (aut.compose_idx(phi[s], phi[t]) !=
          aut.compose_idx(aut.inner_of[gvals[s * m + t]], phi[gg.mul(s, t)]))
        fail("PairInvalid", "composition law fails at (" + std::to_string(s) + "," +
                                std::to_string(t) + ")");
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      for (int u = 0; u < m; ++u)
        if (G.mul(gvals[s * m + t], gvals[gg.mul(s, t) * m + u]) !=
            G.mul(aut.apply(phi[s], gvals[t * m + u]), gvals[s * m + gg.mul(t, u)]))
          fail("PairInvalid", "cocycle law fails at (" + std::to_string(s) + "," +
                                  std::to_string(t) + "," + std::to_string(u) + ")");
  return ExtensionCocycle{std::move(lien), std::move(phi), std::move(gvals)};
}

ExtensionCocycle neutral_extension(LienPtr lien, const std::vector<int>& phi_hom) {
  std::vector<int> gvals(lien->gamma->order * lien->gamma->order, 0);
  return make_extension(std::move(lien), phi_hom, std::move(gvals));
}

LienH2 lien_h2(LienPtr lien) {
  LienH2 lh;
  lh.lien = lien;
  lh.zctx = h2_context(lien->center_ctx);
  const auto& gg = *lien->gamma;
  const auto& aut = *lien->aut;
  const int m = gg.order;
  lh.u.resize(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int comp = aut.compose_idx(aut.compose_idx(lien->lift_phi[s], lien->lift_phi[t]),
                                 aut.aut->inv(lien->lift_phi[gg.mul(s, t)]));
      int g = least_inner_lift(aut, comp);
      if (g < 0) fail("PairInvalid", "internal: lift deviation is not inner");
      lh.u[s * m + t] = g;
    }
  return lh;
}

ExtensionCocycle canonical_extension_form(const LienH2& lh, const ExtensionCocycle& e) {
  if (!same_lien(*lh.lien, *e.lien)) fail("LienMismatch", "pair is over a different lien");
  const auto& lien = *lh.lien;
  const auto& gg = *lien.gamma;
  const auto& G = *lien.g;
  const auto& aut = *lien.aut;
  const int m = gg.order;
  // h with inn(h_σ) = φ⁰_σ ∘ φ_σ⁻¹, so that inn(h_σ)∘φ_σ = φ⁰_σ
  std::vector<int> h(m);
  for (int s = 0; s < m; ++s) {
    int comp = aut.compose_idx(lien.lift_phi[s], aut.aut->inv(e.phi[s]));
    h[s] = least_inner_lift(aut, comp);
    if (h[s] < 0) fail("NotComparable", "no inner correction at gamma element " + std::to_string(s));
  }
  std::vector<int> zvals(m * m, 0); // central deviation from u, Z-embedded
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int gp = G.mul(G.mul(h[s], aut.apply(e.phi[s], h[t])),
                     G.mul(e.gval(s, t), G.inv(h[gg.mul(s, t)])));
      int zeta = G.mul(gp, G.inv(lh.u[s * m + t]));
      int zi = lien.z_emb.from_parent[zeta];
      if (zi < 0) fail("NotComparable", "deviation from the canonical lift is not central");
      zvals[s * m + t] = zi;
    }
  Cocycle2 zeta = h2_reduce(*lh.zctx, make_cocycle2(lien.center_ctx, std::move(zvals)));
  std::vector<int> gvals(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      gvals[s * m + t] =
          G.mul(lien.z_emb.to_parent[zeta.at(s, t)], lh.u[s * m + t]);
  return make_extension(lh.lien, lien.lift_phi, std::move(gvals));
}

std::vector<ExtensionCocycle> h2_lien_enumerate(LienPtr lien, const Budget& budget) {
  budget.check_gamma(lien->gamma->order);
  budget.check_target(lien->g->order);
  LienH2 lh = lien_h2(lien);
  const auto& gg = *lien->gamma;
  const auto& G = *lien->g;
  const auto& aut = *lien->aut;
  const int m = gg.order;
  // deviation of u from the cocycle law: d²ζ must equal it for (φ⁰, ζ·u)
  // to be a valid pair
  std::vector<int> target((m - 1) * (m - 1) * (m - 1), 0);
  for (int s = 1; s < m; ++s)
    for (int t = 1; t < m; ++t)
      for (int u = 1; u < m; ++u) {
        int lhs = G.mul(aut.apply(lien->lift_phi[s], lh.u[t * m + u]),
                        lh.u[s * m + gg.mul(t, u)]);
        int rhs = G.mul(lh.u[s * m + t], lh.u[gg.mul(s, t) * m + u]);
        // d²ζ = rhs·lhs⁻¹ makes (φ⁰, ζ·u) satisfy the cocycle law
        int d = G.mul(rhs, G.inv(lhs));
        int zi = lien->z_emb.from_parent[d];
        if (zi < 0) fail("PairInvalid", "internal: associator is not central");
        target[((s - 1) * (m - 1) + (t - 1)) * (m - 1) + (u - 1)] = zi;
      }
  auto zeta0 = d2_solve(*lh.zctx, target);
  if (!zeta0) return {};
  auto xi_classes = h2_abelian_enumerate(lien->center_ctx, budget);
  std::vector<ExtensionCocycle> out;
  out.reserve(xi_classes.size());
  const auto& Z = *lien->z_emb.group;
  for (const auto& xi : xi_classes) {
    std::vector<int> gvals(m * m);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        int zi = Z.mul((*zeta0)[s * m + t], xi.at(s, t));
        gvals[s * m + t] = G.mul(lien->z_emb.to_parent[zi], lh.u[s * m + t]);
      }
    out.push_back(canonical_extension_form(lh, make_extension(lien, lien->lift_phi, gvals)));
  }
  std::sort(out.begin(), out.end(), [](const ExtensionCocycle& a, const ExtensionCocycle& b) {
    return a.gvals < b.gvals;
  });
  return out;
}

namespace {

struct SectionTree {
  std::vector<int> order, parent, gen;
};

SectionTree section_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  SectionTree t;
  std::vector<int> pos(g.order, -1);
  t.order = {0};
  t.parent = {-1};
  t.gen = {-1};
  pos[0] = 0;
  for (size_t qi = 0; qi < t.order.size(); ++qi)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int next = g.mul(t.order[qi], gens[gi]);
      if (pos[next] < 0) {
        pos[next] = static_cast<int>(t.order.size());
        t.order.push_back(next);
        t.parent.push_back(static_cast<int>(qi));
        t.gen.push_back(static_cast<int>(gi));
      }
    }
  return t;
}

} // namespace

std::optional<NeutralWitness> is_neutral(const ExtensionCocycle& e, const Budget& budget) {
  const auto& lien = *e.lien;
  const auto& gg = *lien.gamma;
  const auto& G = *lien.g;
  const auto& aut = *lien.aut;
  const int m = gg.order;
  budget.check_gamma(m);
  budget.check_target(G.order);
  auto gens = small_generating_set(lien.gamma);
  auto tree = section_tree(gg, gens);
  const size_t k = gens.size();
  // h trivializes the pair when h_{στ} = h_σ·φ_σ(h_τ)·g_{σ,τ} for all σ,τ
  auto check = [&](const std::vector<int>& h) {
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t)
        if (h[gg.mul(s, t)] !=
            G.mul(G.mul(h[s], aut.apply(e.phi[s], h[t])), e.gval(s, t)))
          return false;
    return true;
  };
  auto found = [&](const std::vector<int>& h) {
    NeutralWitness w;
    w.h = h;
    w.phi_hom.resize(m);
    for (int s = 0; s < m; ++s) w.phi_hom[s] = aut.compose_idx(aut.inner_of[h[s]], e.phi[s]);
    return w;
  };
  if (k == 0) {
    std::vector<int> h(1, 0);
    if (check(h)) return found(h);
    return std::nullopt;
  }
  std::vector<int> images(k, 0);
  for (;;) {
    std::vector<int> h(m, -1);
    h[0] = 0;
    for (size_t i = 1; i < tree.order.size(); ++i) {
      int s = tree.order[tree.parent[i]];
      h[tree.order[i]] = G.mul(G.mul(h[s], aut.apply(e.phi[s], images[tree.gen[i]])),
                               e.gval(s, gens[tree.gen[i]]));
    }
    if (check(h)) return found(h);
    size_t j = k;
    while (j > 0 && images[j - 1] + 1 == G.order) images[--j] = 0;
    if (j == 0) return std::nullopt;
    ++images[j - 1];
  }
}

ExtensionCocycle act_by_h2z(const Cocycle2& xi, const ExtensionCocycle& e) {
  if (!same_action(*xi.ctx, *e.lien->center_ctx))
    fail("LienMismatch", "class is not over this lien's center module");
  const auto& G = *e.lien->g;
  const int m = e.lien->gamma->order;
  std::vector<int> gvals(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      gvals[s * m + t] =
          G.mul(e.lien->z_emb.to_parent[xi.at(s, t)], e.gval(s, t));
  return make_extension(e.lien, e.phi, std::move(gvals));
}

Cocycle2 difference_class(const LienH2& lh, const ExtensionCocycle& e1,
                          const ExtensionCocycle& e2) {
  if (!same_lien(*e1.lien, *e2.lien) || !same_lien(*e1.lien, *lh.lien))
    fail("LienMismatch", "pairs over different liens");
  ExtensionCocycle c1 = canonical_extension_form(lh, e1);
  ExtensionCocycle c2 = canonical_extension_form(lh, e2);
  const auto& lien = *lh.lien;
  const auto& G = *lien.g;
  const auto& Z = *lien.z_emb.group;
  const int m = lien.gamma->order;
  std::vector<int> vals(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int z1 = lien.z_emb.from_parent[G.mul(c1.gval(s, t), G.inv(lh.u[s * m + t]))];
      int z2 = lien.z_emb.from_parent[G.mul(c2.gval(s, t), G.inv(lh.u[s * m + t]))];
      if (z1 < 0 || z2 < 0) fail("NotComparable", "non-central deviation");
      vals[s * m + t] = Z.mul(z2, Z.inv(z1));
    }
  return h2_reduce(*lh.zctx, make_cocycle2(lien.center_ctx, std::move(vals)));
}

bool neutral_via_delta(const ExtensionCocycle& e_neutral, const Cocycle2& xi,
                       const Budget& budget) {
  auto w = is_neutral(e_neutral, budget);
  if (!w) fail("NotNeutralBase", "base pair is not neutral");
  const auto& lien = *e_neutral.lien;
  std::vector<std::vector<int>> perms;
  perms.reserve(lien.gamma->order);
  for (int s = 0; s < lien.gamma->order; ++s) perms.push_back(lien.aut->perms[w->phi_hom[s]]);
  auto ctx_g0 = make_action(lien.gamma, lien.g, perms);
  KernelData kd = kernel_data(ctx_g0, center(lien.g));
  if (!same_action(*kd.ctx_a, *lien.center_ctx))
    fail("LienMismatch", "center module of the splitting disagrees with the lien");
  auto h2z = h2_context(kd.ctx_a);
  Cocycle2 xi_inv = h2_reduce(*h2z, Cocycle2{kd.ctx_a, h2_neg(xi).values});
  for (const auto& psi : h1_enumerate(kd.ctx_h, budget)) {
    Obstruction2 d = delta_central(kd, psi);
    if (h2_equal(*h2z, d.cls, xi_inv)) return true;
  }
  return false;
}

ExplicitExtension build_extension_group(const ExtensionCocycle& e) {
  const auto& lien = *e.lien;
  const auto& gg = *lien.gamma;
  const auto& G = *lien.g;
  const auto& aut = *lien.aut;
  const int m = gg.order;
  const int n = G.order;
  const int order = n * m;
  auto idx = [m](int g, int s) { return g * m + s; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int g1 = 0; g1 < n; ++g1)
    for (int s1 = 0; s1 < m; ++s1)
      for (int g2 = 0; g2 < n; ++g2)
        for (int s2 = 0; s2 < m; ++s2) {
          int g = G.mul(G.mul(g1, aut.apply(e.phi[s1], g2)), e.gval(s1, s2));
          table[idx(g1, s1)][idx(g2, s2)] = idx(g, gg.mul(s1, s2));
        }
  auto eg = validate_group(table, "E");
  std::vector<int> proj(order);
  for (int g = 0; g < n; ++g)
    for (int s = 0; s < m; ++s) proj[idx(g, s)] = s;
  std::vector<int> embed(n);
  for (int g = 0; g < n; ++g) embed[g] = idx(g, 0);
  return ExplicitExtension{eg, make_hom(eg, lien.gamma, std::move(proj)), std::move(embed)};
}

RestrictedExtension restrict_extension(const ExtensionCocycle& e, const Subgroup& sub) {
  if (sub.parent->table != e.lien->gamma->table)
    fail("NotSubgroup", "subgroup belongs to a different gamma");
  auto emb = subgroup_as_group(sub);
  const int m = emb.group->order;
  std::vector<int> kappa(m), phi(m), gvals(m * m);
  for (int i = 0; i < m; ++i) {
    kappa[i] = e.lien->kappa[emb.to_parent[i]];
    phi[i] = e.phi[emb.to_parent[i]];
  }
  auto lien_v = make_lien(emb.group, e.lien->g, kappa);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      gvals[i * m + j] = e.gval(emb.to_parent[i], emb.to_parent[j]);
  auto ext = make_extension(lien_v, std::move(phi), std::move(gvals));
  return RestrictedExtension{lien_v, std::move(emb), std::move(ext)};
}

} // namespace cohomolib
