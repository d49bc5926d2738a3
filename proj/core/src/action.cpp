#include "cohomolib/action.hpp"

#include <algorithm>
#include <thread>

namespace cohomolib {

ActionPtr make_action(GroupPtr gamma, GroupPtr target,
                      const std::vector<std::vector<int>>& perms, int aut_bound) {
  if (static_cast<int>(perms.size()) != gamma->order)
    fail("NotHomomorphism", "one permutation per gamma element required");
  auto aut = automorphisms(target, aut_bound);
  auto a = std::make_shared<GammaAction>();
  a->gamma = std::move(gamma);
  a->target = std::move(target);
  a->action.resize(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) {
    int idx = aut->index_of(perms[i]);
    if (idx < 0)
      fail("NotAutomorphism",
           "permutation for gamma element " + std::to_string(i) + " is not an automorphism");
    a->action[i] = idx;
  }
  a->aut = std::move(aut);
  if (a->action[0] != 0) fail("NotHomomorphism", "identity must act trivially");
  for (int s = 0; s < a->gamma->order; ++s)
    for (int t = 0; t < a->gamma->order; ++t)
      if (a->action[a->gamma->mul(s, t)] != a->aut->compose_idx(a->action[s], a->action[t]))
        fail("NotHomomorphism", "action fails at gamma pair (" + std::to_string(s) + "," +
                                    std::to_string(t) + ")");
  return a;
}

ActionPtr make_action_idx(GroupPtr gamma, GroupPtr target, AutPtr aut,
                          std::vector<int> action) {
  if (static_cast<int>(action.size()) != gamma->order)
    fail("NotHomomorphism", "one automorphism per gamma element required");
  for (int idx : action)
    if (idx < 0 || idx >= aut->aut->order)
      fail("NotAutomorphism", "automorphism index out of range");
  auto a = std::make_shared<GammaAction>();
  a->gamma = std::move(gamma);
  a->target = std::move(target);
  a->aut = std::move(aut);
  a->action = std::move(action);
  if (a->action[0] != 0) fail("NotHomomorphism", "identity must act trivially");
  for (int s = 0; s < a->gamma->order; ++s)
    for (int t = 0; t < a->gamma->order; ++t)
      if (a->action[a->gamma->mul(s, t)] != a->aut->compose_idx(a->action[s], a->action[t]))
        fail("NotHomomorphism", "action fails at gamma pair (" + std::to_string(s) + "," +
                                    std::to_string(t) + ")");
  return a;
}

ActionPtr trivial_action(GroupPtr gamma, GroupPtr target, int aut_bound) {
  std::vector<int> ident(target->order);
  for (int i = 0; i < target->order; ++i) ident[i] = i;
  std::vector<std::vector<int>> perms(gamma->order, ident);
  return make_action(std::move(gamma), std::move(target), perms, aut_bound);
}

bool same_action(const GammaAction& a, const GammaAction& b) {
  return a.gamma->table == b.gamma->table && a.target->table == b.target->table &&
         a.action == b.action;
}

Cocycle1 make_cocycle1(ActionPtr ctx, std::vector<int> values) {
  const auto& g = *ctx->gamma;
  if (static_cast<int>(values.size()) != g.order)
    fail("CocycleInvalid", "values length mismatch");
  for (int v : values)
    if (v < 0 || v >= ctx->target->order) fail("CocycleInvalid", "value out of range");
  if (values[0] != 0) fail("CocycleInvalid", "value at identity must be identity");
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t)
      if (values[g.mul(s, t)] != ctx->target->mul(values[s], ctx->act(s, values[t])))
        fail("CocycleInvalid",
             "cocycle law fails at (" + std::to_string(s) + "," + std::to_string(t) + ")");
  return Cocycle1{std::move(ctx), std::move(values)};
}

Cocycle1 trivial_cocycle1(ActionPtr ctx) {
  return Cocycle1{ctx, std::vector<int>(ctx->gamma->order, 0)};
}

Cocycle1 translate(const Cocycle1& a, int g) {
  const auto& t = *a.ctx->target;
  std::vector<int> v(a.values.size());
  for (size_t s = 0; s < a.values.size(); ++s)
    v[s] = t.mul(t.mul(t.inv(g), a.values[s]), a.ctx->act(static_cast<int>(s), g));
  return Cocycle1{a.ctx, std::move(v)};
}

bool CohClass1::trivial() const {
  return std::all_of(rep.values.begin(), rep.values.end(), [](int v) { return v == 0; });
}

CohClass1 class_of(const Cocycle1& a) {
  Cocycle1 best = a;
  for (int g = 0; g < a.ctx->target->order; ++g) {
    Cocycle1 t = translate(a, g);
    if (t.values < best.values) best = std::move(t);
  }
  return CohClass1{a.ctx, std::move(best)};
}

CohClass1 trivial_class(ActionPtr ctx) {
  return CohClass1{ctx, trivial_cocycle1(ctx)};
}

std::optional<int> cohomologous_witness(const Cocycle1& a, const Cocycle1& b) {
  if (!same_action(*a.ctx, *b.ctx)) fail("ContextMismatch", "cocycles over different actions");
  for (int g = 0; g < a.ctx->target->order; ++g)
    if (translate(a, g).values == b.values) return g;
  return std::nullopt;
}

bool are_cohomologous(const Cocycle1& a, const Cocycle1& b) {
  return cohomologous_witness(a, b).has_value();
}

namespace {

// Spanning tree of gamma: order[i] reached as order[parent]·gens[gen].
struct CayleyTree {
  std::vector<int> order;  // BFS order, order[0] = 0
  std::vector<int> parent; // index into order
  std::vector<int> gen;    // index into gens
};

CayleyTree cayley_tree(const FiniteGroup& g, const std::vector<int>& gens) {
  CayleyTree t;
  std::vector<int> pos(g.order, -1);
  t.order.push_back(0);
  t.parent.push_back(-1);
  t.gen.push_back(-1);
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

// Given images of the generators, extend along the tree and verify the full
// cocycle law. Returns the values array or empty on failure.
std::vector<int> extend_cocycle(const GammaAction& ctx, const CayleyTree& tree,
                                const std::vector<int>& images) {
  const auto& g = *ctx.gamma;
  const auto& tg = *ctx.target;
  std::vector<int> values(g.order, -1);
  values[0] = 0;
  for (size_t i = 1; i < tree.order.size(); ++i) {
    int s = tree.order[tree.parent[i]];
    int v = tg.mul(values[s], ctx.act(s, images[tree.gen[i]]));
    values[tree.order[i]] = v;
  }
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t)
      if (values[g.mul(s, t)] != tg.mul(values[s], ctx.act(s, values[t])))
        return {};
  return values;
}

} // namespace

std::vector<CohClass1> h1_enumerate(ActionPtr ctx, const Budget& budget) {
  budget.check_gamma(ctx->gamma->order);
  budget.check_target(ctx->target->order);
  auto gens = small_generating_set(ctx->gamma);
  if (gens.empty()) return {trivial_class(ctx)};
  auto tree = cayley_tree(*ctx->gamma, gens);
  const int n = ctx->target->order;
  const size_t k = gens.size();

  auto scan_first = [&](int first_lo, int first_hi, std::vector<std::vector<int>>& reps) {
    std::vector<int> images(k, 0);
    for (int first = first_lo; first < first_hi; ++first) {
      images[0] = first;
      std::fill(images.begin() + 1, images.end(), 0);
      // odometer over the remaining generator images
      bool more = true;
      while (more) {
        auto values = extend_cocycle(*ctx, tree, images);
        if (!values.empty())
          reps.push_back(class_of(Cocycle1{ctx, std::move(values)}).rep.values);
        size_t j = k - 1;
        for (;;) {
          if (j == 0) {
            more = false;
            break;
          }
          if (++images[j] < n) break;
          images[j--] = 0;
        }
      }
    }
  };

  int threads = std::max(1, budget.threads);
  threads = std::min<int>(threads, n);
  std::vector<std::vector<std::vector<int>>> buckets(threads);
  if (threads == 1) {
    scan_first(0, n, buckets[0]);
  } else {
    std::vector<std::thread> pool;
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int lo = t * chunk, hi = std::min(n, lo + chunk);
      pool.emplace_back(scan_first, lo, hi, std::ref(buckets[t]));
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<int>> reps;
  for (auto& b : buckets)
    for (auto& r : b) reps.push_back(std::move(r));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<CohClass1> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.push_back(CohClass1{ctx, Cocycle1{ctx, std::move(r)}});
  return out;
}

RestrictedAction restrict_action(ActionPtr ctx, const Subgroup& sub) {
  if (sub.parent->table != ctx->gamma->table)
    fail("NotSubgroup", "subgroup belongs to a different gamma");
  auto emb = subgroup_as_group(sub);
  std::vector<int> action(emb.group->order);
  for (int i = 0; i < emb.group->order; ++i) action[i] = ctx->action[emb.to_parent[i]];
  auto rctx = make_action_idx(emb.group, ctx->target, ctx->aut, std::move(action));
  return RestrictedAction{std::move(rctx), std::move(emb)};
}

CohClass1 restrict_class(const CohClass1& c, const Subgroup& sub) {
  auto r = restrict_action(c.ctx, sub);
  std::vector<int> values(r.ctx->gamma->order);
  for (int i = 0; i < r.ctx->gamma->order; ++i)
    values[i] = c.rep.values[r.gamma.to_parent[i]];
  return class_of(Cocycle1{r.ctx, std::move(values)});
}

CohClass1 inflate_class(const CohClass1& c, const GroupHom& proj) {
  if (proj.codomain->table != c.ctx->gamma->table)
    fail("ActionMismatch", "projection codomain differs from the class's gamma");
  std::vector<int> action(proj.domain->order);
  for (int s = 0; s < proj.domain->order; ++s) action[s] = c.ctx->action[proj(s)];
  auto ictx = make_action_idx(proj.domain, c.ctx->target, c.ctx->aut, std::move(action));
  std::vector<int> values(proj.domain->order);
  for (int s = 0; s < proj.domain->order; ++s) values[s] = c.rep.values[proj(s)];
  return class_of(Cocycle1{ictx, std::move(values)});
}

ActionPtr twist_action(ActionPtr ctx, const Cocycle1& c,
                       const std::vector<int>& value_auts) {
  std::vector<int> action(ctx->gamma->order);
  for (int s = 0; s < ctx->gamma->order; ++s)
    action[s] = ctx->aut->compose_idx(value_auts[c.values[s]], ctx->action[s]);
  try {
    return make_action_idx(ctx->gamma, ctx->target, ctx->aut, std::move(action));
  } catch (const Error& e) {
    fail("CocycleInvalid", std::string("twisted action is not an action: ") + e.what());
  }
}

ActionPtr twist_action(ActionPtr ctx, const Cocycle1& c) {
  if (c.ctx->target->table != ctx->target->table)
    fail("CocycleInvalid", "twisting cocycle must take values in the target");
  std::vector<int> value_auts(ctx->target->order);
  for (int v = 0; v < ctx->target->order; ++v) value_auts[v] = ctx->aut->inner_of[v];
  return twist_action(std::move(ctx), c, value_auts);
}

CohClass1 TwistBijection::to_base(const CohClass1& twisted_cls) const {
  const auto& tg = *base->target;
  std::vector<int> values(base->gamma->order);
  for (int s = 0; s < base->gamma->order; ++s)
    values[s] = tg.mul(twisted_cls.rep.values[s], c.values[s]);
  return class_of(make_cocycle1(base, std::move(values)));
}

CohClass1 TwistBijection::to_twisted(const CohClass1& base_cls) const {
  const auto& tg = *base->target;
  std::vector<int> values(base->gamma->order);
  for (int s = 0; s < base->gamma->order; ++s)
    values[s] = tg.mul(base_cls.rep.values[s], tg.inv(c.values[s]));
  return class_of(make_cocycle1(twisted, std::move(values)));
}

TwistBijection twist_bijection(ActionPtr ctx, const Cocycle1& c) {
  if (!same_action(*ctx, *c.ctx)) fail("CocycleInvalid", "cocycle is not over this action");
  return TwistBijection{ctx, twist_action(ctx, c), c};
}

CohClass1 pushforward_class(const CohClass1& c, ActionPtr ctx2, const GroupHom& f) {
  if (ctx2->gamma->table != c.ctx->gamma->table)
    fail("ContextMismatch", "pushforward requires the same gamma");
  if (f.domain->table != c.ctx->target->table || f.codomain->table != ctx2->target->table)
    fail("ContextMismatch", "homomorphism does not match the contexts");
  for (int s = 0; s < c.ctx->gamma->order; ++s)
    for (int x = 0; x < f.domain->order; ++x)
      if (f(c.ctx->act(s, x)) != ctx2->act(s, f(x)))
        fail("NotEquivariant", "map fails equivariance at gamma element " + std::to_string(s));
  std::vector<int> values(c.ctx->gamma->order);
  for (int s = 0; s < c.ctx->gamma->order; ++s) values[s] = f(c.rep.values[s]);
  return class_of(Cocycle1{ctx2, std::move(values)});
}

} // namespace cohomolib
