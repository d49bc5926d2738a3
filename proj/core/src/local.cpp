#include "cohomolib/local.hpp"

#include <algorithm>
#include <numeric>

namespace cohomolib {

TameLocalDatum make_local_datum(GroupPtr g, long long q) {
  if (q <= 0) fail("InvalidDatum", "residue cardinality must be positive");
  TameLocalDatum d;
  d.q_mod = static_cast<int>(q % g->exponent);
  d.coprime = std::gcd(q, static_cast<long long>(g->order)) == 1;
  d.unit_hypothesis = (q % g->exponent) == 1 % g->exponent;
  d.g = std::move(g);
  return d;
}

LocalClass make_local_class(const TameLocalDatum& d, int s, int t) {
  const auto& g = *d.g;
  if (s < 0 || s >= g.order || t < 0 || t >= g.order)
    fail("IndexOutOfRange", "pair out of range");
  if (g.mul(g.mul(s, t), g.inv(s)) != g.pow(t, d.q_mod))
    fail("RelationViolated", "s·t·s⁻¹ ≠ t^q for (" + std::to_string(s) + "," +
                                 std::to_string(t) + ")");
  return LocalClass{d.g, d.q_mod, s, t};
}

LocalClass canonical_local_class(const LocalClass& c) {
  const auto& g = *c.g;
  LocalClass best = c;
  for (int x = 0; x < g.order; ++x) {
    int s = g.mul(g.mul(x, c.s), g.inv(x));
    int t = g.mul(g.mul(x, c.t), g.inv(x));
    if (s < best.s || (s == best.s && t < best.t)) {
      best.s = s;
      best.t = t;
    }
  }
  return best;
}

std::vector<LocalClass> local_h1_enumerate(const TameLocalDatum& d, const Budget& budget) {
  budget.check_target(d.g->order);
  const auto& g = *d.g;
  std::vector<std::pair<int, int>> reps;
  for (int s = 0; s < g.order; ++s)
    for (int t = 0; t < g.order; ++t) {
      if (g.mul(g.mul(s, t), g.inv(s)) != g.pow(t, d.q_mod)) continue;
      LocalClass c = canonical_local_class(LocalClass{d.g, d.q_mod, s, t});
      reps.emplace_back(c.s, c.t);
    }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<LocalClass> out;
  out.reserve(reps.size());
  for (auto [s, t] : reps) out.push_back(LocalClass{d.g, d.q_mod, s, t});
  return out;
}

LocalFlags classify_local_class(const LocalClass& c) {
  const auto& g = *c.g;
  LocalFlags f;
  f.unramified = (c.t == 0);
  f.ramified = !f.unramified;
  Subgroup gen = subgroup_generated(c.g, {c.s, c.t});
  f.cyclic = is_cyclic_subgroup(gen);
  // ⟨s,t⟩ = ⟨t⟩, i.e. s is a power of t
  f.totally_ramified = false;
  for (int k = 0, x = 0; k < g.order_of(c.t); ++k, x = g.mul(x, c.t))
    if (x == c.s) {
      f.totally_ramified = true;
      break;
    }
  return f;
}

LocalClass pushforward_local(const LocalClass& c, const GroupHom& p) {
  if (p.domain->table != c.g->table)
    fail("ContextMismatch", "homomorphism domain differs from the class's group");
  TameLocalDatum d = make_local_datum(p.codomain, c.q_mod == 0 ? c.g->exponent : c.q_mod);
  return make_local_class(d, p(c.s), p(c.t));
}

LocalClass lift_totally_ramified(const TameLocalDatum& d_g, const GroupHom& p,
                                 const LocalClass& c) {
  if (p.domain->table != d_g.g->table || p.codomain->table != c.g->table)
    fail("ContextMismatch", "homomorphism does not connect the two groups");
  if (!is_surjective(p)) fail("NotSurjective", "coefficient map must be onto");
  if (!d_g.unit_hypothesis)
    fail("HypothesisViolated",
         "q ≢ 1 mod " + std::to_string(d_g.g->exponent) + " (the exponent upstairs)");
  const auto& h = *c.g;
  int m = -1;
  for (int k = 0, x = 0; k < h.order_of(c.t); ++k, x = h.mul(x, c.t))
    if (x == c.s) {
      m = k;
      break;
    }
  if (m < 0) fail("NotTotallyRamifiedCyclic", "class is not totally ramified cyclic");
  int g = 0;
  while (p(g) != c.t) ++g; // surjective: terminates
  return make_local_class(d_g, d_g.g->pow(g, m), g);
}

} // namespace cohomolib
