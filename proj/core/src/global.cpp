#include "cohomolib/global.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cohomolib {

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string vec_str(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Subgroups of Γ_v relevant to the local predicates, computed once per place:
// the Δ ⊴ Γ_v with cyclic quotient (for "cyclic") and the Δ ≤ Γ_v with
// Δ·I_v = Γ_v (for "totally ramified").
struct PlaceGeometry {
  std::vector<Subgroup> cyclic_deltas;
  std::vector<Subgroup> covering_deltas;
};

PlaceGeometry place_geometry(const PlaceSpec& v) {
  PlaceGeometry geom;
  auto emb = subgroup_as_group(v.gamma_v);
  for (const auto& sub : all_subgroups(emb.group)) {
    std::vector<int> parent_elems;
    parent_elems.reserve(sub.elements.size());
    for (int x : sub.elements) parent_elems.push_back(emb.to_parent[x]);
    Subgroup in_parent = make_subgroup(v.gamma_v.parent, parent_elems);
    if (is_normal(sub) && quotient_group(emb.group, sub).group->cyclic())
      geom.cyclic_deltas.push_back(in_parent);
    // |Δ·I_v| = |Δ||I_v|/|Δ∩I_v|
    int inter = static_cast<int>(intersect(in_parent, v.inertia).elements.size());
    if (in_parent.size() * v.inertia.size() == v.gamma_v.size() * inter)
      geom.covering_deltas.push_back(in_parent);
  }
  return geom;
}

struct LocalFlagsAtPlace {
  bool unramified = false;
  bool cyclic = false;
  bool totally_ramified = false;
};

LocalFlagsAtPlace flags_at_place(const CohClass1& c, const PlaceSpec& v,
                                 const PlaceGeometry& geom) {
  LocalFlagsAtPlace f;
  f.unramified = restrict_class(c, v.inertia).trivial();
  for (const auto& d : geom.cyclic_deltas)
    if (restrict_class(c, d).trivial()) {
      f.cyclic = true;
      break;
    }
  for (const auto& d : geom.covering_deltas)
    if (restrict_class(c, d).trivial()) {
      f.totally_ramified = true;
      break;
    }
  return f;
}

// Per-datum cache shared by the solvers: place geometry, P-places, and the
// prescribed targets resolved against a given action.
struct SolveContext {
  const GlobalDatum* d = nullptr;
  std::vector<std::string> p_places;
  std::map<std::string, PlaceGeometry> geometry;
  // resolved targets: place name -> canonical representative values
  std::map<std::string, std::vector<int>> wanted;

  bool is_p_place(const std::string& name) const {
    return std::find(p_places.begin(), p_places.end(), name) != p_places.end();
  }
};

SolveContext make_solve_context(const GlobalDatum& d, const ActionPtr& action,
                                const LocalTargets& targets) {
  SolveContext sc;
  sc.d = &d;
  DatumReport report = datum_validate(d, action);
  sc.p_places = report.p_places;
  for (const auto& v : d.places) sc.geometry.emplace(v.name, place_geometry(v));
  if (targets.places.size() != targets.classes.size())
    fail("HypothesesNotMet", "targets must pair one class with each place");
  for (size_t i = 0; i < targets.places.size(); ++i) {
    const auto& v = d.place(targets.places[i]); // throws PlaceUnknown
    auto ra = restrict_action(action, v.gamma_v);
    if (!same_action(*targets.classes[i].ctx, *ra.ctx))
      fail("HypothesesNotMet",
           "target class at place " + v.name + " is not over the restricted action");
    sc.wanted[v.name] = targets.classes[i].rep.values;
  }
  return sc;
}

// Conditions (i)/(ii): prescribed classes on S; off S cyclic everywhere and
// ramified only where totally ramified at a P-place.
bool meets_conditions(const SolveContext& sc, const CohClass1& alpha, std::string* why) {
  for (const auto& v : sc.d->places) {
    CohClass1 res = restrict_class(alpha, v.gamma_v);
    auto it = sc.wanted.find(v.name);
    if (it != sc.wanted.end()) {
      if (res.rep.values != it->second) {
        if (why) *why = "mismatch at place " + v.name;
        return false;
      }
      continue;
    }
    auto f = flags_at_place(alpha, v, sc.geometry.at(v.name));
    if (!f.cyclic) {
      if (why) *why = "not cyclic at place " + v.name;
      return false;
    }
    if (!f.unramified) {
      if (!f.totally_ramified) {
        if (why) *why = "ramified but not totally ramified at place " + v.name;
        return false;
      }
      if (!sc.is_p_place(v.name)) {
        if (why) *why = "ramified at non-P place " + v.name;
        return false;
      }
    }
  }
  return true;
}

bool gamma_stable(const ActionPtr& ctx, const Subgroup& sub) {
  for (int s = 0; s < ctx->gamma->order; ++s)
    for (int x : sub.elements)
      if (!sub.contains(ctx->act(s, x))) return false;
  return true;
}

// Simple Γ-module: abelian of prime exponent with no proper nontrivial
// Γ-stable subgroup.
bool is_simple_module(const ActionPtr& ctx) {
  if (!ctx->target->abelian()) return false;
  if (ctx->target->order == 1) return false;
  if (!is_prime(ctx->target->exponent)) return false;
  for (const auto& sub : all_subgroups(ctx->target)) {
    if (sub.size() == 1 || sub.size() == ctx->target->order) continue;
    if (gamma_stable(ctx, sub)) return false;
  }
  return true;
}

// Least preimage of each quotient element under the projection.
std::vector<int> least_lifts(const QuotientGroup& quot) {
  std::vector<int> lift(quot.group->order, -1);
  for (int g = 0; g < quot.projection.domain->order; ++g)
    if (lift[quot.projection(g)] < 0) lift[quot.projection(g)] = g;
  return lift;
}

// Correct the least-preimage lift of gamma's representative into an actual
// cocycle Γ → G. Caller guarantees the obstruction class vanishes.
std::vector<int> cocycle_lift(const KernelData& kd, const CohClass1& gamma,
                              const Obstruction2& obs) {
  const auto& G = *kd.ctx_g->target;
  const auto& gg = *kd.ctx_g->gamma;
  auto lift = least_lifts(kd.quot);
  const int m = gg.order;
  std::vector<int> b(m);
  for (int s = 0; s < m; ++s) b[s] = lift[gamma.rep.values[s]];
  // raw obstruction cochain w_{σ,τ} = b_σ·σ(b_τ)·b_{στ}⁻¹, valued in A
  std::vector<int> w(m * m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int x = G.mul(G.mul(b[s], kd.ctx_g->act(s, b[t])), G.inv(b[gg.mul(s, t)]));
      w[s * m + t] = kd.a_emb.from_parent[x];
    }
  auto twisted = obs.ctx2->ctx; // the module ₍b₎A used by the obstruction
  auto z = d1_solve(*obs.ctx2, make_cocycle2(twisted, std::move(w)));
  if (!z) fail("Internal", "vanishing obstruction without a coboundary witness");
  // b₀_σ = z_σ⁻¹·b_σ turns w into the coboundary of z and kills it
  std::vector<int> b0(m);
  for (int s = 0; s < m; ++s) b0[s] = G.mul(G.inv(kd.a_emb.to_parent[(*z)[s]]), b[s]);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (b0[gg.mul(s, t)] != G.mul(b0[s], kd.ctx_g->act(s, b0[t])))
        fail("Internal", "lift correction failed the cocycle law");
  return b0;
}

// All classes of H¹(Γ,G) satisfying the local conditions, by recursion
// through an abelian layer. Complete: every solution over G pushes to a
// solution over G/A, and every solution over a lifted quotient class is
// reached through the twisted abelian enumeration.
std::vector<CohClass1> solve_candidates(const SolveContext& sc, const ActionPtr& action,
                                        const LocalTargets& targets, const Budget& budget,
                                        std::vector<std::string>& trace, int depth) {
  budget.check_gamma(action->gamma->order);
  budget.check_target(action->target->order);
  std::string pad(2 * depth, ' ');
  std::vector<CohClass1> out;

  if (action->target->order == 1 || is_simple_module(action)) {
    trace.push_back(pad + "base level: exhaustive scan over |G|=" +
                    std::to_string(action->target->order));
    for (const auto& alpha : h1_enumerate(action, budget))
      if (meets_conditions(sc, alpha, nullptr)) out.push_back(alpha);
    trace.push_back(pad + "base level: " + std::to_string(out.size()) + " admissible");
    return out;
  }

  // choose the abelian layer A: ℓ-primary part of the last nontrivial
  // derived term, for the least prime ℓ dividing its order
  auto series = derived_series(action->target);
  Subgroup d_last = series.front();
  for (const auto& term : series)
    if (term.size() > 1) d_last = term;
  int ell = prime_factors(d_last.size()).front();
  auto d_emb = subgroup_as_group(d_last);
  Subgroup tors = ell_torsion(d_emb.group, ell);
  std::vector<int> a_elems;
  for (int x : tors.elements) a_elems.push_back(d_emb.to_parent[x]);
  Subgroup a = make_subgroup(action->target, a_elems);
  if (a.size() == action->target->order) {
    // abelian non-simple G: fall back to the least proper Γ-stable subgroup
    for (const auto& sub : all_subgroups(action->target)) {
      if (sub.size() == 1 || sub.size() == action->target->order) continue;
      if (gamma_stable(action, sub)) {
        a = sub;
        break;
      }
    }
  }
  trace.push_back(pad + "layer: |A|=" + std::to_string(a.size()) + " (ell=" +
                  std::to_string(ell) + "), quotient order " +
                  std::to_string(action->target->order / a.size()));
  KernelData kd = kernel_data(action, a, /*require_characteristic=*/false);

  // push the prescribed targets to the quotient
  GroupHom proj = kd.quot.projection;
  LocalTargets pushed;
  for (size_t i = 0; i < targets.places.size(); ++i) {
    const auto& v = sc.d->place(targets.places[i]);
    auto rah = restrict_action(kd.ctx_h, v.gamma_v);
    pushed.places.push_back(targets.places[i]);
    pushed.classes.push_back(pushforward_class(targets.classes[i], rah.ctx, proj));
  }
  SolveContext sch = sc;
  sch.wanted.clear();
  for (size_t i = 0; i < pushed.places.size(); ++i)
    sch.wanted[pushed.places[i]] = pushed.classes[i].rep.values;

  auto quotient_classes = solve_candidates(sch, kd.ctx_h, pushed, budget, trace, depth + 1);

  for (const auto& gamma : quotient_classes) {
    Obstruction2 obs = springer_obstruction(kd, gamma);
    if (!h2_is_zero(*obs.ctx2, obs.cls)) {
      trace.push_back(pad + "quotient class " + vec_str(gamma.rep.values) +
                      ": lifting obstruction nonzero");
      continue;
    }
    auto b0 = cocycle_lift(kd, gamma, obs);
    // every lift of gamma is ι(c′)·b₀ for a cocycle c′ in the twisted module
    auto twisted = obs.ctx2->ctx;
    int kept = 0;
    for (const auto& corr : h1_enumerate(twisted, budget)) {
      std::vector<int> values(action->gamma->order);
      for (int s = 0; s < action->gamma->order; ++s)
        values[s] = action->target->mul(kd.a_emb.to_parent[corr.rep.values[s]], b0[s]);
      CohClass1 alpha = class_of(make_cocycle1(action, std::move(values)));
      if (meets_conditions(sc, alpha, nullptr)) {
        out.push_back(alpha);
        ++kept;
      }
    }
    trace.push_back(pad + "quotient class " + vec_str(gamma.rep.values) + ": " +
                    std::to_string(kept) + " admissible lifts");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_same_gamma(const GlobalDatum& d, const ActionPtr& action) {
  if (action->gamma->table != d.gamma->table)
    fail("ContextMismatch", "action is not over the datum's group");
}

} // namespace

std::string to_string(PlaceKind k) {
  switch (k) {
    case PlaceKind::Finite: return "finite";
    case PlaceKind::Archimedean: return "archimedean";
    case PlaceKind::DividesN: return "divides_n";
  }
  return "finite";
}

PlaceSpec make_place(std::string name, PlaceKind kind, Subgroup gamma_v,
                     Subgroup inertia, int frobenius, int tau, int q_mod_n) {
  if (name.empty()) fail("PlaceInvalid", "place needs a name");
  if (inertia.parent->table != gamma_v.parent->table)
    fail("PlaceInvalid", name + ": inertia lives in a different group");
  const auto& g = *gamma_v.parent;
  for (int x : inertia.elements)
    if (!gamma_v.contains(x))
      fail("PlaceInvalid", name + ": inertia is not contained in the decomposition group");
  for (int s : gamma_v.elements)
    for (int x : inertia.elements)
      if (!inertia.contains(g.mul(g.mul(s, x), g.inv(s))))
        fail("PlaceInvalid", name + ": inertia is not normal in the decomposition group");
  if (frobenius < 0 || frobenius >= g.order || !gamma_v.contains(frobenius))
    fail("PlaceInvalid", name + ": frobenius lies outside the decomposition group");
  if (tau < 0 || tau >= g.order || !inertia.contains(tau))
    fail("PlaceInvalid", name + ": tau lies outside inertia");
  // Γ_v/I_v must be cyclic, generated by the class of frobenius
  int index = gamma_v.size() / inertia.size();
  int k = 1, f = frobenius;
  while (!inertia.contains(f)) {
    f = g.mul(f, frobenius);
    ++k;
  }
  if (k != index)
    fail("PlaceInvalid", name + ": frobenius does not generate the unramified quotient");
  std::vector<int> gens = inertia.elements;
  gens.push_back(frobenius);
  if (subgroup_generated(gamma_v.parent, gens).elements != gamma_v.elements)
    fail("PlaceInvalid", name + ": inertia and frobenius do not generate");
  if (is_cyclic_subgroup(inertia) && inertia.size() > 1) {
    bool generates = false;
    if (g.order_of(tau) == inertia.size()) generates = true;
    if (!generates) fail("PlaceInvalid", name + ": tau does not generate cyclic inertia");
    // tame relation: frobenius·tau·frobenius⁻¹ = tau^q when q is determined
    // modulo the order of tau
    int conj = g.mul(g.mul(frobenius, tau), g.inv(frobenius));
    if (q_mod_n > 0 && conj != g.pow(tau, q_mod_n % g.order_of(tau)))
      fail("PlaceInvalid", name + ": frobenius conjugation on tau disagrees with q");
  }
  if (inertia.size() == 1 && tau != 0)
    fail("PlaceInvalid", name + ": trivial inertia requires tau = identity");
  if (kind == PlaceKind::Archimedean) {
    if (gamma_v.size() > 2)
      fail("PlaceInvalid", name + ": archimedean decomposition group has order > 2");
    if (!(inertia == gamma_v))
      fail("PlaceInvalid", name + ": archimedean place requires full inertia");
  }
  if (q_mod_n < 0) fail("PlaceInvalid", name + ": q must be nonnegative");
  PlaceSpec v;
  v.name = std::move(name);
  v.kind = kind;
  v.gamma_v = std::move(gamma_v);
  v.inertia = std::move(inertia);
  v.frobenius = frobenius;
  v.tau = tau;
  v.q_mod_n = q_mod_n;
  return v;
}

const PlaceSpec& GlobalDatum::place(const std::string& name) const {
  for (const auto& v : places)
    if (v.name == name) return v;
  fail("PlaceUnknown", "no place named " + name);
}

GlobalDatum make_global_datum(GroupPtr gamma, int n, std::vector<int> chi,
                              Subgroup n_prime, Subgroup n_l,
                              std::vector<PlaceSpec> places) {
  if (!gamma) fail("DatumInvalid", "missing group");
  if (n < 1) fail("DatumInvalid", "n must be positive");
  if (static_cast<int>(chi.size()) != gamma->order)
    fail("DatumInvalid", "chi must assign a unit to every group element");
  for (int& v : chi) {
    v = ((v % n) + n) % n;
    if (std::gcd(v == 0 ? n : v, n) != 1)
      fail("DatumInvalid", "chi value " + std::to_string(v) + " is not a unit mod " +
                               std::to_string(n));
  }
  if (chi[0] != 1 % n) fail("DatumInvalid", "chi must send the identity to 1");
  for (int s = 0; s < gamma->order; ++s)
    for (int t = 0; t < gamma->order; ++t)
      if (chi[gamma->mul(s, t)] != (chi[s] * chi[t]) % n)
        fail("DatumInvalid", "chi is not a homomorphism at (" + std::to_string(s) + "," +
                                 std::to_string(t) + ")");
  if (n_prime.parent->table != gamma->table || n_l.parent->table != gamma->table)
    fail("DatumInvalid", "splitting subgroups live in a different group");
  if (!is_normal(n_prime)) fail("DatumInvalid", "the fixer of K' must be normal");
  if (!is_normal(n_l)) fail("DatumInvalid", "the fixer of L must be normal");
  for (int x : n_l.elements) {
    if (!n_prime.contains(x))
      fail("DatumInvalid", "the fixer of L must be contained in the fixer of K'");
    if (chi[x] != 1 % n)
      fail("DatumInvalid", "chi must be trivial on the fixer of L");
  }
  std::set<std::string> names;
  for (auto& v : places) {
    if (v.gamma_v.parent->table != gamma->table)
      fail("DatumInvalid", "place " + v.name + " lives in a different group");
    if (!names.insert(v.name).second)
      fail("DatumInvalid", "duplicate place name " + v.name);
    // revalidate the structural invariants
    v = make_place(v.name, v.kind, v.gamma_v, v.inertia, v.frobenius, v.tau, v.q_mod_n);
  }
  GlobalDatum d;
  d.gamma = std::move(gamma);
  d.n = n;
  d.chi = std::move(chi);
  d.n_prime = std::move(n_prime);
  d.n_l = std::move(n_l);
  d.places = std::move(places);
  return d;
}

DatumReport datum_validate(const GlobalDatum& d, const ActionPtr& action) {
  require_same_gamma(d, action);
  DatumReport r;
  for (int s : d.n_prime.elements)
    if (action->action[s] != 0) r.splits_g = false;
  for (int ell : prime_factors(d.n)) {
    bool nontrivial = false;
    for (int s : d.n_prime.elements)
      if (d.chi[s] % ell != 1 % ell) nontrivial = true;
    if (!nontrivial) r.bad_primes.push_back(ell);
  }
  for (const auto& v : d.places) {
    if (v.kind != PlaceKind::Archimedean && d.chi[v.frobenius] != v.q_mod_n % d.n)
      r.frobenius_mismatch.push_back(v.name);
    bool in_nl = true;
    for (int x : v.gamma_v.elements)
      if (!d.n_l.contains(x)) in_nl = false;
    if (v.kind == PlaceKind::Finite && in_nl && v.q_mod_n % d.n == 1 % d.n)
      r.p_places.push_back(v.name);
  }
  r.chebotarev_complete = true;
  for (const auto& sub : all_subgroups(d.gamma)) {
    if (!is_cyclic_subgroup(sub)) continue;
    bool found = false;
    for (const auto& v : d.places)
      if (v.inertia.size() == 1 && v.gamma_v.elements == sub.elements) found = true;
    if (!found) {
      r.chebotarev_complete = false;
      break;
    }
  }
  return r;
}

LocalizeResult localize(const GlobalDatum& d, const CohClass1& c, const std::string& v_name) {
  const PlaceSpec& v = d.place(v_name);
  require_same_gamma(d, c.ctx);
  LocalizeResult out{restrict_action(c.ctx, v.gamma_v), restrict_class(c, v.gamma_v),
                     false, false, false, false};
  auto flags = flags_at_place(c, v, place_geometry(v));
  out.unramified_at_v = flags.unramified;
  out.ramified_at_v = !flags.unramified;
  out.cyclic_at_v = flags.cyclic;
  out.totally_ramified_at_v = flags.totally_ramified;
  return out;
}

std::vector<CohClass1> sha1(const GlobalDatum& d, ActionPtr action, const Budget& budget) {
  require_same_gamma(d, action);
  if (!action->target->abelian()) fail("NotAbelian", "Sha is defined for abelian coefficients");
  std::vector<CohClass1> out;
  for (const auto& c : h1_enumerate(action, budget)) {
    bool everywhere_trivial = true;
    for (const auto& v : d.places)
      if (!restrict_class(c, v.gamma_v).trivial()) {
        everywhere_trivial = false;
        break;
      }
    if (everywhere_trivial) out.push_back(c);
  }
  return out;
}

std::vector<Cocycle2> sha2(const GlobalDatum& d, ActionPtr action, const Budget& budget) {
  require_same_gamma(d, action);
  if (!action->target->abelian()) fail("NotAbelian", "Sha is defined for abelian coefficients");
  auto ctx2 = h2_context(action);
  std::vector<Cocycle2> out;
  for (const auto& x : h2_abelian_enumerate(action, budget)) {
    bool everywhere_trivial = true;
    for (const auto& v : d.places) {
      auto res = h2_restrict(*ctx2, x, v.gamma_v);
      if (!h2_is_zero(*res.ctx2, res.cls)) {
        everywhere_trivial = false;
        break;
      }
    }
    if (everywhere_trivial) out.push_back(x);
  }
  return out;
}

InjectivityResult injectivity_on_P(const GlobalDatum& d, const DualModuleSpec& spec,
                                   const Budget& budget) {
  require_same_gamma(d, spec.base);
  DatumReport report = datum_validate(d, spec.base);
  if (!report.ok())
    fail("HypothesesNotMet", "datum fails validation against the base module");
  InjectivityResult out;
  for (const auto& c : dual_h1(spec, budget)) {
    if (c.trivial()) continue;
    bool dies_everywhere = true;
    for (const auto& name : report.p_places)
      if (!restrict_class(c, d.place(name).gamma_v).trivial()) {
        dies_everywhere = false;
        break;
      }
    if (dies_everywhere) {
      out.injective = false;
      out.counterexample = c;
      return out;
    }
  }
  return out;
}

SolveResult simple_module_solve(const GlobalDatum& d, ActionPtr action,
                                const LocalTargets& targets, const Budget& budget) {
  require_same_gamma(d, action);
  if (!is_simple_module(action) && action->target->order != 1)
    fail("NotSimple", "coefficients are not a simple module");
  DatumReport report = datum_validate(d, action);
  if (!report.ok()) fail("HypothesesNotMet", "datum fails validation for this action");
  SolveResult out;
  SolveContext sc = make_solve_context(d, action, targets);
  for (const auto& alpha : h1_enumerate(action, budget)) {
    std::string why;
    if (meets_conditions(sc, alpha, &why)) {
      out.status = SolveResult::Status::Solved;
      out.cls = alpha;
      out.trace.push_back("solved with class " + vec_str(alpha.rep.values));
      return out;
    }
    out.trace.push_back("class " + vec_str(alpha.rep.values) + ": " + why);
  }
  out.status = SolveResult::Status::Infeasible;
  return out;
}

SolveResult devissage_solve(const GlobalDatum& d, ActionPtr action,
                            const LocalTargets& targets, const Budget& budget) {
  require_same_gamma(d, action);
  if (!is_solvable(action->target)) fail("NotSolvable", "coefficient group is not solvable");
  if (action->target->exponent > 0 && d.n % action->target->exponent != 0)
    fail("HypothesesNotMet", "coefficient exponent does not divide the datum's n");
  DatumReport report = datum_validate(d, action);
  if (!report.ok()) fail("HypothesesNotMet", "datum fails validation for this action");
  SolveContext sc = make_solve_context(d, action, targets);
  SolveResult out;
  auto candidates = solve_candidates(sc, action, targets, budget, out.trace, 0);
  if (candidates.empty()) {
    out.status = SolveResult::Status::Infeasible;
    out.trace.push_back("no admissible class");
    return out;
  }
  const CohClass1& alpha = candidates.front();
  // post-verify against the independent place-by-place predicates
  for (const auto& v : d.places) {
    auto lr = localize(d, alpha, v.name);
    auto it = sc.wanted.find(v.name);
    if (it != sc.wanted.end()) {
      if (lr.cls.rep.values != it->second)
        fail("Internal", "solver result fails re-localization at " + v.name);
    } else if (!lr.cyclic_at_v ||
               (lr.ramified_at_v && !(lr.totally_ramified_at_v && sc.is_p_place(v.name)))) {
      fail("Internal", "solver result fails the off-S conditions at " + v.name);
    }
  }
  // record the splitting-field control data for the found class
  bool alpha_hom_on_nprime = true;
  const auto& G = *action->target;
  for (int s : d.n_prime.elements)
    for (int t : d.n_prime.elements)
      if (alpha.rep.values[d.gamma->mul(s, t)] !=
          G.mul(alpha.rep.values[s], alpha.rep.values[t]))
        alpha_hom_on_nprime = false;
  if (alpha_hom_on_nprime) {
    auto control = control_splitting(d, alpha, prime_factors(d.n));
    for (const auto& [ell, ok] : control.prime_ok)
      out.trace.push_back("control: chi mod " + std::to_string(ell) +
                          (ok ? " nontrivial" : " trivial") + " on the core");
  }
  out.status = SolveResult::Status::Solved;
  out.cls = alpha;
  out.trace.push_back("solved with class " + vec_str(alpha.rep.values));
  return out;
}

ControlReport control_splitting(const GlobalDatum& d, const CohClass1& alpha,
                                const std::vector<int>& avoid_primes) {
  require_same_gamma(d, alpha.ctx);
  const auto& G = *alpha.ctx->target;
  const auto& rep = alpha.rep.values;
  for (int s : d.n_prime.elements)
    for (int t : d.n_prime.elements)
      if (rep[d.gamma->mul(s, t)] != G.mul(rep[s], rep[t]))
        fail("NotHomOnSplittingGroup",
             "class is not a homomorphism on the splitting-field fixer");
  std::vector<int> ker;
  for (int s : d.n_prime.elements)
    if (rep[s] == 0) ker.push_back(s);
  ControlReport out;
  out.delta_prime = make_subgroup(d.gamma, ker);
  out.delta_second = normal_core(d.gamma, out.delta_prime);
  for (int ell : avoid_primes) {
    if (!is_prime(ell) || d.n % ell != 0)
      fail("InvalidPrime", std::to_string(ell) + " is not a prime dividing n");
    bool ok = false;
    for (int s : out.delta_second.elements)
      if (d.chi[s] % ell != 1 % ell) ok = true;
    out.prime_ok.emplace_back(ell, ok);
  }
  return out;
}

WeakApproxResult weak_approx_check(const GlobalDatum& d, ActionPtr action,
                                   const std::vector<std::string>& s_places,
                                   const Budget& budget) {
  require_same_gamma(d, action);
  std::vector<Subgroup> subs;
  std::vector<std::vector<std::vector<int>>> local_reps; // per place, per class
  for (const auto& name : s_places) {
    const auto& v = d.place(name);
    subs.push_back(v.gamma_v);
    auto ra = restrict_action(action, v.gamma_v);
    std::vector<std::vector<int>> reps;
    for (const auto& c : h1_enumerate(ra.ctx, budget)) reps.push_back(c.rep.values);
    local_reps.push_back(std::move(reps));
  }
  std::set<std::vector<std::vector<int>>> image;
  for (const auto& c : h1_enumerate(action, budget)) {
    std::vector<std::vector<int>> tuple;
    for (const auto& sub : subs) tuple.push_back(restrict_class(c, sub).rep.values);
    image.insert(std::move(tuple));
  }
  WeakApproxResult out;
  std::vector<size_t> idx(s_places.size(), 0);
  bool more = true;
  while (more) {
    std::vector<std::vector<int>> tuple;
    for (size_t i = 0; i < idx.size(); ++i) tuple.push_back(local_reps[i][idx[i]]);
    if (!image.count(tuple)) {
      out.surjective = false;
      out.missing = tuple;
      return out;
    }
    more = false;
    for (size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < local_reps[i].size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
    if (idx.empty()) break;
  }
  return out;
}

namespace {

// All homomorphisms Γ → Aut(G) that project to kappa in Out(G), searched over
// generator images, in lexicographic order of the full image array.
std::vector<std::vector<int>> kappa_lifts(const Lien& lien) {
  const auto& g = *lien.gamma;
  const auto& aut = *lien.aut;
  std::vector<std::vector<int>> out;
  auto gens = small_generating_set(lien.gamma);
  if (gens.empty()) {
    out.push_back(std::vector<int>(1, 0));
    return out;
  }
  // choices per generator: automorphisms in the right Out-coset
  std::vector<std::vector<int>> choices(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int a = 0; a < aut.aut->order; ++a)
      if (aut.out_projection(a) == lien.kappa[gens[i]]) choices[i].push_back(a);
  // breadth-first word tree over the generators
  std::vector<std::pair<int, int>> tree(g.order, {-1, -1}); // element -> (parent, gen idx)
  std::vector<int> order_of_visit{0};
  tree[0] = {0, -1};
  std::vector<char> seen(g.order, 0);
  seen[0] = 1;
  for (size_t head = 0; head < order_of_visit.size(); ++head)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int next = g.mul(order_of_visit[head], gens[gi]);
      if (!seen[next]) {
        seen[next] = 1;
        tree[next] = {order_of_visit[head], static_cast<int>(gi)};
        order_of_visit.push_back(next);
      }
    }
  std::vector<size_t> pick(gens.size(), 0);
  bool more = true;
  while (more) {
    std::vector<int> f(g.order, 0);
    for (int e : order_of_visit) {
      if (e == 0) continue;
      auto [parent, gi] = tree[e];
      f[e] = aut.compose_idx(f[parent], choices[gi][pick[gi]]);
    }
    bool good = true;
    for (int s = 0; s < g.order && good; ++s) {
      if (aut.out_projection(f[s]) != lien.kappa[s]) good = false;
      for (int t = 0; t < g.order && good; ++t)
        if (f[g.mul(s, t)] != aut.compose_idx(f[s], f[t])) good = false;
    }
    if (good) out.push_back(std::move(f));
    more = false;
    for (size_t i = pick.size(); i-- > 0;) {
      if (++pick[i] < choices[i].size()) {
        more = true;
        break;
      }
      pick[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Least g with inn(g) = a; -1 when a is not inner.
int least_inner_witness(const AutGroupData& aut, int a) {
  for (int g = 0; g < aut.base->order; ++g)
    if (aut.inner_of[g] == a) return g;
  return -1;
}

} // namespace

HasseResult hasse_solve(const GlobalDatum& d, LienPtr lien, const ExtensionCocycle& eta,
                        const Budget& budget) {
  if (!lien) fail("HypothesesNotMet", "missing lien");
  if (d.gamma->table != lien->gamma->table)
    fail("HypothesesNotMet", "lien is not over the datum's group");
  if (!same_lien(*eta.lien, *lien)) fail("LienMismatch", "class is over a different lien");
  budget.check_gamma(d.gamma->order);
  budget.check_target(lien->g->order);
  // n_prime must model the fixed field of ker κ
  std::vector<int> ker_kappa;
  for (int s = 0; s < d.gamma->order; ++s)
    if (lien->kappa[s] == 0) ker_kappa.push_back(s);
  if (ker_kappa != d.n_prime.elements)
    fail("HypothesesNotMet", "the fixer of K' must be the kernel of the outer action");
  DatumReport report = datum_validate(d, lien->center_ctx);
  if (!report.ok())
    fail("HypothesesNotMet", "datum fails validation on the center module");

  HasseResult out;
  // local neutrality witnesses at every place
  std::vector<RestrictedExtension> local_ext;
  std::vector<NeutralWitness> local_wit;
  for (const auto& v : d.places) {
    auto re = restrict_extension(eta, v.gamma_v);
    auto w = is_neutral(re.ext, budget);
    if (!w)
      fail("HypothesesNotMet", "class is not neutral at place " + v.name);
    local_ext.push_back(std::move(re));
    local_wit.push_back(std::move(*w));
  }
  out.trace.push_back("locally neutral at all " + std::to_string(d.places.size()) +
                      " places");

  LienH2 lh = lien_h2(lien);
  ExtensionCocycle eta_canonical = canonical_extension_form(lh, eta);
  const auto& aut = *lien->aut;
  const auto& G = *lien->g;

  auto try_alpha = [&](const std::vector<int>& f0, const KernelData& kd,
                       const Cocycle2& xi, const CohClass1& alpha)
      -> std::optional<NeutralityCertificate> {
    // least lifts h of alpha's representative, then a central correction z
    // with d(h·z⁻¹) equal to the inverse of xi's representative
    auto lift = least_lifts(kd.quot);
    const int m = d.gamma->order;
    std::vector<int> h(m);
    for (int s = 0; s < m; ++s) h[s] = lift[alpha.rep.values[s]];
    std::vector<int> w(m * m);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        int x = G.mul(G.mul(h[s], kd.ctx_g->act(s, h[t])), G.inv(h[d.gamma->mul(s, t)]));
        int zi = lien->z_emb.from_parent[x];
        if (zi < 0) return std::nullopt;
        w[s * m + t] = zi;
      }
    Cocycle2 target = h2_add(make_cocycle2(lien->center_ctx, std::move(w)),
                             Cocycle2{lien->center_ctx, xi.values});
    auto z = d1_solve(*lh.zctx, target);
    if (!z) return std::nullopt;
    std::vector<int> splitting(m);
    for (int s = 0; s < m; ++s) {
      int hprime = G.mul(h[s], G.inv(lien->z_emb.to_parent[(*z)[s]]));
      splitting[s] = aut.compose_idx(aut.inner_of[hprime], f0[s]);
    }
    try {
      ExtensionCocycle cand = neutral_extension(lien, splitting);
      if (canonical_extension_form(lh, cand).gvals == eta_canonical.gvals)
        return NeutralityCertificate{f0, alpha, splitting};
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  for (const auto& f0 : kappa_lifts(*lien)) {
    ExtensionCocycle eta0 = neutral_extension(lien, f0);
    Cocycle2 xi = difference_class(lh, eta0, eta);
    out.trace.push_back("lift " + vec_str(f0) + ": difference class " + vec_str(xi.values));
    auto ctx_g0 = make_action_idx(lien->gamma, lien->g, lien->aut, f0);
    KernelData kd = kernel_data(ctx_g0, lien->z);
    if (!same_action(*kd.ctx_a, *lien->center_ctx)) {
      out.trace.push_back("lift " + vec_str(f0) + ": center module mismatch, skipped");
      continue;
    }

    std::vector<CohClass1> tried;
    // preferred path: the solver on G₀/Z with targets from the local witnesses
    if (is_solvable(kd.quot.group)) {
      try {
        LocalTargets psi;
        bool targets_ok = true;
        for (size_t pi = 0; pi < d.places.size() && targets_ok; ++pi) {
          const auto& v = d.places[pi];
          auto rah = restrict_action(kd.ctx_h, v.gamma_v);
          std::vector<int> values(rah.gamma.group->order);
          for (int i = 0; i < rah.gamma.group->order; ++i) {
            int parent = rah.gamma.to_parent[i];
            int comp = aut.compose_idx(local_wit[pi].phi_hom[i],
                                       aut.aut->inv(f0[parent]));
            int g0 = least_inner_witness(aut, comp);
            if (g0 < 0) {
              targets_ok = false;
              break;
            }
            values[i] = kd.quot.projection(g0);
          }
          if (!targets_ok) break;
          psi.places.push_back(v.name);
          psi.classes.push_back(class_of(make_cocycle1(rah.ctx, std::move(values))));
        }
        if (targets_ok && datum_validate(d, kd.ctx_h).ok()) {
          auto solved = devissage_solve(d, kd.ctx_h, psi, budget);
          if (solved.status == SolveResult::Status::Solved) {
            if (auto cert = try_alpha(f0, kd, xi, *solved.cls)) {
              out.status = HasseResult::Status::Certificate;
              out.cert = std::move(*cert);
              out.trace.push_back("certificate from the quotient solver");
              return out;
            }
            tried.push_back(*solved.cls);
          }
        }
      } catch (const Error& e) {
        out.trace.push_back(std::string("quotient solver unavailable: ") + e.what());
      }
    }
    // complete fallback: scan H¹(Γ, G₀/Z) directly
    for (const auto& alpha : h1_enumerate(kd.ctx_h, budget)) {
      if (std::find(tried.begin(), tried.end(), alpha) != tried.end()) continue;
      if (auto cert = try_alpha(f0, kd, xi, alpha)) {
        out.status = HasseResult::Status::Certificate;
        out.cert = std::move(*cert);
        out.trace.push_back("certificate from the exhaustive scan");
        return out;
      }
    }
    out.trace.push_back("lift " + vec_str(f0) + ": no class cancels the difference");
  }
  out.status = HasseResult::Status::Obstruction;
  out.trace.push_back("all lifts exhausted");
  return out;
}

} // namespace cohomolib
