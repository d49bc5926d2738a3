#ifndef COHOMOLIB_ACTION_HPP
#define COHOMOLIB_ACTION_HPP

#include <optional>

#include "cohomolib/budget.hpp"
#include "cohomolib/group.hpp"

namespace cohomolib {

// An action of gamma on target by automorphisms. Immutable; pass by ActionPtr.
struct GammaAction {
  GroupPtr gamma;
  GroupPtr target;
  AutPtr aut;              // Aut(target)
  std::vector<int> action; // per-γ index into aut

  int act(int s, int x) const { return aut->apply(action[s], x); }
};
using ActionPtr = std::shared_ptr<const GammaAction>;

// Validates: each permutation an automorphism, the map a homomorphism,
// identity acting trivially. Throws NotAutomorphism / NotHomomorphism.
ActionPtr make_action(GroupPtr gamma, GroupPtr target,
                      const std::vector<std::vector<int>>& perms,
                      int aut_bound = 128);
ActionPtr trivial_action(GroupPtr gamma, GroupPtr target, int aut_bound = 128);
// Same validation, but reuses an already-enumerated Aut(target) and takes
// automorphism indices directly.
ActionPtr make_action_idx(GroupPtr gamma, GroupPtr target, AutPtr aut,
                          std::vector<int> action);
// Same groups (by table) and same action arrays.
bool same_action(const GammaAction& a, const GammaAction& b);

// 1-cocycle: a_{στ} = a_σ · σ(a_τ), a_1 = 1.
struct Cocycle1 {
  ActionPtr ctx;
  std::vector<int> values; // indexed by γ
};
// Throws CocycleInvalid naming the offending pair.
Cocycle1 make_cocycle1(ActionPtr ctx, std::vector<int> values);
Cocycle1 trivial_cocycle1(ActionPtr ctx);
// a'_σ = g⁻¹ · a_σ · σ(g)
Cocycle1 translate(const Cocycle1& a, int g);

// Cohomology class with its canonical representative: the lexicographically
// least values array among all translates.
struct CohClass1 {
  ActionPtr ctx;
  Cocycle1 rep;

  bool trivial() const;
  bool operator==(const CohClass1& o) const { return rep.values == o.rep.values; }
  bool operator<(const CohClass1& o) const { return rep.values < o.rep.values; }
};
CohClass1 class_of(const Cocycle1& a);
CohClass1 trivial_class(ActionPtr ctx);

// g with b_σ = g⁻¹·a_σ·σ(g) for all σ, least such; nullopt if none.
// Throws ContextMismatch.
std::optional<int> cohomologous_witness(const Cocycle1& a, const Cocycle1& b);
bool are_cohomologous(const Cocycle1& a, const Cocycle1& b);

// All classes, canonical representatives, lexicographic order.
// The search runs over images of a small generating set of γ and may be
// partitioned across budget.threads; output is merged by sort.
std::vector<CohClass1> h1_enumerate(ActionPtr ctx, const Budget& budget = {});

// Action restricted to a subgroup of gamma, reindexed as a standalone group.
struct RestrictedAction {
  ActionPtr ctx;        // action of the subgroup (as its own group) on target
  EmbeddedGroup gamma;  // index translation to/from the parent gamma
};
RestrictedAction restrict_action(ActionPtr ctx, const Subgroup& sub);
// Throws NotSubgroup when sub is not a subgroup of c's gamma.
CohClass1 restrict_class(const CohClass1& c, const Subgroup& sub);

// Inflation along proj : Γ → Γ/N where c lives over proj's codomain.
// Throws ActionMismatch.
CohClass1 inflate_class(const CohClass1& c, const GroupHom& proj);

// Twisted action σ*x = inn(c_σ)(σ(x)) where value_auts[v] is the index in
// Aut(target) of the automorphism attached to the value v of c. Throws
// CocycleInvalid when the result fails the action laws.
ActionPtr twist_action(ActionPtr ctx, const Cocycle1& c,
                       const std::vector<int>& value_auts);
// c valued in target itself, acting by conjugation: σ*x = c_σ·σ(x)·c_σ⁻¹.
ActionPtr twist_action(ActionPtr ctx, const Cocycle1& c);

// The torsion bijection H¹(Γ, ₍c₎G) ↔ H¹(Γ, G), a′ ↦ (σ ↦ a′_σ·c_σ).
struct TwistBijection {
  ActionPtr base;
  ActionPtr twisted;
  Cocycle1 c;

  CohClass1 to_base(const CohClass1& twisted_cls) const;
  CohClass1 to_twisted(const CohClass1& base_cls) const;
};
TwistBijection twist_bijection(ActionPtr ctx, const Cocycle1& c);

// Pushforward along a Γ-equivariant homomorphism f : target → ctx2.target
// (same gamma). Throws NotEquivariant / ContextMismatch.
CohClass1 pushforward_class(const CohClass1& c, ActionPtr ctx2, const GroupHom& f);

} // namespace cohomolib

#endif
