#ifndef COHOMOLIB_LOCAL_HPP
#define COHOMOLIB_LOCAL_HPP

#include "cohomolib/budget.hpp"
#include "cohomolib/group.hpp"

namespace cohomolib {

// Constant coefficients G over the tame quotient ⟨σ,τ | στσ⁻¹ = τ^q⟩. Only
// q mod exponent(G) matters and that reduction is what gets stored.
struct TameLocalDatum {
  GroupPtr g;
  int q_mod = 1;              // q reduced mod exponent(g)
  bool coprime = true;        // gcd(q, |g|) = 1
  bool unit_hypothesis = true; // exponent(g) | q − 1, i.e. q_mod == 1
};
// Throws InvalidDatum for q <= 0.
TameLocalDatum make_local_datum(GroupPtr g, long long q);

// Pair (s,t) with s·t·s⁻¹ = t^q. Classes are pairs modulo simultaneous
// conjugation; the canonical representative is the lexicographically least
// (s,t) in the orbit.
struct LocalClass {
  GroupPtr g;
  int q_mod = 1;
  int s = 0;
  int t = 0;

  bool operator==(const LocalClass& o) const { return s == o.s && t == o.t; }
};
// Validates the relation. Throws RelationViolated.
LocalClass make_local_class(const TameLocalDatum& d, int s, int t);
LocalClass canonical_local_class(const LocalClass& c);

struct LocalFlags {
  bool unramified = false;
  bool ramified = false;
  bool cyclic = false;
  bool totally_ramified = false;
};

// All classes, canonical representatives, sorted by (s,t).
std::vector<LocalClass> local_h1_enumerate(const TameLocalDatum& d,
                                           const Budget& budget = {});

// unramified ⟺ t = 1; cyclic ⟺ ⟨s,t⟩ cyclic; totally_ramified ⟺ s ∈ ⟨t⟩.
LocalFlags classify_local_class(const LocalClass& c);

// Pushforward of a pair along a homomorphism of coefficient groups.
LocalClass pushforward_local(const LocalClass& c, const GroupHom& p);

// Lift a totally ramified cyclic class along a surjection p : G → H, where
// the datum on G has q ≡ 1 mod exponent(G): with m least such that s = t^m
// and g the least-index preimage of t, the lift is (g^m, g). Throws
// NotSurjective, HypothesisViolated, NotTotallyRamifiedCyclic.
LocalClass lift_totally_ramified(const TameLocalDatum& d_g, const GroupHom& p,
                                 const LocalClass& c);

} // namespace cohomolib

#endif
