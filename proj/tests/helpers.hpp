#ifndef COHOMOLIB_TEST_HELPERS_HPP
#define COHOMOLIB_TEST_HELPERS_HPP

#include "cohomolib/global.hpp"

namespace cohomolib::testing {

// --- group builders -------------------------------------------------------

GroupPtr cyclic_group(int n);
// Direct product; element (i, j) has index i*|b| + j.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);
GroupPtr symmetric3();
GroupPtr dihedral8();    // symmetries of the square
GroupPtr quaternion8();
GroupPtr heisenberg27(); // upper unitriangular 3x3 over F3, (a,b,c) -> a*9+b*3+c
GroupPtr alternating4();

// --- action builders ------------------------------------------------------

// Γ cyclic generated by element 1, acting through powers of one permutation.
ActionPtr cyclic_action(const GroupPtr& gamma, const GroupPtr& target,
                        const std::vector<int>& gen_perm);
// Γ = A×B (indexed as in product_group) acting through u^i ∘ v^j.
ActionPtr product_action(const GroupPtr& gamma, int b_order, const GroupPtr& target,
                         const std::vector<int>& u, const std::vector<int>& v);
std::vector<int> identity_perm(int n);
std::vector<int> perm_power(const std::vector<int>& p, int k);
std::vector<int> inversion_perm(const GroupPtr& g);

// --- independent oracles --------------------------------------------------

// H¹ for cyclic Γ by the closed form: a generator value g determines
// a_{s^k} = g·s(g)·…·s^{k-1}(g); valid iff the value at s^m is the identity.
std::vector<CohClass1> h1_oracle_cyclic(const ActionPtr& ctx);
// H¹ by scanning every map Γ→G (use only when |G|^(|Γ|-1) is tiny).
std::vector<CohClass1> h1_oracle_scan(const ActionPtr& ctx);
// Number of H² classes by scanning every normalized 2-cochain and every
// 1-cochain coboundary (tiny instances only).
long long h2_oracle_count(const ActionPtr& ctx);

// All abelian groups of order <= max_order, deterministic order.
std::vector<GroupPtr> abelian_groups_upto(int max_order);

// --- curated global data ----------------------------------------------------

// Finite place with trivial inertia: Γ_v = ⟨gen⟩, Frobenius = gen.
PlaceSpec unramified_place(const GroupPtr& gamma, const std::string& name, int gen,
                           int q_mod_n);

// Γ = C2×C2×C3 over constant Z/3 coefficients: χ through the second C2,
// one unramified place per cyclic subgroup (Chebotarev-complete),
// n′ = ⟨b, c⟩, n_L = the C3 factor. Passes every hypothesis.
struct DatumBundle {
  GlobalDatum d;
  ActionPtr action;
};
DatumBundle datum_c2c2c3();

// Reference solver: scan H¹ in canonical order and return the first class
// matching the prescriptions on S and the cyclic/ramification conditions
// elsewhere, using only localize() for the per-place predicates.
std::optional<CohClass1> solve_oracle(const GlobalDatum& d, const ActionPtr& action,
                                      const LocalTargets& targets);

} // namespace cohomolib::testing

#endif
