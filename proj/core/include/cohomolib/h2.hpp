#ifndef COHOMOLIB_H2_HPP
#define COHOMOLIB_H2_HPP

#include "cohomolib/abelian.hpp"
#include "cohomolib/action.hpp"
#include "cohomolib/znmod.hpp"

namespace cohomolib {

// Normalized 2-cocycle with values in an abelian target:
// ξ_{1,τ} = ξ_{σ,1} = 0 and σ·ξ_{τ,υ} − ξ_{στ,υ} + ξ_{σ,τυ} − ξ_{σ,τ} = 0.
// values is |Γ|² row-major (index σ·|Γ|+τ), entries are target elements.
struct Cocycle2 {
  ActionPtr ctx;
  std::vector<int> values;

  int at(int s, int t) const { return values[s * ctx->gamma->order + t]; }
};
// Throws NotAbelian / CocycleInvalid.
Cocycle2 make_cocycle2(ActionPtr ctx, std::vector<int> values);
Cocycle2 trivial_cocycle2(ActionPtr ctx);

// Cached linear data for H²(Γ,A): coordinates of A, the non-identity slot
// list, and a Howell basis of the coboundary module in slot coordinates.
struct H2Context {
  ActionPtr ctx;
  AbelianCoords coords;
  std::vector<std::pair<int, int>> slots; // (σ,τ), σ,τ ≠ 1, row-major order
  ZnMat b2;                               // coboundaries, Howell form

  std::vector<int> to_vec(const Cocycle2& x) const;
  Cocycle2 from_vec(const std::vector<int>& v) const;
};
using H2Ptr = std::shared_ptr<const H2Context>;
H2Ptr h2_context(ActionPtr ctx); // NotAbelian

// Canonical class representative: least slot-coordinate vector in the class.
Cocycle2 h2_reduce(const H2Context& h2, const Cocycle2& x);
bool h2_is_zero(const H2Context& h2, const Cocycle2& x);
bool h2_equal(const H2Context& h2, const Cocycle2& x, const Cocycle2& y);
Cocycle2 h2_add(const Cocycle2& x, const Cocycle2& y);
Cocycle2 h2_sub(const Cocycle2& x, const Cocycle2& y);
Cocycle2 h2_neg(const Cocycle2& x);

// All classes of H²(Γ,A), canonical representatives, sorted by slot vector.
// Cyclic Γ goes through A^Γ/N(A) with the standard representing cocycles;
// other Γ through the kernel of the degree-2 coboundary over Z/n.
std::vector<Cocycle2> h2_abelian_enumerate(ActionPtr ctx, const Budget& budget = {});

// Solve d²ζ = target for a normalized 2-cochain ζ. target maps each triple
// (σ,τ,υ) with σ,τ,υ ≠ 1 (ordered row-major) to a target element; it must
// vanish on identity-containing triples, which normalization forces.
// Returns the |Γ|² values array of ζ, or nullopt when no solution exists.
std::optional<std::vector<int>> d2_solve(const H2Context& h2,
                                         const std::vector<int>& target);

// Express a coboundary: a 1-cochain h (values array over Γ, h_1 = 1) with
// dh_{σ,τ} = σ·h_τ − h_{στ} + h_σ equal to target; nullopt when target is
// not a coboundary.
std::optional<std::vector<int>> d1_solve(const H2Context& h2, const Cocycle2& target);

// Restriction of a class to a subgroup of Γ (canonical rep over the
// restricted context).
struct RestrictedCocycle2 {
  H2Ptr ctx2;
  Cocycle2 cls;
};
RestrictedCocycle2 h2_restrict(const H2Context& h2, const Cocycle2& x, const Subgroup& sub);

// A Γ-stable abelian subgroup A of G with the induced contexts on A and G/A.
struct KernelData {
  ActionPtr ctx_g;
  Subgroup a;
  EmbeddedGroup a_emb;
  QuotientGroup quot; // G/A with projection
  ActionPtr ctx_h;    // induced action on G/A
  ActionPtr ctx_a;    // induced (untwisted) action on A
};
// Throws NotAbelianKernel when A is not abelian. With require_characteristic,
// throws NotCharacteristic when some automorphism of G moves A; otherwise A
// only has to be normal and stable under the given action (NotStable).
KernelData kernel_data(ActionPtr ctx_g, const Subgroup& a,
                       bool require_characteristic = true);

// Lifting obstruction of γ ∈ H¹(Γ, G/A): class of b_σ·σ(b_τ)·b_{στ}⁻¹ in
// H²(Γ, ₍c₎A), where b is the least-preimage lift of the canonical
// representative c of γ. Zero iff γ lifts to H¹(Γ,G).
struct Obstruction2 {
  H2Ptr ctx2; // context over the twisted module ₍c₎A
  Cocycle2 cls;
};
Obstruction2 springer_obstruction(const KernelData& kd, const CohClass1& gamma);

// Connecting map for central Z = Z(G): same construction, untwisted values.
// Throws NotCentral when kd.a is not the center of G.
Obstruction2 delta_central(const KernelData& kd, const CohClass1& psi);

// Dual module A* = Hom(A, Z/n) with (σ·f)(a) = chi(σ)·f(σ⁻¹·a).
struct DualModuleSpec {
  ActionPtr base;       // action on abelian A of exponent n
  std::vector<int> chi; // per-γ unit mod n
};
// The Γ-module A* (its elements indexed by coordinate tuples, zero map at 0).
// Throws ChiNotHom.
ActionPtr dual_module(const DualModuleSpec& spec);
std::vector<CohClass1> dual_h1(const DualModuleSpec& spec, const Budget& budget = {});

} // namespace cohomolib

#endif
