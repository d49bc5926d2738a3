#ifndef COHOMOLIB_LIEN_HPP
#define COHOMOLIB_LIEN_HPP

#include "cohomolib/h2.hpp"

namespace cohomolib {

// An outer action κ : Γ → Out(G) together with its canonical automorphism
// lift (least index per γ) and the induced Γ-module structure on Z(G).
struct Lien {
  GroupPtr gamma;
  GroupPtr g;
  AutPtr aut;                 // Aut(g)
  std::vector<int> kappa;     // per-γ element of Out(g)
  std::vector<int> lift_phi;  // per-γ aut index, least lifting kappa; id at γ=1
  Subgroup z;                 // center of g
  EmbeddedGroup z_emb;
  ActionPtr center_ctx;       // Γ acting on Z via any lift (inner parts vanish)
};
using LienPtr = std::shared_ptr<const Lien>;
// Validates that kappa is a homomorphism into Out(g). Throws NotHomomorphism.
LienPtr make_lien(GroupPtr gamma, GroupPtr g, const std::vector<int>& kappa,
                  int aut_bound = 128);
bool same_lien(const Lien& a, const Lien& b);

// A pair (φ, g) realizing the lien: π∘φ = κ, φ_σ∘φ_τ = inn(g_{σ,τ})∘φ_{στ},
// g_{σ,τ}·g_{στ,υ} = φ_σ(g_{τ,υ})·g_{σ,τυ}, φ_1 = id, g normalized.
struct ExtensionCocycle {
  LienPtr lien;
  std::vector<int> phi;   // per-γ index into lien->aut
  std::vector<int> gvals; // |Γ|² group elements, row-major

  int gval(int s, int t) const { return gvals[s * lien->gamma->order + t]; }
};
// Throws PairInvalid naming the failing law.
ExtensionCocycle make_extension(LienPtr lien, std::vector<int> phi,
                                std::vector<int> gvals);
// The pair (φ, 1) of a homomorphic lift φ of κ. Throws PairInvalid.
ExtensionCocycle neutral_extension(LienPtr lien, const std::vector<int>& phi_hom);

// Cached data for H² of a lien: the center context and the least inner-lift
// table u_{σ,τ} of φ⁰_σ∘φ⁰_τ∘(φ⁰_{στ})⁻¹.
struct LienH2 {
  LienPtr lien;
  H2Ptr zctx; // over lien->center_ctx
  std::vector<int> u;
};
LienH2 lien_h2(LienPtr lien);

// Canonical representative of the class of e: phi = lift_phi and the central
// deviation from u reduced modulo coboundaries.
ExtensionCocycle canonical_extension_form(const LienH2& lh, const ExtensionCocycle& e);

// All classes, canonical representatives, deterministic order. May be empty:
// not every lien is realized by an extension.
std::vector<ExtensionCocycle> h2_lien_enumerate(LienPtr lien, const Budget& budget = {});

// Splitting data: h trivializes the pair and φ_hom (aut indices) is the
// resulting homomorphism Γ → Aut(G), φhom_σ = inn(h_σ)∘φ_σ.
struct NeutralWitness {
  std::vector<int> h;
  std::vector<int> phi_hom;
};
// Searches h over generator images with full verification.
std::optional<NeutralWitness> is_neutral(const ExtensionCocycle& e,
                                         const Budget& budget = {});

// The principal homogeneous action: (φ, g) ↦ (φ, ξ·g). Throws LienMismatch.
ExtensionCocycle act_by_h2z(const Cocycle2& xi, const ExtensionCocycle& e);

// The unique class ξ in the center module with ξ·e1 ~ e2 (reduced
// representative). Throws LienMismatch / NotComparable.
Cocycle2 difference_class(const LienH2& lh, const ExtensionCocycle& e1,
                          const ExtensionCocycle& e2);

// Neutrality of ξ·e_neutral via the connecting map: true iff the inverse of ξ
// lies in the image of H¹(Γ, G₀/Z) → H²(Γ, Z), where G₀ is the Γ-group cut
// out by a splitting of e_neutral. The orientation matches the equivalence
// convention for pairs; the agreement with is_neutral∘act_by_h2z is enforced
// by tests. Throws NotNeutralBase.
bool neutral_via_delta(const ExtensionCocycle& e_neutral, const Cocycle2& xi,
                       const Budget& budget = {});

// Explicit group on G×Γ with (g1,γ1)·(g2,γ2) = (g1·φ_{γ1}(g2)·g_{γ1,γ2}, γ1γ2).
// Cross-validation oracle; cost grows with (|G||Γ|)³.
struct ExplicitExtension {
  GroupPtr e;
  GroupHom proj;              // E → Γ
  std::vector<int> embed_g;   // G index → E index
};
ExplicitExtension build_extension_group(const ExtensionCocycle& e);

// The pair restricted to a subgroup of Γ, over the restricted lien.
struct RestrictedExtension {
  LienPtr lien;
  EmbeddedGroup gamma;
  ExtensionCocycle ext;
};
RestrictedExtension restrict_extension(const ExtensionCocycle& e, const Subgroup& sub);

} // namespace cohomolib

#endif
