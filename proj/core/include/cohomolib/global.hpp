#ifndef COHOMOLIB_GLOBAL_HPP
#define COHOMOLIB_GLOBAL_HPP

#include "cohomolib/lien.hpp"
#include "cohomolib/local.hpp"

namespace cohomolib {

enum class PlaceKind { Finite, Archimedean, DividesN };
std::string to_string(PlaceKind k);

// A place of the global datum: a decomposition subgroup of Γ with inertia,
// Frobenius and residue data.
struct PlaceSpec {
  std::string name;
  PlaceKind kind = PlaceKind::Finite;
  Subgroup gamma_v; // ≤ Γ
  Subgroup inertia; // ⊴ Γ_v
  int frobenius = 0; // element of Γ_v generating Γ_v/I_v
  int tau = 0;       // generator of I_v when cyclic, else any element
  int q_mod_n = 1;
};
// Validates the structural invariants. Throws PlaceInvalid.
PlaceSpec make_place(std::string name, PlaceKind kind, Subgroup gamma_v,
                     Subgroup inertia, int frobenius, int tau, int q_mod_n);

// Finite stand-in for the arithmetic of a number field: Γ = Gal(M/K), the
// mod-n cyclotomic character, the fixers of the splitting field K′ and of
// the cyclotomic field L, and a list of places.
struct GlobalDatum {
  GroupPtr gamma;
  int n = 1;
  std::vector<int> chi; // per-γ unit mod n
  Subgroup n_prime;     // fixer of K′, normal
  Subgroup n_l;         // fixer of L, normal, ⊆ n_prime, chi trivial on it
  std::vector<PlaceSpec> places;

  const PlaceSpec& place(const std::string& name) const; // throws PlaceUnknown
};
// Structural validation (normality, inclusions, chi). Throws DatumInvalid.
GlobalDatum make_global_datum(GroupPtr gamma, int n, std::vector<int> chi,
                              Subgroup n_prime, Subgroup n_l,
                              std::vector<PlaceSpec> places);

// Hypothesis report for a datum against an action on G.
struct DatumReport {
  bool splits_g = true;                         // (a) n_prime acts trivially
  std::vector<int> bad_primes;                  // (b) ℓ | n with chi mod ℓ trivial on n_prime
  std::vector<std::string> frobenius_mismatch;  // (c) failing places
  std::vector<std::string> p_places;            // (d)
  bool chebotarev_complete = false; // every cyclic subgroup is some Γ_v with I_v = 1

  bool ok() const { return splits_g && bad_primes.empty() && frobenius_mismatch.empty(); }
};
DatumReport datum_validate(const GlobalDatum& d, const ActionPtr& action);

struct LocalizeResult {
  RestrictedAction ra;
  CohClass1 cls; // over ra.ctx
  bool unramified_at_v = false;
  bool ramified_at_v = false;
  bool cyclic_at_v = false;
  bool totally_ramified_at_v = false;
};
// Throws PlaceUnknown when v_name names no place of d.
LocalizeResult localize(const GlobalDatum& d, const CohClass1& c, const std::string& v_name);

// Kernel of the joint localization over all places, degree 1 and 2.
std::vector<CohClass1> sha1(const GlobalDatum& d, ActionPtr action, const Budget& budget = {});
std::vector<Cocycle2> sha2(const GlobalDatum& d, ActionPtr action, const Budget& budget = {});

struct InjectivityResult {
  bool injective = true;
  std::optional<CohClass1> counterexample; // nonzero, dies at every P-place
};
// Injectivity of H¹(Γ,A*) → ∏_{v ∈ P} H¹(Γ_v,A*). Throws HypothesesNotMet.
InjectivityResult injectivity_on_P(const GlobalDatum& d, const DualModuleSpec& spec,
                                   const Budget& budget = {});

// Prescribed local classes at a subset S of places. classes[i] lives over
// the Γ_{places[i]}-restricted action.
struct LocalTargets {
  std::vector<std::string> places;
  std::vector<CohClass1> classes;
};

struct SolveResult {
  enum class Status { Solved, Infeasible };
  Status status = Status::Infeasible;
  std::optional<CohClass1> cls;
  std::vector<std::string> trace;
};

// Exhaustive search over H¹(Γ,A) for the least class matching the targets on
// S and, off S, cyclic everywhere and ramified only if totally ramified at a
// P-place. Throws NotSimple, HypothesesNotMet.
SolveResult simple_module_solve(const GlobalDatum& d, ActionPtr action,
                                const LocalTargets& targets, const Budget& budget = {});

// Same local problem for solvable G, by recursion through an abelian layer:
// quotient-level solutions are found recursively, their lifting obstruction
// is tested globally, and the abelian correction is enumerated exactly.
// Throws NotSolvable, HypothesesNotMet.
SolveResult devissage_solve(const GlobalDatum& d, ActionPtr action,
                            const LocalTargets& targets, const Budget& budget = {});

struct ControlReport {
  Subgroup delta_prime;  // kernel of α restricted to n_prime
  Subgroup delta_second; // its normal core in Γ
  std::vector<std::pair<int, bool>> prime_ok; // ℓ ↦ chi mod ℓ nontrivial on Δ″
};
// Throws NotHomOnSplittingGroup, InvalidPrime (ℓ ∤ n).
ControlReport control_splitting(const GlobalDatum& d, const CohClass1& alpha,
                                const std::vector<int>& avoid_primes);

struct WeakApproxResult {
  bool surjective = true;
  // least unreachable tuple of per-place canonical representatives, if any
  std::vector<std::vector<int>> missing;
};
WeakApproxResult weak_approx_check(const GlobalDatum& d, ActionPtr action,
                                   const std::vector<std::string>& s_places,
                                   const Budget& budget = {});

struct NeutralityCertificate {
  std::vector<int> f0;        // hom Γ → Aut(G) lifting κ (aut indices)
  CohClass1 alpha;            // class over G₀/Z matching the difference class
  std::vector<int> splitting; // hom Γ → Aut(G); its neutral pair ~ η
};

struct HasseResult {
  enum class Status { Certificate, Obstruction };
  Status status = Status::Obstruction;
  std::optional<NeutralityCertificate> cert;
  std::vector<std::string> trace;
};

// Hasse-principle driver: η must be neutral at every place (witnesses found
// by search); searches lifts f₀ of κ and classes α over G₀/Z whose connecting
// class cancels the difference class of η against the neutral pair of f₀.
// Certificates are verified against η before being returned.
// Throws HypothesesNotMet on datum or local-neutrality failure.
HasseResult hasse_solve(const GlobalDatum& d, LienPtr lien, const ExtensionCocycle& eta,
                        const Budget& budget = {});

} // namespace cohomolib

#endif
