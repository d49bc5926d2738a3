#ifndef COHOMOLIB_GROUP_HPP
#define COHOMOLIB_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

#include "cohomolib/error.hpp"

namespace cohomolib {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its full multiplication table. Element 0 is always
// the identity. Immutable after validation.
struct FiniteGroup {
  int order = 1;
  std::vector<int> table;      // row-major: table[a*order+b] = a*b
  std::vector<int> inverses;
  std::vector<int> elt_orders;
  int exponent = 1;            // lcm of element orders
  std::string name;
  std::vector<std::string> labels; // may be empty

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverses[a]; }
  int pow(int a, long long e) const;
  int order_of(int a) const { return elt_orders[a]; }
  bool abelian() const;
  bool cyclic() const;
  int commutator(int a, int b) const { // [a,b] = a b a^-1 b^-1
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  std::string label_of(int a) const {
    return a < static_cast<int>(labels.size()) ? labels[a] : std::to_string(a);
  }
};

// Validates a raw table as a group with identity 0. Throws NotClosed,
// NoIdentity, NoInverse or NotAssociative, naming the offending indices.
GroupPtr validate_group(const std::vector<std::vector<int>>& raw,
                        std::string name = {},
                        std::vector<std::string> labels = {});

// Sorted element list of a subgroup, closed under the parent's table.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, contains 0
  std::vector<char> mask;     // parent->order bytes

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const { return mask[x] != 0; }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<int> images; // full map, length = domain->order

  int operator()(int x) const { return images[x]; }
};

// Validates the homomorphism laws; throws NotHomomorphism.
GroupHom make_hom(GroupPtr domain, GroupPtr codomain, std::vector<int> images);
GroupHom compose(const GroupHom& second, const GroupHom& first);
bool is_surjective(const GroupHom& h);
Subgroup kernel(const GroupHom& h);

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup make_subgroup(GroupPtr g, std::vector<int> elements); // validates closure
Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& gens);
bool is_normal(const Subgroup& h);
bool is_cyclic_subgroup(const Subgroup& h);
bool is_abelian_subgroup(const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup normal_core(GroupPtr g, const Subgroup& h);
Subgroup center(GroupPtr g);
Subgroup commutator_subgroup(GroupPtr g, const Subgroup& a, const Subgroup& b);
std::vector<Subgroup> derived_series(GroupPtr g);
bool is_solvable(GroupPtr g);
// Subgroup of elements of ell-power order in an abelian group; NotAbelian otherwise.
Subgroup ell_torsion(GroupPtr a, int ell);
// All subgroups, deterministic order (by size, then element list).
std::vector<Subgroup> all_subgroups(GroupPtr g);
// Greedy small generating set; empty for the trivial group.
std::vector<int> small_generating_set(GroupPtr g);

struct QuotientGroup {
  GroupPtr group;
  GroupHom projection; // parent -> group
};
// Cosets ordered by least member index; coset of identity is element 0.
// Throws NotNormal.
QuotientGroup quotient_group(GroupPtr g, const Subgroup& n);

// A subgroup repackaged as a standalone FiniteGroup (elements reindexed in
// sorted parent order, so identity stays at 0).
struct EmbeddedGroup {
  GroupPtr group;
  std::vector<int> to_parent;   // group index -> parent index
  std::vector<int> from_parent; // parent index -> group index or -1
};
EmbeddedGroup subgroup_as_group(const Subgroup& h);

// Aut(G) realized as a finite group of permutations of G. Element 0 is the
// identity automorphism; the rest are sorted lexicographically.
struct AutGroupData {
  GroupPtr base;                       // G
  GroupPtr aut;                        // the automorphism group
  std::vector<std::vector<int>> perms; // perms[i] = i-th automorphism as a permutation
  Subgroup inn;                        // inner automorphisms, subgroup of aut
  GroupPtr out;                        // Aut/Inn
  GroupHom out_projection;             // aut -> out
  std::vector<int> inner_of;           // g -> index in aut of conjugation by g

  int apply(int a, int x) const { return perms[a][x]; }
  int compose_idx(int a, int b) const { return aut->mul(a, b); }
  // Index in aut of a given permutation; -1 if not an automorphism of G.
  int index_of(const std::vector<int>& perm) const;
};
using AutPtr = std::shared_ptr<const AutGroupData>;

// Enumerates Aut(G) by backtracking over images of a small generating set.
// Throws BoundExceeded when |G| > bound.
AutPtr automorphisms(GroupPtr g, int bound = 128);

// Cayley table from permutation generators acting on {0..degree-1}.
// Throws BoundExceeded if the generated group outgrows max_order.
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& gens,
                                 int degree, int max_order,
                                 std::string name = {});

} // namespace cohomolib

#endif
