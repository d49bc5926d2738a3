#ifndef COHOMOLIB_ABELIAN_HPP
#define COHOMOLIB_ABELIAN_HPP

#include "cohomolib/group.hpp"

namespace cohomolib {

// Decomposition of a finite abelian group A as a direct product of cyclic
// groups <b_i> of orders d_i, with d_0 = exponent(A). Elements are exchanged
// with "scaled" coordinate vectors over Z/n, n = exponent(A): the element
// prod b_i^{c_i} has coordinates y_i = (n/d_i) * c_i. In scaled form,
// coordinate-wise addition mod n matches the group law, so all Z/n linear
// algebra applies uniformly.
struct AbelianCoords {
  GroupPtr group;
  int n = 1;                // exponent; modulus of the scaled coordinates
  std::vector<int> basis;   // b_i as elements of the group
  std::vector<int> orders;  // d_i

  int rank() const { return static_cast<int>(basis.size()); }
  const std::vector<int>& coords(int a) const { return coords_of[a]; }
  int element(const std::vector<int>& scaled) const;
  // a + b, a - b directly on group elements
  int add(int a, int b) const { return group->mul(a, b); }
  int neg(int a) const { return group->inv(a); }

  std::vector<std::vector<int>> coords_of; // filled by abelian_coords
};

// Throws NotAbelian.
AbelianCoords abelian_coords(GroupPtr a);

} // namespace cohomolib

#endif
