#ifndef COHOMOLIB_ZNMOD_HPP
#define COHOMOLIB_ZNMOD_HPP

#include <optional>
#include <vector>

namespace cohomolib {

// Row matrix over Z/n. Rows span a submodule of (Z/n)^cols.
struct ZnMat {
  int n = 2;   // modulus, >= 1
  int cols = 0;
  std::vector<std::vector<int>> rows; // each of length cols, entries in [0,n)
};

inline int zn_norm(long long v, int n) {
  v %= n;
  if (v < 0) v += n;
  return static_cast<int>(v);
}

// Howell normal form: unique canonical generating set of the row module.
// Pivots divide n, entries above a pivot lie in [0, pivot), and every element
// of the module with zeros left of column j is a combination of the rows
// whose pivots sit at column j or later. Zero rows removed.
ZnMat howell_form(ZnMat m);

// Lexicographically least element of v + rowspan(h). h must be in Howell form.
std::vector<int> coset_reduce(const ZnMat& h, std::vector<int> v);

bool in_span(const ZnMat& h, const std::vector<int>& v);

// Generators of { x in (Z/n)^rows : sum_i x_i * m.rows[i] = 0 }.
ZnMat left_kernel(const ZnMat& m);

// Some x with sum_i x_i * m.rows[i] = b, or nullopt.
std::optional<std::vector<int>> left_solve(const ZnMat& m, const std::vector<int>& b);

} // namespace cohomolib

#endif
