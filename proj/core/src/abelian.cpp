#include "cohomolib/abelian.hpp"

#include <algorithm>

namespace cohomolib {

namespace {

// Basis elements and orders, by repeatedly splitting off a maximal cyclic
// factor. Returns pairs (element, order) with the first order = exponent.
void decompose(GroupPtr a, std::vector<int>& basis, std::vector<int>& orders) {
  if (a->order == 1) return;
  int b1 = 1, d1 = a->order_of(1);
  for (int x = 2; x < a->order; ++x)
    if (a->order_of(x) > d1) {
      b1 = x;
      d1 = a->order_of(x);
    }
  basis.push_back(b1);
  orders.push_back(d1);
  if (d1 == a->order) return;
  std::vector<int> cyc;
  for (int k = 0, x = 0; k < d1; ++k, x = a->mul(x, b1)) cyc.push_back(x);
  auto q = quotient_group(a, make_subgroup(a, cyc));
  std::vector<int> qbasis, qorders;
  decompose(q.group, qbasis, qorders);
  // discrete log table in <b1>
  std::vector<int> dlog(a->order, -1);
  for (int k = 0, x = 0; k < d1; ++k, x = a->mul(x, b1)) dlog[x] = k;
  for (size_t i = 0; i < qbasis.size(); ++i) {
    int t = qorders[i];
    // any preimage of the quotient basis element
    int x = -1;
    for (int y = 0; y < a->order; ++y)
      if (q.projection(y) == qbasis[i]) {
        x = y;
        break;
      }
    int s = dlog[a->pow(x, t)]; // x^t = b1^s, and t | s
    int b = a->mul(x, a->pow(b1, -static_cast<long long>(s / t)));
    basis.push_back(b);
    orders.push_back(t);
  }
}

} // namespace

int AbelianCoords::element(const std::vector<int>& scaled) const {
  int e = 0;
  for (int i = 0; i < rank(); ++i) {
    int step = n / orders[i];
    int c = (scaled[i] % n + n) % n / step; // scaled entries are multiples of step
    e = group->mul(e, group->pow(basis[i], c));
  }
  return e;
}

AbelianCoords abelian_coords(GroupPtr a) {
  if (!a->abelian()) fail("NotAbelian", "coordinates require an abelian group");
  AbelianCoords out;
  out.group = a;
  out.n = std::max(1, a->exponent);
  decompose(a, out.basis, out.orders);
  out.coords_of.assign(a->order, std::vector<int>(out.rank(), 0));
  // enumerate all coordinate tuples; bijective by construction
  std::vector<int> c(out.rank(), 0);
  std::vector<char> seen(a->order, 0);
  for (;;) {
    int e = 0;
    std::vector<int> scaled(out.rank());
    for (int i = 0; i < out.rank(); ++i) {
      e = a->mul(e, a->pow(out.basis[i], c[i]));
      scaled[i] = (out.n / out.orders[i]) * c[i];
    }
    if (seen[e]) fail("NotAbelian", "internal: basis is not independent");
    seen[e] = 1;
    out.coords_of[e] = std::move(scaled);
    int i = out.rank() - 1;
    while (i >= 0 && c[i] + 1 == out.orders[i]) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  for (char s : seen)
    if (!s) fail("NotAbelian", "internal: basis does not span");
  return out;
}

} // namespace cohomolib
