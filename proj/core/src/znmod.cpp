#include "cohomolib/znmod.hpp"

#include <algorithm>
#include <numeric>

namespace cohomolib {

namespace {

long long xgcd(long long a, long long b, long long& s, long long& t) {
  if (b == 0) {
    s = 1;
    t = 0;
    return a;
  }
  long long s1, t1;
  long long g = xgcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

// Unit u mod n with u*a == gcd(a,n) mod n. n is small, brute force.
int normalizing_unit(int a, int n) {
  int g = std::gcd(a, n);
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1 && static_cast<long long>(u) * a % n == g) return u;
  return 1; // n == 1 or a == 0
}

void scale_row(std::vector<int>& r, long long c, int n) {
  for (int& v : r) v = zn_norm(c * v, n);
}

void add_scaled(std::vector<int>& dst, const std::vector<int>& src, long long c, int n) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = zn_norm(dst[i] + c * src[i], n);
}

bool is_zero(const std::vector<int>& r) {
  return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; });
}

} // namespace

ZnMat howell_form(ZnMat m) {
  const int n = m.n;
  auto& rows = m.rows;
  if (n == 1) {
    rows.clear();
    return m;
  }
  for (auto& r : rows)
    for (int& v : r) v = zn_norm(v, n);
  size_t r = 0;
  for (int j = 0; j < m.cols; ++j) {
    size_t piv = rows.size();
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    // fold every later row with a nonzero entry in column j into row r
    for (size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][j] == 0) continue;
      long long a = rows[r][j], b = rows[k][j], s, t;
      long long g = xgcd(a, b, s, t);
      std::vector<int> combined(m.cols);
      for (int c = 0; c < m.cols; ++c)
        combined[c] = zn_norm(s * rows[r][c] + t * rows[k][c], n);
      std::vector<int> cleared(m.cols);
      for (int c = 0; c < m.cols; ++c)
        cleared[c] = zn_norm((b / g) * rows[r][c] - (a / g) * rows[k][c], n);
      rows[r] = std::move(combined);
      rows[k] = std::move(cleared);
    }
    // pivot -> divisor of n via a unit
    scale_row(rows[r], normalizing_unit(rows[r][j], n), n);
    int g = rows[r][j];
    // reduce entries above the pivot into [0, g)
    for (size_t i = 0; i < r; ++i) {
      int q = rows[i][j] / g;
      if (q) add_scaled(rows[i], rows[r], -q, n);
    }
    // annihilator multiple keeps the Howell span property at later columns
    if (n / g > 1) {
      std::vector<int> ann = rows[r];
      scale_row(ann, n / g, n);
      if (!is_zero(ann)) rows.push_back(std::move(ann));
    }
    ++r;
  }
  rows.resize(r);
  return m;
}

std::vector<int> coset_reduce(const ZnMat& h, std::vector<int> v) {
  for (int& x : v) x = zn_norm(x, h.n);
  if (h.n == 1) return v;
  for (const auto& row : h.rows) {
    int j = 0;
    while (j < h.cols && row[j] == 0) ++j;
    if (j == h.cols) continue;
    int q = v[j] / row[j];
    if (q) add_scaled(v, row, -q, h.n);
  }
  return v;
}

bool in_span(const ZnMat& h, const std::vector<int>& v) {
  return is_zero(coset_reduce(h, v));
}

ZnMat left_kernel(const ZnMat& m) {
  const int k = static_cast<int>(m.rows.size());
  ZnMat aug{m.n, m.cols + k, {}};
  aug.rows.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> row(m.cols + k, 0);
    std::copy(m.rows[i].begin(), m.rows[i].end(), row.begin());
    row[m.cols + i] = zn_norm(1, m.n);
    aug.rows.push_back(std::move(row));
  }
  ZnMat h = howell_form(std::move(aug));
  ZnMat ker{m.n, k, {}};
  for (const auto& row : h.rows) {
    bool left_zero = true;
    for (int j = 0; j < m.cols; ++j)
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    if (left_zero)
      ker.rows.emplace_back(row.begin() + m.cols, row.end());
  }
  return ker;
}

std::optional<std::vector<int>> left_solve(const ZnMat& m, const std::vector<int>& b) {
  const int k = static_cast<int>(m.rows.size());
  if (m.n == 1) return std::vector<int>(k, 0);
  ZnMat aug{m.n, m.cols + k, {}};
  aug.rows.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> row(m.cols + k, 0);
    std::copy(m.rows[i].begin(), m.rows[i].end(), row.begin());
    row[m.cols + i] = zn_norm(1, m.n);
    aug.rows.push_back(std::move(row));
  }
  ZnMat h = howell_form(std::move(aug));
  // reduce b by rows whose pivot lies in the left block, tracking
  // the combination in the right block
  std::vector<int> v(b);
  for (int& x : v) x = zn_norm(x, m.n);
  std::vector<int> comb(k, 0);
  for (const auto& row : h.rows) {
    int j = 0;
    while (j < m.cols && row[j] == 0) ++j;
    if (j == m.cols) continue; // pivot in right block, not part of the image
    int q = v[j] / row[j];
    if (q) {
      for (int c = 0; c < m.cols; ++c) v[c] = zn_norm(v[c] - static_cast<long long>(q) * row[c], m.n);
      for (int c = 0; c < k; ++c) comb[c] = zn_norm(comb[c] + static_cast<long long>(q) * row[m.cols + c], m.n);
    }
  }
  if (!is_zero(v)) return std::nullopt;
  return comb;
}

} // namespace cohomolib
