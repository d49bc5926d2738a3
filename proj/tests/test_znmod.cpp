#include <doctest.h>

#include <random>
#include <set>

#include "cohomolib/znmod.hpp"
#include "helpers.hpp"

using namespace cohomolib;

namespace {

// every vector of the row module, by brute force over small combinations
std::set<std::vector<int>> span_of(const ZnMat& m) {
  std::set<std::vector<int>> span;
  std::vector<int> coeff(m.rows.size(), 0);
  bool more = true;
  while (more) {
    std::vector<int> v(m.cols, 0);
    for (size_t i = 0; i < m.rows.size(); ++i)
      for (int j = 0; j < m.cols; ++j)
        v[j] = zn_norm(v[j] + static_cast<long long>(coeff[i]) * m.rows[i][j], m.n);
    span.insert(std::move(v));
    more = false;
    for (size_t i = coeff.size(); i-- > 0;) {
      if (++coeff[i] < m.n) {
        more = true;
        break;
      }
      coeff[i] = 0;
    }
    if (coeff.empty()) break;
  }
  return span;
}

ZnMat random_matrix(std::mt19937& rng, int n, int rows, int cols) {
  ZnMat m{n, cols, {}};
  std::uniform_int_distribution<int> d(0, n - 1);
  for (int i = 0; i < rows; ++i) {
    std::vector<int> r(cols);
    for (auto& x : r) x = d(rng);
    m.rows.push_back(std::move(r));
  }
  return m;
}

} // namespace

TEST_CASE("howell form preserves the row module and is canonical") {
  std::mt19937 rng(20240817);
  for (int n : {2, 3, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 12; ++trial) {
      ZnMat m = random_matrix(rng, n, 3, 3);
      ZnMat h = howell_form(m);
      CHECK(span_of(m) == span_of(h));
      // canonical: reduced rows of any generating set of the same module agree
      ZnMat m2 = m;
      std::swap(m2.rows[0], m2.rows[2]);
      m2.rows.push_back(m.rows[0]);
      CHECK(howell_form(m2).rows == h.rows);
    }
  }
}

TEST_CASE("coset_reduce returns the least coset element") {
  std::mt19937 rng(20240818);
  for (int n : {2, 4, 6, 9}) {
    for (int trial = 0; trial < 8; ++trial) {
      ZnMat h = howell_form(random_matrix(rng, n, 2, 3));
      auto span = span_of(h);
      std::uniform_int_distribution<int> d(0, n - 1);
      std::vector<int> v{d(rng), d(rng), d(rng)};
      auto reduced = coset_reduce(h, v);
      std::vector<int> best;
      for (const auto& s : span) {
        std::vector<int> cand(3);
        for (int j = 0; j < 3; ++j) cand[j] = zn_norm(v[j] + s[j], n);
        if (best.empty() || cand < best) best = cand;
      }
      CHECK(reduced == best);
      CHECK(in_span(h, std::vector<int>{0, 0, 0}));
    }
  }
}

TEST_CASE("left_kernel spans exactly the annihilating combinations") {
  std::mt19937 rng(20240819);
  for (int n : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 6; ++trial) {
      ZnMat m = random_matrix(rng, n, 3, 2);
      ZnMat k = left_kernel(m);
      auto kernel_span = span_of(k);
      // brute force over all coefficient vectors
      std::vector<int> coeff(3, 0);
      bool more = true;
      while (more) {
        std::vector<int> v(2, 0);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 2; ++j)
            v[j] = zn_norm(v[j] + static_cast<long long>(coeff[i]) * m.rows[i][j], n);
        bool annihilates = (v == std::vector<int>{0, 0});
        CHECK(annihilates == (kernel_span.count(coeff) > 0));
        more = false;
        for (size_t i = coeff.size(); i-- > 0;) {
          if (++coeff[i] < n) {
            more = true;
            break;
          }
          coeff[i] = 0;
        }
      }
    }
  }
}

TEST_CASE("left_solve finds combinations exactly when they exist") {
  std::mt19937 rng(20240820);
  for (int n : {2, 3, 4, 9}) {
    for (int trial = 0; trial < 10; ++trial) {
      ZnMat m = random_matrix(rng, n, 2, 3);
      auto span = span_of(m);
      std::uniform_int_distribution<int> d(0, n - 1);
      std::vector<int> b{d(rng), d(rng), d(rng)};
      auto sol = left_solve(m, b);
      CHECK(sol.has_value() == (span.count(b) > 0));
      if (sol) {
        std::vector<int> v(3, 0);
        for (size_t i = 0; i < m.rows.size(); ++i)
          for (int j = 0; j < 3; ++j)
            v[j] = zn_norm(v[j] + static_cast<long long>((*sol)[i]) * m.rows[i][j], n);
        CHECK(v == b);
      }
    }
  }
}

TEST_CASE("modulus one collapses everything") {
  ZnMat m{1, 2, {{0, 0}}};
  CHECK(howell_form(m).rows.empty());
  CHECK(coset_reduce(howell_form(m), {0, 0}) == std::vector<int>{0, 0});
}
