#include "icstalk/qseries.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <vector>

using namespace icstalk;

namespace {

LaurentPoly poly(std::initializer_list<long long> c, int lowest = 0) { return LaurentPoly::from_coefficients(c, lowest); }

// Partitions fitting in a k x (m-k) box, counted by size.
LaurentPoly box_partitions(int k, int m) {
  LaurentPoly out;
  std::function<void(int, int, int)> rec = [&](int rows_left, int max_part, int size) {
    if (rows_left == 0) {
      out += LaurentPoly::monomial(size);
      return;
    }
    for (int part = 0; part <= max_part; ++part) rec(rows_left - 1, part, size + part);
  };
  rec(k, m - k, 0);
  return out;
}

// Vectors of F_p^dim encoded base p.
std::vector<int> digits(long code, int p, int dim) {
  std::vector<int> v(static_cast<std::size_t>(dim));
  for (auto& d : v) {
    d = static_cast<int>(code % p);
    code /= p;
  }
  return v;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Split form of rank r on F_p^dim: x0 x1 + x2 x3 + ... (+ x_{r-1}^2 when r is odd).
int split_form(const std::vector<int>& x, int r, int p) {
  long s = 0;
  for (int k = 0; k + 1 < r; k += 2) s += static_cast<long>(x[static_cast<std::size_t>(k)]) * x[static_cast<std::size_t>(k + 1)];
  if (r % 2 == 1) s += static_cast<long>(x[static_cast<std::size_t>(r - 1)]) * x[static_cast<std::size_t>(r - 1)];
  return static_cast<int>(s % p);
}

// Projective F_p-points of {Q = 0} in P^{dim-1}.
long projective_zeros(int r, int dim, int p) {
  long affine = 0;
  for (long c = 1; c < ipow(p, dim); ++c)
    if (split_form(digits(c, p, dim), r, p) == 0) ++affine;
  return affine / (p - 1);
}

// Isotropic i-dimensional subspaces of (F_p^{2n+1}, split form): ordered isotropic, pairwise
// orthogonal, independent tuples divided by |GL_i(F_p)|.
long isotropic_subspaces(int i, int n, int p) {
  const int dim = 2 * n + 1;
  const long size = ipow(p, dim);
  std::vector<int> q(static_cast<std::size_t>(size));
  std::vector<std::vector<int>> vec(static_cast<std::size_t>(size));
  for (long c = 0; c < size; ++c) {
    vec[static_cast<std::size_t>(c)] = digits(c, p, dim);
    q[static_cast<std::size_t>(c)] = split_form(vec[static_cast<std::size_t>(c)], dim, p);
  }
  auto add = [&](long a, long b) {
    long out = 0;
    for (int k = dim - 1; k >= 0; --k)
      out = out * p + (vec[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] + vec[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)]) % p;
    return out;
  };
  auto bilinear = [&](long a, long b) { return ((q[static_cast<std::size_t>(add(a, b))] - q[static_cast<std::size_t>(a)] - q[static_cast<std::size_t>(b)]) % p + 2 * p) % p; };

  std::vector<long> isotropic;
  for (long c = 1; c < size; ++c)
    if (q[static_cast<std::size_t>(c)] == 0) isotropic.push_back(c);

  long tuples = 0;
  std::vector<long> chosen;
  std::function<void(const std::vector<char>&)> rec = [&](const std::vector<char>& span) {
    if (static_cast<int>(chosen.size()) == i) {
      ++tuples;
      return;
    }
    for (long v : isotropic) {
      if (span[static_cast<std::size_t>(v)]) continue;
      bool orth = true;
      for (long u : chosen) orth = orth && bilinear(u, v) == 0;
      if (!orth) continue;
      if (static_cast<int>(chosen.size()) + 1 == i) {
        ++tuples;
        continue;
      }
      std::vector<char> next(span.size(), 0);
      for (long s = 0; s < size; ++s) {
        if (!span[static_cast<std::size_t>(s)]) continue;
        long w = s;
        for (int c = 0; c < p; ++c) {
          next[static_cast<std::size_t>(w)] = 1;
          w = add(w, v);
        }
      }
      chosen.push_back(v);
      rec(next);
      chosen.pop_back();
    }
  };
  std::vector<char> zero(static_cast<std::size_t>(size), 0);
  zero[0] = 1;
  rec(zero);

  long gl = 1;
  for (int k = 0; k < i; ++k) gl *= ipow(p, i) - ipow(p, k);
  return tuples / gl;
}

}  // namespace

TEST(Binomial, EdgeCases) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gaussian_binomial(0, 5), LaurentPoly(1));
  EXPECT_EQ(gaussian_binomial(1, 2), poly({1, 1}));
  EXPECT_EQ(gaussian_binomial(2, 4), poly({1, 1, 2, 1, 1}));
  EXPECT_THROW(gaussian_binomial(3, 2), std::invalid_argument);
}

TEST(Gaussian, CountsBoxPartitions) {
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) EXPECT_EQ(gaussian_binomial(k, m), box_partitions(k, m)) << k << "," << m;
}

TEST(Gaussian, PascalSymmetryAndValueAtOne) {
  for (int m = 1; m <= 14; ++m)
    for (int k = 1; k < m; ++k) {
      const auto g = gaussian_binomial(k, m);
      EXPECT_EQ(g, gaussian_binomial(k - 1, m - 1) + gaussian_binomial(k, m - 1).shifted(k));
      EXPECT_EQ(g, gaussian_binomial(m - k, m));
      EXPECT_TRUE(g.palindromic());
      EXPECT_EQ(g.eval_at_one(), binomial(m, k));
    }
}

TEST(OrthogonalGrassmannian, Examples) {
  EXPECT_EQ(og_poincare(1, 2), poly({1, 1, 1, 1}));
  EXPECT_EQ(og_poincare(0, 7), LaurentPoly(1));
  EXPECT_EQ(og_poincare(2, 2), poly({1, 1, 1, 1}));
  EXPECT_THROW(og_poincare(3, 2), std::invalid_argument);
}

TEST(OrthogonalGrassmannian, DimensionAndEuler) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(eval_at_one(og_poincare(n, n)), Integer(1) << n);
    for (int i = 0; i <= n; ++i) {
      const auto og = og_poincare(i, n);
      EXPECT_EQ(og.is_zero() ? -1 : og.max_exponent(), og_dimension(i, n));
      EXPECT_TRUE(og.palindromic());
    }
  }
}

TEST(OrthogonalGrassmannian, CountsIsotropicSubspaces) {
  for (int p : {3, 5})
    for (int n = 1; n <= 2; ++n)
      for (int i = 0; i <= n; ++i)
        EXPECT_EQ(og_poincare(i, n).evaluate(p), isotropic_subspaces(i, n, p)) << "p=" << p << " n=" << n << " i=" << i;
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(og_poincare(i, 3).evaluate(3), isotropic_subspaces(i, 3, 3)) << i;
}

TEST(Quadric, Examples) {
  EXPECT_EQ(quadric_betti(4, 4), poly({1, 2, 1}));
  EXPECT_EQ(quadric_betti(2, 4), poly({1, 1, 2}));
  EXPECT_EQ(quadric_betti(1, 2), LaurentPoly(1));
  EXPECT_THROW(quadric_betti(5, 4), std::invalid_argument);
}

TEST(Quadric, CountsPoints) {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 5; ++m)
      for (int j = 1; j <= m; ++j)
        EXPECT_EQ(quadric_betti(j, m).evaluate(p), projective_zeros(j, m, p)) << "p=" << p << " j=" << j << " m=" << m;
}

TEST(SumIdentity, Examples) {
  EXPECT_TRUE(verify_sum_identity(1, 1));
  EXPECT_EQ(og_sum_side(1, 1), poly({1, 1}));
  EXPECT_EQ(og_sum_side(2, 2), poly({1, 1, 1, 1}));
  EXPECT_FALSE(verify_sum_identity(2, 3));
}

TEST(SumIdentity, AllUpToEight) {
  int cases = 0;
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i <= n; ++i, ++cases) EXPECT_TRUE(verify_sum_identity(n, i)) << n << "," << i;
  EXPECT_EQ(cases, 44);
}
