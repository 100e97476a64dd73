#pragma once

// Closed-form Poincare polynomials: Grassmannians, orthogonal Grassmannians, singular quadrics.
// The exponent a records dim H^{2a}; odd cohomology vanishes for all of them.

#include "icstalk/laurent.hpp"

#include <stdexcept>
#include <string>

namespace icstalk {

/// Binomial coefficient, zero for b < 0 or b > a.
inline Integer binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

/// g_{k,m}(q) = prod_{l=m-k+1}^{m} (1-q^l) / prod_{l=1}^{k} (1-q^l), the Poincare polynomial of Gr(k, m).
inline LaurentPoly gaussian_binomial(int k, int m) {
  if (k < 0 || m < 0 || k > m)
    throw std::invalid_argument("gaussian_binomial needs 0 <= k <= m, got k=" + std::to_string(k) +
                                " m=" + std::to_string(m));
  // After step l the partial product is g_{l, m-k+l}, so every division is exact.
  LaurentPoly acc(1);
  for (int l = 1; l <= k; ++l) acc = exact_quotient(acc * one_minus_q_pow(m - k + l), one_minus_q_pow(l));
  return acc;
}

/// Poincare polynomial of OGr(i, 2n+1):
/// (1-q^{2(n-i+1)}) ... (1-q^{2n}) / ((1-q) ... (1-q^i)).
inline LaurentPoly og_poincare(int i, int n) {
  if (i < 0 || n < 0 || i > n)
    throw std::invalid_argument("og_poincare needs 0 <= i <= n, got i=" + std::to_string(i) +
                                " n=" + std::to_string(n));
  LaurentPoly acc(1);
  for (int l = 1; l <= i; ++l) acc = exact_quotient(acc * one_minus_q_pow(2 * (n - i + l)), one_minus_q_pow(l));
  return acc;
}

/// dim OGr(i, 2n+1) = i(4n-3i+1)/2.
inline int og_dimension(int i, int n) { return i * (4 * n - 3 * i + 1) / 2; }

/// 1 + q + ... + q^d (empty for d < 0): projective space P^d.
inline LaurentPoly projective_betti(int d) {
  LaurentPoly p;
  for (int a = 0; a <= d; ++a) p += LaurentPoly::monomial(a);
  return p;
}

/// Smooth quadric hypersurface of dimension d >= 0; an extra middle class when d is even.
inline LaurentPoly smooth_quadric_betti(int d) {
  if (d < 0) return {};
  LaurentPoly p = projective_betti(d);
  if (d % 2 == 0) p += LaurentPoly::monomial(d / 2);
  return p;
}

/// Quadric b_1^2 + ... + b_j^2 = 0 in P^{m-1}: the join of the smooth quadric of dimension j-2 in
/// P^{j-1} with the vertex L = P^{m-j-1}, so the Betti polynomial is P(L) + q^{m-j} P(smooth part).
inline LaurentPoly quadric_betti(int rank_j, int m) {
  if (m < 1 || rank_j < 0 || rank_j > m)
    throw std::invalid_argument("quadric_betti needs 0 <= rank <= m, m >= 1");
  return projective_betti(m - rank_j - 1) + smooth_quadric_betti(rank_j - 2).shifted(m - rank_j);
}

inline Integer eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }

/// Right-hand side sum_{j=0}^{i} q^{(i-j)(i-j+1)/2} g_{[j/2],n}(q^2) g_{i-j,2n-i-j}(q).
inline LaurentPoly og_sum_side(int n, int i) {
  LaurentPoly rhs;
  for (int j = 0; j <= i; ++j) {
    const int d = i - j;
    rhs += (gaussian_binomial(j / 2, n).dilated(2) * gaussian_binomial(d, 2 * n - i - j)).shifted(d * (d + 1) / 2);
  }
  return rhs;
}

/// og_{i,2n+1}(q) equals og_sum_side(n, i) exactly.
inline bool verify_sum_identity(int n, int i) {
  if (i < 0 || i > n) return false;
  return og_poincare(i, n) == og_sum_side(n, i);
}

}  // namespace icstalk
