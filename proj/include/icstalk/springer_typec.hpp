#pragma once

// Type C (Sp(2n)) Springer data for the order-two orbits O'_{2^i 1^{2n-2i}}: bipartition labels,
// Kostka numbers and the local Euler characteristics of the IC sheaves.

#include "icstalk/partition.hpp"
#include "icstalk/qseries.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icstalk {

/// Irreducible representation (alpha)(beta) of the type C_n Weyl group, n = |alpha| + |beta|.
struct Bipartition {
  Partition alpha;
  Partition beta;

  int n() const { return alpha.weight() + beta.weight(); }
  std::string to_string() const { return "(" + alpha.to_string() + ")(" + beta.to_string() + ")"; }
  bool operator==(const Bipartition&) const = default;
};

/// Number of semistandard tableaux of shape `shape` and content `weight`, by exhaustive filling:
/// cells row by row, rows weakly increasing, columns strictly increasing.
inline std::uint64_t kostka(const Partition& shape, const Partition& weight) {
  if (shape.weight() != weight.weight()) throw std::invalid_argument("weight mismatch");
  if (shape.empty()) return 1;
  const std::size_t rows = shape.length();
  const int letters = static_cast<int>(weight.length());

  std::vector<std::vector<int>> filling;
  for (int len : shape.parts()) filling.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> left(weight.parts());
  std::uint64_t count = 0;

  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (c == filling[r].size()) {
      if (++r == rows) {
        ++count;
        return;
      }
      c = 0;
    }
    auto& row = filling[r];
    int lo = 1;
    if (c > 0) lo = std::max(lo, row[c - 1]);
    if (r > 0) lo = std::max(lo, filling[r - 1][c] + 1);
    for (int v = lo; v <= letters; ++v) {
      auto& remaining = left[static_cast<std::size_t>(v - 1)];
      if (remaining == 0) continue;
      --remaining;
      row[c] = v;
      self(self, r, c + 1);
      ++remaining;
    }
    row[c] = 0;
  };
  rec(rec, 0, 0);
  return count;
}

/// 1^k as a partition (empty for k = 0).
inline Partition column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

/// K_{2^{i-j0} 1^{n-2i}, 1^{n-2j0}} = C(n-2j0, i-j0) - C(n-2j0, i-j0-1), for 0 <= j0 <= i, 2i <= n.
inline Integer kostka_closed_form(int n, int i, int j0) {
  if (j0 < 0 || j0 > i || 2 * i > n) throw std::invalid_argument("kostka_closed_form needs 0 <= j0 <= i, 2i <= n");
  return binomial(n - 2 * j0, i - j0) - binomial(n - 2 * j0, i - j0 - 1);
}

/// The shape and weight of kostka_closed_form(n, i, j0).
inline std::pair<Partition, Partition> kostka_closed_form_args(int n, int i, int j0) {
  return {Partition::from_powers({{2, i - j0}, {1, n - 2 * i}}), column(n - 2 * j0)};
}

/// Number of standard tableaux of the given shape.
inline std::uint64_t standard_tableaux(const Partition& shape) {
  return kostka(shape, Partition(std::vector<int>(static_cast<std::size_t>(shape.weight()), 1)));
}

/// Springer label of (O'_{2^i 1^{2n-2i}}, C) or, for even i >= 2, of (O'_{2^i 1^{2n-2i}}, E'_i).
inline Bipartition springer_label(int n, int i, bool nontrivial) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("springer_label needs 0 <= i <= n");
  if (nontrivial) {
    if (i % 2 == 1) throw std::invalid_argument("not in Springer image");
    if (i < 2) throw std::invalid_argument("the zero orbit carries no nontrivial local system");
    const int m = i / 2;
    return {Partition(), Partition::from_powers({{2, m}, {1, n - 2 * m}})};
  }
  if (i % 2 == 0) {
    const int m = i / 2;
    return {column(m), column(n - m)};
  }
  const int m = (i + 1) / 2;
  return {column(n - m + 1), column(m - 1)};
}

/// C(n, |alpha|) f^alpha f^beta.
inline Integer bipartition_dim(const Bipartition& b) {
  return binomial(b.n(), b.alpha.weight()) * Integer(standard_tableaux(b.alpha)) * Integer(standard_tableaux(b.beta));
}

/// chi(IC(O'_{2^i 1^{2n-2i}}, C)) at a point of O'_{2^j 1^{2n-2j}} = C(n-j, [(i-j)/2]).
inline Integer euler_chi_trivial(int n, int i, int j) {
  if (j < 0 || j > i || i > n) throw std::invalid_argument("euler_chi_trivial needs 0 <= j <= i <= n");
  return binomial(n - j, (i - j) / 2);
}

/// chi(IC(O'_{2^{i2} 1^{2n-2 i2}}, E')) at O'_{2^j}: zero for odd j, otherwise
/// C(n-j, i2/2 - j/2) - C(n-j, i2/2 - j/2 - 1).
inline Integer euler_chi_nontrivial(int n, int i2, int j) {
  if (i2 % 2 != 0) throw std::invalid_argument("euler_chi_nontrivial needs an even orbit index");
  if (j < 0 || j > i2 || i2 > n) throw std::invalid_argument("euler_chi_nontrivial needs 0 <= j <= i2 <= n");
  if (j % 2 == 1) return 0;
  const int d = i2 / 2 - j / 2;
  return binomial(n - j, d) - binomial(n - j, d - 1);
}

/// Euler characteristic identity at every j <= i for even i:
/// chi(IC(O'_i, C)) = chi(IC(O'_i, E'_i)) + chi(IC(O'_{i-1}, C)), the last term vanishing off its support.
inline bool verify_cc_identity(int n, int i) {
  if (i % 2 != 0) throw std::invalid_argument("verify_cc_identity needs even i");
  if (i < 2 || i > n) throw std::invalid_argument("verify_cc_identity needs 2 <= i <= n");
  for (int j = 0; j <= i; ++j) {
    const Integer lower = j <= i - 1 ? euler_chi_trivial(n, i - 1, j) : Integer(0);
    if (euler_chi_trivial(n, i, j) != euler_chi_nontrivial(n, i, j) + lower) return false;
  }
  return true;
}

/// sum_{i=j}^{n} C(n-j, [(i-j)/2]) = 2^{n-j} = chi(OGr(n-j, 2(n-j)+1)), plus the quadric-bundle
/// Euler characteristic (n-1) 2^{n-j}.
inline bool verify_two_power_sum(int n, int j) {
  if (j < 0 || j > n) return false;
  Integer sum = 0;
  for (int i = j; i <= n; ++i) sum += euler_chi_trivial(n, i, j);
  const Integer two_pow = Integer(1) << (n - j);
  const Integer og_chi = eval_at_one(og_poincare(n - j, n - j));
  return sum == two_pow && og_chi == two_pow && Integer(n - 1) * og_chi == Integer(n - 1) * sum;
}

}  // namespace icstalk
