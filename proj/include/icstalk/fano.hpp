#pragma once

// Cohomology of Fano_{i-1}^{2n}, the variety of (i-1)-planes in a smooth intersection of two
// quadrics in P^{2n}:  H^{2k} = sum_j L_j^{M_i(k,j)}, H^odd = 0, with M_i(k,j) the coefficient
// of q^{k - j(n-i)} in g_{i-j, 2n-i-j}(q) and dim L_j = C(2n+1, j).

#include "icstalk/ic_engine.hpp"
#include "icstalk/laurent.hpp"
#include "icstalk/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace icstalk {

struct FanoTerm {
  int j = 0;
  Integer mult;
};

struct FanoRow {
  int k = 0;                     // H^{2k}
  std::vector<FanoTerm> terms;   // only M_i(k,j) > 0
  Integer betti;                 // b_{2k} = sum_j C(2n+1,j) M_i(k,j)
  int degree() const { return 2 * k; }
};

struct FanoCohomology {
  int rank = 0;
  int planes_index = 0;          // i: the variety parametrizes (i-1)-planes
  int complex_dim = 0;           // 2i(n-i)
  std::vector<Integer> l_dims;   // dim L_j, j = 0..i
  std::vector<FanoRow> rows;     // k = 0..complex_dim

  Integer multiplicity(int k, int j) const {
    if (k < 0 || k >= static_cast<int>(rows.size())) return 0;
    for (const auto& t : rows[static_cast<std::size_t>(k)].terms)
      if (t.j == j) return t.mult;
    return 0;
  }
};

inline void check_fano_range(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("Fano index needs 1 <= i <= n");
}

inline FanoCohomology fano_multiplicities(int n, int i) {
  check_fano_range(n, i);
  FanoCohomology out;
  out.rank = n;
  out.planes_index = i;
  out.complex_dim = 2 * i * (n - i);
  for (int j = 0; j <= i; ++j) out.l_dims.push_back(binomial(2 * n + 1, j));

  std::vector<LaurentPoly> g;
  for (int j = 0; j <= i; ++j) g.push_back(gaussian_binomial(i - j, 2 * n - i - j));

  for (int k = 0; k <= out.complex_dim; ++k) {
    FanoRow row;
    row.k = k;
    row.betti = 0;
    for (int j = 0; j <= i; ++j) {
      Integer m = g[static_cast<std::size_t>(j)].coefficient(k - j * (n - i));
      if (m == 0) continue;
      row.betti += out.l_dims[static_cast<std::size_t>(j)] * m;
      row.terms.push_back({j, std::move(m)});
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// sum_k b_{2k} q^k.
inline LaurentPoly fano_betti_poly(int n, int i) {
  LaurentPoly p;
  for (const auto& row : fano_multiplicities(n, i).rows) p += LaurentPoly::monomial(row.k, row.betti);
  return p;
}

/// Same Betti polynomial rebuilt from the solver's multiplicities:
/// H^{2k} = sum_j L_j^{t^i_{j, 2|i(n-i)-k|}}, i.e. b_{2k} = sum_j C(2n+1,j) [q^{k-i(n-i)}] T^i_j.
inline LaurentPoly fano_betti_from_tables(const MultiplicityTable& t, int i) {
  const int n = t.rank;
  check_fano_range(n, i);
  LaurentPoly p;
  const int middle = i * (n - i);
  for (int k = 0; k <= 2 * middle; ++k) {
    Integer b = 0;
    for (int j = 0; j <= i; ++j) b += binomial(2 * n + 1, j) * t.at(i, j).coefficient(k - middle);
    p += LaurentPoly::monomial(k, b);
  }
  return p;
}

/// Fano_1^{2n} for n >= 3: for k <= 2n-4, H^{2k} = C^{[(k+2)/2]} (+ L_1 if k >= n-2) (+ L_2 if k = 2n-4),
/// and H^{2(4n-8-k)} = H^{2k}.
struct LinesTableRow {
  int k = 0;
  int trivial_mult = 0;
  bool has_l1 = false;
  bool has_l2 = false;
  bool matches = false;  // agrees with fano_multiplicities(n, 2) at k and at the mirrored 4n-8-k
};

struct LinesTable {
  int rank = 0;
  std::vector<LinesTableRow> rows;
  bool consistent() const {
    for (const auto& r : rows)
      if (!r.matches) return false;
    return !rows.empty();
  }
};

inline LinesTable lines_cohomology_table(int n) {
  if (n < 3) throw std::invalid_argument("example ranges degenerate");
  const auto coh = fano_multiplicities(n, 2);
  LinesTable out;
  out.rank = n;
  for (int k = 0; k <= 2 * n - 4; ++k) {
    LinesTableRow r;
    r.k = k;
    r.trivial_mult = (k + 2) / 2;
    r.has_l1 = k >= n - 2;
    r.has_l2 = k == 2 * n - 4;
    auto agrees_at = [&](int kk) {
      return coh.multiplicity(kk, 0) == r.trivial_mult && coh.multiplicity(kk, 1) == (r.has_l1 ? 1 : 0) &&
             coh.multiplicity(kk, 2) == (r.has_l2 ? 1 : 0);
    };
    r.matches = agrees_at(k) && agrees_at(4 * n - 8 - k);
    out.rows.push_back(r);
  }
  return out;
}

}  // namespace icstalk
