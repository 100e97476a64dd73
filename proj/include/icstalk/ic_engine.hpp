#pragma once

// Stalks of IC(O_{2^i 1^{2n+1-2i}}, C) at 0 and the decomposition multiplicities of the
// resolutions sigma_i, determined by the inductive formula
//
//   og_{i,2n+1}(q) q^{-m_i} = f_i(q) + sum_{j=1}^{i-1} f_j(q) T^i_j(q) + T^i_0(q),
//
// with m_i = i(2n-i+1)/2, T^i_j symmetric in q <-> q^{-1}, f_i concentrated in negative degrees,
// and T^i_j at rank n equal to T^{i-j}_0 at rank n-j.
//
// Grading: exponent a of a stalk polynomial records dim H^{2a}; the on-orbit stalk of IC(O, C)
// sits at a = -dim(O)/2.

#include "icstalk/laurent.hpp"
#include "icstalk/partition.hpp"
#include "icstalk/qseries.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icstalk {

/// Half the dimension of O_{2^i 1^{2n+1-2i}}: m_i = i(2n-i+1)/2.
inline int half_orbit_dim(int n, int i) { return i * (2 * n - i + 1) / 2; }

inline constexpr const char* kStalkGrading =
    "exponent a records dim H^{2a}; on-orbit stalk of IC(O,C) at a = -dim(O)/2";

struct StalkTable {
  int rank = 0;
  std::vector<LaurentPoly> f;  // f[0] = 1, ..., f[rank]
};

struct MultiplicityTable {
  int rank = 0;
  std::vector<std::vector<LaurentPoly>> entries;  // entries[i][j], 0 <= j <= i <= rank; entries[0] = {1}

  const LaurentPoly& at(int i, int j) const {
    if (i < 0 || i > rank || j < 0 || j > i) throw std::out_of_range("multiplicity index out of range");
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

/// The solver hit a negative multiplicity or a non-negative remainder exponent.
class InconsistentRecursion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Solves the inductive formula rank by rank. Ranks are memoized since the reduction
/// T^i_j(n) = T^{i-j}_0(n-j) reaches into lower ranks. Not thread-safe while solving;
/// returned tables are plain values.
class StalkSolver {
 public:
  struct RankTables {
    StalkTable stalks;
    MultiplicityTable multiplicities;
  };

  const RankTables& solve(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    for (int r = static_cast<int>(ranks_.size()) + 1; r <= n; ++r) ranks_.push_back(solve_rank(r));
    return ranks_[static_cast<std::size_t>(n - 1)];
  }

  int solved_up_to() const { return static_cast<int>(ranks_.size()); }

 private:
  RankTables solve_rank(int n) {
    RankTables out;
    out.stalks.rank = n;
    out.multiplicities.rank = n;
    auto& f = out.stalks.f;
    auto& t = out.multiplicities.entries;
    f.assign(static_cast<std::size_t>(n + 1), LaurentPoly());
    t.assign(static_cast<std::size_t>(n + 1), {});
    f[0] = LaurentPoly(1);
    t[0] = {LaurentPoly(1)};

    for (int i = 1; i <= n; ++i) {
      auto& row = t[static_cast<std::size_t>(i)];
      row.assign(static_cast<std::size_t>(i + 1), LaurentPoly());
      row[static_cast<std::size_t>(i)] = LaurentPoly(1);
      for (int j = 1; j < i; ++j)
        row[static_cast<std::size_t>(j)] = ranks_[static_cast<std::size_t>(n - j - 1)].multiplicities.at(i - j, 0);

      LaurentPoly rest = og_poincare(i, n).shifted(-half_orbit_dim(n, i));
      for (int j = 1; j < i; ++j) rest -= f[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)];

      // Peel the symmetric part from the top; at k = 0 the symmetric monomial is just 1.
      LaurentPoly sym;
      if (!rest.is_zero()) {
        for (int k = rest.max_exponent(); k >= 0; --k) {
          Integer c = rest.coefficient(k);
          if (c == 0) continue;
          if (c < 0)
            throw InconsistentRecursion("negative multiplicity t^" + std::to_string(i) + "_{0," +
                                        std::to_string(2 * k) + "} at rank " + std::to_string(n));
          LaurentPoly piece = k == 0 ? LaurentPoly(c) : LaurentPoly::monomial(k, c) + LaurentPoly::monomial(-k, c);
          sym += piece;
          rest -= piece;
        }
      }
      if (!rest.is_zero() && rest.max_exponent() >= 0)
        throw InconsistentRecursion("remainder f_" + std::to_string(i) + " has non-negative exponent");
      if (!rest.nonnegative())
        throw InconsistentRecursion("negative stalk dimension in f_" + std::to_string(i));
      row[0] = std::move(sym);
      f[static_cast<std::size_t>(i)] = std::move(rest);
    }
    return out;
  }

  std::vector<RankTables> ranks_;
};

inline StalkSolver::RankTables solve_stalk_tables(int n) {
  StalkSolver solver;
  return solver.solve(n);
}

/// f_i(q) = q^{-i(2n-i+1)/2} g_{[i/2],n}(q^2).
inline LaurentPoly closed_form_f(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("closed_form_f needs 0 <= i <= n");
  return gaussian_binomial(i / 2, n).dilated(2).shifted(-half_orbit_dim(n, i));
}

/// T^i_j(q) = q^{-(i-j)(n-i)} g_{i-j,2n-i-j}(q).
inline LaurentPoly closed_form_t(int n, int i, int j) {
  if (j < 0 || j > i || i > n) throw std::invalid_argument("closed_form_t needs 0 <= j <= i <= n");
  return gaussian_binomial(i - j, 2 * n - i - j).shifted(-(i - j) * (n - i));
}

/// s_j = j(2n+1-j) = dim O_{2^i 1^{2n-2i+1}} - dim O_{2^{i-j} 1^{2n-2i+1}}.
inline int stalk_shift(int n, int j) { return j * (2 * n + 1 - j); }

/// Stalk of IC(O_{2^i 1^{2n+1-2i}}, C) at a point of O_{2^j 1^{2n+1-2j}}: q^{-s_j/2} times f_{i-j} at
/// rank n-j. The same polynomial gives the Sp(2n) stalks of IC(O'_{2^i 1^{2n-2i}}, C).
inline LaurentPoly ic_stalk_poly(StalkSolver& solver, int n, int i, int j) {
  if (j < 0 || j > i || i > n || n < 1) throw std::invalid_argument("ic_stalk_poly needs 0 <= j <= i <= n");
  const int sub_rank = n - j;
  const LaurentPoly base = sub_rank == 0 ? LaurentPoly(1) : solver.solve(sub_rank).stalks.f[static_cast<std::size_t>(i - j)];
  return base.shifted(-stalk_shift(n, j) / 2);
}

inline LaurentPoly ic_stalk_poly(int n, int i, int j) {
  StalkSolver solver;
  return ic_stalk_poly(solver, n, i, j);
}

/// Fake degree P_i(q) = q^{n^2 - ni + i(i-1)/2} g_{[i/2],n}(q^2) of the type C representation attached
/// to (O'_{2^i 1^{2n-2i}}, C). Equals q^{n^2} f_i(q).
inline LaurentPoly fake_degree_poly(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("fake_degree_poly needs 0 <= i <= n");
  return gaussian_binomial(i / 2, n).dilated(2).shifted(n * n - n * i + i * (i - 1) / 2);
}

// Fourier transform table ------------------------------------------------------

enum class Monodromy { FiniteTits, InfiniteBraid };

inline const char* to_string(Monodromy m) { return m == Monodromy::FiniteTits ? "finite-Tits" : "infinite-braid"; }

struct FourierTableRow {
  int i = 0;
  OrbitLabel orbit;
  Integer trivial_target_dim;                      // dim L_i = C(2n+1, i)
  std::optional<Integer> nontrivial_target_dim;    // dim F_i = C(2n,i) - C(2n,i-2), i >= 1
  Monodromy trivial_monodromy = Monodromy::FiniteTits;
  Monodromy nontrivial_monodromy = Monodromy::InfiniteBraid;
};

/// F(IC(O_{2^i}, C)) = IC(g_1, L_i) and F(IC(O_{2^i}, E_i)) = IC(g_1, F_i).
inline std::vector<FourierTableRow> ft_table(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<FourierTableRow> rows;
  for (int i = 0; i <= n; ++i) {
    FourierTableRow r;
    r.i = i;
    r.orbit = OrbitLabel::order_two(n, i);
    r.trivial_target_dim = binomial(2 * n + 1, i);
    if (i >= 1) r.nontrivial_target_dim = binomial(2 * n, i) - binomial(2 * n, i - 2);
    rows.push_back(std::move(r));
  }
  return rows;
}

enum class LocalSystem { Trivial, Nontrivial };
enum class SupportFlag { Full, Proper, Unknown };

inline const char* to_string(SupportFlag f) {
  switch (f) {
    case SupportFlag::Full: return "full";
    case SupportFlag::Proper: return "proper";
    default: return "unknown";
  }
}

struct FtSupport {
  SupportFlag flag = SupportFlag::Unknown;
  std::string reason;  // order-two, gaps, richardson:<support>, unclassified
};

inline bool is_order_two(const Partition& p) { return p.empty() || p[0] <= 2; }

/// Support of F(IC(O, L)) where the classified families decide it; "unknown" elsewhere.
inline FtSupport ft_support(const OrbitLabel& o, LocalSystem ls) {
  const auto& p = o.partition;
  if (is_order_two(p)) {
    const int i = p.multiplicity(2);
    if (ls == LocalSystem::Nontrivial && i == 0)
      throw std::invalid_argument("the zero orbit carries no nontrivial equivariant local system");
    return {SupportFlag::Full, "order-two"};
  }
  if (ls == LocalSystem::Nontrivial)
    throw std::invalid_argument("no nontrivial local system is classified on O_" + p.to_string());
  if (is_richardson(p)) {
    auto w = richardson_witness(p);
    if (w.parabolic_index >= 1) return {SupportFlag::Proper, "richardson:" + w.support_name(o.rank)};
  }
  if (has_gaps(p)) return {SupportFlag::Proper, "gaps"};
  return {SupportFlag::Unknown, "unclassified"};
}

inline SupportFlag ft_support_flag(const OrbitLabel& o, LocalSystem ls) { return ft_support(o, ls).flag; }

}  // namespace icstalk
