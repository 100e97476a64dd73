#pragma once

// Exhaustive identity suites bounded by a maximal rank. Each suite is pure and independent.

#include "icstalk/fano.hpp"
#include "icstalk/ic_engine.hpp"
#include "icstalk/partition.hpp"
#include "icstalk/qseries.hpp"
#include "icstalk/springer_typec.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icstalk {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  long cases = 0;
  long failures = 0;
  std::optional<std::string> counterexample;  // first failure

  bool passed() const { return failures == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    ++failures;
    if (!counterexample) counterexample = describe();
  }
};

namespace suites {

inline std::string at(int n, int i) { return "n=" + std::to_string(n) + " i=" + std::to_string(i); }
inline std::string at(int n, int i, int j) { return at(n, i) + " j=" + std::to_string(j); }

inline SuiteResult poincare_identity(int n_max) {
  SuiteResult r{"poincare-identity"};
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) r.check(verify_sum_identity(n, i), [&] { return at(n, i); });
  return r;
}

inline SuiteResult solver_closed_form(int n_max) {
  SuiteResult r{"solver-closed-form"};
  StalkSolver solver;
  for (int n = 1; n <= n_max; ++n) {
    const auto& t = solver.solve(n);
    for (int i = 0; i <= n; ++i) {
      r.check(t.stalks.f[static_cast<std::size_t>(i)] == closed_form_f(n, i), [&] { return "f_i " + at(n, i); });
      for (int j = 0; j <= i; ++j)
        r.check(t.multiplicities.at(i, j) == closed_form_t(n, i, j), [&] { return "T^i_j " + at(n, i, j); });
    }
  }
  return r;
}

/// Odd vanishing and positivity: q^{m_i} f_i is an even polynomial, every T^i_j is nonnegative and symmetric.
inline SuiteResult parity(int n_max) {
  SuiteResult r{"parity"};
  StalkSolver solver;
  for (int n = 1; n <= n_max; ++n) {
    const auto& t = solver.solve(n);
    for (int i = 0; i <= n; ++i) {
      const auto shifted = t.stalks.f[static_cast<std::size_t>(i)].shifted(half_orbit_dim(n, i));
      r.check(shifted.supported_on_multiples_of(2) && shifted.nonnegative() && shifted.min_exponent() >= 0,
              [&] { return "f_i " + at(n, i); });
      for (int j = 0; j <= i; ++j) {
        const auto& tij = t.multiplicities.at(i, j);
        r.check(tij.nonnegative() && tij == tij.reflected(), [&] { return "T^i_j " + at(n, i, j); });
      }
    }
  }
  return r;
}

inline SuiteResult kostka_oracle(int n_max) {
  SuiteResult r{"kostka-oracle"};
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; 2 * i <= n; ++i)
      for (int j0 = 0; j0 <= i; ++j0) {
        auto [shape, weight] = kostka_closed_form_args(n, i, j0);
        r.check(Integer(kostka(shape, weight)) == kostka_closed_form(n, i, j0), [&] { return at(n, i, j0); });
      }
  return r;
}

inline SuiteResult cc_identity(int n_max) {
  SuiteResult r{"cc-identity"};
  for (int n = 2; n <= n_max; ++n)
    for (int i = 2; i <= n; i += 2) r.check(verify_cc_identity(n, i), [&] { return at(n, i); });
  return r;
}

inline SuiteResult two_power_sum(int n_max) {
  SuiteResult r{"two-power-sum"};
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      r.check(verify_two_power_sum(n, j), [&] { return "n=" + std::to_string(n) + " j=" + std::to_string(j); });
  return r;
}

/// C(2n,i) - C(2n,i-2) + C(2n+1,i-1) = C(2n+1,i), via the Fourier table rows.
inline SuiteResult rank_identity(int n_max) {
  SuiteResult r{"rank-identity"};
  for (int n = 1; n <= n_max; ++n) {
    const auto rows = ft_table(n);
    for (int i = 1; i <= n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      const auto& prev = rows[static_cast<std::size_t>(i - 1)];
      r.check(row.nontrivial_target_dim && *row.nontrivial_target_dim + prev.trivial_target_dim == row.trivial_target_dim,
              [&] { return at(n, i); });
    }
  }
  return r;
}

inline SuiteResult fano_routes(int n_max) {
  SuiteResult r{"fano-routes"};
  StalkSolver solver;
  for (int n = 1; n <= n_max; ++n) {
    const auto& t = solver.solve(n).multiplicities;
    for (int i = 1; i <= n; ++i) {
      const auto direct = fano_betti_poly(n, i);
      r.check(direct == fano_betti_from_tables(t, i) && direct.palindromic(), [&] { return at(n, i); });
    }
  }
  return r;
}

/// 2 D(lambda) <= codim with equality exactly on the relevant orbits, all odd weights <= 2 n_max + 1.
inline SuiteResult semismall(int n_max) {
  SuiteResult r{"semismall"};
  FiberBound bound;
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : partitions_of(2 * n + 1)) {
      const int d = bound(p);
      const int codim = dim_centralizer(p);
      r.check(2 * d <= codim && (2 * d == codim) == is_relevant_full(p), [&] { return "lambda=" + p.to_string(); });
    }
  return r;
}

}  // namespace suites

using SuiteFn = SuiteResult (*)(int);

inline std::vector<SuiteFn> all_suites() {
  return {suites::poincare_identity, suites::solver_closed_form, suites::parity,   suites::kostka_oracle,
          suites::cc_identity,       suites::two_power_sum,      suites::rank_identity, suites::fano_routes,
          suites::semismall};
}

/// Runs every suite on its own worker; results are ordered by suite name.
inline std::vector<SuiteResult> run_all_suites(int n_max) {
  if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
  std::vector<std::future<SuiteResult>> jobs;
  for (auto fn : all_suites()) jobs.push_back(std::async(std::launch::async, fn, n_max));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace icstalk
