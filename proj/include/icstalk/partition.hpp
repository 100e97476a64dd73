#pragma once

// Partitions and the combinatorics of nilpotent K-orbits in g_1 for the pair
// (SL(2n+1), SO(2n+1)). Orbits are labelled by partitions of N = 2n+1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icstalk {

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
      if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Treats `parts` as a multiset: zeros are dropped and the rest sorted descending.
  static Partition from_multiset(std::vector<int> parts) {
    std::erase_if(parts, [](int p) { return p == 0; });
    for (int p : parts)
      if (p < 0) throw std::invalid_argument("negative part");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// a^m b^k ... built from (value, multiplicity) pairs in any order.
  static Partition from_powers(std::initializer_list<std::pair<int, int>> powers) {
    std::vector<int> parts;
    for (auto [value, mult] : powers) parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
    return from_multiset(std::move(parts));
  }

  /// Parses "3,2,2"; the empty string is the empty partition. Non-descending input is rejected.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
      parts.push_back(std::stoi(std::string(token)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// 0-based; zero past the last part.
  int operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

  /// Multiplicity of the value v.
  int multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(parts_[k]);
    }
    return out;
  }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.to_string() << ')';
}

/// All partitions of `weight`, in reverse lexicographic order: (weight) first, (1^weight) last.
inline std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

/// Dominance order a <= b via partial sums. Throws on unequal weights.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) throw std::invalid_argument("incomparable weights");
  int sa = 0, sb = 0;
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t k = 0; k < len; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa > sb) return false;
  }
  return true;
}

/// sum_i (i-1) * lambda_i; also the codimension of O_lambda in the nilpotent cone N_1.
inline int dim_centralizer(const Partition& p) {
  int total = 0;
  for (std::size_t k = 0; k < p.length(); ++k) total += static_cast<int>(k) * p[k];
  return total;
}

/// A nilpotent K-orbit O_lambda in g_1 for N = 2*rank + 1.
struct OrbitLabel {
  int rank = 0;
  Partition partition;

  OrbitLabel() = default;
  OrbitLabel(int n, Partition p) : rank(n), partition(std::move(p)) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (partition.weight() != 2 * n + 1)
      throw std::invalid_argument("orbit label " + partition.to_string() + " is not a partition of " +
                                  std::to_string(2 * n + 1));
  }

  int ambient() const { return 2 * rank + 1; }

  /// The order-two orbit 2^i 1^{2n+1-2i}.
  static OrbitLabel order_two(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("order-two index out of range");
    return OrbitLabel(n, Partition::from_powers({{2, i}, {1, 2 * n + 1 - 2 * i}}));
  }

  bool operator==(const OrbitLabel&) const = default;
};

/// True iff O_inner lies in the closure of O_outer.
inline bool closure_contains(const OrbitLabel& outer, const OrbitLabel& inner) {
  if (outer.rank != inner.rank) throw std::invalid_argument("rank mismatch");
  return dominance_leq(inner.partition, outer.partition);
}

/// dim K = n(2n+1) minus the centralizer dimension.
inline int orbit_dim(const OrbitLabel& o) {
  return o.rank * (2 * o.rank + 1) - dim_centralizer(o.partition);
}

/// Codimension of O in N_1 (dim N_1 = n(2n+1)).
inline int orbit_codim(const OrbitLabel& o) { return dim_centralizer(o.partition); }

/// Some lambda_i - lambda_{i+1} >= 2, with lambda_{s+1} = 0. Equivalent to O_lambda being induced.
inline bool has_gaps(const Partition& p) {
  for (std::size_t k = 0; k < p.length(); ++k)
    if (p[k] - p[k + 1] >= 2) return true;
  return false;
}

/// Orbit induced from a theta-stable Levi: lambda_i = core_i + sum_j 2 * levi_j_i.
/// When `expected_weight` is given, a total weight mismatch throws.
inline Partition induced_orbit(const std::vector<Partition>& levi_parts, const Partition& core,
                               std::optional<int> expected_weight = std::nullopt) {
  std::size_t len = core.length();
  for (const auto& l : levi_parts) len = std::max(len, l.length());
  std::vector<int> out(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = core[k];
    for (const auto& l : levi_parts) out[k] += 2 * l[k];
  }
  auto result = Partition::from_multiset(std::move(out));
  if (expected_weight && result.weight() != *expected_weight)
    throw std::invalid_argument("weight mismatch: induced orbit has weight " + std::to_string(result.weight()) +
                                ", expected " + std::to_string(*expected_weight));
  return result;
}

// Template matching ----------------------------------------------------------

/// Result of matching lambda against (2mu_1+1, ..., 2mu_l+1, 2mu_{l+1}, ..., 2mu_s):
/// odd parts (sorted descending) form the leading block, even parts the trailing one.
struct TemplateMatch {
  int odd_block = 0;     // l
  std::vector<int> mu;   // may contain zeros in the odd block
  bool decreasing = false;
};

inline TemplateMatch match_odd_even_template(const Partition& p) {
  TemplateMatch m;
  std::vector<int> even;
  for (int part : p.parts()) {
    if (part % 2 == 1) {
      m.mu.push_back((part - 1) / 2);
      ++m.odd_block;
    } else {
      even.push_back(part / 2);
    }
  }
  m.mu.insert(m.mu.end(), even.begin(), even.end());
  m.decreasing = std::is_sorted(m.mu.begin(), m.mu.end(), std::greater<>());
  return m;
}

/// lambda = (2p_1+1, 2p_2, ..., 2p_s) with p weakly decreasing: the orbits relevant for the
/// Springer-type resolution of N_1.
inline bool is_relevant_full(const Partition& p) {
  if (p.weight() % 2 == 0) return false;
  auto m = match_odd_even_template(p);
  return m.odd_block == 1 && m.decreasing;
}

/// Relevance for the parabolic map pi_i (1 <= i <= n-1): exactly 2n-2i+1 odd parts and a
/// weakly decreasing mu-sequence.
inline bool is_relevant_parabolic(const Partition& p, int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("parabolic index out of range");
  if (p.weight() != 2 * n + 1) throw std::invalid_argument("weight is not 2n+1");
  auto m = match_odd_even_template(p);
  return m.odd_block == 2 * n - 2 * i + 1 && m.decreasing;
}

inline bool is_richardson(const Partition& p) {
  if (p.weight() % 2 == 0) return false;
  return match_odd_even_template(p).decreasing;
}

struct RichardsonWitness {
  Partition mu;            // zeros dropped
  Partition label;         // mu^t, labels the local system L_{mu^t}
  int odd_block = 0;       // l
  int parabolic_index = 0; // (N - l)/2: the flag has this many isotropic steps (n is the Borel, 0 is K)
  bool general_template() const { return odd_block > 1; }

  /// Image of the parabolic map carrying the FT: g_1 for K, g_1^0 for the Borel, g_1^i otherwise.
  std::string support_name(int n) const {
    if (parabolic_index == 0) return "g_1";
    if (parabolic_index == n) return "g_1^0";
    return "g_1^" + std::to_string(parabolic_index);
  }
};

inline RichardsonWitness richardson_witness(const Partition& p) {
  if (!is_richardson(p)) throw std::invalid_argument("not Richardson: " + p.to_string());
  auto m = match_odd_even_template(p);
  RichardsonWitness w;
  w.mu = Partition::from_multiset(m.mu);
  w.label = conjugate(w.mu);
  w.odd_block = m.odd_block;
  w.parabolic_index = (p.weight() - m.odd_block) / 2;
  return w;
}

inline Partition richardson_label(const Partition& p) { return richardson_witness(p).label; }

// Branching --------------------------------------------------------------------

enum class MoveKind { RowRemoval, RowSplit };

inline const char* to_string(MoveKind k) { return k == MoveKind::RowRemoval ? "row-removal" : "row-split"; }

/// lambda -> lambda' (weight N-2) obtained from a choice of isotropic line V_1 in ker x.
struct BranchMove {
  Partition target;
  MoveKind kind = MoveKind::RowRemoval;
  int codim_delta = 0;
  int part_value = 0;        // mu_i
  int rows_at_least = 0;     // sum_{j<=i} m_j, the number of rows of length >= mu_i

  /// Dimension of the stratum of lines V_1 giving this move (dim K_i^0 or dim K_i - K_i^0).
  int fiber_increment() const { return kind == MoveKind::RowRemoval ? rows_at_least - 1 : rows_at_least - 2; }
};

/// One row-removal per distinct part value >= 2 and one row-split per distinct value with
/// multiplicity >= 2. Zeros produced are dropped.
inline std::vector<BranchMove> branch_moves(const Partition& p) {
  std::vector<BranchMove> moves;
  const auto& parts = p.parts();
  int rows_seen = 0;
  for (std::size_t k = 0; k < parts.size();) {
    const int value = parts[k];
    std::size_t end = k;
    while (end < parts.size() && parts[end] == value) ++end;
    const int mult = static_cast<int>(end - k);
    rows_seen += mult;
    const int next = end < parts.size() ? parts[end] : 0;
    const int next_mult = end < parts.size() ? p.multiplicity(next) : 0;

    if (value >= 2) {
      std::vector<int> t = parts;
      t[end - 1] -= 2;
      BranchMove m;
      m.target = Partition::from_multiset(std::move(t));
      m.kind = MoveKind::RowRemoval;
      m.part_value = value;
      m.rows_at_least = rows_seen;
      m.codim_delta = 2 * (rows_seen - 1) + (next == value - 1 ? next_mult : 0);
      moves.push_back(std::move(m));
    }
    if (mult >= 2) {
      std::vector<int> t = parts;
      t[end - 1] -= 1;
      t[end - 2] -= 1;
      BranchMove m;
      m.target = Partition::from_multiset(std::move(t));
      m.kind = MoveKind::RowSplit;
      m.part_value = value;
      m.rows_at_least = rows_seen;
      m.codim_delta = 2 * (rows_seen - 1) - 1;
      moves.push_back(std::move(m));
    }
    k = end;
  }
  return moves;
}

/// Upper bound D(lambda) on dim pi^{-1}(x) for x in O_lambda, from the branching recursion
/// D(lambda) = max over moves of (fiber_increment + D(target)), D((1)) = 0.
/// 2 D(lambda) <= codim O_lambda with equality iff lambda is relevant.
class FiberBound {
 public:
  int operator()(const Partition& p) {
    if (p.weight() % 2 == 0 || p.weight() < 1) throw std::invalid_argument("fiber bound needs odd weight");
    if (p.weight() == 1) return 0;
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    int best = -1;
    for (const auto& m : branch_moves(p)) best = std::max(best, m.fiber_increment() + (*this)(m.target));
    memo_.emplace(p, best);
    return best;
  }

 private:
  std::map<Partition, int> memo_;
};

inline int fiber_dim_bound(const Partition& p) {
  FiberBound bound;
  return bound(p);
}

}  // namespace icstalk
