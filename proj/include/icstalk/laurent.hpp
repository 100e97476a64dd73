#pragma once

// Exact Laurent polynomials in one variable q with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace icstalk {

using Integer = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(Integer constant) {  // NOLINT: implicit from integers reads naturally in formulas
    if (constant != 0) terms_.emplace(0, std::move(constant));
  }
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

  /// c * q^exponent
  static LaurentPoly monomial(int exponent, Integer c = 1) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, std::move(c));
    return p;
  }

  static LaurentPoly from_terms(const Terms& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
      if (c != 0) p.terms_[e] += c;
    p.normalize();
    return p;
  }

  /// Coefficients c_0 + c_1 q + ...
  static LaurentPoly from_coefficients(std::initializer_list<long long> coeffs, int lowest_exponent = 0) {
    LaurentPoly p;
    int e = lowest_exponent;
    for (long long c : coeffs) {
      if (c != 0) p.terms_.emplace(e, Integer(c));
      ++e;
    }
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Throws on the zero polynomial.
  int max_exponent() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
  }
  int min_exponent() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    normalize();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) terms_[e] -= c;
    normalize();
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.terms_[ea + eb] += ca * cb;
    r.normalize();
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  /// p(q^k) for k >= 1.
  LaurentPoly dilated(int k) const {
    if (k < 1) throw std::invalid_argument("dilation factor must be positive");
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * k, c);
    return r;
  }

  /// p(q^{-1}).
  LaurentPoly reflected() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
  }

  bool nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  /// Every exponent is divisible by `modulus`.
  bool supported_on_multiples_of(int modulus) const {
    for (const auto& [e, c] : terms_)
      if (e % modulus != 0) return false;
    return true;
  }

  /// c_a = c_{lo+hi-a}.
  bool palindromic() const {
    if (is_zero()) return true;
    const int axis = min_exponent() + max_exponent();
    for (const auto& [e, c] : terms_)
      if (coefficient(axis - e) != c) return false;
    return true;
  }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// Evaluation at an integer point; negative exponents require x = +-1.
  Integer evaluate(const Integer& x) const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0 && x != 1 && x != -1) throw std::domain_error("negative exponent at non-unit point");
      s += c * boost::multiprecision::pow(x, static_cast<unsigned>(e < 0 ? -e : e));
    }
    return s;
  }

  /// Exact long division. Returns nullopt when the divisor is zero or the remainder is nonzero.
  friend std::optional<LaurentPoly> try_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return LaurentPoly();
    LaurentPoly rem = num;
    LaurentPoly quot;
    const int den_top = den.max_exponent();
    const int den_bottom = den.min_exponent();
    const Integer& lead = den.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exponent() - den_top >= rem.min_exponent() - den_bottom) {
      const int e = rem.max_exponent() - den_top;
      const Integer& top = rem.terms_.rbegin()->second;
      if (top % lead != 0) return std::nullopt;
      auto step = LaurentPoly::monomial(e, top / lead);
      rem -= step * den;
      quot += step;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
  }

  /// Pretty form, ascending exponents: "q^-3 + 2q^-1 + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str();
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void normalize() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// The variable q.
inline LaurentPoly q_var() { return LaurentPoly::monomial(1); }

/// 1 - q^k
inline LaurentPoly one_minus_q_pow(int k) { return LaurentPoly(1) - LaurentPoly::monomial(k); }

/// Division that the caller knows is exact; a remainder means a broken invariant and aborts.
inline LaurentPoly exact_quotient(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = try_divide(num, den);
  if (!q) {
    std::fprintf(stderr, "icstalk: inexact division (%s) / (%s)\n", num.to_string().c_str(),
                 den.to_string().c_str());
    std::abort();
  }
  return *std::move(q);
}

}  // namespace icstalk
