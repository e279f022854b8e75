#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace spinfock {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in q, stored as a zero-free map exponent -> coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit from integer literals
  LaurentPoly(const BigInt& constant);

  static LaurentPoly monomial(int exponent, const BigInt& coeff = 1);
  /// Parses the notation used in displays: "q^4+q^2", "1-q^4", "2q^3",
  /// "q^{-2}", "-q^(-1)", "0".
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  int min_exponent() const;  // undefined on zero
  int max_exponent() const;

  /// q^k -> q^{-k}.
  LaurentPoly bar() const;
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  BigInt eval_at_one() const;

  bool is_bar_invariant() const { return bar() == *this; }
  /// All exponents >= 0.
  bool in_polynomial_ring() const { return is_zero() || min_exponent() >= 0; }
  /// All exponents >= 1.
  bool in_q_polynomial_ring() const { return is_zero() || min_exponent() >= 1; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// Adds c * q^k.
  void add_term(int exponent, const BigInt& c);
  /// Adds factor * q^shift * rhs.
  void add_scaled(const LaurentPoly& rhs, int shift, const BigInt& factor);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form in increasing exponent order, e.g. "q-q^5", "1+2q^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// The per-generator parameter q_i: q for i = n, q^2 for 1 <= i < n, q^4 for i = 0.
int q_i_exponent(int i, int n);
/// [k]_i = (q_i^k - q_i^{-k}) / (q_i - q_i^{-1}).
LaurentPoly q_integer(int k, int i, int n);
/// [k]_i! = [k]_i [k-1]_i ... [1]_i.
LaurentPoly q_factorial(int k, int i, int n);

/// Exact quotient p / d; throws Error(NotDivisible) if d does not divide p
/// in Z[q, q^-1], Error(InvalidArgument) if d is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// gamma = c_0 + sum_{k>0} c_{-k} (q^k + q^{-k}), the unique bar-invariant
/// element with c - gamma in qZ[q].
LaurentPoly symmetrize_tail(const LaurentPoly& c);

}  // namespace spinfock
