#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "spinfock/laurent.hpp"
#include "spinfock/partition.hpp"

namespace spinfock {

/// Element of the q-Fock space: a finitely supported map from DP_h
/// partitions to Laurent polynomials, with no zero coefficients stored.
class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPoly>;

  FockVector() = default;
  static FockVector basis(const Partition& lambda, LaurentPoly coeff = 1);
  static FockVector vacuum() { return basis(Partition{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  LaurentPoly coeff(const Partition& lambda) const;

  /// Common degree of the support; throws DegreeMismatch if inhomogeneous,
  /// returns 0 for the zero vector.
  int degree() const;

  void add(const Partition& lambda, const LaurentPoly& c);
  /// this += factor * other
  void add_scaled(const FockVector& other, const LaurentPoly& factor);
  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector scaled(const LaurentPoly& factor) const;

  friend bool operator==(const FockVector&, const FockVector&) = default;

  /// Mutable access for in-place accumulation; callers keep terms zero-free.
  LaurentPoly& slot(const Partition& lambda) { return terms_[lambda]; }
  void prune(const Partition& lambda);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const FockVector& v);

using WedgeWord = std::vector<int>;

/// A straightened word: the partition it reorders into and the number of
/// adjacent swaps, each contributing a factor -q^2.
struct OrderedTerm {
  Partition partition;
  int swaps = 0;
};

/// Straightens a q-wedge word into canonical DP_h order using
///   u_j ^ u_j = 0 (j != 0 mod h) and u_j ^ u_{j+1} = -q^2 u_{j+1} ^ u_j (j = 0,-1 mod h).
/// Returns nullopt when the word vanishes. Throws Error(UncoveredDisorder)
/// when an out-of-order adjacent pair matches neither rule. With `rng`, the
/// next rule application is chosen uniformly among all applicable positions.
std::optional<OrderedTerm> normal_order_term(Modulus mod, WedgeWord word, std::mt19937_64* rng = nullptr);
FockVector normal_order(Modulus mod, const WedgeWord& word, std::mt19937_64* rng = nullptr);

/// One unstraightened summand of a generator action on a basis vector:
/// coefficient * (word), the coefficient being q^shift or q^shift (q + q^-1).
struct RawTerm {
  WedgeWord word;
  int shift = 0;
  bool quantum_two = false;  // extra factor (q + q^-1)
};

/// Summands of f_i |lambda> and e_i |lambda> before straightening.
std::vector<RawTerm> raw_f_terms(Modulus mod, int i, const Partition& lambda);
std::vector<RawTerm> raw_e_terms(Modulus mod, int i, const Partition& lambda);

/// Exponent of q in the t_i eigenvalue of |lambda> (vacuum factor included).
int t_exponent(Modulus mod, int i, const Partition& lambda);

FockVector apply_f(Modulus mod, int i, const FockVector& v);
FockVector apply_e(Modulus mod, int i, const FockVector& v);
FockVector apply_t(Modulus mod, int i, const FockVector& v);
FockVector apply_t_inv(Modulus mod, int i, const FockVector& v);
/// f_i^(k) = f_i^k / [k]_i!; throws Error(NotDivisible) if a coefficient is
/// not divisible.
FockVector apply_f_divided(Modulus mod, int i, int k, const FockVector& v);

/// Common residue content of the support. Throws Error(MixedWeight) if keys
/// disagree, Error(InvalidArgument) on the zero vector.
ResidueContent weight(Modulus mod, const FockVector& v);

/// <lambda|lambda> = prod_{k>0} prod_{i=1}^{m_{kh}} (1 - (-q^2)^i).
LaurentPoly norm_squared(Modulus mod, const Partition& lambda);

}  // namespace spinfock
