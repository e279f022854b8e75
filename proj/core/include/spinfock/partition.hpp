#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spinfock {

/// Odd modulus h = 2n+1 of the twisted affine algebra; n is the rank.
class Modulus {
 public:
  /// Throws Error(InvalidArgument) unless h is odd and >= 3.
  explicit Modulus(int h);
  static Modulus from_rank(int n) { return Modulus(2 * n + 1); }

  int h() const noexcept { return h_; }
  int n() const noexcept { return (h_ - 1) / 2; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  int h_;
};

/// A partition stored as a weakly decreasing sequence of positive parts.
///
/// Comparison operators implement the lexicographic order on parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts nothing: throws Error(InvalidArgument) if the parts are not
  /// weakly decreasing or contain non-positive entries (trailing zeros are
  /// trimmed first).
  explicit Partition(std::vector<int> parts);

  /// Parses "5,4,1", "541" (single-digit shorthand), "()" or "".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int degree() const noexcept;
  /// Part i (0-indexed), 0 beyond the length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int multiplicity(int part) const noexcept;
  bool is_strict() const noexcept;

  /// "5,4,1"; the empty partition renders as "".
  std::string to_string() const;
  /// "(5 4 1)" style used by tables; parts separated by spaces.
  std::string to_label() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// -- membership tests -------------------------------------------------------

/// Repeated parts only among multiples of h.
bool in_dp_h(Modulus mod, const Partition& p);
/// Gaps to the next part (0 after the last) are at most h, and strictly less
/// than h when the upper part is divisible by h.
bool is_h_regular(Modulus mod, const Partition& p);

// -- enumeration (decreasing lexicographic order) ---------------------------

std::vector<Partition> enumerate_partitions(int m);
std::vector<Partition> enumerate_dp(int m);
std::vector<Partition> enumerate_dp_h(Modulus mod, int m);
std::vector<Partition> enumerate_dpr_h(Modulus mod, int m);

// -- residues and ladders ---------------------------------------------------

/// Residue i in 0..n of a 0-indexed column c: c = n+i or n-i (mod h).
int residue(Modulus mod, int column);

struct Ladder {
  int index = 0;    // 1-based ladder number
  int residue = 0;  // 0..n
  int cells = 0;

  friend bool operator==(const Ladder&, const Ladder&) = default;
};

/// Occupied ladders in increasing index order. Throws NotInDPh.
std::vector<Ladder> ladders(Modulus mod, const Partition& p);

/// Ladder index of the cell in row `row` (1-based) and column `column` (0-based).
int ladder_index(Modulus mod, int row, int column);

/// Per-residue cell counts (n_0, ..., n_n).
using ResidueContent = std::vector<int>;
ResidueContent residue_content(Modulus mod, const Partition& p);

// -- cores, orders, exponents -----------------------------------------------

/// The h-bar core; repeated part values are removed (all copies) first.
/// Throws NotInDPh.
Partition hbar_core(Modulus mod, const Partition& p);

/// Every partition reachable from a strict partition by one bar removal:
/// lowering a part by h onto a free value (or to 0), or deleting two parts
/// that sum to h. Empty when the input is already a core.
std::vector<Partition> bar_removal_moves(Modulus mod, const Partition& strict);

/// Dominance order; throws DegreeMismatch if the degrees differ.
bool dominance_leq(const Partition& lambda, const Partition& mu);
std::strong_ordering lex_cmp(const Partition& lambda, const Partition& mu);

/// Componentwise lambda + h*mu.
Partition shift_by_h_multiple(Modulus mod, const Partition& lambda, const Partition& mu);

/// a_h(lambda) = sum floor((lambda_i - 1) / h).
int a_h(Modulus mod, const Partition& p);
/// b(lambda) = floor((m - length) / 2) with m the degree of lambda.
int b_exponent(const Partition& p);

/// Coefficients of prod_{i odd, i != 0 mod h} 1/(1 - t^i) up to t^max_m.
std::vector<std::int64_t> regular_count_series(Modulus mod, int max_m);

}  // namespace spinfock
