#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spinfock/canonical.hpp"
#include "spinfock/fock.hpp"
#include "spinfock/partition.hpp"

namespace spinfock {

using Rational = boost::multiprecision::cpp_rational;

/// Integer combination of self-associate spin characters <lambda^>, keyed by
/// strict partitions of a common degree.
using CharacterVector = std::map<Partition, BigInt>;

/// Strict partitions with an odd number of even parts (m - length odd):
/// their <lambda^> is a sum of two associate characters.
bool is_dp_minus(const Partition& lambda);

/// Reduction q = 1 followed by the quotient by the ghost vectors:
/// |lambda> -> 2^{b(lambda) - a_p(lambda)} <lambda^> for strict lambda,
/// |lambda> -> 0 otherwise.
CharacterVector specialize(Modulus mod, const FockVector& v);

/// The image of G(mu) in the classical Fock space, on the <lambda^> basis.
CharacterVector underline_g(Modulus mod, const FockVector& g_column);

/// Divides out the largest power of 2 common to all coefficients.
/// Throws Error(InvalidArgument) on the zero vector.
CharacterVector double_underline(const CharacterVector& v);

struct ReducedMatrix {
  int p = 3;
  int m = 0;
  /// Strict partitions of m, decreasing lex.
  std::vector<Partition> rows;
  std::map<Partition, CharacterVector> columns;

  std::vector<Partition> labels() const;  // decreasing lex
  BigInt entry(const Partition& lambda, const Partition& mu) const;
  friend bool operator==(const ReducedMatrix&, const ReducedMatrix&) = default;
};

ReducedMatrix reduced_matrix(Modulus mod, const BasisMatrix& G);
ReducedMatrix reduced_matrix(Modulus mod, int m, CanonicalOptions options = {});

/// A decomposition matrix whose rows and columns may come in associate pairs
/// (label, label').
struct DecompositionFixture {
  struct Label {
    Partition partition;
    bool associate = false;  // the primed member of a pair
    friend bool operator==(const Label&, const Label&) = default;
  };
  std::vector<Label> rows;
  std::vector<Label> columns;
  std::vector<std::vector<BigInt>> entries;  // entries[row][column]
};

/// CSV: a header "row,<mu>,<mu>',..." then one line "<lambda>,<entries...>"
/// or "<lambda>',<entries...>" per row. Partitions are written as digit
/// strings ("3331"), or with '.' or ' ' separators when a part exceeds 9
/// ("11.7.7.4"); a trailing ' marks the associate.
DecompositionFixture parse_decomposition_csv(std::string_view csv);
std::string to_csv(const DecompositionFixture& fixture);

/// Sums associate column pairs and merges <lambda>, <lambda>' rows onto
/// <lambda^>. Throws Error(InconsistentFixture) if a merged pair disagrees.
ReducedMatrix reduce_external_matrix(const DecompositionFixture& fixture, int p);

// -- classical Fock space on the Schur P-basis -------------------------------

using ClassicalVector = std::map<Partition, Rational>;

struct ClassicalGenerator {
  enum class Kind {
    F,             // f_i of the twisted algebra, i in 0..n
    E,             // e_i of the twisted algebra
    FInfinity,     // f^inf_j, j >= 0
    EInfinity,     // e^inf_j
    FTotal,        // sum_j f^inf_j (induction)
    ETotal,        // e^inf_0 + 2 sum_{j>0} e^inf_j (restriction)
  };
  Kind kind = Kind::F;
  int index = 0;
};

/// Part-replacement action on P_lambda; P_mu = 0 when mu has a repeated part.
ClassicalVector classical_apply(Modulus mod, ClassicalGenerator gen, const ClassicalVector& v);

/// |lambda> -> 2^{-a_h(lambda)} P_lambda at q = 1, ghosts -> 0.
ClassicalVector to_schur_p(Modulus mod, const FockVector& v);

/// Morris-Yaseen (r, r-bar)-induction, r = n + 1 - i, on the <lambda^> basis
/// via the spin branching rule.
CharacterVector spin_induction(Modulus mod, int i, const CharacterVector& v);

// -- counting and independence reports ---------------------------------------

struct PartitionIdentityRow {
  int m = 0;
  std::int64_t regular = 0;   // |DPR_p(m)|
  std::int64_t series = 0;    // product expansion coefficient
  std::int64_t crystal = 0;   // degree-m vertices of the vacuum component
};

struct PartitionIdentityReport {
  bool ok = true;
  std::vector<PartitionIdentityRow> rows;
};

PartitionIdentityReport partition_identity_check(Modulus mod, int max_m);

struct RankReport {
  bool ok = true;
  std::size_t rank = 0;
  std::size_t expected = 0;
};

/// Exact rank over Q of integer vectors (keys are coordinates).
std::size_t exact_rank(const std::vector<CharacterVector>& vectors);

/// Rank of the q = 1 images of the intermediate vectors A(mu), mu in DPR_p(m).
RankReport independence_check(Modulus mod, int m);

}  // namespace spinfock
