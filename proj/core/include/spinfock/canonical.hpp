#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spinfock/fock.hpp"
#include "spinfock/partition.hpp"

namespace spinfock {

/// Columns G(mu), mu in DPR_h(m), expanded on |lambda>, lambda in DP_h(m).
struct BasisMatrix {
  int h = 3;
  int m = 0;
  std::map<Partition, FockVector> columns;

  /// Column labels in decreasing lex order.
  std::vector<Partition> labels() const;
  /// Row labels (support union, or all of DP_h(m) when `all_rows`) in decreasing lex order.
  std::vector<Partition> rows(bool all_rows = true) const;
  const FockVector& column(const Partition& mu) const;
  LaurentPoly entry(const Partition& lambda, const Partition& mu) const;
};

/// Ladder monomial f_{r_s}^{(k_s)} ... f_{r_1}^{(k_1)} applied to the vacuum.
FockVector a_vector(Modulus mod, const Partition& mu);

/// mu with the cells of its last ladder removed; also returns that ladder.
std::pair<Partition, Ladder> strip_outer_ladder(Modulus mod, const Partition& mu);

/// f_{r_s}^{(k_s)} G(nu), nu = mu minus its outer ladder, with G(nu) taken
/// from `lower` (the basis in degree m - k_s). Throws Error(MissingContext)
/// when `lower` lacks the column.
FockVector a_vector_fast(Modulus mod, const Partition& mu, const BasisMatrix& lower);

struct CanonicalOptions {
  bool fast_path = true;
  int jobs = 1;
};

/// Triangular reduction of the intermediate vectors of one degree. Columns
/// are grouped by residue content and each group reduced independently.
/// Throws Error(TheoremViolation) if a finished column is not congruent to
/// |mu> modulo qZ[q] or has negative exponents.
BasisMatrix reduce_to_canonical(Modulus mod, int m, const std::map<Partition, FockVector>& intermediate,
                                int jobs = 1);

/// Computes and caches canonical bases degree by degree.
class CanonicalEngine {
 public:
  explicit CanonicalEngine(Modulus mod, CanonicalOptions options = {});

  Modulus modulus() const noexcept { return mod_; }
  const CanonicalOptions& options() const noexcept { return options_; }

  const BasisMatrix& basis(int m);
  /// Intermediate vectors used for degree m (slow or fast path per options).
  std::map<Partition, FockVector> intermediate(int m);

 private:
  Modulus mod_;
  CanonicalOptions options_;
  std::map<int, std::unique_ptr<BasisMatrix>> cache_;
};

BasisMatrix canonical_basis(Modulus mod, int m, CanonicalOptions options = {});

struct TheoremReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// (i) entries in Z[q]; (ii) d_{mu mu} = 1 and d_{lambda mu} = 0 unless
/// lambda dominates mu; (iii) constant residue content per column. Also
/// checks the crystal-lattice congruence (off-diagonal entries in qZ[q]).
TheoremReport verify_theorem41(Modulus mod, const BasisMatrix& M);

/// Coefficients c with A(mu) = sum_nu c_{nu mu} G(nu); the result is keyed
/// (nu, mu). Throws Error(TheoremViolation) if A is not in the span.
std::map<std::pair<Partition, Partition>, LaurentPoly> a_in_terms_of_g(
    const BasisMatrix& G, const std::map<Partition, FockVector>& A);

}  // namespace spinfock
