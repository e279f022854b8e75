#pragma once

#include <string>
#include <vector>

#include "spinfock/canonical.hpp"
#include "spinfock/fock.hpp"
#include "spinfock/modular.hpp"

namespace spinfock::fixtures {

/// f_i |input> = expected in the Fock space of modulus h.
struct ActionFixture {
  std::string name;
  int h = 3;
  int i = 0;
  Partition input;
  FockVector expected;
};

/// A(label) or G(label) in the Fock space of modulus h.
struct VectorFixture {
  std::string name;
  int h = 3;
  char kind = 'G';  // 'A' or 'G'
  Partition label;
  FockVector expected;
};

/// A column of a reduced matrix written as an integer combination of
/// double-underlined G's.
struct Combination {
  std::vector<std::pair<Partition, BigInt>> terms;
};

std::vector<ActionFixture> action_fixtures();
std::vector<VectorFixture> vector_fixtures();

/// n = 1, m = 10 canonical basis (rows DP_3(10), columns DPR_3(10)).
BasisMatrix basis_h3_m10();
/// Spin decomposition matrix for p = 3, m = 10 with associate pairs, as CSV.
const std::string& external_csv_p3_m10();
/// Reduced decomposition matrix for p = 3, m = 10.
ReducedMatrix reduced_p3_m10();

/// Ladder monomial of (11,7,7,4) for n = 3.
const std::string& ladder_word_11774();

/// The p = 3, m = 11 reduced decomposition columns in terms of G's.
std::vector<Combination> reduced_columns_p3_m11();

/// Degree-10 vertices of the n = 1 crystal.
std::vector<Partition> crystal_degree10_n1();

}  // namespace spinfock::fixtures
