#pragma once

#include <optional>
#include <vector>

#include "spinfock/partition.hpp"

namespace spinfock {

// String statistics in the crystal graph of V_aff: vertices j, with i-arrows
// j -> j+1 when j = n +- i (i < n) or j = -1, 0 (i = n), mod h.
int eps_aff(Modulus mod, int i, int j);
int phi_aff(Modulus mod, int i, int j);

/// Kashiwara operators on DP_h. The head part is compared against the string
/// statistics of the tail; the vacuum has phi_i = delta_{in} and
/// f~_n(empty) = (1). A null result means the operator kills the vertex.
std::optional<Partition> ftilde(Modulus mod, int i, const Partition& lambda);
std::optional<Partition> etilde(Modulus mod, int i, const Partition& lambda);
int eps(Modulus mod, int i, const Partition& lambda);
int phi(Modulus mod, int i, const Partition& lambda);

struct CrystalEdge {
  Partition from;
  int color = 0;
  Partition to;

  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
  int h = 3;
  int max_degree = 0;
  /// Sorted by (degree, decreasing lex).
  std::vector<Partition> vertices;
  /// Sorted by source vertex order, then color.
  std::vector<CrystalEdge> edges;

  std::vector<Partition> vertices_of_degree(int m) const;
};

/// Everything reachable from `start` by f~_i within `max_degree`.
CrystalGraph component(Modulus mod, const Partition& start, int max_degree);

/// Partitions of degree <= max_m with every part divisible by h.
std::vector<Partition> highest_weight_vertices(Modulus mod, int max_m);

}  // namespace spinfock
