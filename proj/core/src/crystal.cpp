#include "spinfock/crystal.hpp"

#include <algorithm>
#include <set>

#include "spinfock/error.hpp"

namespace spinfock {

namespace {

int mod_h(int j, int h) { return ((j % h) + h) % h; }

bool has_arrow(Modulus mod, int i, int j) {
  const int h = mod.h(), n = mod.n();
  const int r = mod_h(j, h);
  if (i == n) return r == h - 1 || r == 0;
  return r == mod_h(n + i, h) || r == mod_h(n - i, h);
}

void check_color(Modulus mod, int i) {
  if (i < 0 || i > mod.n()) throw Error(ErrorCode::InvalidArgument, "color out of range");
}

// phi of every suffix lambda_k, lambda_{k+1}, ... (index parts.size() is the vacuum).
std::vector<int> suffix_phi(Modulus mod, int i, const std::vector<int>& parts) {
  std::vector<int> out(parts.size() + 1);
  out[parts.size()] = i == mod.n() ? 1 : 0;
  for (std::size_t k = parts.size(); k-- > 0;) {
    out[k] = phi_aff(mod, i, parts[k]) + std::max(0, out[k + 1] - eps_aff(mod, i, parts[k]));
  }
  return out;
}

Partition checked(Modulus mod, std::vector<int> parts) {
  Partition p(std::move(parts));
  if (!in_dp_h(mod, p)) throw Error(ErrorCode::TheoremViolation, "crystal operator left DP_h: " + p.to_label());
  return p;
}

}  // namespace

int eps_aff(Modulus mod, int i, int j) {
  check_color(mod, i);
  int d = 0;
  while (has_arrow(mod, i, j - d - 1)) ++d;
  return d;
}

int phi_aff(Modulus mod, int i, int j) {
  check_color(mod, i);
  int d = 0;
  while (has_arrow(mod, i, j + d)) ++d;
  return d;
}

std::optional<Partition> ftilde(Modulus mod, int i, const Partition& lambda) {
  check_color(mod, i);
  if (!in_dp_h(mod, lambda)) throw Error(ErrorCode::NotInDPh, lambda.to_label());
  std::vector<int> parts = lambda.parts();
  const auto phis = suffix_phi(mod, i, parts);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (eps_aff(mod, i, parts[k]) >= phis[k + 1]) {
      if (phi_aff(mod, i, parts[k]) == 0) return std::nullopt;
      ++parts[k];
      return checked(mod, std::move(parts));
    }
  }
  if (i != mod.n()) return std::nullopt;
  parts.push_back(1);
  return checked(mod, std::move(parts));
}

std::optional<Partition> etilde(Modulus mod, int i, const Partition& lambda) {
  check_color(mod, i);
  if (!in_dp_h(mod, lambda)) throw Error(ErrorCode::NotInDPh, lambda.to_label());
  std::vector<int> parts = lambda.parts();
  const auto phis = suffix_phi(mod, i, parts);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (phis[k + 1] < eps_aff(mod, i, parts[k])) {
      --parts[k];
      return checked(mod, std::move(parts));
    }
  }
  return std::nullopt;
}

int phi(Modulus mod, int i, const Partition& lambda) {
  check_color(mod, i);
  return suffix_phi(mod, i, lambda.parts()).front();
}

int eps(Modulus mod, int i, const Partition& lambda) {
  check_color(mod, i);
  const auto& parts = lambda.parts();
  const auto phis = suffix_phi(mod, i, parts);
  int e = 0;  // vacuum
  for (std::size_t k = parts.size(); k-- > 0;) e += std::max(0, eps_aff(mod, i, parts[k]) - phis[k + 1]);
  return e;
}

std::vector<Partition> CrystalGraph::vertices_of_degree(int m) const {
  std::vector<Partition> out;
  for (const auto& v : vertices) {
    if (v.degree() == m) out.push_back(v);
  }
  return out;
}

namespace {

struct DegreeThenDecreasingLex {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  }
};

}  // namespace

CrystalGraph component(Modulus mod, const Partition& start, int max_degree) {
  if (!in_dp_h(mod, start)) throw Error(ErrorCode::NotInDPh, start.to_label());
  CrystalGraph g;
  g.h = mod.h();
  g.max_degree = max_degree;
  std::set<Partition, DegreeThenDecreasingLex> seen;
  if (start.degree() > max_degree) return g;
  std::vector<Partition> layer{start};
  seen.insert(start);
  std::vector<CrystalEdge> edges;
  while (!layer.empty()) {
    std::set<Partition> next;
    for (const auto& v : layer) {
      for (int i = 0; i <= mod.n(); ++i) {
        auto w = ftilde(mod, i, v);
        if (!w || w->degree() > max_degree) continue;
        edges.push_back({v, i, *w});
        if (seen.insert(*w).second) next.insert(*w);
      }
    }
    layer.assign(next.begin(), next.end());
  }
  g.vertices.assign(seen.begin(), seen.end());
  DegreeThenDecreasingLex order;
  std::sort(edges.begin(), edges.end(), [&](const CrystalEdge& a, const CrystalEdge& b) {
    if (a.from != b.from) return order(a.from, b.from);
    return a.color < b.color;
  });
  g.edges = std::move(edges);
  return g;
}

std::vector<Partition> highest_weight_vertices(Modulus mod, int max_m) {
  std::vector<Partition> out;
  const int h = mod.h();
  for (int k = 0; k * h <= max_m; ++k) {
    for (const auto& mu : enumerate_partitions(k)) {
      std::vector<int> parts;
      for (int x : mu.parts()) parts.push_back(h * x);
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

}  // namespace spinfock
