#include "spinfock/canonical.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "spinfock/error.hpp"

namespace spinfock {

std::vector<Partition> BasisMatrix::labels() const {
  std::vector<Partition> out;
  for (auto it = columns.rbegin(); it != columns.rend(); ++it) out.push_back(it->first);
  return out;
}

std::vector<Partition> BasisMatrix::rows(bool all_rows) const {
  if (all_rows) return enumerate_dp_h(Modulus(h), m);
  std::vector<Partition> out;
  for (const auto& [mu, col] : columns) {
    for (const auto& [lambda, c] : col.terms()) out.push_back(lambda);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const FockVector& BasisMatrix::column(const Partition& mu) const {
  auto it = columns.find(mu);
  if (it == columns.end()) throw Error(ErrorCode::MissingContext, "no column " + mu.to_label());
  return it->second;
}

LaurentPoly BasisMatrix::entry(const Partition& lambda, const Partition& mu) const {
  return column(mu).coeff(lambda);
}

FockVector a_vector(Modulus mod, const Partition& mu) {
  if (!is_h_regular(mod, mu)) throw Error(ErrorCode::NotRegular, mu.to_label());
  FockVector v = FockVector::vacuum();
  for (const Ladder& l : ladders(mod, mu)) v = apply_f_divided(mod, l.residue, l.cells, v);
  return v;
}

std::pair<Partition, Ladder> strip_outer_ladder(Modulus mod, const Partition& mu) {
  auto all = ladders(mod, mu);
  if (all.empty()) throw Error(ErrorCode::InvalidArgument, "empty partition has no ladders");
  const Ladder outer = all.back();
  std::vector<int> parts = mu.parts();
  for (std::size_t row = 0; row < parts.size(); ++row) {
    const int len = mu[row];
    int removed = 0;
    for (int c = 0; c < len; ++c) {
      // the largest ladder index in a row sits at its end
      if (ladder_index(mod, static_cast<int>(row) + 1, c) == outer.index) ++removed;
    }
    parts[row] -= removed;
  }
  return {Partition(std::move(parts)), outer};
}

FockVector a_vector_fast(Modulus mod, const Partition& mu, const BasisMatrix& lower) {
  if (!is_h_regular(mod, mu)) throw Error(ErrorCode::NotRegular, mu.to_label());
  if (mu.empty()) return FockVector::vacuum();
  auto [nu, outer] = strip_outer_ladder(mod, mu);
  auto it = lower.columns.find(nu);
  if (it == lower.columns.end()) {
    throw Error(ErrorCode::MissingContext, "G" + nu.to_label() + " needed for A" + mu.to_label());
  }
  return apply_f_divided(mod, outer.residue, outer.cells, it->second);
}

namespace {

std::string poly_failure(const Partition& lambda, const Partition& mu, const LaurentPoly& d, const char* why) {
  return "d[" + lambda.to_label() + "," + mu.to_label() + "] = " + d.to_string() + ": " + why;
}

}  // namespace

BasisMatrix reduce_to_canonical(Modulus mod, int m, const std::map<Partition, FockVector>& intermediate,
                                int jobs) {
  std::map<ResidueContent, std::vector<Partition>> blocks;
  for (const auto& [mu, a] : intermediate) blocks[residue_content(mod, mu)].push_back(mu);
  std::vector<std::pair<ResidueContent, std::vector<Partition>>> block_list(blocks.begin(), blocks.end());
  std::vector<std::map<Partition, FockVector>> results(block_list.size());

  detail::parallel_for(block_list.size(), jobs, [&](std::size_t b) {
    const auto& [content, labels] = block_list[b];  // labels increasing lex
    auto& done = results[b];
    for (std::size_t idx = labels.size(); idx-- > 0;) {
      const Partition& mu = labels[idx];
      FockVector vec = intermediate.at(mu);
      if (vec.coeff(mu) != LaurentPoly(1)) {
        throw Error(ErrorCode::TheoremViolation, "intermediate vector A" + mu.to_label() + " has diagonal " +
                                                     vec.coeff(mu).to_string());
      }
      if (weight(mod, vec) != content) throw Error(ErrorCode::MixedWeight, "A" + mu.to_label());
      for (std::size_t s = idx + 1; s < labels.size(); ++s) {
        const Partition& label = labels[s];
        LaurentPoly gamma = symmetrize_tail(vec.coeff(label));
        if (!gamma.is_zero()) vec.add_scaled(done.at(label), -gamma);
        if (!vec.coeff(label).in_q_polynomial_ring()) {
          throw Error(ErrorCode::TheoremViolation, poly_failure(label, mu, vec.coeff(label), "not fixed"));
        }
      }
      for (const auto& [lambda, d] : vec.terms()) {
        if (lambda == mu) continue;
        if (!d.in_q_polynomial_ring()) throw Error(ErrorCode::TheoremViolation, poly_failure(lambda, mu, d, "not in qZ[q]"));
      }
      done.emplace(mu, std::move(vec));
    }
  });

  BasisMatrix out;
  out.h = mod.h();
  out.m = m;
  for (auto& r : results) out.columns.merge(r);
  return out;
}

CanonicalEngine::CanonicalEngine(Modulus mod, CanonicalOptions options) : mod_(mod), options_(options) {}

std::map<Partition, FockVector> CanonicalEngine::intermediate(int m) {
  const auto labels = enumerate_dpr_h(mod_, m);
  if (options_.fast_path) {
    for (const auto& mu : labels) {
      if (mu.empty()) continue;
      basis(m - strip_outer_ladder(mod_, mu).second.cells);
    }
  }
  std::vector<FockVector> vectors(labels.size());
  detail::parallel_for(labels.size(), options_.jobs, [&](std::size_t k) {
    const Partition& mu = labels[k];
    if (!options_.fast_path || mu.empty()) {
      vectors[k] = a_vector(mod_, mu);
      return;
    }
    const int lower = m - strip_outer_ladder(mod_, mu).second.cells;
    vectors[k] = a_vector_fast(mod_, mu, *cache_.at(lower));
  });
  std::map<Partition, FockVector> out;
  for (std::size_t k = 0; k < labels.size(); ++k) out.emplace(labels[k], std::move(vectors[k]));
  return out;
}

const BasisMatrix& CanonicalEngine::basis(int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (auto it = cache_.find(m); it != cache_.end()) return *it->second;
  auto a = intermediate(m);
  auto result = std::make_unique<BasisMatrix>(reduce_to_canonical(mod_, m, a, options_.jobs));
  return *cache_.emplace(m, std::move(result)).first->second;
}

BasisMatrix canonical_basis(Modulus mod, int m, CanonicalOptions options) {
  CanonicalEngine engine(mod, options);
  return engine.basis(m);
}

TheoremReport verify_theorem41(Modulus mod, const BasisMatrix& M) {
  TheoremReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };
  for (const auto& [mu, col] : M.columns) {
    if (col.coeff(mu) != LaurentPoly(1)) fail(poly_failure(mu, mu, col.coeff(mu), "diagonal is not 1"));
    const auto content = residue_content(mod, mu);
    for (const auto& [lambda, d] : col.terms()) {
      if (lambda.degree() != M.m) {
        fail(poly_failure(lambda, mu, d, "wrong degree"));
        continue;
      }
      if (!d.in_polynomial_ring()) fail(poly_failure(lambda, mu, d, "(i) negative exponent"));
      if (!dominance_leq(mu, lambda)) fail(poly_failure(lambda, mu, d, "(ii) row does not dominate column"));
      if (lambda != mu && !d.in_q_polynomial_ring()) fail(poly_failure(lambda, mu, d, "not in qZ[q]"));
      if (residue_content(mod, lambda) != content) fail(poly_failure(lambda, mu, d, "(iii) residue content differs"));
    }
  }
  return report;
}

std::map<std::pair<Partition, Partition>, LaurentPoly> a_in_terms_of_g(
    const BasisMatrix& G, const std::map<Partition, FockVector>& A) {
  std::map<std::pair<Partition, Partition>, LaurentPoly> out;
  for (const auto& [mu, a] : A) {
    FockVector rem = a;
    for (const auto& [nu, g] : G.columns) {  // increasing lex
      LaurentPoly c = rem.coeff(nu);
      if (c.is_zero()) continue;
      out[{nu, mu}] = c;
      rem.add_scaled(g, -c);
    }
    if (!rem.is_zero()) throw Error(ErrorCode::TheoremViolation, "A" + mu.to_label() + " not in the span of G");
  }
  return out;
}

}  // namespace spinfock
