#include "spinfock/modular.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spinfock/crystal.hpp"
#include "spinfock/error.hpp"

namespace spinfock {

bool is_dp_minus(const Partition& lambda) {
  int even = 0;
  for (int x : lambda.parts()) even += x % 2 == 0;
  return even % 2 == 1;
}

namespace {

BigInt pow2(int k) { return BigInt(1) << k; }

void add_to(CharacterVector& v, const Partition& key, const BigInt& c) {
  if (c == 0) return;
  auto& slot = v[key];
  slot += c;
  if (slot == 0) v.erase(key);
}

void add_to(ClassicalVector& v, const Partition& key, const Rational& c) {
  if (c == 0) return;
  auto& slot = v[key];
  slot += c;
  if (slot == 0) v.erase(key);
}

}  // namespace

CharacterVector specialize(Modulus mod, const FockVector& v) {
  CharacterVector out;
  for (const auto& [lambda, d] : v.terms()) {
    if (!lambda.is_strict()) continue;  // ghost
    const int exponent = b_exponent(lambda) - a_h(mod, lambda);
    if (exponent < 0) {
      throw Error(ErrorCode::TheoremViolation, "negative 2-exponent at " + lambda.to_label());
    }
    add_to(out, lambda, d.eval_at_one() * pow2(exponent));
  }
  return out;
}

CharacterVector underline_g(Modulus mod, const FockVector& g_column) { return specialize(mod, g_column); }

CharacterVector double_underline(const CharacterVector& v) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "zero character vector");
  unsigned shift = ~0u;
  for (const auto& [lambda, c] : v) {
    BigInt a = c < 0 ? BigInt(-c) : c;
    shift = std::min<unsigned>(shift, static_cast<unsigned>(boost::multiprecision::lsb(a)));
  }
  CharacterVector out;
  for (const auto& [lambda, c] : v) out.emplace(lambda, c / pow2(static_cast<int>(shift)));
  return out;
}

std::vector<Partition> ReducedMatrix::labels() const {
  std::vector<Partition> out;
  for (auto it = columns.rbegin(); it != columns.rend(); ++it) out.push_back(it->first);
  return out;
}

BigInt ReducedMatrix::entry(const Partition& lambda, const Partition& mu) const {
  auto col = columns.find(mu);
  if (col == columns.end()) throw Error(ErrorCode::MissingContext, "no column " + mu.to_label());
  auto it = col->second.find(lambda);
  return it == col->second.end() ? BigInt(0) : it->second;
}

ReducedMatrix reduced_matrix(Modulus mod, const BasisMatrix& G) {
  ReducedMatrix out;
  out.p = mod.h();
  out.m = G.m;
  out.rows = enumerate_dp(G.m);
  for (const auto& [mu, col] : G.columns) out.columns.emplace(mu, double_underline(underline_g(mod, col)));
  return out;
}

ReducedMatrix reduced_matrix(Modulus mod, int m, CanonicalOptions options) {
  return reduced_matrix(mod, canonical_basis(mod, m, options));
}

namespace {

DecompositionFixture::Label parse_label(std::string text) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.pop_back();
  while (!text.empty() && text.front() == ' ') text.erase(text.begin());
  DecompositionFixture::Label label;
  if (!text.empty() && text.back() == '\'') {
    label.associate = true;
    text.pop_back();
  }
  label.partition = Partition::parse(text);
  return label;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

DecompositionFixture parse_decomposition_csv(std::string_view csv) {
  DecompositionFixture fx;
  std::stringstream ss{std::string(csv)};
  std::string line;
  bool header = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_csv_line(line);
    if (cells.size() < 2) throw Error(ErrorCode::InconsistentFixture, "short CSV line: " + line);
    if (header) {
      for (std::size_t k = 1; k < cells.size(); ++k) fx.columns.push_back(parse_label(cells[k]));
      header = false;
      continue;
    }
    if (cells.size() != fx.columns.size() + 1) {
      throw Error(ErrorCode::InconsistentFixture, "row width mismatch: " + line);
    }
    fx.rows.push_back(parse_label(cells[0]));
    std::vector<BigInt> row;
    for (std::size_t k = 1; k < cells.size(); ++k) {
      try {
        row.emplace_back(cells[k].empty() ? std::string("0") : cells[k]);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InconsistentFixture, "bad entry '" + cells[k] + "'");
      }
    }
    fx.entries.push_back(std::move(row));
  }
  if (header) throw Error(ErrorCode::InconsistentFixture, "empty CSV");
  return fx;
}

namespace {

std::string csv_label(const DecompositionFixture::Label& l) {
  const auto& parts = l.partition.parts();
  bool wide = std::any_of(parts.begin(), parts.end(), [](int x) { return x > 9; });
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (wide && k) s.push_back('.');
    s += std::to_string(parts[k]);
  }
  if (wide && parts.size() == 1) s.push_back('.');
  return l.associate ? s + "'" : s;
}

}  // namespace

std::string to_csv(const DecompositionFixture& fx) {
  std::string out = "row";
  for (const auto& c : fx.columns) out += "," + csv_label(c);
  out += "\n";
  for (std::size_t r = 0; r < fx.rows.size(); ++r) {
    out += csv_label(fx.rows[r]);
    for (const auto& e : fx.entries[r]) out += "," + e.str();
    out += "\n";
  }
  return out;
}

ReducedMatrix reduce_external_matrix(const DecompositionFixture& fx, int p) {
  std::set<Partition> col_parts;
  for (const auto& c : fx.columns) col_parts.insert(c.partition);
  int m = -1;
  for (const auto& r : fx.rows) {
    if (!r.partition.is_strict()) throw Error(ErrorCode::InconsistentFixture, "row label not strict");
    if (m >= 0 && r.partition.degree() != m) throw Error(ErrorCode::InconsistentFixture, "mixed row degrees");
    m = r.partition.degree();
  }
  ReducedMatrix out;
  out.p = p;
  out.m = std::max(m, 0);
  out.rows = enumerate_dp(out.m);
  for (const Partition& mu : col_parts) {
    // sum the associate pair of columns
    std::vector<BigInt> summed(fx.rows.size(), 0);
    for (std::size_t c = 0; c < fx.columns.size(); ++c) {
      if (fx.columns[c].partition != mu) continue;
      for (std::size_t r = 0; r < fx.rows.size(); ++r) summed[r] += fx.entries[r][c];
    }
    // merge <lambda>, <lambda>' onto <lambda^>
    std::map<Partition, std::pair<std::vector<BigInt>, std::vector<BigInt>>> by_row;
    for (std::size_t r = 0; r < fx.rows.size(); ++r) {
      auto& slot = by_row[fx.rows[r].partition];
      (fx.rows[r].associate ? slot.second : slot.first).push_back(summed[r]);
    }
    CharacterVector col;
    for (const auto& [lambda, pair] : by_row) {
      const auto& [plain, primed] = pair;
      if (plain.size() != 1 || primed.size() > 1) {
        throw Error(ErrorCode::InconsistentFixture, "row labels for " + lambda.to_label());
      }
      if (!primed.empty() && primed.front() != plain.front()) {
        throw Error(ErrorCode::InconsistentFixture, "associate rows disagree at " + lambda.to_label() + " in column " +
                                                        mu.to_label());
      }
      if (is_dp_minus(lambda) != !primed.empty()) {
        throw Error(ErrorCode::InconsistentFixture, "associate pairing does not match parity of " + lambda.to_label());
      }
      add_to(col, lambda, plain.front());
    }
    out.columns.emplace(mu, std::move(col));
  }
  return out;
}

ClassicalVector classical_apply(Modulus mod, ClassicalGenerator gen, const ClassicalVector& v) {
  using Kind = ClassicalGenerator::Kind;
  const int h = mod.h(), n = mod.n();
  auto congruent_pm = [&](int j, int i) {
    int r = ((j % h) + h) % h;
    return r == ((n + i) % h + h) % h || r == ((n - i) % h + h) % h;
  };
  // weight of f^inf_j / e^inf_j inside the generator
  auto f_weight = [&](int j) -> int {
    switch (gen.kind) {
      case Kind::F: return congruent_pm(j, gen.index) ? 1 : 0;
      case Kind::FInfinity: return j == gen.index ? 1 : 0;
      case Kind::FTotal: return 1;
      default: return 0;
    }
  };
  auto e_weight = [&](int j) -> int {
    switch (gen.kind) {
      case Kind::E:
        if (gen.index < n) return congruent_pm(j, gen.index) ? 1 : 0;
        if (j == 0) return 1;
        return (j % h == 0 || j % h == h - 1) ? 2 : 0;
      case Kind::EInfinity: return j == gen.index ? 1 : 0;
      case Kind::ETotal: return j == 0 ? 1 : 2;
      default: return 0;
    }
  };
  const bool raising = gen.kind == Kind::F || gen.kind == Kind::FInfinity || gen.kind == Kind::FTotal;
  if ((gen.kind == Kind::F || gen.kind == Kind::E) && (gen.index < 0 || gen.index > n)) {
    throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  }
  ClassicalVector out;
  for (const auto& [lambda, c] : v) {
    if (!lambda.is_strict()) continue;
    std::vector<int> parts = lambda.parts();
    parts.push_back(0);  // the implicit part 0
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const int x = parts[k];
      if (k + 1 == parts.size() && !raising) break;  // nothing to lower below 0
      const int j = raising ? x : x - 1;
      const int w = raising ? f_weight(j) : e_weight(j);
      if (w == 0) continue;
      std::vector<int> next = parts;
      next[k] = raising ? x + 1 : x - 1;
      std::sort(next.begin(), next.end(), std::greater<>());
      Partition nu(std::move(next));
      if (!nu.is_strict()) continue;
      add_to(out, nu, c * w);
    }
  }
  return out;
}

ClassicalVector to_schur_p(Modulus mod, const FockVector& v) {
  ClassicalVector out;
  for (const auto& [lambda, d] : v.terms()) {
    if (!lambda.is_strict()) continue;
    add_to(out, lambda, Rational(d.eval_at_one(), pow2(a_h(mod, lambda))));
  }
  return out;
}

CharacterVector spin_induction(Modulus mod, int i, const CharacterVector& v) {
  const int h = mod.h(), n = mod.n();
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  auto adds_residue = [&](int j) {
    int r = ((j % h) + h) % h;
    return r == (n + i) % h || r == ((n - i) % h + h) % h;
  };
  CharacterVector out;
  for (const auto& [lambda, c] : v) {
    const bool pair = is_dp_minus(lambda);
    std::vector<int> parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (!adds_residue(parts[k])) continue;
      if (k > 0 && parts[k - 1] == parts[k] + 1) continue;
      std::vector<int> next = parts;
      ++next[k];
      // an associate pair induces onto both summands of the grown character
      add_to(out, Partition(std::move(next)), pair ? BigInt(2) * c : c);
    }
    if (adds_residue(0) && (parts.empty() || parts.back() > 1)) {
      std::vector<int> next = parts;
      next.push_back(1);
      add_to(out, Partition(std::move(next)), c);
    }
  }
  return out;
}

PartitionIdentityReport partition_identity_check(Modulus mod, int max_m) {
  PartitionIdentityReport report;
  const auto series = regular_count_series(mod, max_m);
  const auto graph = component(mod, Partition{}, max_m);
  std::vector<std::int64_t> crystal(static_cast<std::size_t>(max_m) + 1, 0);
  for (const auto& v : graph.vertices) ++crystal[v.degree()];
  for (int m = 0; m <= max_m; ++m) {
    PartitionIdentityRow row{m, static_cast<std::int64_t>(enumerate_dpr_h(mod, m).size()), series[m], crystal[m]};
    if (row.regular != row.series || row.regular != row.crystal) report.ok = false;
    report.rows.push_back(row);
  }
  return report;
}

std::size_t exact_rank(const std::vector<CharacterVector>& vectors) {
  std::set<Partition> keys;
  for (const auto& v : vectors) {
    for (const auto& [k, c] : v) keys.insert(k);
  }
  std::vector<Partition> coords(keys.begin(), keys.end());
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) {
    std::vector<Rational> row(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) {
      auto it = v.find(coords[j]);
      if (it != v.end()) row[j] = it->second;
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < coords.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t j = col; j < coords.size(); ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

RankReport independence_check(Modulus mod, int m) {
  const auto labels = enumerate_dpr_h(mod, m);
  std::vector<CharacterVector> vectors;
  for (const auto& mu : labels) vectors.push_back(specialize(mod, a_vector(mod, mu)));
  RankReport report;
  report.expected = labels.size();
  report.rank = exact_rank(vectors);
  report.ok = report.rank == report.expected;
  return report;
}

}  // namespace spinfock
