#include "spinfock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "spinfock/error.hpp"

namespace spinfock {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotInDPh: return "NOT_IN_DP_H";
    case ErrorCode::NotRegular: return "NOT_REGULAR";
    case ErrorCode::UncoveredDisorder: return "UNCOVERED_DISORDER";
    case ErrorCode::MixedWeight: return "MIXED_WEIGHT";
    case ErrorCode::NotDivisible: return "NOT_DIVISIBLE";
    case ErrorCode::DegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::MissingContext: return "MISSING_CONTEXT";
    case ErrorCode::TheoremViolation: return "THEOREM_VIOLATION";
    case ErrorCode::InconsistentFixture: return "INCONSISTENT_FIXTURE";
  }
  return "UNKNOWN";
}

Modulus::Modulus(int h) : h_(h) {
  if (h < 3 || h % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be odd and >= 3, got " + std::to_string(h));
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "not a partition: " + to_string());
    }
  }
}

Partition Partition::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']') continue;
    cleaned.push_back(c == ' ' || c == '.' ? ',' : c);
  }
  std::vector<int> parts;
  bool has_sep = cleaned.find(',') != std::string::npos;
  if (!has_sep && cleaned.find('0') == std::string::npos) {
    // digit-per-part shorthand, e.g. "3321"
    for (char c : cleaned) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::InvalidArgument, "bad partition literal '" + std::string(text) + "'");
      }
      parts.push_back(c - '0');
    }
    return Partition(std::move(parts));
  }
  std::stringstream ss(cleaned);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::InvalidArgument, "bad partition literal '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(token));
  }
  return Partition(std::move(parts));
}

int Partition::degree() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_strict() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_label(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t seed = p.length();
  for (int x : p.parts()) seed ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

bool in_dp_h(Modulus mod, const Partition& p) {
  const auto& v = p.parts();
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1] && v[i] % mod.h() != 0) return false;
  }
  return true;
}

bool is_h_regular(Modulus mod, const Partition& p) {
  if (!in_dp_h(mod, p)) return false;
  const int h = mod.h();
  for (std::size_t i = 0; i < p.length(); ++i) {
    int gap = p[i] - p[i + 1];
    if (gap > h) return false;
    if (p[i] % h == 0 && gap >= h) return false;
  }
  return true;
}

namespace {

// Emits partitions of `remaining` with parts <= max_part in decreasing lex
// order, keeping only those whose adjacent pairs satisfy `allow(prev, next)`.
void generate(int remaining, int max_part, std::vector<int>& prefix,
              const std::function<bool(int, int)>& allow, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (!prefix.empty() && !allow(prefix.back(), part)) continue;
    prefix.push_back(part);
    generate(remaining - part, part, prefix, allow, out);
    prefix.pop_back();
  }
}

std::vector<Partition> generate_all(int m, const std::function<bool(int, int)>& allow) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(m, m, prefix, allow, out);
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int m) {
  return generate_all(m, [](int, int) { return true; });
}

std::vector<Partition> enumerate_dp(int m) {
  return generate_all(m, [](int prev, int next) { return next < prev; });
}

std::vector<Partition> enumerate_dp_h(Modulus mod, int m) {
  const int h = mod.h();
  return generate_all(m, [h](int prev, int next) { return next < prev || prev % h == 0; });
}

std::vector<Partition> enumerate_dpr_h(Modulus mod, int m) {
  auto all = enumerate_dp_h(mod, m);
  std::erase_if(all, [mod](const Partition& p) { return !is_h_regular(mod, p); });
  return all;
}

int residue(Modulus mod, int column) {
  const int h = mod.h();
  const int n = mod.n();
  int r = ((column - n) % h + h) % h;  // column = n + r (mod h)
  return r <= n ? r : h - r;
}

int ladder_index(Modulus mod, int row, int column) {
  const int h = mod.h();
  return column - column / h + (row - 1) * (h - 1) + 1;
}

std::vector<Ladder> ladders(Modulus mod, const Partition& p) {
  if (!in_dp_h(mod, p)) throw Error(ErrorCode::NotInDPh, p.to_label());
  std::vector<Ladder> by_index;
  for (std::size_t row = 1; row <= p.length(); ++row) {
    for (int c = 0; c < p[row - 1]; ++c) {
      int idx = ladder_index(mod, static_cast<int>(row), c);
      if (static_cast<int>(by_index.size()) < idx) by_index.resize(idx);
      Ladder& l = by_index[idx - 1];
      l.index = idx;
      l.residue = residue(mod, c);
      ++l.cells;
    }
  }
  std::erase_if(by_index, [](const Ladder& l) { return l.cells == 0; });
  return by_index;
}

ResidueContent residue_content(Modulus mod, const Partition& p) {
  ResidueContent counts(mod.n() + 1, 0);
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) ++counts[residue(mod, c)];
  }
  return counts;
}

std::vector<Partition> bar_removal_moves(Modulus mod, const Partition& strict) {
  const int h = mod.h();
  const auto& v = strict.parts();
  std::vector<Partition> moves;
  auto rebuilt = [](std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    int lowered = v[i] - h;
    if (lowered < 0) continue;
    if (lowered > 0 && std::find(v.begin(), v.end(), lowered) != v.end()) continue;
    std::vector<int> next = v;
    if (lowered == 0) {
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      next[i] = lowered;
    }
    moves.push_back(rebuilt(std::move(next)));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] + v[j] != h) continue;
      std::vector<int> next;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != i && k != j) next.push_back(v[k]);
      }
      moves.push_back(rebuilt(std::move(next)));
    }
  }
  return moves;
}

Partition hbar_core(Modulus mod, const Partition& p) {
  if (!in_dp_h(mod, p)) throw Error(ErrorCode::NotInDPh, p.to_label());
  std::vector<int> kept;
  for (int x : p.parts()) {
    if (p.multiplicity(x) == 1) kept.push_back(x);
  }
  Partition current(std::move(kept));
  for (;;) {
    auto moves = bar_removal_moves(mod, current);
    if (moves.empty()) return current;
    current = std::move(moves.front());
  }
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.degree() != mu.degree()) {
    throw Error(ErrorCode::DegreeMismatch, lambda.to_label() + " vs " + mu.to_label());
  }
  int sl = 0, sm = 0;
  std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl > sm) return false;
  }
  return true;
}

std::strong_ordering lex_cmp(const Partition& lambda, const Partition& mu) { return lambda <=> mu; }

Partition shift_by_h_multiple(Modulus mod, const Partition& lambda, const Partition& mu) {
  std::size_t len = std::max(lambda.length(), mu.length());
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) parts[i] = lambda[i] + mod.h() * mu[i];
  return Partition(std::move(parts));
}

int a_h(Modulus mod, const Partition& p) {
  int total = 0;
  for (int x : p.parts()) total += (x - 1) / mod.h();
  return total;
}

int b_exponent(const Partition& p) { return (p.degree() - static_cast<int>(p.length())) / 2; }

std::vector<std::int64_t> regular_count_series(Modulus mod, int max_m) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(max_m) + 1, 0);
  coeffs[0] = 1;
  for (int part = 1; part <= max_m; part += 2) {
    if (part % mod.h() == 0) continue;
    for (int k = part; k <= max_m; ++k) coeffs[k] += coeffs[k - part];
  }
  return coeffs;
}

}  // namespace spinfock
