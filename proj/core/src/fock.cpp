#include "spinfock/fock.hpp"

#include <algorithm>

#include "spinfock/error.hpp"

namespace spinfock {

FockVector FockVector::basis(const Partition& lambda, LaurentPoly coeff) {
  FockVector v;
  if (!coeff.is_zero()) v.terms_.emplace(lambda, std::move(coeff));
  return v;
}

LaurentPoly FockVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

int FockVector::degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [lambda, c] : terms_) {
    if (lambda.degree() != d) throw Error(ErrorCode::DegreeMismatch, "inhomogeneous Fock vector");
  }
  return d;
}

void FockVector::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[lambda];
  slot += c;
  if (slot.is_zero()) terms_.erase(lambda);
}

void FockVector::prune(const Partition& lambda) {
  auto it = terms_.find(lambda);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

void FockVector::add_scaled(const FockVector& other, const LaurentPoly& factor) {
  if (factor.is_zero()) return;
  for (const auto& [lambda, c] : other.terms_) add(lambda, c * factor);
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

FockVector FockVector::scaled(const LaurentPoly& factor) const {
  FockVector out;
  out.add_scaled(*this, factor);
  return out;
}

std::ostream& operator<<(std::ostream& os, const FockVector& v) {
  if (v.is_zero()) return os << "0";
  bool first = true;
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second << ")|" << it->first.to_string() << ">";
  }
  return os;
}

namespace {

int mod_h(int j, int h) { return ((j % h) + h) % h; }

bool is_pm(int j, int center, int i, int h) {
  int r = mod_h(j, h);
  return r == mod_h(center + i, h) || r == mod_h(center - i, h);
}

// t_i acting on u_j: exponent of q.
int letter_t_exponent(Modulus mod, int i, int j) {
  const int h = mod.h(), n = mod.n();
  if (i == n) {
    if (mod_h(j, h) == h - 1) return 2;
    if (mod_h(j, h) == 1) return -2;
    return 0;
  }
  const int weight = i == 0 ? 4 : 2;
  if (is_pm(j, n, i, h)) return weight;
  if (is_pm(j, n + 1, i, h)) return -weight;
  return 0;
}

// f_i u_j: nullopt if zero, else whether the coefficient is (q + q^-1).
std::optional<bool> letter_f(Modulus mod, int i, int j) {
  const int h = mod.h(), n = mod.n();
  if (i == n) {
    if (mod_h(j, h) == h - 1) return false;
    if (mod_h(j, h) == 0) return true;
    return std::nullopt;
  }
  if (is_pm(j, n, i, h)) return false;
  return std::nullopt;
}

std::optional<bool> letter_e(Modulus mod, int i, int j) {
  const int h = mod.h(), n = mod.n();
  if (j <= 0) return std::nullopt;
  if (i == n) {
    if (mod_h(j, h) == 1) return false;
    if (mod_h(j, h) == 0) return true;
    return std::nullopt;
  }
  if (is_pm(j, n + 1, i, h)) return false;
  return std::nullopt;
}

void check_generator(Modulus mod, int i) {
  if (i < 0 || i > mod.n()) {
    throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(i) + " outside 0.." +
                                                std::to_string(mod.n()));
  }
}

std::string word_text(const WedgeWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

}  // namespace

std::optional<OrderedTerm> normal_order_term(Modulus mod, WedgeWord word, std::mt19937_64* rng) {
  const int h = mod.h();
  while (!word.empty() && word.back() == 0) word.pop_back();
  int swaps = 0;
  std::vector<std::size_t> candidates;
  for (;;) {
    candidates.clear();
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      int a = word[k], b = word[k + 1];
      if (a < b || (a == b && a % h != 0)) {
        candidates.push_back(k);
        if (!rng) break;
      }
    }
    if (candidates.empty()) break;
    std::size_t k = candidates.front();
    if (rng) k = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng)];
    int a = word[k], b = word[k + 1];
    if (a == b) return std::nullopt;
    int r = mod_h(a, h);
    if (b == a + 1 && (r == 0 || r == h - 1)) {
      std::swap(word[k], word[k + 1]);
      ++swaps;
      continue;
    }
    throw Error(ErrorCode::UncoveredDisorder, "word (" + word_text(word) + ") at position " + std::to_string(k));
  }
  while (!word.empty() && word.back() == 0) word.pop_back();
  return OrderedTerm{Partition(std::move(word)), swaps};
}

FockVector normal_order(Modulus mod, const WedgeWord& word, std::mt19937_64* rng) {
  auto term = normal_order_term(mod, word, rng);
  if (!term) return {};
  return FockVector::basis(term->partition,
                           LaurentPoly::monomial(2 * term->swaps, term->swaps % 2 ? -1 : 1));
}

int t_exponent(Modulus mod, int i, const Partition& lambda) {
  check_generator(mod, i);
  int total = i == mod.n() ? 1 : 0;
  for (int j : lambda.parts()) total += letter_t_exponent(mod, i, j);
  return total;
}

std::vector<RawTerm> raw_f_terms(Modulus mod, int i, const Partition& lambda) {
  check_generator(mod, i);
  const auto& parts = lambda.parts();
  const std::size_t r = parts.size();
  // suffix[k] = t-exponent of letters k+1..r plus the vacuum
  std::vector<int> suffix(r + 1, 0);
  suffix[r] = i == mod.n() ? 1 : 0;
  for (std::size_t k = r; k-- > 0;) suffix[k] = suffix[k + 1] + letter_t_exponent(mod, i, parts[k]);
  std::vector<RawTerm> out;
  for (std::size_t k = 0; k < r; ++k) {
    auto f = letter_f(mod, i, parts[k]);
    if (!f) continue;
    WedgeWord w(parts.begin(), parts.end());
    ++w[k];
    out.push_back(RawTerm{std::move(w), suffix[k + 1], *f});
  }
  if (i == mod.n()) {
    WedgeWord w(parts.begin(), parts.end());
    w.push_back(1);
    out.push_back(RawTerm{std::move(w), 0, false});
  }
  return out;
}

std::vector<RawTerm> raw_e_terms(Modulus mod, int i, const Partition& lambda) {
  check_generator(mod, i);
  const auto& parts = lambda.parts();
  std::vector<RawTerm> out;
  int prefix = 0;  // t_i^{-1} on letters before position k
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto e = letter_e(mod, i, parts[k]);
    if (e) {
      WedgeWord w(parts.begin(), parts.end());
      --w[k];
      out.push_back(RawTerm{std::move(w), -prefix, *e});
    }
    prefix += letter_t_exponent(mod, i, parts[k]);
  }
  return out;
}

namespace {

template <typename RawFn>
FockVector apply_raw(Modulus mod, const FockVector& v, RawFn raw) {
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    for (const RawTerm& t : raw(lambda)) {
      auto ordered = normal_order_term(mod, t.word);
      if (!ordered) continue;
      const int shift = t.shift + 2 * ordered->swaps;
      const BigInt sign = ordered->swaps % 2 ? -1 : 1;
      LaurentPoly& slot = out.slot(ordered->partition);
      if (t.quantum_two) {
        slot.add_scaled(c, shift + 1, sign);
        slot.add_scaled(c, shift - 1, sign);
      } else {
        slot.add_scaled(c, shift, sign);
      }
      out.prune(ordered->partition);
    }
  }
  return out;
}

}  // namespace

FockVector apply_f(Modulus mod, int i, const FockVector& v) {
  return apply_raw(mod, v, [&](const Partition& l) { return raw_f_terms(mod, i, l); });
}

FockVector apply_e(Modulus mod, int i, const FockVector& v) {
  return apply_raw(mod, v, [&](const Partition& l) { return raw_e_terms(mod, i, l); });
}

FockVector apply_t(Modulus mod, int i, const FockVector& v) {
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) out.add(lambda, c.shifted(t_exponent(mod, i, lambda)));
  return out;
}

FockVector apply_t_inv(Modulus mod, int i, const FockVector& v) {
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) out.add(lambda, c.shifted(-t_exponent(mod, i, lambda)));
  return out;
}

FockVector apply_f_divided(Modulus mod, int i, int k, const FockVector& v) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "divided power exponent must be >= 1");
  FockVector cur = v;
  for (int step = 0; step < k; ++step) cur = apply_f(mod, i, cur);
  if (k == 1) return cur;
  const LaurentPoly denom = q_factorial(k, i, mod.n());
  FockVector out;
  for (const auto& [lambda, c] : cur.terms()) out.add(lambda, exact_div(c, denom));
  return out;
}

ResidueContent weight(Modulus mod, const FockVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "weight of the zero vector");
  ResidueContent w = residue_content(mod, v.terms().begin()->first);
  for (const auto& [lambda, c] : v.terms()) {
    if (residue_content(mod, lambda) != w) throw Error(ErrorCode::MixedWeight, lambda.to_label());
  }
  return w;
}

LaurentPoly norm_squared(Modulus mod, const Partition& lambda) {
  if (!in_dp_h(mod, lambda)) throw Error(ErrorCode::NotInDPh, lambda.to_label());
  LaurentPoly out = 1;
  const auto& parts = lambda.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    if (parts[k] % mod.h() == 0) {
      for (std::size_t i = 1; i <= run - k; ++i) {
        // 1 - (-q^2)^i
        LaurentPoly factor = 1;
        factor.add_term(2 * static_cast<int>(i), i % 2 ? 1 : -1);
        out *= factor;
      }
    }
    k = run;
  }
  return out;
}

}  // namespace spinfock
