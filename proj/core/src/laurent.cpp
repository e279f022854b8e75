#include "spinfock/laurent.hpp"

#include <cctype>

#include "spinfock/error.hpp"

namespace spinfock {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c == ' ' || c == '{' || c == '}' || c == '(' || c == ')' || c == '*' || c == '\\') continue;
    s.push_back(c);
  }
  auto fail = [&] { return Error(ErrorCode::InvalidArgument, "bad polynomial '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt coeff = start == pos ? BigInt(1) : BigInt(s.substr(start, pos - start));
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t estart = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == estart) throw fail();
        exponent = std::stoi(s.substr(estart, pos - estart));
      }
    } else if (start == pos) {
      throw fail();
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail();
    out.add_term(exponent, sign * coeff);
  }
  return out;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.begin(), -e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int shift, const BigInt& factor) {
  for (const auto& [e, c] : rhs.terms_) add_term(e + shift, c * factor);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e != 1) out += e < 0 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

int q_i_exponent(int i, int n) {
  if (i < 0 || i > n) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  if (i == n) return 1;
  return i == 0 ? 4 : 2;
}

LaurentPoly q_integer(int k, int i, int n) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative quantum integer");
  const int step = q_i_exponent(i, n);
  // q_i^{k-1} + q_i^{k-3} + ... + q_i^{-(k-1)}
  LaurentPoly out;
  for (int j = 0; j < k; ++j) out.add_term(step * (k - 1 - 2 * j), 1);
  return out;
}

LaurentPoly q_factorial(int k, int i, int n) {
  LaurentPoly out = 1;
  for (int j = 2; j <= k; ++j) out *= q_integer(j, i, n);
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (p.is_zero()) return {};
  const int dmax = d.max_exponent();
  const BigInt& lead = d.terms().rbegin()->second;
  const int floor_exp = p.min_exponent() - d.min_exponent();
  LaurentPoly rem = p;
  LaurentPoly quot;
  auto fail = [&] {
    return Error(ErrorCode::NotDivisible, "(" + p.to_string() + ") / (" + d.to_string() + ")");
  };
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - dmax;
    if (e < floor_exp) throw fail();
    const BigInt& top = rem.terms().rbegin()->second;
    if (top % lead != 0) throw fail();
    BigInt c = top / lead;
    quot.add_term(e, c);
    rem.add_scaled(d, e, -c);
  }
  return quot;
}

LaurentPoly symmetrize_tail(const LaurentPoly& c) {
  LaurentPoly gamma;
  for (const auto& [e, coeff] : c.terms()) {
    if (e > 0) break;
    gamma.add_term(e, coeff);
    if (e < 0) gamma.add_term(-e, coeff);
  }
  return gamma;
}

}  // namespace spinfock
