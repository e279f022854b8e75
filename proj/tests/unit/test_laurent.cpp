#include <doctest.h>

#include <random>

#include "spinfock/error.hpp"
#include "spinfock/laurent.hpp"

using namespace spinfock;

namespace {

const LaurentPoly q = LaurentPoly::monomial(1);

LaurentPoly random_poly(std::mt19937_64& rng, int lo = -5, int hi = 5) {
  LaurentPoly p;
  const int terms = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    p.add_term(std::uniform_int_distribution<int>(lo, hi)(rng), std::uniform_int_distribution<int>(-4, 4)(rng));
  }
  return p;
}

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(P("q^4+q^2") == q * q * (1 + q * q));
  CHECK(P("1-q^4") == 1 - q * q * q * q);
  CHECK(P("2q^3").coeff(3) == 2);
  CHECK(P("q^{-2}") == LaurentPoly::monomial(-2));
  CHECK(P("-q^(-1)") == -LaurentPoly::monomial(-1));
  CHECK(P("0").is_zero());
  CHECK(P("q-q^5").to_string() == "q-q^5");
  CHECK(P("2q^2+1").to_string() == "1+2q^2");
  CHECK(LaurentPoly::monomial(-2).to_string() == "q^{-2}");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK_THROWS_AS(P("q^"), Error);
}

TEST_CASE("arithmetic examples") {
  const LaurentPoly a = 1 + q * q;
  CHECK(a + a * (-(q * q)) == P("1-q^4"));
  const LaurentPoly p = P("3q^{-1}+q^7");
  CHECK(p + 0 == p);
  const LaurentPoly s = q + LaurentPoly::monomial(-1);
  CHECK(s * s == P("q^2+2+q^{-2}"));
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = P("q+q^2");
  p -= q;
  CHECK(p.terms().size() == 1);
  p -= q * q;
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("ring axioms and bar involution on random inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * 1 == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK(a.shifted(3) == a * LaurentPoly::monomial(3));
  }
}

TEST_CASE("bar") {
  CHECK(P("q^2-q^6").bar() == P("q^{-2}-q^{-6}"));
  const LaurentPoly sym = LaurentPoly::monomial(3) + LaurentPoly::monomial(-3);
  CHECK(sym.bar() == sym);
  CHECK(sym.is_bar_invariant());
}

TEST_CASE("arbitrary precision") {
  LaurentPoly p = 1 + q;
  LaurentPoly power = 1;
  for (int k = 0; k < 200; ++k) power *= p;
  CHECK(power.eval_at_one() == BigInt(1) << 200);
  CHECK(power.coeff(100) > BigInt(1) << 190);
}

TEST_CASE("quantum integers") {
  CHECK(q_integer(2, 1, 1) == q + LaurentPoly::monomial(-1));
  CHECK(q_integer(2, 2, 2) == q + LaurentPoly::monomial(-1));
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) CHECK(q_integer(1, i, n) == 1);
  }
  CHECK(q_integer(2, 0, 1) == LaurentPoly::monomial(4) + LaurentPoly::monomial(-4));
  CHECK(q_i_exponent(0, 3) == 4);
  CHECK(q_i_exponent(1, 3) == 2);
  CHECK(q_i_exponent(3, 3) == 1);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) {
      const int e = q_i_exponent(i, n);
      for (int k = 0; k <= 6; ++k) {
        const LaurentPoly qk = q_integer(k, i, n);
        CHECK(qk.is_bar_invariant());
        const LaurentPoly lhs = qk * (LaurentPoly::monomial(e) - LaurentPoly::monomial(-e));
        CHECK(lhs == LaurentPoly::monomial(k * e) - LaurentPoly::monomial(-k * e));
      }
      CHECK(q_factorial(4, i, n) == q_integer(1, i, n) * q_integer(2, i, n) * q_integer(3, i, n) * q_integer(4, i, n));
      CHECK(q_factorial(0, i, n) == 1);
    }
  }
}

TEST_CASE("exact division") {
  const LaurentPoly two = q + LaurentPoly::monomial(-1);
  const LaurentPoly x = P("q^{-3}+2q-q^4");
  CHECK(exact_div(two * x, two) == x);
  CHECK(exact_div(P("1-q^4"), P("1+q^2")) == P("1-q^2"));
  CHECK_THROWS_AS(exact_div(q, 1 + q), Error);
  CHECK_THROWS_AS(exact_div(q, LaurentPoly()), Error);
  try {
    exact_div(q, 1 + q);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng), d = random_poly(rng);
    if (d.is_zero()) continue;
    CHECK(exact_div(a * d, d) == a);
  }
}

TEST_CASE("symmetrize_tail") {
  CHECK(symmetrize_tail(P("q^{-2}+3+q^5")) == P("3+q^2+q^{-2}"));
  CHECK(symmetrize_tail(P("q+4q^3")).is_zero());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly half = random_poly(rng, 1, 6);
    const LaurentPoly c = half + half.bar() + std::uniform_int_distribution<int>(-3, 3)(rng);
    const LaurentPoly g = symmetrize_tail(c);
    CHECK(g.is_bar_invariant());
    CHECK((c - g).in_q_polynomial_ring());
  }
}

TEST_CASE("symmetrize_tail is the unique bar-invariant correction") {
  // All c with exponents in [-3, 3] and at most two nonzero coefficients in
  // {-2,-1,1,2}; candidates g = g0 + sum g_k (q^k + q^-k), g_k in [-2, 2].
  std::vector<LaurentPoly> cs{LaurentPoly()};
  const int coeffs[] = {-2, -1, 1, 2};
  for (int e1 = -3; e1 <= 3; ++e1) {
    for (int a : coeffs) {
      cs.push_back(LaurentPoly::monomial(e1, a));
      for (int e2 = e1 + 1; e2 <= 3; ++e2) {
        for (int b : coeffs) cs.push_back(LaurentPoly::monomial(e1, a) + LaurentPoly::monomial(e2, b));
      }
    }
  }
  std::vector<LaurentPoly> candidates;
  for (int g0 = -2; g0 <= 2; ++g0) {
    for (int g1 = -2; g1 <= 2; ++g1) {
      for (int g2 = -2; g2 <= 2; ++g2) {
        for (int g3 = -2; g3 <= 2; ++g3) {
          LaurentPoly g = g0;
          const int gk[] = {g1, g2, g3};
          for (int k = 1; k <= 3; ++k) g += (LaurentPoly::monomial(k) + LaurentPoly::monomial(-k)) * gk[k - 1];
          candidates.push_back(g);
        }
      }
    }
  }
  for (const auto& c : cs) {
    int found = 0;
    LaurentPoly which;
    for (const auto& g : candidates) {
      if ((c - g).in_q_polynomial_ring()) {
        ++found;
        which = g;
      }
    }
    REQUIRE(found == 1);
    CHECK(symmetrize_tail(c) == which);
  }
}

TEST_CASE("evaluation at one") {
  CHECK(P("q-q^5").eval_at_one() == 0);
  CHECK(P("1+2q^2").eval_at_one() == 3);
  CHECK(P("q^2+q^4").eval_at_one() == 2);
}

TEST_CASE("ring membership predicates") {
  CHECK(P("1+q").in_polynomial_ring());
  CHECK_FALSE(P("1+q").in_q_polynomial_ring());
  CHECK(P("q^2").in_q_polynomial_ring());
  CHECK_FALSE(P("q^{-1}").in_polynomial_ring());
  CHECK(LaurentPoly().in_q_polynomial_ring());
}
