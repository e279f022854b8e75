#include <doctest.h>

#include "spinfock/canonical.hpp"
#include "spinfock/crystal.hpp"
#include "spinfock/error.hpp"
#include "spinfock/fixtures.hpp"
#include "spinfock/io.hpp"

using namespace spinfock;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

FockVector vec(std::initializer_list<std::pair<const char*, const char*>> terms) {
  FockVector v;
  for (const auto& [lambda, c] : terms) v.add(Partition::parse(lambda), P(c));
  return v;
}

}  // namespace

TEST_CASE("intermediate vectors for n = 1, m = 9") {
  const Modulus h3(3);
  CHECK(a_vector(h3, Partition{4, 3, 2}) == vec({{"4,3,2", "1"}, {"5,3,1", "q^4"}, {"7,2", "q^2"}, {"8,1", "q^6"}}));
  CHECK(a_vector(h3, Partition{5, 3, 1}) ==
        vec({{"5,3,1", "1"}, {"5,4", "q^2"}, {"6,2,1", "q^2"}, {"6,3", "q^3"}, {"7,2", "q^6"}}));
  CHECK(a_vector(h3, Partition{3, 3, 2, 1}).coeff(Partition{5, 3, 1}) == P("1+2q^2"));
  CHECK(a_vector(h3, Partition{}) == FockVector::vacuum());
  CHECK_THROWS_AS(a_vector(h3, Partition{5, 1}), Error);
}

TEST_CASE("ladder monomial of (11 7 7 4)") {
  CHECK(io::ladder_monomial(Modulus(7), Partition{11, 7, 7, 4}) ==
        "f_0f_1f_2f_3^{(2)}f_2f_1f_0f_1f_2f_3^{(2)}f_2f_1f_0^{(2)}f_1^{(2)}f_2^{(2)}f_3^{(3)}f_2f_1f_0f_1f_2f_3");
}

TEST_CASE("outer ladder stripping") {
  const Modulus h3(3);
  auto [nu, outer] = strip_outer_ladder(h3, Partition{4, 3, 2});
  CHECK(nu.degree() + outer.cells == 9);
  CHECK(is_h_regular(h3, nu));
  CHECK(strip_outer_ladder(h3, Partition{1}).first == Partition{});
  for (int h : {3, 5, 7}) {
    const Modulus mod(h);
    for (int m = 1; m <= 14; ++m) {
      for (const auto& mu : enumerate_dpr_h(mod, m)) {
        auto [lower, l] = strip_outer_ladder(mod, mu);
        CHECK(lower.degree() == m - l.cells);
        CHECK(is_h_regular(mod, lower));
        CHECK(ladders(mod, mu).back() == l);
      }
    }
  }
}

TEST_CASE("recursive intermediate vectors") {
  const Modulus h3(3);
  CanonicalEngine engine(h3);
  CHECK(a_vector_fast(h3, Partition{1}, engine.basis(0)) == FockVector::basis(Partition{1}));
  const FockVector a = a_vector_fast(h3, Partition{4, 3, 2}, engine.basis(9 - strip_outer_ladder(h3, Partition{4, 3, 2}).second.cells));
  CHECK(a.coeff(Partition{4, 3, 2}) == 1);
  for (const auto& [lambda, c] : a.terms()) CHECK(lambda >= Partition{4, 3, 2});
  CHECK_THROWS_AS(a_vector_fast(h3, Partition{4, 3, 2}, engine.basis(2)), Error);
}

TEST_CASE("canonical basis for n = 1, m = 9") {
  const BasisMatrix G = canonical_basis(Modulus(3), 9);
  CHECK(G.labels() == std::vector<Partition>{Partition{5, 3, 1}, Partition{4, 3, 2}, Partition{3, 3, 2, 1}});
  CHECK(G.column(Partition{3, 3, 2, 1}) == vec({{"3,3,2,1", "1"},
                                                 {"3,3,3", "q"},
                                                 {"4,3,2", "q^2-q^6"},
                                                 {"5,3,1", "2q^2"},
                                                 {"5,4", "q^4"},
                                                 {"6,2,1", "q^2+q^4"},
                                                 {"6,3", "q^3"},
                                                 {"7,2", "q^4"},
                                                 {"8,1", "q^4"},
                                                 {"9", "q^5"}}));
  CHECK(G.column(Partition{5, 3, 1}) == a_vector(Modulus(3), Partition{5, 3, 1}));
  CHECK(G.column(Partition{4, 3, 2}) == a_vector(Modulus(3), Partition{4, 3, 2}));
}

TEST_CASE("canonical basis for n = 1, m = 10") {
  const BasisMatrix G = canonical_basis(Modulus(3), 10);
  CHECK(G.entry(Partition{4, 3, 2, 1}, Partition{3, 3, 3, 1}) == P("q-q^5"));
  CHECK(G.entry(Partition{6, 3, 1}, Partition{3, 3, 3, 1}) == P("2q^2"));
  CHECK(G.entry(Partition{8, 2}, Partition{5, 3, 2}) == P("q^2"));
  CHECK(G.columns == fixtures::basis_h3_m10().columns);
  CHECK(G.rows(true).size() == 12);
  std::vector<Partition> support;
  for (const auto& [lambda, c] : G.column(Partition{5, 3, 2}).terms()) support.push_back(lambda);
  CHECK(support == std::vector<Partition>{Partition{5, 3, 2}, Partition{8, 2}});
}

TEST_CASE("degree zero") {
  const BasisMatrix G = canonical_basis(Modulus(3), 0);
  REQUIRE(G.columns.size() == 1);
  CHECK(G.column(Partition{}) == FockVector::vacuum());
}

TEST_CASE("two columns for n = 3, m = 21") {
  const BasisMatrix G = canonical_basis(Modulus(7), 21);
  CHECK(G.column(Partition{7, 5, 4, 3, 2}) == vec({{"7,5,4,3,2", "1"},
                                                    {"7,6,4,3,1", "q^2"},
                                                    {"7,7,5,2", "q"},
                                                    {"7,7,6,1", "q^3"},
                                                    {"8,6,4,3", "q^2"},
                                                    {"8,6,5,2", "q^2+q^4"},
                                                    {"8,7,6", "q^3"},
                                                    {"9,5,4,3", "q^4"},
                                                    {"9,6,5,1", "q^4+q^6"},
                                                    {"9,7,5", "q^5"}}));
  CHECK(G.entry(Partition{8, 7, 6}, Partition{6, 5, 4, 3, 2, 1}) == P("q^4-q^8"));
  for (const auto& v : fixtures::vector_fixtures()) {
    if (v.h == 7) CHECK(G.column(v.label) == v.expected);
  }
  CHECK(G.column(Partition{7, 5, 4, 3, 2}).terms().rbegin()->first == Partition{9, 7, 5});
  CHECK(G.column(Partition{6, 5, 4, 3, 2, 1}).terms().rbegin()->first == Partition{9, 7, 5});
}

TEST_CASE("triangularity, integrality and blocks") {
  for (auto [h, max_m] : {std::pair{3, 12}, std::pair{5, 12}, std::pair{7, 14}}) {
    const Modulus mod(h);
    CanonicalEngine engine(mod);
    const auto graph = component(mod, Partition{}, max_m);
    for (int m = 0; m <= max_m; ++m) {
      const BasisMatrix& G = engine.basis(m);
      const auto report = verify_theorem41(mod, G);
      CHECK(report.ok);
      for (const auto& f : report.failures) MESSAGE(f);
      CHECK(G.columns.size() == enumerate_dpr_h(mod, m).size());
      CHECK(G.columns.size() == graph.vertices_of_degree(m).size());
      for (const auto& mu : G.labels()) CHECK(G.entry(mu, mu) == 1);
    }
  }
}

TEST_CASE("theorem report flags violations") {
  const Modulus h3(3);
  BasisMatrix bad = canonical_basis(h3, 4);
  bad.columns.begin()->second.add(bad.columns.begin()->first, P("q^{-1}"));
  CHECK_FALSE(verify_theorem41(h3, bad).ok);
  std::map<Partition, FockVector> broken{{Partition{1}, FockVector::basis(Partition{1}, 2)}};
  CHECK_THROWS_AS(reduce_to_canonical(h3, 1, broken, 1), Error);
}

TEST_CASE("recursive and direct intermediate families give the same basis") {
  for (auto [h, max_m] : {std::pair{3, 10}, std::pair{5, 10}}) {
    const Modulus mod(h);
    CanonicalEngine fast(mod, {true, 1});
    CanonicalEngine slow(mod, {false, 1});
    for (int m = 0; m <= max_m; ++m) CHECK(fast.basis(m).columns == slow.basis(m).columns);
  }
}

TEST_CASE("parallel reduction is deterministic") {
  const Modulus h5(5);
  const auto one = canonical_basis(h5, 15, {true, 1});
  const auto four = canonical_basis(h5, 15, {true, 4});
  CHECK(one.columns == four.columns);
  CHECK(io::to_json(one).dump() == io::to_json(four).dump());
}

TEST_CASE("A expands unitriangularly on G with bar-invariant coefficients") {
  for (int h : {3, 5}) {
    const Modulus mod(h);
    CanonicalEngine engine(mod, {false, 1});
    for (int m = 0; m <= 12; ++m) {
      const auto& G = engine.basis(m);
      const auto A = engine.intermediate(m);
      const auto b = a_in_terms_of_g(G, A);
      for (const auto& [key, c] : b) {
        const auto& [nu, mu] = key;
        CHECK(nu >= mu);
        if (nu == mu) CHECK(c == 1);
        CHECK(c.is_bar_invariant());
      }
      for (const auto& [mu, a] : A) CHECK(b.count({mu, mu}) == 1);
    }
  }
}
