#include <doctest.h>

#include "spinfock/error.hpp"
#include "spinfock/fixtures.hpp"
#include "spinfock/modular.hpp"

using namespace spinfock;

namespace {

CharacterVector chars(std::initializer_list<std::pair<const char*, int>> terms) {
  CharacterVector v;
  for (const auto& [lambda, c] : terms) v[Partition::parse(lambda)] = c;
  return v;
}

ClassicalVector P(const char* lambda) { return {{Partition::parse(lambda), Rational(1)}}; }

using Kind = ClassicalGenerator::Kind;

}  // namespace

TEST_CASE("parity classes") {
  CHECK(is_dp_minus(Partition{10}));
  CHECK(is_dp_minus(Partition{5, 3, 2}));
  CHECK_FALSE(is_dp_minus(Partition{4, 3, 2, 1}));
  CHECK(is_dp_minus(Partition{5, 4, 1}));
  CHECK_FALSE(is_dp_minus(Partition{}));
}

TEST_CASE("specialization of the h = 3, m = 10 columns") {
  const Modulus h3(3);
  const BasisMatrix G = canonical_basis(h3, 10);
  CHECK(underline_g(h3, G.column(Partition{3, 3, 3, 1})) ==
        chars({{"5,4,1", 4}, {"6,3,1", 8}, {"6,4", 4}, {"7,2,1", 4}, {"7,3", 4}, {"9,1", 4}, {"10", 2}}));
  CHECK(underline_g(h3, G.column(Partition{5, 3, 2})) == chars({{"5,3,2", 4}, {"8,2", 4}}));
  CHECK(underline_g(h3, FockVector{}).empty());
  CHECK(specialize(h3, FockVector::basis(Partition{3, 3, 1})).empty());
}

TEST_CASE("double underline") {
  CHECK(double_underline(chars({{"5,4,1", 4}, {"6,3,1", 8}, {"6,4", 4}, {"7,2,1", 4}, {"7,3", 4}, {"9,1", 4}, {"10", 2}})) ==
        chars({{"5,4,1", 2}, {"6,3,1", 4}, {"6,4", 2}, {"7,2,1", 2}, {"7,3", 2}, {"9,1", 2}, {"10", 1}}));
  CHECK(double_underline(chars({{"5,3,2", 4}, {"8,2", 4}})) == chars({{"5,3,2", 1}, {"8,2", 1}}));
  CHECK(double_underline(chars({{"5,3,2", 3}, {"8,2", 6}})) == chars({{"5,3,2", 3}, {"8,2", 6}}));
  CHECK_THROWS_AS(double_underline(CharacterVector{}), Error);
}

TEST_CASE("reduced matrix for p = 3, m = 10") {
  const ReducedMatrix R = reduced_matrix(Modulus(3), 10);
  CHECK(R.rows.size() == 10);
  CHECK(R.columns.size() == 4);
  const std::vector<const char*> rows{"4,3,2,1", "5,3,2", "5,4,1", "6,3,1", "6,4", "7,2,1", "7,3", "8,2", "9,1", "10"};
  const std::vector<int> col4321{2, 0, 2, 2, 0, 1, 2, 0, 2, 0};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(R.entry(Partition::parse(rows[k]), Partition{4, 3, 2, 1}) == col4321[k]);
  }
  CHECK(R == fixtures::reduced_p3_m10());
}

TEST_CASE("small reduced matrices") {
  const ReducedMatrix R2 = reduced_matrix(Modulus(3), 2);
  CHECK(R2.rows == std::vector<Partition>{Partition{2}});
  CHECK(R2.labels() == std::vector<Partition>{Partition{2}});
  CHECK(R2.entry(Partition{2}, Partition{2}) == 1);
  for (int m = 0; m <= 12; ++m) {
    const ReducedMatrix R = reduced_matrix(Modulus(3), m);
    CHECK(R.rows == enumerate_dp(m));
    CHECK(R.columns.size() == enumerate_dpr_h(Modulus(3), m).size());
    for (const auto& [mu, col] : R.columns) {
      for (const auto& [lambda, v] : col) CHECK(v > 0);
    }
  }
}

TEST_CASE("p = 3, m = 11 columns") {
  const ReducedMatrix R = reduced_matrix(Modulus(3), 11);
  CHECK(R.labels() == std::vector<Partition>{Partition{6, 4, 1}, Partition{5, 4, 2}, Partition{5, 3, 2, 1},
                                             Partition{4, 3, 3, 1}, Partition{3, 3, 3, 2}});
}

TEST_CASE("external decomposition matrices") {
  const auto fx = parse_decomposition_csv(fixtures::external_csv_p3_m10());
  CHECK(fx.rows.size() == 15);
  CHECK(fx.columns.size() == 7);
  CHECK(fx.columns[1] == DecompositionFixture::Label{Partition{3, 3, 3, 1}, true});
  CHECK(fx.rows.back() == DecompositionFixture::Label{Partition{10}, true});
  const ReducedMatrix R = reduce_external_matrix(fx, 3);
  CHECK(R == fixtures::reduced_p3_m10());
  CHECK(R.entry(Partition{5, 3, 2}, Partition{5, 3, 2}) == 1);
  CHECK(parse_decomposition_csv(to_csv(fx)).entries == fx.entries);

  const auto trivial = reduce_external_matrix(parse_decomposition_csv("row,1\n1,1\n"), 3);
  CHECK(trivial.entry(Partition{1}, Partition{1}) == 1);
  CHECK(trivial.columns.size() == 1);

  std::string broken = fixtures::external_csv_p3_m10();
  broken.replace(broken.find("532',0,0,0,0,1"), 14, "532',0,0,0,0,2");
  CHECK_THROWS_AS(reduce_external_matrix(parse_decomposition_csv(broken), 3), Error);
  CHECK_THROWS_AS(parse_decomposition_csv("row,2\n2,x\n"), Error);
}

TEST_CASE("classical part replacement") {
  const Modulus h3(3);
  CHECK(classical_apply(h3, {Kind::FInfinity, 0}, P("3,2")) == P("3,2,1"));
  CHECK(classical_apply(h3, {Kind::FInfinity, 3}, P("3,2")) == P("4,2"));
  CHECK(classical_apply(h3, {Kind::EInfinity, 1}, P("3,2")) == P("3,1"));
  CHECK(classical_apply(h3, {Kind::EInfinity, 2}, P("3,2")).empty());
  CHECK(classical_apply(h3, {Kind::FInfinity, 1}, P("3,2")).empty());
}

TEST_CASE("the q = 1 quotient intertwines the generators") {
  for (int h : {3, 5}) {
    const Modulus mod(h);
    for (int m = 0; m <= 9; ++m) {
      for (const auto& lambda : enumerate_dp_h(mod, m)) {
        const FockVector v = FockVector::basis(lambda);
        for (int i = 0; i <= mod.n(); ++i) {
          const FockVector f = apply_f(mod, i, v);
          CHECK(to_schur_p(mod, f) == classical_apply(mod, {Kind::F, i}, to_schur_p(mod, v)));
          CHECK(to_schur_p(mod, apply_e(mod, i, v)) == classical_apply(mod, {Kind::E, i}, to_schur_p(mod, v)));
          CHECK(specialize(mod, f) == spin_induction(mod, i, specialize(mod, v)));
        }
      }
    }
  }
}

TEST_CASE("total induction is the sum of the generators") {
  const Modulus h3(3);
  for (int m = 0; m <= 8; ++m) {
    for (const auto& lambda : enumerate_dp(m)) {
      ClassicalVector sum;
      for (int i = 0; i <= 1; ++i) {
        for (const auto& [nu, c] : classical_apply(h3, {Kind::F, i}, P(lambda.to_string().c_str()))) sum[nu] += c;
      }
      std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });
      CHECK(sum == classical_apply(h3, {Kind::FTotal, 0}, P(lambda.to_string().c_str())));
    }
  }
}

TEST_CASE("partition identity") {
  const auto report = partition_identity_check(Modulus(3), 10);
  CHECK(report.ok);
  CHECK(report.rows[10].regular == 4);
  CHECK(report.rows[0].regular == 1);
  for (int h : {5, 7}) CHECK(partition_identity_check(Modulus(h), 40).ok);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({chars({{"2", 1}}), chars({{"2", 2}})}) == 1);
  CHECK(exact_rank({chars({{"2", 1}, {"1", 1}}), chars({{"2", 1}, {"1", -1}}), chars({{"1", 3}})}) == 2);
}

TEST_CASE("intermediate vectors are independent at q = 1") {
  const Modulus h3(3);
  CHECK(independence_check(h3, 10).rank == 4);
  CHECK(independence_check(h3, 1).rank == 1);
  for (int m = 0; m <= 12; ++m) CHECK(independence_check(h3, m).ok);
  const auto big = independence_check(Modulus(7), 21);
  CHECK(big.ok);
  CHECK(big.expected == enumerate_dpr_h(Modulus(7), 21).size());
}
