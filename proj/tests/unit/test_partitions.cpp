#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "spinfock/error.hpp"
#include "spinfock/partition.hpp"

using namespace spinfock;

namespace {

std::vector<Partition> wrap(const std::vector<oracle::Parts>& ps) {
  std::vector<Partition> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

std::vector<Partition> labels(std::initializer_list<const char*> texts) {
  std::vector<Partition> out;
  for (const char* t : texts) out.push_back(Partition::parse(t));
  return out;
}

// Random strict-partition bar removal until stuck.
Partition random_core(Modulus mod, Partition p, std::mt19937_64& rng) {
  for (;;) {
    auto moves = bar_removal_moves(mod, p);
    if (moves.empty()) return p;
    p = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  }
}

}  // namespace

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus(4), Error);
  CHECK_THROWS_AS(Modulus(1), Error);
  CHECK(Modulus(7).n() == 3);
  CHECK(Modulus::from_rank(2).h() == 5);
}

TEST_CASE("partition construction and parsing") {
  CHECK(Partition::parse("3321") == Partition{3, 3, 2, 1});
  CHECK(Partition::parse("11,7,7,4") == Partition{11, 7, 7, 4});
  CHECK(Partition::parse("10") == Partition{10});
  CHECK(Partition::parse("(5 4 1)") == Partition{5, 4, 1});
  CHECK(Partition::parse("()").empty());
  CHECK(Partition::parse("").empty());
  CHECK(Partition(std::vector<int>{4, 2, 0, 0}) == Partition{4, 2});
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 4}), Error);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), Error);
  const Partition p{5, 4, 1};
  CHECK(p.to_string() == "5,4,1");
  CHECK(p.to_label() == "(5 4 1)");
  CHECK(p.degree() == 10);
  CHECK(p.length() == 3);
  CHECK(p[5] == 0);
  CHECK(Partition{3, 3, 1}.multiplicity(3) == 2);
  CHECK_FALSE(Partition{3, 3, 1}.is_strict());
}

TEST_CASE("enumeration examples") {
  const Modulus h3(3);
  CHECK(enumerate_dp(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_dp_h(h3, 7) == labels({"7", "6,1", "5,2", "4,3", "4,2,1", "3,3,1"}));
  std::vector<Partition> strict7;
  for (const auto& p : enumerate_dp_h(h3, 7)) {
    if (p.is_strict()) strict7.push_back(p);
  }
  CHECK(strict7 == labels({"7", "6,1", "5,2", "4,3", "4,2,1"}));
  CHECK(enumerate_dp(10).size() == 10);
  CHECK(enumerate_dp_h(h3, 10).size() == 12);
  CHECK(enumerate_dp_h(h3, 1) == labels({"1"}));
  CHECK(enumerate_dpr_h(h3, 10) == labels({"5,4,1", "5,3,2", "4,3,2,1", "3,3,3,1"}));
  CHECK(enumerate_dpr_h(h3, 11) == labels({"6,4,1", "5,4,2", "5,3,2,1", "4,3,3,1", "3,3,3,2"}));
  const auto r21 = enumerate_dpr_h(Modulus(7), 21);
  CHECK(std::find(r21.begin(), r21.end(), Partition{7, 5, 4, 3, 2}) != r21.end());
  CHECK(std::find(r21.begin(), r21.end(), Partition{6, 5, 4, 3, 2, 1}) != r21.end());
}

TEST_CASE("enumeration agrees with brute-force filters") {
  for (int h : {3, 5, 7}) {
    const Modulus mod(h);
    for (int m = 0; m <= 18; ++m) {
      std::vector<oracle::Parts> dp, dph, dpr;
      for (const auto& p : oracle::all_partitions(m)) {
        if (oracle::in_dp_h(h, p)) dph.push_back(p);
        if (std::adjacent_find(p.begin(), p.end()) == p.end()) dp.push_back(p);
        if (oracle::in_dp_h(h, p) && oracle::is_regular(h, p)) dpr.push_back(p);
      }
      CHECK(enumerate_partitions(m) == wrap(oracle::all_partitions(m)));
      CHECK(enumerate_dp(m) == wrap(dp));
      CHECK(enumerate_dp_h(mod, m) == wrap(dph));
      CHECK(enumerate_dpr_h(mod, m) == wrap(dpr));
      for (const auto& p : wrap(dpr)) CHECK(is_h_regular(mod, p));
    }
  }
}

TEST_CASE("regular partitions are counted by the odd-part product") {
  for (int h : {3, 5, 7}) {
    const Modulus mod(h);
    const auto want = oracle::series(h, 30);
    CHECK(regular_count_series(mod, 30) == want);
    for (int m = 0; m <= 30; ++m) {
      const auto regular = enumerate_dpr_h(mod, m);
      CHECK(static_cast<std::int64_t>(regular.size()) == want[m]);
      for (const auto& p : regular) CHECK(in_dp_h(mod, p));
    }
  }
}

TEST_CASE("residues") {
  const Modulus h7(7);
  const std::vector<int> want{3, 2, 1, 0, 1, 2, 3, 3, 2, 1, 0};
  for (int c = 0; c <= 10; ++c) CHECK(residue(h7, c) == want[c]);
  CHECK(residue(Modulus(3), 0) == 1);
  CHECK(residue(h7, 7) == 3);
  for (int h : {3, 5, 7, 9}) {
    for (int c = 0; c < 40; ++c) CHECK(residue(Modulus(h), c) == oracle::residue(h, c));
  }
}

TEST_CASE("ladders") {
  const Modulus h7(7);
  const auto ls = ladders(h7, Partition{11, 7, 7, 4});
  REQUIRE(ls.size() == 22);
  auto seventh = std::find_if(ls.begin(), ls.end(), [](const Ladder& l) { return l.index == 7; });
  REQUIRE(seventh != ls.end());
  CHECK(seventh->residue == 3);
  CHECK(seventh->cells == 3);
  for (std::size_t k = 1; k < ls.size(); ++k) CHECK(ls[k - 1].index < ls[k].index);

  const auto one = ladders(Modulus(3), Partition{1});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Ladder{1, 1, 1});

  std::vector<std::pair<int, int>> seq;
  for (const auto& l : ladders(Modulus(3), Partition{3, 3, 2, 1})) seq.emplace_back(l.residue, l.cells);
  CHECK(seq == std::vector<std::pair<int, int>>{{1, 1}, {0, 1}, {1, 2}, {0, 1}, {1, 2}, {0, 1}, {1, 1}});

  CHECK_THROWS_AS(ladders(Modulus(3), Partition{2, 2}), Error);
}

TEST_CASE("ladders cover the diagram with one residue each") {
  for (int h : {3, 5, 7}) {
    const Modulus mod(h);
    for (int m = 0; m <= 20; ++m) {
      for (const auto& p : enumerate_dp_h(mod, m)) {
        std::map<int, std::set<int>> residues;
        std::map<int, int> cells;
        for (std::size_t row = 1; row <= p.length(); ++row) {
          for (int c = 0; c < p[row - 1]; ++c) {
            const int idx = ladder_index(mod, static_cast<int>(row), c);
            residues[idx].insert(residue(mod, c));
            ++cells[idx];
            if (c >= h) CHECK(ladder_index(mod, static_cast<int>(row) + 1, c - h) == idx);
          }
        }
        int total = 0;
        for (const auto& l : ladders(mod, p)) {
          CHECK(residues[l.index] == std::set<int>{l.residue});
          CHECK(cells[l.index] == l.cells);
          total += l.cells;
        }
        CHECK(total == m);
        CHECK(ladders(mod, p).size() == cells.size());
      }
    }
  }
}

TEST_CASE("exponents a_h and b") {
  const Modulus h3(3);
  CHECK(a_h(h3, Partition{5, 4, 1}) == 2);
  CHECK(b_exponent(Partition{5, 4, 1}) == 3);
  CHECK(a_h(h3, Partition{10}) == 3);
  CHECK(b_exponent(Partition{10}) == 4);
  CHECK(a_h(Modulus(7), Partition{11, 7, 7, 4}) == 1);
}

TEST_CASE("residue content") {
  const Modulus h3(3);
  CHECK(residue_content(h3, Partition{}) == ResidueContent{0, 0});
  CHECK(residue_content(h3, Partition{2, 1}) == ResidueContent{1, 2});
  for (const char* row : {"5,3,2", "8,2"}) {
    CHECK(residue_content(h3, Partition::parse(row)) == residue_content(h3, Partition{5, 3, 2}));
  }
}

TEST_CASE("bar cores") {
  const Modulus h3(3);
  CHECK(hbar_core(h3, Partition{3, 3, 3, 1}) == Partition{1});
  CHECK(hbar_core(h3, Partition{}) == Partition{});
  CHECK(hbar_core(h3, Partition{5, 3, 2}) == hbar_core(h3, Partition{8, 2}));
  CHECK(hbar_core(h3, Partition{3, 3, 3, 1}) == hbar_core(h3, Partition{5, 4, 1}));
  CHECK_THROWS_AS(hbar_core(h3, Partition{2, 2}), Error);
}

TEST_CASE("bar cores are independent of the removal order") {
  std::mt19937_64 rng(17);
  for (int h : {3, 5, 7}) {
    const Modulus mod(h);
    for (int m = 0; m <= 16; ++m) {
      for (const auto& p : enumerate_dp(m)) {
        const Partition core = hbar_core(mod, p);
        for (int trial = 0; trial < 4; ++trial) CHECK(random_core(mod, p, rng) == core);
      }
    }
  }
}

TEST_CASE("residue content determines the bar core on strict partitions") {
  for (int h : {3, 5}) {
    const Modulus mod(h);
    for (int m = 0; m <= 16; ++m) {
      const auto strict = enumerate_dp(m);
      for (const auto& a : strict) {
        for (const auto& b : strict) {
          const bool same_content = residue_content(mod, a) == residue_content(mod, b);
          const bool same_core = hbar_core(mod, a) == hbar_core(mod, b);
          CHECK(same_content == same_core);
        }
      }
    }
  }
}

TEST_CASE("dominance and lexicographic order") {
  const Partition a{3, 3, 3, 1}, b{4, 3, 2, 1}, c{5, 3, 2}, d{5, 4, 1};
  CHECK(dominance_leq(a, b));
  CHECK(dominance_leq(b, c));
  CHECK(lex_cmp(a, b) < 0);
  CHECK(lex_cmp(c, d) < 0);
  CHECK(dominance_leq(c, d));
  CHECK_FALSE(dominance_leq(d, c));
  CHECK(dominance_leq(a, a));
  CHECK(lex_cmp(a, a) == 0);
  CHECK_THROWS_AS(dominance_leq(Partition{3}, Partition{2}), Error);
  for (int m = 1; m <= 12; ++m) {
    const auto all = enumerate_partitions(m);
    for (const auto& x : all) {
      for (const auto& y : all) {
        if (dominance_leq(y, x)) CHECK(lex_cmp(y, x) <= 0);
      }
    }
  }
}

TEST_CASE("shift by multiples of h") {
  const Modulus h3(3);
  CHECK(shift_by_h_multiple(h3, Partition{}, Partition{1}) == Partition{3});
  CHECK(shift_by_h_multiple(h3, Partition{2, 1}, Partition{1, 1}) == Partition{5, 4});
  for (int m = 0; m <= 8; ++m) {
    for (const auto& lambda : enumerate_dpr_h(h3, m)) {
      for (const char* nu : {"1", "2", "1,1", "2,1"}) {
        CHECK(in_dp_h(h3, shift_by_h_multiple(h3, lambda, Partition::parse(nu))));
      }
    }
  }
}
