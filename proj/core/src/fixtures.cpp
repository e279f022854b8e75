#include "spinfock/fixtures.hpp"

#include <nlohmann/json.hpp>

#include "spinfock/io.hpp"

namespace spinfock::fixtures {

namespace {

using nlohmann::json;

const json& data() {
  static const json j = json::parse(R"json(
{
  "actions": [
    {"name": "f_2|542>", "h": 5, "i": 2, "input": "5,4,2",
     "expected": {"6,4,2": "q^2+q^4", "5,5,2": "q", "5,4,2,1": "1"}},
    {"name": "f_2|552>", "h": 5, "i": 2, "input": "5,5,2",
     "expected": {"6,5,2": "1-q^4", "5,5,2,1": "1"}}
  ],
  "vectors": [
    {"name": "A(3321)", "h": 3, "kind": "A", "label": "3,3,2,1",
     "expected": {"3,3,2,1": "1", "3,3,3": "q", "4,3,2": "q^2-q^6", "5,3,1": "1+2q^2",
                  "5,4": "q^2+q^4", "6,2,1": "2q^2+q^4", "6,3": "2q^3", "7,2": "q^4+q^6",
                  "8,1": "q^4", "9": "q^5"}},
    {"name": "A(531)", "h": 3, "kind": "A", "label": "5,3,1",
     "expected": {"5,3,1": "1", "5,4": "q^2", "6,2,1": "q^2", "6,3": "q^3", "7,2": "q^6"}},
    {"name": "G(531)", "h": 3, "kind": "G", "label": "5,3,1",
     "expected": {"5,3,1": "1", "5,4": "q^2", "6,2,1": "q^2", "6,3": "q^3", "7,2": "q^6"}},
    {"name": "G(3321)", "h": 3, "kind": "G", "label": "3,3,2,1",
     "expected": {"3,3,2,1": "1", "3,3,3": "q", "4,3,2": "q^2-q^6", "5,3,1": "2q^2",
                  "5,4": "q^4", "6,2,1": "q^2+q^4", "6,3": "q^3", "7,2": "q^4",
                  "8,1": "q^4", "9": "q^5"}},
    {"name": "A(432)", "h": 3, "kind": "A", "label": "4,3,2",
     "expected": {"4,3,2": "1", "5,3,1": "q^4", "7,2": "q^2", "8,1": "q^6"}},
    {"name": "G(432)", "h": 3, "kind": "G", "label": "4,3,2",
     "expected": {"4,3,2": "1", "5,3,1": "q^4", "7,2": "q^2", "8,1": "q^6"}},
    {"name": "G(75432)", "h": 7, "kind": "G", "label": "7,5,4,3,2",
     "expected": {"7,5,4,3,2": "1", "7,6,4,3,1": "q^2", "7,7,5,2": "q", "7,7,6,1": "q^3",
                  "8,6,4,3": "q^2", "8,6,5,2": "q^2+q^4", "8,7,6": "q^3", "9,5,4,3": "q^4",
                  "9,6,5,1": "q^4+q^6", "9,7,5": "q^5"}},
    {"name": "G(654321)", "h": 7, "kind": "G", "label": "6,5,4,3,2,1",
     "expected": {"6,5,4,3,2,1": "1", "7,5,4,3,2": "q", "7,6,4,3,1": "q", "7,6,5,2,1": "q",
                  "7,7,4,3": "q^2", "7,7,5,2": "q^2", "7,7,6,1": "q^2", "7,7,7": "q^3",
                  "8,6,4,3": "q^3+q^5", "8,6,5,2": "q^3+q^5", "8,7,6": "q^4-q^8",
                  "9,6,5,1": "q^3+q^5", "9,7,5": "q^4+q^6"}}
  ],
  "basis_h3_m10": {"h": 3, "m": 10, "columns": [
    {"label": "3,3,3,1", "entries": [
      {"row": "3,3,3,1", "poly": "1"}, {"row": "4,3,2,1", "poly": "q-q^5"},
      {"row": "4,3,3", "poly": "q^2"}, {"row": "5,4,1", "poly": "q+q^3"},
      {"row": "6,3,1", "poly": "2q^2"}, {"row": "6,4", "poly": "q^4"},
      {"row": "7,2,1", "poly": "q^3+q^5"}, {"row": "7,3", "poly": "q^4"},
      {"row": "9,1", "poly": "q^4"}, {"row": "10", "poly": "q^6"}]},
    {"label": "4,3,2,1", "entries": [
      {"row": "4,3,2,1", "poly": "1"}, {"row": "4,3,3", "poly": "q"},
      {"row": "5,4,1", "poly": "q^2+q^4"}, {"row": "6,3,1", "poly": "q^3"},
      {"row": "7,2,1", "poly": "q^2"}, {"row": "7,3", "poly": "q^3"},
      {"row": "9,1", "poly": "q^5"}]},
    {"label": "5,3,2", "entries": [
      {"row": "5,3,2", "poly": "1"}, {"row": "8,2", "poly": "q^2"}]},
    {"label": "5,4,1", "entries": [
      {"row": "5,4,1", "poly": "1"}, {"row": "6,3,1", "poly": "q"},
      {"row": "6,4", "poly": "q^3"}, {"row": "7,2,1", "poly": "q^4"},
      {"row": "7,3", "poly": "q^5"}]}
  ]},
  "reduced_p3_m10": {"p": 3, "m": 10,
    "columns": ["3,3,3,1", "4,3,2,1", "5,3,2", "5,4,1"],
    "rows": {
      "4,3,2,1": [0, 2, 0, 0], "5,3,2": [0, 0, 1, 0], "5,4,1": [2, 2, 0, 1],
      "6,3,1": [4, 2, 0, 2], "6,4": [2, 0, 0, 2], "7,2,1": [2, 1, 0, 1],
      "7,3": [2, 2, 0, 2], "8,2": [0, 0, 1, 0], "9,1": [2, 2, 0, 0], "10": [1, 0, 0, 0]}},
  "p3_m11": [
    {"3,3,3,2": 1},
    {"4,3,3,1": 1, "6,4,1": 1},
    {"5,3,2,1": 1},
    {"5,4,2": 1},
    {"6,4,1": 1}
  ],
  "crystal_n1_m10": ["3,3,3,1", "4,3,2,1", "5,3,2", "5,4,1"]
}
)json");
  return j;
}

}  // namespace

std::vector<ActionFixture> action_fixtures() {
  std::vector<ActionFixture> out;
  for (const auto& a : data().at("actions")) {
    out.push_back({a.at("name"), a.at("h"), a.at("i"), io::partition_from_json(a.at("input")),
                   io::fock_vector_from_json(a.at("expected"))});
  }
  return out;
}

std::vector<VectorFixture> vector_fixtures() {
  std::vector<VectorFixture> out;
  for (const auto& v : data().at("vectors")) {
    out.push_back({v.at("name"), v.at("h"), v.at("kind").get<std::string>().at(0),
                   io::partition_from_json(v.at("label")), io::fock_vector_from_json(v.at("expected"))});
  }
  return out;
}

BasisMatrix basis_h3_m10() { return io::basis_matrix_from_json(data().at("basis_h3_m10")); }

const std::string& external_csv_p3_m10() {
  static const std::string csv =
      "# p = 3, m = 10; primed labels are associates\n"
      "row,3331,3331',4321,4321',532,541,541'\n"
      "4321,0,0,1,1,0,0,0\n"
      "532,0,0,0,0,1,0,0\n"
      "532',0,0,0,0,1,0,0\n"
      "541,1,1,1,1,0,0,1\n"
      "541',1,1,1,1,0,1,0\n"
      "631,2,2,1,1,0,1,1\n"
      "631',2,2,1,1,0,1,1\n"
      "64,1,1,0,0,0,1,1\n"
      "721,1,1,0,1,0,0,1\n"
      "721',1,1,1,0,0,1,0\n"
      "73,1,1,1,1,0,1,1\n"
      "82,0,0,0,0,1,0,0\n"
      "91,1,1,1,1,0,0,0\n"
      "10,0,1,0,0,0,0,0\n"
      "10',1,0,0,0,0,0,0\n";
  return csv;
}

ReducedMatrix reduced_p3_m10() {
  const json& t = data().at("reduced_p3_m10");
  ReducedMatrix R;
  R.p = t.at("p");
  R.m = t.at("m");
  R.rows = enumerate_dp(R.m);
  std::vector<Partition> cols;
  for (const auto& c : t.at("columns")) {
    cols.push_back(io::partition_from_json(c));
    R.columns[cols.back()];
  }
  for (const auto& [row, values] : t.at("rows").items()) {
    const Partition lambda = Partition::parse(row);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      BigInt v = io::bigint_from_json(values.at(k));
      if (v != 0) R.columns[cols[k]][lambda] = v;
    }
  }
  return R;
}

const std::string& ladder_word_11774() {
  static const std::string word =
      "f_0f_1f_2f_3^{(2)}f_2f_1f_0f_1f_2f_3^{(2)}f_2f_1f_0^{(2)}f_1^{(2)}f_2^{(2)}f_3^{(3)}f_2f_1f_0f_1f_2f_3";
  return word;
}

std::vector<Combination> reduced_columns_p3_m11() {
  std::vector<Combination> out;
  for (const auto& c : data().at("p3_m11")) {
    Combination comb;
    for (const auto& [label, coeff] : c.items()) {
      comb.terms.emplace_back(Partition::parse(label), io::bigint_from_json(coeff));
    }
    out.push_back(std::move(comb));
  }
  return out;
}

std::vector<Partition> crystal_degree10_n1() {
  std::vector<Partition> out;
  for (const auto& p : data().at("crystal_n1_m10")) out.push_back(io::partition_from_json(p));
  return out;
}

}  // namespace spinfock::fixtures
