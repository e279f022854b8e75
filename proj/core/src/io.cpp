#include "spinfock/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "spinfock/error.hpp"

namespace spinfock::io {

json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "expected integer, got " + j.dump());
}

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
  if (j.is_number_integer()) return LaurentPoly(j.get<long long>());
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "expected polynomial, got " + j.dump());
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) p.add_term(std::stoi(key), bigint_from_json(value));
  return p;
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  return Partition(j.get<std::vector<int>>());
}

json to_json(const FockVector& v) {
  json terms = json::array();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    terms.push_back({{"partition", to_json(it->first)}, {"poly", to_json(it->second)}});
  }
  return {{"degree", v.degree()}, {"terms", terms}};
}

FockVector fock_vector_from_json(const json& j) {
  FockVector v;
  const json& terms = j.is_object() && j.contains("terms") ? j.at("terms") : j;
  if (terms.is_object()) {  // {"5,4,2": "q^2", ...}
    for (const auto& [key, value] : terms.items()) v.add(Partition::parse(key), poly_from_json(value));
    return v;
  }
  for (const auto& t : terms) v.add(partition_from_json(t.at("partition")), poly_from_json(t.at("poly")));
  return v;
}

json to_json(const BasisMatrix& M) {
  json columns = json::array();
  for (const auto& mu : M.labels()) {
    json entries = json::array();
    const auto& col = M.column(mu);
    for (auto it = col.terms().rbegin(); it != col.terms().rend(); ++it) {
      entries.push_back({{"row", to_json(it->first)}, {"poly", to_json(it->second)}});
    }
    columns.push_back({{"label", to_json(mu)}, {"entries", entries}});
  }
  return {{"h", M.h}, {"m", M.m}, {"columns", columns}};
}

BasisMatrix basis_matrix_from_json(const json& j) {
  BasisMatrix M;
  M.h = j.at("h").get<int>();
  M.m = j.at("m").get<int>();
  for (const auto& col : j.at("columns")) {
    FockVector v;
    for (const auto& e : col.at("entries")) v.add(partition_from_json(e.at("row")), poly_from_json(e.at("poly")));
    M.columns.emplace(partition_from_json(col.at("label")), std::move(v));
  }
  return M;
}

json to_json(const CrystalGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(to_json(v));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", to_json(e.from)}, {"color", e.color}, {"to", to_json(e.to)}});
  return {{"h", g.h}, {"max_degree", g.max_degree}, {"vertices", vertices}, {"edges", edges}};
}

namespace {

std::string dot_label(const Partition& p) { return p.empty() ? "()" : p.to_string(); }

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // h = " << g.h << ", max degree " << g.max_degree << "\n";
  for (const auto& v : g.vertices) os << "  \"" << dot_label(v) << "\";\n";
  for (const auto& e : g.edges) {
    os << "  \"" << dot_label(e.from) << "\" -> \"" << dot_label(e.to) << "\" [label=\"" << e.color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json to_json(const ReducedMatrix& R) {
  json rows = json::array();
  for (const auto& r : R.rows) rows.push_back(to_json(r));
  json columns = json::array();
  for (const auto& mu : R.labels()) {
    json entries = json::array();
    const auto& col = R.columns.at(mu);
    for (auto it = col.rbegin(); it != col.rend(); ++it) {
      entries.push_back({{"row", to_json(it->first)}, {"value", to_json(it->second)}});
    }
    columns.push_back({{"label", to_json(mu)}, {"entries", entries}});
  }
  return {{"p", R.p}, {"m", R.m}, {"rows", rows}, {"columns", columns}};
}

namespace {

std::string compact_label(const Partition& p) {
  const auto& parts = p.parts();
  bool wide = std::any_of(parts.begin(), parts.end(), [](int x) { return x > 9; });
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (wide && k) s.push_back('.');
    s += std::to_string(parts[k]);
  }
  if (wide && parts.size() == 1) s.push_back('.');
  return s;
}

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string to_csv(const ReducedMatrix& R) {
  std::vector<Partition> cols = R.labels();
  std::reverse(cols.begin(), cols.end());
  std::vector<Partition> rows = R.rows;
  std::sort(rows.begin(), rows.end());
  std::string out = "row";
  for (const auto& mu : cols) out += "," + compact_label(mu);
  out += "\n";
  for (const auto& lambda : rows) {
    out += compact_label(lambda);
    for (const auto& mu : cols) out += "," + R.entry(lambda, mu).str();
    out += "\n";
  }
  return out;
}

std::string render_table(const BasisMatrix& M) {
  std::vector<Partition> cols = M.labels();
  std::reverse(cols.begin(), cols.end());
  std::vector<Partition> rows = M.rows(true);
  std::reverse(rows.begin(), rows.end());
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& mu : cols) cells.back().push_back(mu.to_label());
  for (const auto& lambda : rows) {
    std::vector<std::string> line{lambda.to_label()};
    for (const auto& mu : cols) line.push_back(M.entry(lambda, mu).to_string());
    cells.push_back(std::move(line));
  }
  return grid(cells);
}

std::string render_table(const ReducedMatrix& R) {
  std::vector<Partition> cols = R.labels();
  std::reverse(cols.begin(), cols.end());
  std::vector<Partition> rows = R.rows;
  std::sort(rows.begin(), rows.end());
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& mu : cols) cells.back().push_back(mu.to_label());
  for (const auto& lambda : rows) {
    std::string label = lambda.to_label();
    label.front() = '<';
    label.back() = '>';
    std::vector<std::string> line{label};
    for (const auto& mu : cols) line.push_back(R.entry(lambda, mu).str());
    cells.push_back(std::move(line));
  }
  return grid(cells);
}

std::string ladder_monomial(Modulus mod, const Partition& mu) {
  auto all = ladders(mod, mu);
  std::string out;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    out += it->residue < 10 ? "f_" + std::to_string(it->residue) : "f_{" + std::to_string(it->residue) + "}";
    if (it->cells > 1) out += "^{(" + std::to_string(it->cells) + ")}";
  }
  return out;
}

std::string render_ladder_diagram(Modulus mod, const Partition& mu) {
  if (!in_dp_h(mod, mu)) throw Error(ErrorCode::NotInDPh, mu.to_label());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t row = mu.length(); row >= 1; --row) {
    std::vector<std::string> line;
    for (int c = 0; c < mu[row - 1]; ++c) {
      line.push_back(std::to_string(residue(mod, c)) + "_" +
                     std::to_string(ladder_index(mod, static_cast<int>(row), c)));
    }
    cells.push_back(std::move(line));
  }
  return grid(cells);
}

}  // namespace spinfock::io
