#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "spinfock/canonical.hpp"
#include "spinfock/crystal.hpp"
#include "spinfock/fock.hpp"
#include "spinfock/laurent.hpp"
#include "spinfock/modular.hpp"

namespace spinfock::io {

using nlohmann::json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json to_json(const BigInt& value);
BigInt bigint_from_json(const json& j);

/// {"exponent": coefficient}, exponents as signed decimal strings.
json to_json(const LaurentPoly& p);
/// Accepts the object form above or a display string such as "q-q^5".
LaurentPoly poly_from_json(const json& j);

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// {"degree": m, "terms": [{"partition": [...], "poly": {...}}]}, decreasing lex.
json to_json(const FockVector& v);
FockVector fock_vector_from_json(const json& j);

/// {"h", "m", "columns": [{"label": [...], "entries": [{"row": [...], "poly": {...}}]}]}
json to_json(const BasisMatrix& M);
BasisMatrix basis_matrix_from_json(const json& j);

/// {"h", "vertices": [...], "edges": [{"from", "color", "to"}]}
json to_json(const CrystalGraph& g);
/// Vertices labelled "l1,l2,..."; the empty partition is labelled "()".
std::string to_dot(const CrystalGraph& g);

/// {"p", "m", "rows": [...], "columns": [{"label": [...], "entries": [{"row": [...], "value": k}]}]}
json to_json(const ReducedMatrix& R);
/// Rows and columns in increasing lex order; header "row,<mu>,...".
std::string to_csv(const ReducedMatrix& R);

/// Plain-text matrix: rows are DP_h(m), columns DPR_h(m), both listed in
/// increasing lex order (smallest label first).
std::string render_table(const BasisMatrix& M);
/// Rows are DP(m) labelled <lambda>, columns DPR_p(m), increasing lex order.
std::string render_table(const ReducedMatrix& R);

/// Word of divided powers for the ladder monomial, leftmost factor applied
/// last: e.g. "f_0f_1f_3^{(2)}f_3".
std::string ladder_monomial(Modulus mod, const Partition& mu);

/// Young diagram with cells "residue_ladder", longest row at the bottom.
std::string render_ladder_diagram(Modulus mod, const Partition& mu);

}  // namespace spinfock::io
