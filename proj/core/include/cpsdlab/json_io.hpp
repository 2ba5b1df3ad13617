#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cpsdlab/bell.hpp"
#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/graph.hpp"
#include "cpsdlab/lorentz.hpp"
#include "cpsdlab/matcore.hpp"
#include "cpsdlab/quantum.hpp"
#include "cpsdlab/separations.hpp"

namespace cpsdlab {

using Json = nlohmann::json;

// Matrices: {"n", "complex", "entries"} with entries a flat row-major list
// and complex entries as [re, im] pairs (nested rows are accepted on input);
// rectangular real matrices use "rows" and "cols" instead of "n".
Json to_json(const RealMatrix& m);
Json to_json(const HermMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);
HermMatrix herm_matrix_from_json(const Json& j);

// {"d", "factors": [matrix, ...]}
Json to_json(const CpsdFactorization& f);
CpsdFactorization factorization_from_json(const Json& j);

// {"m", "vectors": [[c, x_1, ..., x_(m-1)], ...]}
Json to_json(const GramLorentzFactorization& f);
GramLorentzFactorization lorentz_from_json(const Json& j);

// {"mA", "mB", "table": [a][b][x][y]} with outcome index 0 for +1.
Json to_json(const Behavior& p);
Behavior behavior_from_json(const Json& j);

// {"n", "edges": [[u, v], ...]}, 0-indexed.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"d", "M": [...], "N": [...], "state": "max_entangled" | matrix}
Json to_json(const QuantumRepresentation& rep);
QuantumRepresentation representation_from_json(const Json& j);

Json to_json(const VerifyReport& r);
Json to_json(const BoundReport& r);
Json to_json(const NotCpCertificate& c);
Json to_json(const NotVnaCertificate& c);
Json to_json(const FullCorrelation& c);

/// Deterministic text form: keys sorted, two-space indent, numeric arrays on
/// one line, every double printed with 17 significant digits.
std::string dump_json(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace cpsdlab
