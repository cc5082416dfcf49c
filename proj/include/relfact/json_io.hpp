#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "relfact/algebra.hpp"
#include "relfact/graph.hpp"
#include "relfact/random_cluster.hpp"
#include "relfact/reliability.hpp"

namespace relfact {

/// Insertion-ordered so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

/// Syntax errors raise ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

// Graph document:
//   {"nodes":[..], "edges":[{"id":1,"u":"a","v":"b","p":"1/2"}], "terminals":[..]}
// "p" is "num/den" or a decimal string. Shape/type problems raise ParseError;
// invariant violations (duplicate ids, p outside [0,1], ...) raise GraphError.
StochasticGraph graph_from_json(const Json& doc);
Json graph_to_json(const StochasticGraph& g);

// Decomposition document: {"g1":<graph>, "g2":<graph>, "boundary":[..]}
bool is_decomposition(const Json& doc);
CutDecomposition decomposition_from_json(const Json& doc);
Json decomposition_to_json(const CutDecomposition& d);

Json partitions_to_json(const std::vector<Partition>& states);
Json rational_matrix_to_json(const RatMatrix& m);
Json int_matrix_to_json(const IntMatrix& m);

/// {"n", "order", "A", "A_inv", "det", "invariant_factors",
///  "torsion_prime_powers"}.
Json conmatrix_to_json(const ConnectivityBundle& bundle, const BigInt& det, const InvariantFactors& snf);

Json distribution_to_json(const StateDistribution& d, const std::vector<Partition>& order);
Json cluster_polynomial_to_json(const ClusterPolynomial& z);

}  // namespace relfact
