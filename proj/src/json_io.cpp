#include "relfact/json_io.hpp"

#include <fstream>
#include <sstream>

#include "relfact/errors.hpp"

namespace relfact {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const Json& doc, const char* key) {
  const auto& arr = field(doc, key);
  if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError(std::string("field '") + key + "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

StochasticGraph graph_from_json(const Json& doc) {
  const auto nodes = string_list(doc, "nodes");
  const auto terminals = string_list(doc, "terminals");
  const auto& edges = field(doc, "edges");
  if (!edges.is_array()) throw ParseError("field 'edges' must be an array");

  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) {
    const auto& id = field(e, "id");
    const auto& u = field(e, "u");
    const auto& v = field(e, "v");
    const auto& p = field(e, "p");
    if (!id.is_number_integer()) throw ParseError("edge 'id' must be an integer");
    if (!u.is_string() || !v.is_string()) throw ParseError("edge endpoints must be strings");
    if (!p.is_string()) throw ParseError("edge 'p' must be a string such as \"1/2\" or \"0.9\"");
    specs.push_back(EdgeSpec{id.get<EdgeId>(), u.get<std::string>(), v.get<std::string>(),
                             parse_rational(p.get<std::string>())});
  }
  return StochasticGraph(nodes, specs, terminals);
}

Json graph_to_json(const StochasticGraph& g) {
  Json doc;
  doc["nodes"] = Json::array();
  for (std::size_t i = 0; i < g.node_count(); ++i) doc["nodes"].push_back(g.label(i));
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back(Json{{"id", e.id}, {"u", g.label(e.u)}, {"v", g.label(e.v)}, {"p", to_wire(e.p)}});
  }
  doc["terminals"] = Json::array();
  for (std::size_t t : g.terminals()) doc["terminals"].push_back(g.label(t));
  return doc;
}

bool is_decomposition(const Json& doc) { return doc.is_object() && doc.contains("g1"); }

CutDecomposition decomposition_from_json(const Json& doc) {
  return CutDecomposition{graph_from_json(field(doc, "g1")), graph_from_json(field(doc, "g2")),
                          string_list(doc, "boundary")};
}

Json decomposition_to_json(const CutDecomposition& d) {
  Json doc;
  doc["g1"] = graph_to_json(d.g1);
  doc["g2"] = graph_to_json(d.g2);
  doc["boundary"] = d.boundary;
  return doc;
}

Json partitions_to_json(const std::vector<Partition>& states) {
  Json out = Json::array();
  for (const auto& p : states) out.push_back(p.to_string());
  return out;
}

Json rational_matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_wire(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_si());
    out.push_back(std::move(row));
  }
  return out;
}

Json conmatrix_to_json(const ConnectivityBundle& bundle, const BigInt& det, const InvariantFactors& snf) {
  Json doc;
  doc["n"] = bundle.n();
  doc["order"] = partitions_to_json(bundle.order.states());
  doc["A"] = int_matrix_to_json(bundle.A);
  doc["A_inv"] = rational_matrix_to_json(bundle.A_inv);
  doc["det"] = to_string(det);
  doc["invariant_factors"] = Json::array();
  for (const auto& d : snf.diagonal) doc["invariant_factors"].push_back(to_string(d));
  doc["torsion_prime_powers"] = Json::array();
  for (const auto& pp : snf.torsion) {
    doc["torsion_prime_powers"].push_back(Json::array({pp.prime.get_si(), pp.exponent, pp.multiplicity}));
  }
  return doc;
}

Json distribution_to_json(const StateDistribution& d, const std::vector<Partition>& order) {
  Json out = Json::object();
  for (const auto& p : order) out[p.to_string()] = to_wire(d.at(p));
  out["detached"] = to_wire(d.detached);
  return out;
}

Json cluster_polynomial_to_json(const ClusterPolynomial& z) {
  Json out = Json::object();
  for (const auto& [k, w] : z.weights) out[std::to_string(k)] = to_wire(w);
  return out;
}

}  // namespace relfact
