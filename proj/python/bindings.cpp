#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relfact/algebra.hpp"
#include "relfact/errors.hpp"
#include "relfact/json_io.hpp"
#include "relfact/random_cluster.hpp"
#include "relfact/reliability.hpp"

namespace py = pybind11;
using namespace relfact;

namespace {

OrderVariant order_from(const std::string& name) {
  if (name == "canonical") return OrderVariant::Canonical;
  if (name == "reversed-levels") return OrderVariant::ReversedLevels;
  throw ParseError("unknown order '" + name + "'");
}

std::string reliability(const std::string& text, const std::string& route, std::size_t jobs) {
  const Json doc = parse_json(text);
  if (is_decomposition(doc)) {
    const auto d = decomposition_from_json(doc);
    if (route == "auto" || route == "factorized") return to_wire(factorized_reliability(d, {OrderVariant::Canonical, jobs}).reliability);
    if (route == "joint") {
      return to_wire(joint_reliability(state_distribution(d.g1, d.boundary), state_distribution(d.g2, d.boundary)));
    }
    if (route == "n2") return to_wire(n2_closed_form(d));
    const auto g = union_graph(d);
    if (route == "bruteforce") return to_wire(reliability_bruteforce(g));
    if (route == "factoring") return to_wire(reliability_factoring(g));
  } else {
    const auto g = graph_from_json(doc);
    if (route == "auto" || route == "factoring") return to_wire(reliability_factoring(g));
    if (route == "bruteforce") return to_wire(reliability_bruteforce(g));
  }
  throw ParseError("route '" + route + "' does not apply to this document");
}

std::string factorize(const std::string& text, const std::string& order, std::size_t jobs) {
  const auto r = factorized_reliability(decomposition_from_json(parse_json(text)), {order_from(order), jobs});
  Json out;
  out["reliability"] = to_wire(r.reliability);
  out["n"] = r.n;
  out["order"] = partitions_to_json(r.states);
  out["side1"] = Json::array();
  out["side2"] = Json::array();
  for (const auto& v : r.side1) out["side1"].push_back(to_wire(v));
  for (const auto& v : r.side2) out["side2"].push_back(to_wire(v));
  out["warnings"] = r.warnings;
  return out.dump();
}

std::string connectivity_matrix(std::size_t n, const std::string& order) {
  if (n < 1 || n > kMaxBoundary) throw PartitionError("n out of range");
  const auto b = connectivity_bundle(n, order_from(order));
  Json out = conmatrix_to_json(*b, abs(determinant(b->A)), smith_normal_form(b->A));
  out["B"] = int_matrix_to_json(b->B);
  out["D"] = int_matrix_to_json(b->D);
  out["C"] = rational_matrix_to_json(b->C);
  return out.dump();
}

std::vector<std::string> polynomial(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& c : reliability_polynomial(graph_from_json(parse_json(text))).coefficients) out.push_back(to_string(c));
  return out;
}

std::map<std::size_t, std::string> cluster_weights(const std::string& text) {
  std::map<std::size_t, std::string> out;
  for (const auto& [k, w] : partition_function(graph_from_json(parse_json(text))).weights) out[k] = to_wire(w);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact K-terminal reliability by boundary-cut factorization";

  auto base = py::register_exception<Error>(m, "RelfactError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<PartitionError>(m, "PartitionError", base.ptr());
  py::register_exception<DecompositionError>(m, "DecompositionError", base.ptr());
  py::register_exception<EnumerationBoundError>(m, "EnumerationBoundError", base.ptr());

  m.def("reliability", &reliability, py::arg("document"), py::arg("route") = "auto", py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("factorize", &factorize, py::arg("document"), py::arg("order") = "canonical", py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("connectivity_matrix", &connectivity_matrix, py::arg("n"), py::arg("order") = "canonical");
  m.def("partitions", [](std::size_t n) {
    std::vector<std::string> out;
    const CoherentOrder order(n);
    for (const auto& p : order.states()) out.push_back(p.to_string());
    return out;
  });
  m.def("join", [](const std::string& a, const std::string& b) {
    return join(Partition::parse(a), Partition::parse(b)).to_string();
  });
  m.def("meet", [](const std::string& a, const std::string& b) {
    return meet(Partition::parse(a), Partition::parse(b)).to_string();
  });
  m.def("reliability_polynomial", &polynomial, py::arg("document"));
  m.def("partition_function", &cluster_weights, py::arg("document"));
}
