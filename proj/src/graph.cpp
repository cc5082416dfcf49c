#include "relfact/graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "relfact/disjoint_sets.hpp"
#include "relfact/errors.hpp"
#include "relfact/topology.hpp"

namespace relfact {

std::string Node::label() const {
  if (members.size() == 1) return members.front();
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  return out + "}";
}

StochasticGraph::StochasticGraph(const std::vector<std::string>& nodes, const std::vector<EdgeSpec>& edges,
                                 const std::vector<std::string>& terminals) {
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& name : nodes) {
    if (name.empty()) throw GraphError("empty node identifier");
    if (!index.emplace(name, nodes_.size()).second) throw GraphError("duplicate node '" + name + "'");
    nodes_.push_back(Node{{name}});
  }
  auto lookup = [&](const std::string& name, const char* what) {
    auto it = index.find(name);
    if (it == index.end()) throw GraphError(std::string(what) + " '" + name + "' is not a node");
    return it->second;
  };
  for (const auto& spec : edges) {
    edges_.push_back(Edge{spec.id, lookup(spec.u, "edge endpoint"), lookup(spec.v, "edge endpoint"), spec.p});
  }
  terminal_.assign(nodes_.size(), false);
  for (const auto& t : terminals) terminal_[lookup(t, "terminal")] = true;
  validate();
}

StochasticGraph::StochasticGraph(std::vector<Node> nodes, std::vector<Edge> edges, std::vector<bool> terminal)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), terminal_(std::move(terminal)) {
  validate();
}

void StochasticGraph::validate() const {
  if (terminal_.size() != nodes_.size()) throw GraphError("terminal flags do not match node count");
  std::unordered_set<std::string> labels;
  for (const auto& n : nodes_) {
    if (n.members.empty()) throw GraphError("node without members");
    if (!labels.insert(n.label()).second) throw GraphError("duplicate node '" + n.label() + "'");
  }
  std::unordered_set<EdgeId> ids;
  for (const auto& e : edges_) {
    if (!ids.insert(e.id).second) throw GraphError("duplicate edge id " + std::to_string(e.id));
    if (e.u >= nodes_.size() || e.v >= nodes_.size()) {
      throw GraphError("edge " + std::to_string(e.id) + " has an endpoint outside the node set");
    }
    if (e.p < 0 || e.p > 1) {
      throw GraphError("edge " + std::to_string(e.id) + " probability " + to_wire(e.p) + " outside [0,1]");
    }
  }
}

std::vector<std::size_t> StochasticGraph::terminals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terminal_.size(); ++i) {
    if (terminal_[i]) out.push_back(i);
  }
  return out;
}

std::size_t StochasticGraph::terminal_count() const {
  return static_cast<std::size_t>(std::count(terminal_.begin(), terminal_.end(), true));
}

std::optional<std::size_t> StochasticGraph::find_node(const std::string& label) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].label() == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> StochasticGraph::find_edge(EdgeId id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t StochasticGraph::node_index(const std::string& label) const {
  auto i = find_node(label);
  if (!i) throw GraphError("unknown node '" + label + "'");
  return *i;
}

std::size_t StochasticGraph::edge_index(EdgeId id) const {
  auto i = find_edge(id);
  if (!i) throw GraphError("unknown edge id " + std::to_string(id));
  return *i;
}

StochasticGraph StochasticGraph::with_terminals(std::vector<bool> terminal) const {
  return StochasticGraph(nodes_, edges_, std::move(terminal));
}

StochasticGraph StochasticGraph::with_uniform_probability(const Rational& p) const {
  auto edges = edges_;
  for (auto& e : edges) e.p = p;
  return StochasticGraph(nodes_, std::move(edges), terminal_);
}

StochasticGraph quotient(const StochasticGraph& g, std::span<const std::size_t> class_of) {
  if (class_of.size() != g.node_count()) throw GraphError("quotient map size mismatch");
  std::map<std::size_t, std::size_t> new_index;
  std::vector<std::size_t> remap(g.node_count());
  std::vector<Node> nodes;
  std::vector<bool> terminal;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    auto [it, fresh] = new_index.emplace(class_of[i], nodes.size());
    if (fresh) {
      nodes.push_back(Node{});
      terminal.push_back(false);
    }
    remap[i] = it->second;
    auto& members = nodes[it->second].members;
    members.insert(members.end(), g.node(i).members.begin(), g.node(i).members.end());
    if (g.is_terminal(i)) terminal[it->second] = true;
  }
  for (auto& n : nodes) std::sort(n.members.begin(), n.members.end());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(Edge{e.id, remap[e.u], remap[e.v], e.p});
  return StochasticGraph(std::move(nodes), std::move(edges), std::move(terminal));
}

StochasticGraph contract(const StochasticGraph& g, EdgeId id) {
  const auto& e = g.edge(g.edge_index(id));
  std::vector<std::size_t> class_of(g.node_count());
  for (std::size_t i = 0; i < class_of.size(); ++i) class_of[i] = i;
  class_of[e.v] = class_of[e.u];
  return delete_edge(quotient(g, class_of), id);
}

StochasticGraph delete_edge(const StochasticGraph& g, EdgeId id) {
  const std::size_t idx = g.edge_index(id);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
  return StochasticGraph(std::vector<Node>(g.nodes().begin(), g.nodes().end()), std::move(edges),
                         g.terminal_flags());
}

namespace {

bool terminals_joined(const StochasticGraph& g, DisjointSets& ds) {
  int first = -1;
  for (std::size_t t : g.terminals()) {
    if (first < 0) first = static_cast<int>(t);
    else if (!ds.same(first, static_cast<int>(t))) return false;
  }
  return true;
}

}  // namespace

bool is_k_pathset(const StochasticGraph& g, const EdgeState& state) {
  if (state.size() != g.edge_count()) throw GraphError("edge state does not cover the edge set");
  DisjointSets ds(g.node_count());
  for (const auto& e : g.edges()) {
    auto it = state.find(e.id);
    if (it == state.end()) throw GraphError("edge state is missing edge " + std::to_string(e.id));
    if (it->second) ds.unite(static_cast<int>(e.u), static_cast<int>(e.v));
  }
  return terminals_joined(g, ds);
}

bool is_k_connected(const StochasticGraph& g) {
  DisjointSets ds(g.node_count());
  for (const auto& e : g.edges()) ds.unite(static_cast<int>(e.u), static_cast<int>(e.v));
  return terminals_joined(g, ds);
}

bool is_connected(const StochasticGraph& g) {
  DisjointSets ds(g.node_count());
  for (const auto& e : g.edges()) ds.unite(static_cast<int>(e.u), static_cast<int>(e.v));
  return ds.set_count() <= 1;
}

StochasticGraph identify_nodes(const StochasticGraph& g, std::span<const std::string> boundary,
                               const Partition& a) {
  if (a.size() != boundary.size()) {
    throw PartitionError("partition over " + std::to_string(a.size()) + " elements for a boundary of " +
                         std::to_string(boundary.size()) + " nodes");
  }
  DisjointSets ds(g.node_count());
  std::vector<int> first_in_block(a.block_count(), -1);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    int node = static_cast<int>(g.node_index(boundary[i]));
    int& first = first_in_block[a.block_of(i)];
    if (first < 0) first = node;
    else ds.unite(first, node);
  }
  std::vector<std::size_t> class_of(g.node_count());
  for (std::size_t i = 0; i < class_of.size(); ++i) class_of[i] = static_cast<std::size_t>(ds.find(static_cast<int>(i)));
  return quotient(g, class_of);
}

IrrelevanceReport irrelevant_edges(const StochasticGraph& g) {
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  std::vector<char> terminal(g.node_count());
  for (std::size_t i = 0; i < terminal.size(); ++i) terminal[i] = g.is_terminal(i);
  const auto mask = relevance(TopologyView{g.node_count(), ends, terminal});

  IrrelevanceReport report;
  report.k_connected = mask.k_connected;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (mask.irrelevant[i]) report.edges.insert(g.edge(i).id);
  }
  return report;
}

StochasticGraph union_graph(const CutDecomposition& d) {
  using Kind = DecompositionError::Kind;
  const std::set<std::string> boundary(d.boundary.begin(), d.boundary.end());
  if (boundary.empty()) throw DecompositionError(Kind::BoundaryNotInGraph, "empty boundary");

  for (const auto* side : {&d.g1, &d.g2}) {
    const char* name = side == &d.g1 ? "g1" : "g2";
    for (const auto& k : boundary) {
      auto idx = side->find_node(k);
      if (!idx) {
        throw DecompositionError(Kind::BoundaryNotInGraph,
                                 "boundary node '" + k + "' is not a node of " + name);
      }
      if (!side->is_terminal(*idx)) {
        throw DecompositionError(Kind::BoundaryNotTerminal, "Hypothesis 1 violated: boundary node '" + k +
                                                                "' is not a terminal of " + name);
      }
    }
  }

  for (const auto& n : d.g1.nodes()) {
    auto label = n.label();
    if (!boundary.count(label) && d.g2.find_node(label)) {
      throw DecompositionError(Kind::SharedInteriorNode,
                               "Hypothesis 1 violated: node '" + label + "' is shared but not on the boundary");
    }
  }
  for (const auto& e : d.g1.edges()) {
    if (d.g2.find_edge(e.id)) {
      throw DecompositionError(Kind::SharedEdge,
                               "Hypothesis 1 violated: edge id " + std::to_string(e.id) + " appears in both sides");
    }
  }

  std::vector<Node> nodes(d.g1.nodes().begin(), d.g1.nodes().end());
  std::vector<bool> terminal = d.g1.terminal_flags();
  std::vector<std::size_t> map2(d.g2.node_count());
  for (std::size_t i = 0; i < d.g2.node_count(); ++i) {
    if (auto existing = d.g1.find_node(d.g2.label(i))) {
      map2[i] = *existing;
      if (d.g2.is_terminal(i)) terminal[*existing] = true;
    } else {
      map2[i] = nodes.size();
      nodes.push_back(d.g2.node(i));
      terminal.push_back(d.g2.is_terminal(i));
    }
  }
  std::vector<Edge> edges(d.g1.edges().begin(), d.g1.edges().end());
  for (const auto& e : d.g2.edges()) edges.push_back(Edge{e.id, map2[e.u], map2[e.v], e.p});
  return StochasticGraph(std::move(nodes), std::move(edges), std::move(terminal));
}

StochasticGraph validate_decomposition(const CutDecomposition& d) {
  auto g = union_graph(d);
  DisjointSets ds(g.node_count());
  for (const auto& e : g.edges()) ds.unite(static_cast<int>(e.u), static_cast<int>(e.v));
  std::set<int> boundary_roots;
  for (const auto& k : d.boundary) boundary_roots.insert(ds.find(static_cast<int>(g.node_index(k))));
  for (std::size_t t : g.terminals()) {
    if (!boundary_roots.count(ds.find(static_cast<int>(t)))) {
      throw DecompositionError(DecompositionError::Kind::UnreachableTerminal,
                               "Hypothesis 2 violated: terminal '" + g.label(t) + "' reaches no boundary node");
    }
  }
  return g;
}

}  // namespace relfact
