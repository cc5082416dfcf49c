#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "relfact/partition.hpp"
#include "relfact/rational.hpp"

namespace relfact {

using EdgeId = std::int64_t;

/// A node of a stochastic graph. Nodes produced by contraction or
/// identification remember every original node they absorbed.
struct Node {
  std::vector<std::string> members;  // sorted, never empty

  /// "a" for an original node, "{a,b}" for a merged one.
  std::string label() const;
};

struct Edge {
  EdgeId id;
  std::size_t u;  // node indices; u == v is a self-loop
  std::size_t v;
  Rational p;  // probability of being operative

  bool is_loop() const { return u == v; }
};

/// Edge description in terms of node labels, used to build graphs.
struct EdgeSpec {
  EdgeId id;
  std::string u;
  std::string v;
  Rational p;
};

/// Undirected multigraph with independent edge failures and a terminal set K.
/// Immutable once built; every operation returns a new graph.
class StochasticGraph {
 public:
  StochasticGraph() = default;

  /// Throws GraphError on duplicate node labels or edge ids, unknown
  /// endpoints or terminals, or probabilities outside [0, 1].
  StochasticGraph(const std::vector<std::string>& nodes, const std::vector<EdgeSpec>& edges,
                  const std::vector<std::string>& terminals);

  /// Low-level constructor over node indices; validates the same invariants.
  StochasticGraph(std::vector<Node> nodes, std::vector<Edge> edges, std::vector<bool> terminal);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Node> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::string label(std::size_t i) const { return nodes_[i].label(); }

  bool is_terminal(std::size_t i) const { return terminal_[i]; }
  const std::vector<bool>& terminal_flags() const { return terminal_; }
  std::vector<std::size_t> terminals() const;
  std::size_t terminal_count() const;

  std::optional<std::size_t> find_node(const std::string& label) const;
  std::optional<std::size_t> find_edge(EdgeId id) const;
  /// Like find_node/find_edge but throws GraphError when absent.
  std::size_t node_index(const std::string& label) const;
  std::size_t edge_index(EdgeId id) const;

  /// Same topology with a different terminal set.
  StochasticGraph with_terminals(std::vector<bool> terminal) const;
  /// Same topology with every edge probability replaced by p.
  StochasticGraph with_uniform_probability(const Rational& p) const;

 private:
  void validate() const;

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<bool> terminal_;
};

/// Operative flag per edge id; must cover exactly the graph's edges.
using EdgeState = std::map<EdgeId, bool>;

/// Merges nodes by class id (class_of[i] for node i); edges and terminals
/// follow the quotient map. Merged nodes sit at the position of their first
/// member.
StochasticGraph quotient(const StochasticGraph& g, std::span<const std::size_t> class_of);

/// G·e: endpoints of e merged, e removed; parallel edges become self-loops.
StochasticGraph contract(const StochasticGraph& g, EdgeId e);
/// G−e.
StochasticGraph delete_edge(const StochasticGraph& g, EdgeId e);

/// True iff every terminal lies in one component of the operative subgraph.
bool is_k_pathset(const StochasticGraph& g, const EdgeState& state);
/// True iff the terminals are connected when every edge is operative.
bool is_k_connected(const StochasticGraph& g);
/// True iff the underlying graph (ignoring probabilities) is connected.
bool is_connected(const StochasticGraph& g);

/// G^A: boundary nodes in the same block of a are merged. Repeated boundary
/// labels are allowed and simply denote the same node.
StochasticGraph identify_nodes(const StochasticGraph& g, std::span<const std::string> boundary,
                               const Partition& a);

struct IrrelevanceReport {
  std::set<EdgeId> edges;  // edges on no K-minpath
  bool k_connected = true;  // false => every edge reported, reliability is 0
};

IrrelevanceReport irrelevant_edges(const StochasticGraph& g);

/// Two sides sharing exactly the boundary nodes k_1..k_n.
struct CutDecomposition {
  StochasticGraph g1;
  StochasticGraph g2;
  std::vector<std::string> boundary;

  std::size_t n() const { return boundary.size(); }
};

/// Checks both hypotheses of the cut factorization and returns G1 ∪ G2 with
/// K = K1 ∪ K2. Each violation raises DecompositionError with its own kind.
StochasticGraph validate_decomposition(const CutDecomposition& d);

/// The union without the reachability check; still enforces the
/// structural conditions (shared nodes, shared edges, boundary terminals).
StochasticGraph union_graph(const CutDecomposition& d);

}  // namespace relfact
