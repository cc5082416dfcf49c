#include "relfact/topology.hpp"

#include <algorithm>

#include "relfact/disjoint_sets.hpp"

namespace relfact {

namespace {

struct BlockFinder {
  const TopologyView& g;
  std::vector<std::vector<std::pair<int, std::size_t>>> adj;  // (neighbour, edge)
  std::vector<int> disc, low;
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> blocks;
  int time = 0;

  explicit BlockFinder(const TopologyView& view) : g(view), adj(view.node_count) {
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
      auto [u, v] = g.ends[e];
      if (u == v) continue;
      adj[u].emplace_back(v, e);
      adj[v].emplace_back(u, e);
    }
    disc.assign(g.node_count, -1);
    low.assign(g.node_count, 0);
  }

  void visit(int u, std::size_t parent_edge) {
    disc[u] = low[u] = time++;
    for (auto [w, e] : adj[u]) {
      if (e == parent_edge) continue;
      if (disc[w] == -1) {
        stack.push_back(e);
        visit(w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          auto& block = blocks.emplace_back();
          while (true) {
            std::size_t top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> biconnected_blocks(const TopologyView& g) {
  BlockFinder finder(g);
  constexpr auto kNoEdge = static_cast<std::size_t>(-1);
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (finder.disc[v] == -1) finder.visit(static_cast<int>(v), kNoEdge);
  }
  return std::move(finder.blocks);
}

RelevanceMask relevance(const TopologyView& g) {
  RelevanceMask out;
  out.irrelevant.assign(g.ends.size(), 1);

  std::vector<int> terms;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    if (g.terminal[v]) terms.push_back(static_cast<int>(v));
  }
  if (terms.size() <= 1) return out;

  DisjointSets all(g.node_count);
  for (auto [u, v] : g.ends) all.unite(u, v);
  for (int t : terms) {
    if (!all.same(t, terms.front())) {
      out.k_connected = false;
      return out;
    }
  }

  std::vector<char> in_block(g.ends.size(), 0);
  DisjointSets outside;
  for (const auto& block : biconnected_blocks(g)) {
    for (std::size_t e : block) in_block[e] = 1;
    outside.reset(g.node_count);
    for (std::size_t e = 0; e < g.ends.size(); ++e) {
      if (!in_block[e]) outside.unite(g.ends[e].first, g.ends[e].second);
    }
    std::vector<char> root_has_terminal(g.node_count, 0);
    for (int t : terms) root_has_terminal[outside.find(t)] = 1;

    std::vector<int> vertices;
    for (std::size_t e : block) {
      vertices.push_back(g.ends[e].first);
      vertices.push_back(g.ends[e].second);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::size_t attachments = 0;
    for (int x : vertices) {
      if (root_has_terminal[outside.find(x)]) ++attachments;
    }
    if (attachments >= 2) {
      for (std::size_t e : block) out.irrelevant[e] = 0;
    }
    for (std::size_t e : block) in_block[e] = 0;
  }
  return out;
}

}  // namespace relfact
