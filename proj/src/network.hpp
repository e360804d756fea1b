#pragma once

// Compiled adjacency used by the router and the flow reduction.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/routing.hpp"

namespace gridlink::detail {

struct Arc {
  int to;
  int edge;
};

// Nodes are the representatives of present vertices; arcs are routable,
// non-forbidden edges in (row, col, direction) order.
struct Network {
  const GridGraph* graph = nullptr;
  std::vector<Vertex> node_vertex;
  std::vector<int> node_of;  // grid index -> node id, -1 when absent
  std::vector<Edge> edge;
  std::vector<std::array<int, 2>> edge_nodes;
  std::vector<std::vector<Arc>> adj;

  Network(const GridGraph& g, const std::vector<Edge>& forbidden);

  int node(Vertex v) const;
  int node_count() const { return static_cast<int>(node_vertex.size()); }
  int edge_count() const { return static_cast<int>(edge.size()); }

  // Rewrites a walk over node ids (start vertex plus edge ids) as grid
  // vertices, inserting hops through contracted nodes, and finishes at `end`
  // when `end` lies in the final node.
  Path expand(Vertex start, const std::vector<int>& edges,
              std::optional<Vertex> end = std::nullopt) const;
};

}  // namespace gridlink::detail
