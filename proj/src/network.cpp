#include "network.hpp"

#include <algorithm>

namespace gridlink::detail {

Network::Network(const GridGraph& g, const std::vector<Edge>& forbidden) : graph(&g) {
  node_of.assign(static_cast<std::size_t>(g.rows() * g.cols()), -1);
  auto idx = [&g](Vertex v) { return (v.row - 1) * g.cols() + (v.col - 1); };
  for (Vertex v : g.nodes()) {
    node_of[idx(v)] = static_cast<int>(node_vertex.size());
    node_vertex.push_back(v);
  }
  for (Vertex v : g.vertices()) node_of[idx(v)] = node_of[idx(g.representative(v))];
  adj.resize(node_vertex.size());
  for (const Edge& e : g.edges()) {
    if (!g.is_routable_edge(e)) continue;
    if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end()) continue;
    const int id = static_cast<int>(edge.size());
    const int u = node_of[idx(e.a)];
    const int w = node_of[idx(e.b)];
    edge.push_back(e);
    edge_nodes.push_back({u, w});
    adj[u].push_back({w, id});
    adj[w].push_back({u, id});
  }
}

int Network::node(Vertex v) const {
  if (!graph->has_vertex(v)) return -1;
  return node_of[(v.row - 1) * graph->cols() + (v.col - 1)];
}

Path Network::expand(Vertex start, const std::vector<int>& edges,
                     std::optional<Vertex> end) const {
  Path out{start};
  for (int id : edges) {
    const Vertex here = out.back();
    const int n = node(here);
    const Edge& e = edge[id];
    Vertex from = e.a;
    Vertex to = e.b;
    if (node(from) != n) std::swap(from, to);
    if (from != here) out.push_back(from);
    out.push_back(to);
  }
  if (end && out.back() != *end && node(*end) == node(out.back())) out.push_back(*end);
  return out;
}

}  // namespace gridlink::detail
