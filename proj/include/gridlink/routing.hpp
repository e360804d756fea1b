#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class DemandKind { Pair, Escape };

struct Demand {
  DemandKind kind = DemandKind::Pair;
  Vertex source;
  Vertex target;                 // pair only
  std::vector<Vertex> exits;     // escape only
  std::optional<int> group;      // escape only; members end at distinct exits

  static Demand pair(Vertex s, Vertex t) { return {DemandKind::Pair, s, t, {}, std::nullopt}; }
  static Demand escape(Vertex s, std::vector<Vertex> exits, std::optional<int> group = {}) {
    return {DemandKind::Escape, s, {}, std::move(exits), group};
  }

  bool operator==(const Demand&) const = default;
};

struct Instance {
  GridGraph graph;
  std::vector<Edge> forbidden_edges;
  std::vector<Demand> demands;

  bool operator==(const Instance&) const = default;
};

// A walk written as grid vertices. Consecutive vertices are joined by a
// routable edge or share a contracted node.
using Path = std::vector<Vertex>;

struct PathSystem {
  std::vector<Path> paths;

  bool operator==(const PathSystem&) const = default;
};

// Throws std::invalid_argument on a malformed instance: absent endpoint or
// exit, an escape without exits, or a forbidden edge outside the graph.
void validate(const Instance& inst);

// Exact edge-disjoint router. Returns std::nullopt when no path system
// exists. Demands are routed in the given order; ties between equally short
// continuations are broken by (row, col, direction) edge order, so output
// depends only on the instance.
std::optional<PathSystem> solve(const Instance& inst);

struct VerifyReport {
  bool ok = true;
  std::string message;  // first violation, empty when ok

  explicit operator bool() const { return ok; }
};

// Independent certificate check.
VerifyReport verify(const Instance& inst, const PathSystem& cert);

// Max-flow route for all-escape instances. Sources form a multiset; each
// ends somewhere in `exits`, pairwise distinct when `distinct` is set.
std::optional<PathSystem> escape_flow(const GridGraph& graph, const std::vector<Vertex>& sources,
                                      const std::vector<Vertex>& exits, bool distinct,
                                      const std::vector<Edge>& forbidden = {});

// Every (u1, v1, u2, v2), repetition allowed, admits edge-disjoint
// u1-v1 and u2-v2 paths.
bool is_weakly_2_linked(const GridGraph& graph);

// Edges traversed by a path (hops through contracted nodes excluded).
std::vector<Edge> path_edges(const GridGraph& graph, const Path& path);

}  // namespace gridlink
