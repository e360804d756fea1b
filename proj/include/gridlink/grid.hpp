#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gridlink {

// Matrix-style coordinates: row counts top-to-bottom, col left-to-right,
// both 1-based.
struct Vertex {
  int row = 0;
  int col = 0;

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(Vertex v);

inline int manhattan(Vertex a, Vertex b) {
  return (a.row > b.row ? a.row - b.row : b.row - a.row) +
         (a.col > b.col ? a.col - b.col : b.col - a.col);
}

// Unordered vertex pair, stored with a < b.
struct Edge {
  Vertex a;
  Vertex b;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Subgraph of the rows x cols grid P_rows [] P_cols.
//
// Vertices and edges of the full grid are switched on or off. Contraction is
// kept as a representative map instead of rewriting the graph, so a walk can
// still be written in grid coordinates: two consecutive vertices with the
// same representative are a free "hop", and an edge whose endpoints share a
// representative is internal to the contracted node.
class GridGraph {
 public:
  GridGraph() = default;

  // The full grid. Throws std::invalid_argument when rows or cols < 1.
  static GridGraph full(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool in_bounds(Vertex v) const {
    return v.row >= 1 && v.row <= rows_ && v.col >= 1 && v.col <= cols_;
  }
  bool has_vertex(Vertex v) const;
  // Present grid edge (contracted edges included).
  bool has_edge(const Edge& e) const;
  // Present edge whose endpoints lie in different contracted nodes.
  bool is_routable_edge(const Edge& e) const;

  Vertex representative(Vertex v) const;
  bool is_representative(Vertex v) const {
    return has_vertex(v) && representative(v) == v;
  }

  // Present vertices in row-major order.
  std::vector<Vertex> vertices() const;
  // Representatives of present vertices, row-major.
  std::vector<Vertex> nodes() const;
  // Present edges in (row, col, direction) order: right before down.
  std::vector<Edge> edges() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  // Representatives joined to rep(v) by a routable edge (with multiplicity
  // collapsed), row-major.
  std::vector<Vertex> neighbors(Vertex v) const;
  // Number of routable edges incident to the contracted node of v.
  int degree(Vertex v) const;
  bool is_connected() const;

  GridGraph without_edges(std::span<const Edge> removed) const;
  GridGraph without_vertices(std::span<const Vertex> removed) const;
  // Subgraph induced by the given vertices (contraction map is kept for
  // surviving vertices).
  GridGraph induced(std::span<const Vertex> keep) const;
  // Merges the node of `from` into the node of `into`. The two nodes must be
  // joined by a present edge.
  GridGraph contract(Vertex from, Vertex into) const;

  bool operator==(const GridGraph&) const = default;

 private:
  int index(Vertex v) const { return (v.row - 1) * cols_ + (v.col - 1); }
  // Edge slot: 2 * index(lower endpoint) + (0 = right, 1 = down), or -1 when
  // the pair is not a grid edge.
  int edge_slot(const Edge& e) const;
  Vertex vertex_at(int idx) const { return {idx / cols_ + 1, idx % cols_ + 1}; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<bool> vertex_on_;
  std::vector<bool> edge_on_;
  std::vector<int> rep_;  // index -> representative index
};

// |sub ∩ terminals|, counting each vertex of `sub` once.
int terminal_count(std::span<const Vertex> sub, std::span<const Vertex> terminals);

}  // namespace gridlink

template <>
struct std::hash<gridlink::Vertex> {
  std::size_t operator()(const gridlink::Vertex& v) const noexcept {
    return std::hash<int>{}(v.row * 1024 + v.col);
  }
};
