#include "gridlink/quadrant.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridlink {

namespace {

constexpr int kSide = 6;

std::vector<Vertex> map_local(Corner corner, std::initializer_list<Vertex> local) {
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(to_global(corner, v));
  return out;
}

std::vector<Edge> path_edges(const std::vector<Vertex>& walk) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) out.emplace_back(walk[i], walk[i + 1]);
  return out;
}

}  // namespace

std::string to_string(Corner c) {
  switch (c) {
    case Corner::UL: return "UL";
    case Corner::UR: return "UR";
    case Corner::LL: return "LL";
    case Corner::LR: return "LR";
  }
  return "?";
}

Vertex to_global(Corner corner, Vertex local) {
  switch (corner) {
    case Corner::UL: return local;
    case Corner::UR: return {local.row, kSide + 1 - local.col};
    case Corner::LL: return {kSide + 1 - local.row, local.col};
    case Corner::LR: return {kSide + 1 - local.row, kSide + 1 - local.col};
  }
  return local;
}

// Each orientation map is an involution.
Vertex to_local(Corner corner, Vertex global) { return to_global(corner, global); }

bool Quadrant::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Quadrant quadrant(const GridGraph& grid, Corner corner) {
  if (grid.rows() != kSide || grid.cols() != kSide) {
    throw std::invalid_argument("quadrants are defined on the 6x6 grid only");
  }
  Quadrant q;
  q.corner = corner;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) q.vertices.push_back(to_global(corner, {r, c}));
  }
  std::sort(q.vertices.begin(), q.vertices.end());
  q.graph = grid.induced(q.vertices);
  return q;
}

Quadrant quadrant(Corner corner) { return quadrant(GridGraph::full(kSide, kSide), corner); }

std::vector<Edge> central_cycle_c0() {
  return path_edges({{3, 3}, {3, 4}, {4, 4}, {4, 3}, {3, 3}});
}

std::vector<Edge> central_cycle_c1() {
  return path_edges({{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}, {5, 5},
                     {5, 4}, {5, 3}, {5, 2}, {4, 2}, {3, 2}, {2, 2}});
}

namespace {

std::vector<Vertex> cycle_vertices(const std::vector<Edge>& cycle) {
  std::vector<Vertex> out;
  for (const Edge& e : cycle) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> QuadrantLandmarks::c0_vertices() const { return cycle_vertices(C0); }
std::vector<Vertex> QuadrantLandmarks::c1_vertices() const { return cycle_vertices(C1); }

QuadrantLandmarks landmarks(const Quadrant& q) {
  const Corner k = q.corner;
  QuadrantLandmarks l;
  l.A = map_local(k, {{3, 1}, {3, 2}, {3, 3}});
  l.B = map_local(k, {{1, 3}, {2, 3}, {3, 3}});
  l.x0 = to_global(k, {3, 3});
  l.x1 = to_global(k, {2, 2});
  l.x2 = to_global(k, {1, 1});
  l.y0 = to_global(k, {3, 1});
  l.b = to_global(k, {2, 3});
  l.c = to_global(k, {1, 1});
  l.C0 = central_cycle_c0();
  l.C1 = central_cycle_c1();
  l.Z = map_local(k, {{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}});
  l.M = map_local(k, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {2, 2}});
  l.S = map_local(k, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  std::vector<Vertex> ring = map_local(
      k, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}, {1, 1}});
  l.boundary_cycle = path_edges(ring);
  for (auto* set : {&l.Z, &l.M, &l.S}) std::sort(set->begin(), set->end());
  std::sort(l.boundary_cycle.begin(), l.boundary_cycle.end());
  return l;
}

std::string to_string(AdjustedKind k) {
  return "Q" + std::to_string(static_cast<int>(k));
}

AdjustedQuadrant adjusted_quadrant(AdjustedKind kind, Corner corner) {
  const Quadrant q = quadrant(corner);
  auto g = [corner](int r, int c) { return to_global(corner, {r, c}); };
  auto e = [&g](int r1, int c1, int r2, int c2) { return Edge(g(r1, c1), g(r2, c2)); };

  AdjustedQuadrant out;
  out.kind = kind;
  out.corner = corner;
  out.A = {g(3, 1), g(3, 2), g(3, 3)};
  std::sort(out.A.begin(), out.A.end());

  const std::vector<Edge> a_edges{e(3, 1, 3, 2), e(3, 2, 3, 3)};
  GridGraph h = q.graph.without_edges(a_edges);
  switch (kind) {
    case AdjustedKind::Q0:
      break;
    case AdjustedKind::Q1: {
      // Corner (1,1) dropped, top-row edge (1,2)-(1,3) dropped.
      const std::vector<Vertex> gone{g(1, 1)};
      const std::vector<Edge> cut{e(1, 2, 1, 3)};
      h = h.without_vertices(gone).without_edges(cut);
      break;
    }
    case AdjustedKind::Q2: {
      // (1,2) merged into (1,1); top-row edge (1,2)-(1,3) dropped.
      const std::vector<Edge> cut{e(1, 2, 1, 3)};
      h = h.without_edges(cut).contract(g(1, 2), g(1, 1));
      break;
    }
    case AdjustedKind::Q3: {
      // (2,1) merged into (1,1); the middle-row edges dropped.
      const std::vector<Edge> cut{e(2, 1, 2, 2), e(2, 2, 2, 3)};
      h = h.without_edges(cut).contract(g(2, 1), g(1, 1));
      break;
    }
    case AdjustedKind::Q4: {
      // (2,2) merged into (1,2); the middle-row edges dropped.
      const std::vector<Edge> cut{e(2, 1, 2, 2), e(2, 2, 2, 3)};
      h = h.without_edges(cut).contract(g(2, 2), g(1, 2));
      break;
    }
  }
  out.graph = h;
  for (Vertex a : out.A) {
    for (Vertex n : h.neighbors(a)) {
      if (std::find(out.N.begin(), out.N.end(), n) == out.N.end()) out.N.push_back(n);
    }
  }
  std::sort(out.N.begin(), out.N.end());
  return out;
}

Vertex SymmetryTransform::apply(Vertex v) const {
  if (kind == SymmetryKind::Identity) return v;
  const Vertex local = to_local(corner, v);
  return to_global(corner, {local.col, local.row});
}

Edge SymmetryTransform::apply(const Edge& e) const { return Edge(apply(e.a), apply(e.b)); }

std::vector<SymmetryTransform> quadrant_symmetries(const Quadrant& q) {
  return {{SymmetryKind::Identity, q.corner}, {SymmetryKind::Transpose, q.corner}};
}

}  // namespace gridlink
