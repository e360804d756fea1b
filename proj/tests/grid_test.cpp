#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gridlink/quadrant.hpp"

using namespace gridlink;

namespace {

bool has(const std::vector<Vertex>& vs, Vertex v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

TEST_CASE("make_grid counts") {
  CHECK(GridGraph::full(6, 6).vertex_count() == 36);
  CHECK(GridGraph::full(6, 6).edge_count() == 60);
  CHECK(GridGraph::full(1, 1).vertex_count() == 1);
  CHECK(GridGraph::full(1, 1).edge_count() == 0);
  CHECK(GridGraph::full(3, 3).vertex_count() == 9);
  CHECK(GridGraph::full(3, 3).edge_count() == 12);
  CHECK_THROWS_AS(GridGraph::full(0, 3), std::invalid_argument);
}

TEST_CASE("edges join grid neighbours") {
  const GridGraph g = GridGraph::full(4, 5);
  for (const Edge& e : g.edges()) CHECK(manhattan(e.a, e.b) == 1);
  CHECK(g.is_connected());
  CHECK(g.degree({1, 1}) == 2);
  CHECK(g.degree({2, 2}) == 4);
}

TEST_CASE("quadrant") {
  const Quadrant ul = quadrant(GridGraph::full(6, 6), Corner::UL);
  CHECK(ul.vertices.size() == 9);
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) CHECK(ul.contains({r, c}));
  }
  CHECK_FALSE(ul.contains({1, 4}));
  CHECK(ul.graph.edge_count() == 12);
  CHECK(quadrant(Corner::UR).contains({3, 4}));
  CHECK_THROWS_AS(quadrant(GridGraph::full(5, 5), Corner::UL), std::invalid_argument);
}

TEST_CASE("landmarks") {
  const auto ul = landmarks(quadrant(Corner::UL));
  CHECK(ul.x0 == Vertex{3, 3});
  CHECK(ul.x1 == Vertex{2, 2});
  CHECK(ul.b == Vertex{2, 3});
  CHECK(ul.c == Vertex{1, 1});
  CHECK(ul.A.size() == 3);
  CHECK(ul.B.size() == 3);
  CHECK(has(ul.A, ul.x0));
  CHECK(has(ul.B, ul.x0));
  CHECK_FALSE(has(ul.A, ul.c));
  CHECK_FALSE(has(ul.B, ul.c));
  CHECK(ul.C0.size() == 4);
  CHECK(ul.C1.size() == 12);
  CHECK(has(ul.c0_vertices(), ul.x0));
  CHECK(has(ul.c1_vertices(), ul.x1));

  const auto ur = landmarks(quadrant(Corner::UR));
  CHECK(ur.x0 == Vertex{3, 4});
  CHECK(ur.x1 == Vertex{2, 5});
}

TEST_CASE("Z is connected and meets both lines") {
  for (Corner corner : {Corner::UL, Corner::UR, Corner::LL, Corner::LR}) {
    const auto lm = landmarks(quadrant(corner));
    const GridGraph z = GridGraph::full(6, 6).induced(lm.Z);
    CHECK(z.is_connected());
    CHECK(std::any_of(lm.Z.begin(), lm.Z.end(), [&](Vertex v) { return has(lm.A, v); }));
    CHECK(std::any_of(lm.Z.begin(), lm.Z.end(), [&](Vertex v) { return has(lm.B, v); }));
  }
}

TEST_CASE("adjusted quadrants") {
  const auto q0 = adjusted_quadrant(AdjustedKind::Q0);
  CHECK(q0.graph.vertex_count() == 9);
  CHECK(q0.graph.edge_count() == 10);
  const std::vector<Edge> a_edges{{{3, 1}, {3, 2}}, {{3, 2}, {3, 3}}};
  CHECK(q0.graph == quadrant(Corner::UL).graph.without_edges(a_edges));
  for (AdjustedKind k : {AdjustedKind::Q0, AdjustedKind::Q1, AdjustedKind::Q2, AdjustedKind::Q3,
                         AdjustedKind::Q4}) {
    const auto adj = adjusted_quadrant(k);
    for (Vertex a : adj.A) {
      CHECK(adj.graph.has_vertex(a));
      for (Vertex b : adj.A) CHECK_FALSE(adj.graph.is_routable_edge({a, b}));
    }
    // Contraction map is idempotent.
    for (Vertex v : adj.graph.vertices()) {
      CHECK(adj.graph.representative(adj.graph.representative(v)) == adj.graph.representative(v));
    }
    // Edges and vertices are a subset of Q0's.
    for (Vertex v : adj.graph.vertices()) CHECK(q0.graph.has_vertex(v));
    for (const Edge& e : adj.graph.edges()) CHECK(q0.graph.has_edge(e));
  }
}

TEST_CASE("contract") {
  const GridGraph g = GridGraph::full(2, 2).contract({1, 2}, {1, 1});
  CHECK(g.representative({1, 2}) == Vertex{1, 1});
  CHECK(g.has_edge({{1, 1}, {1, 2}}));
  CHECK_FALSE(g.is_routable_edge({{1, 1}, {1, 2}}));
  CHECK(g.nodes().size() == 3);
  CHECK_THROWS_AS(GridGraph::full(3, 3).contract({1, 1}, {3, 3}), std::invalid_argument);
}

TEST_CASE("terminal_count") {
  const std::vector<Vertex> none;
  const std::vector<Vertex> t{{3, 1}, {1, 1}};
  CHECK(terminal_count(none, t) == 0);
  const auto q = quadrant(Corner::UL);
  const std::vector<Vertex> eight(q.vertices.begin(), q.vertices.begin() + 8);
  CHECK(terminal_count(q.vertices, eight) == 8);
  CHECK(terminal_count(landmarks(q).A, t) == 1);
}

TEST_CASE("transpose symmetry") {
  const auto q = quadrant(Corner::UL);
  const auto syms = quadrant_symmetries(q);
  REQUIRE(syms.size() == 2);
  const auto& t = syms[1];
  CHECK(t.kind == SymmetryKind::Transpose);
  CHECK(t.apply(Vertex{1, 3}) == Vertex{3, 1});
  CHECK(t.apply(Vertex{3, 3}) == Vertex{3, 3});
  CHECK(t.apply(Vertex{2, 3}) == Vertex{3, 2});
  // A and B trade places; the quadrant graph is preserved.
  const auto lm = landmarks(q);
  for (Vertex a : lm.A) CHECK(has(lm.B, t.apply(a)));
  for (const Edge& e : q.graph.edges()) CHECK(q.graph.has_edge(t.apply(e)));
  for (Corner corner : {Corner::UR, Corner::LL, Corner::LR}) {
    const auto qc = quadrant(corner);
    const auto lc = landmarks(qc);
    const auto tc = quadrant_symmetries(qc)[1];
    CHECK(tc.apply(lc.x0) == lc.x0);
    for (Vertex a : lc.A) CHECK(has(lc.B, tc.apply(a)));
  }
}

TEST_CASE("local and global coordinates") {
  for (Corner corner : {Corner::UL, Corner::UR, Corner::LL, Corner::LR}) {
    for (int r = 1; r <= 3; ++r) {
      for (int c = 1; c <= 3; ++c) {
        const Vertex g = to_global(corner, {r, c});
        CHECK(quadrant(corner).contains(g));
        CHECK(to_local(corner, g) == Vertex{r, c});
      }
    }
  }
}
