#pragma once

#include <array>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class Corner { UL, UR, LL, LR };

std::string to_string(Corner c);

// Maps between quadrant-local coordinates and the 6x6 grid. Local
// coordinates place the quadrant as the upper-left one: local row 3 is the
// horizontal boundary line A, local col 3 the vertical line B, and (3,3) is
// the corner x0 on the central 4-cycle.
Vertex to_global(Corner corner, Vertex local);
Vertex to_local(Corner corner, Vertex global);

struct Quadrant {
  GridGraph graph;  // the 6x6 grid restricted to the 3x3 block
  Corner corner = Corner::UL;
  std::vector<Vertex> vertices;  // row-major, 9 entries

  bool contains(Vertex v) const;
};

// Throws std::invalid_argument unless `grid` is 6x6.
Quadrant quadrant(const GridGraph& grid, Corner corner);
Quadrant quadrant(Corner corner);

struct QuadrantLandmarks {
  std::vector<Vertex> A;  // horizontal boundary line, ordered away from x0's column
  std::vector<Vertex> B;  // vertical boundary line
  Vertex x0;              // A ∩ B, on C0
  Vertex x1;              // middle of Q ∩ C1
  Vertex x2;              // corner with degree 2 in G
  Vertex y0;              // degree-3 corner lying on A
  Vertex b;               // middle of B
  Vertex c;               // corner outside A ∪ B
  std::vector<Edge> C0;   // 4-cycle at the grid centre
  std::vector<Edge> C1;   // 12-cycle around C0
  std::vector<Vertex> Z;  // local (row 2 ∪ col 2) ∩ Q
  std::vector<Vertex> M;  // local row 1 ∪ col 1 ∪ {x1}
  std::vector<Vertex> S;  // Q − (A ∪ B)
  std::vector<Edge> boundary_cycle;  // 8-cycle Q − x1

  std::vector<Vertex> c0_vertices() const;
  std::vector<Vertex> c1_vertices() const;
};

QuadrantLandmarks landmarks(const Quadrant& q);

// Edges of C0 and C1 as sets of grid edges.
std::vector<Edge> central_cycle_c0();
std::vector<Edge> central_cycle_c1();

enum class AdjustedKind { Q0, Q1, Q2, Q3, Q4 };

std::string to_string(AdjustedKind k);

struct AdjustedQuadrant {
  AdjustedKind kind = AdjustedKind::Q0;
  Corner corner = Corner::UL;
  GridGraph graph;
  std::vector<Vertex> A;
  std::vector<Vertex> N;  // nodes adjacent to A
};

// The quadrant with the edges inside A removed (Q0), or one of the four
// reduced variants used for escapes into A.
AdjustedQuadrant adjusted_quadrant(AdjustedKind kind, Corner corner = Corner::UL);

enum class SymmetryKind { Identity, Transpose };

struct SymmetryTransform {
  SymmetryKind kind = SymmetryKind::Identity;
  Corner corner = Corner::UL;

  Vertex apply(Vertex v) const;
  Edge apply(const Edge& e) const;
};

// {identity, transpose about x0}. Transpose swaps A and B.
std::vector<SymmetryTransform> quadrant_symmetries(const Quadrant& q);

}  // namespace gridlink
