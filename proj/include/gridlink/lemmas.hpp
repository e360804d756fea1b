#pragma once

// Escape, frame and clamp constructions for a single quadrant. Every
// operation returns its paths together with the routing instance they
// answer, so the result can be checked with verify().

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gridlink/quadrant.hpp"
#include "gridlink/routing.hpp"

namespace gridlink {

// A claim written as a routing instance plus the paths that satisfy it.
struct Certified {
  Instance instance;
  PathSystem paths;
  std::string method;  // construction name, or "router" when searched
};

// Cycle C_alpha (C0 or C1) with two edge-disjoint mating paths ending at
// `anchor`. Mating paths stay in the quadrant and avoid C1 edges.
struct Frame {
  int alpha = 0;
  Vertex anchor;
  std::array<Path, 2> mating_paths;
  bool forbidden_respected = true;
};

// Quadrant-local C0 ∩ Q and C1 ∩ Q, and the C1 edges inside Q.
std::vector<Vertex> cycle_vertices_in(const Quadrant& q, int alpha);
std::vector<Edge> c1_edges_in(const Quadrant& q);

// Framing on C_alpha for terminals s1, s2 (possibly equal).
// Throws std::invalid_argument when s1 or s2 lies outside q or alpha is not
// 0 or 1.
Frame build_frame(const Quadrant& q, Vertex s1, Vertex s2, int alpha);
Certified lower_frame(const Quadrant& q, Vertex s1, Vertex s2, const Frame& f);

// Edge-disjoint mating of s_j onto cycle C_{gamma[j]}, avoiding C1 edges.
Certified mate_pair_to_cycles(const Quadrant& q, Vertex s1, Vertex s2, std::array<int, 2> gamma);

// A frame for two terminals of a triple plus a mating path for the third.
// `framed` holds indices into the input triple; `mate` is the third
// terminal's path, ending at `mate_end`.
struct FramedTriple {
  Frame frame;
  std::array<int, 2> framed{0, 1};
  int mated = 2;
  Path mate;
  Certified cert;
};

// Frame for two of the triple on some C_alpha, the third mated to
// C_(1-alpha). triple[0], triple[1] are framed when that is possible.
// Throws unless the three vertices are distinct and in q.
std::optional<FramedTriple> frame_two_mate_third(const Quadrant& q, std::array<Vertex, 3> triple);

// Frame on C0 for some pair of the triple, the third mated to C1.
std::optional<FramedTriple> frame_c0_mate_c1(const Quadrant& q, std::array<Vertex, 3> triple);

// Frame on C1 for some pair, the third mated to z, where z is x0 or y0.
std::optional<FramedTriple> frame_c1_mate_corner(const Quadrant& q, std::array<Vertex, 3> triple,
                                                 Vertex z);

// Three distinct terminals of Q1..Q4 escape into A, exits may coincide.
std::optional<Certified> escape_three_shared(const AdjustedQuadrant& adj,
                                             std::array<Vertex, 3> triple);

// s1-t1 path in Q0 plus an edge-disjoint escape of s2 into A.
std::optional<Certified> link_and_escape(const AdjustedQuadrant& q0, Vertex s1, Vertex t1,
                                         Vertex s2);

// Three terminals of Q0 escape to pairwise distinct vertices of A. Accepts
// three distinct vertices, or two coincident vertices outside A plus one
// more. Throws on any other multiset.
std::optional<Certified> escape_three_distinct(const AdjustedQuadrant& q0,
                                               std::array<Vertex, 3> terminals);

// s joined to b, the rest of T escaping into A (shared exits), all in Q0.
// std::nullopt is the exceptional refusal: no such path system exists.
std::optional<Certified> project_with_b_link(const AdjustedQuadrant& q0,
                                             const std::vector<Vertex>& T, Vertex s);

// Connected edge set of a quadrant with the vertices a singleton may be
// escorted to: one vertex of A and one of B, or x0 alone.
struct Clamp {
  std::vector<Edge> edges;
  std::vector<Vertex> anchors;

  std::vector<Vertex> vertices() const;
  bool contains(Vertex v) const;
  bool operator==(const Clamp&) const = default;
};

enum class MatchStatus { Matched, NoMatch, PreconditionViolated };

struct ClampMatch {
  MatchStatus status = MatchStatus::NoMatch;
  std::array<int, 2> assignment{0, 1};  // clamp index (0 = y2, 1 = y3) per singleton
  std::string reason;                   // set for PreconditionViolated
};

// Assigns singletons pi0 to clamps y2, y3 so each lies in its clamp.
// Matched when each of y2 − y3 and y3 − y2 holds at most one singleton and
// both singletons lie in y2 ∪ y3; the lexicographically least assignment is
// returned. PreconditionViolated when the clamps share an edge, meet p1's
// edges, have overlapping anchor sets, or are not connected through their
// anchors.
ClampMatch clamp_matching(const Path& p1, const Clamp& y2, const Clamp& y3,
                          std::array<Vertex, 2> pi0);

enum class Line { A, B };

std::string to_string(Line l);

// Clamp decomposition tried while escorting singletons, recorded so the
// matching rule can be audited.
struct ClampAttempt {
  Path p1;
  Clamp y2;
  Clamp y3;
  std::array<Vertex, 2> pi0;
  ClampMatch match;
};

struct EscortResult {
  Certified cert;
  std::vector<ClampAttempt> attempts;
};

// s1-t1 path plus escorts of s2, s3 to distinct vertices of the lines
// psi[0], psi[1], all inside q. Coincident vertices are allowed.
std::optional<EscortResult> link_pair_escort_singletons(const Quadrant& q, Vertex s1, Vertex t1,
                                                        Vertex s2, Vertex s3,
                                                        std::array<Line, 2> psi);

// Terminals of a crowded quadrant: pairs with both ends in q and singletons
// whose partners lie outside.
struct CrowdedConfig {
  std::vector<std::array<Vertex, 2>> pairs;
  std::vector<Vertex> singletons;
};

struct CrowdedResult {
  std::vector<int> linked;  // indices into config.pairs
  Certified cert;
};

// variant 1: at least two pairs linked, the remaining terminals escape to
//   distinct exits in A ∪ B. Needs 7 or 8 terminals.
// variant 2: at least one pair linked, distinct exits, at most one in B − A.
//   Needs 6 terminals.
// variant 3: pairs[0] linked, the other three terminals escape to distinct
//   exits, at most one in B − A. Needs 5 terminals.
// Throws std::invalid_argument when the configuration does not fit the
// variant.
std::optional<CrowdedResult> crowded_escape(const Quadrant& q, const CrowdedConfig& config,
                                            int variant);

}  // namespace gridlink
