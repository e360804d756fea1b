#include "gridlink/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace gridlink {

namespace {

using Local = std::vector<Vertex>;

constexpr Vertex kX0{3, 3};
constexpr Vertex kX1{2, 2};
constexpr Vertex kX2{1, 1};
constexpr Vertex kY0{3, 1};
constexpr Vertex kB{2, 3};

// Boundary cycle Q − x1, Hamiltonian cycle of Q − x2, and the Hamiltonian
// x1-x2 path of Q, in local coordinates.
const Local kRing{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}};
const Local kRingNoCorner{{1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}, {2, 2}};
const Local kHamPath{{2, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}, {1, 1}};

const Local kC1Local{{2, 2}, {2, 3}, {3, 2}};

bool contains(const std::vector<Vertex>& set, Vertex v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

std::vector<Edge> walk_edges(const Path& walk) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] != walk[i + 1]) out.emplace_back(walk[i], walk[i + 1]);
  }
  return out;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

Path map_path(const Path& p, const std::function<Vertex(Vertex)>& f) {
  Path out;
  for (Vertex v : p) out.push_back(f(v));
  return out;
}

std::vector<Edge> map_edges(const std::vector<Edge>& es, const std::function<Vertex(Vertex)>& f) {
  std::vector<Edge> out;
  for (const Edge& e : es) out.emplace_back(f(e.a), f(e.b));
  return out;
}

// Shortest path inside an edge set, neighbours taken in edge-list order.
std::optional<Path> path_within(const std::vector<Edge>& edges, Vertex from, Vertex to) {
  if (from == to) return Path{from};
  std::map<Vertex, Vertex> parent{{from, from}};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Edge& e : edges) {
      Vertex w;
      if (e.a == u) {
        w = e.b;
      } else if (e.b == u) {
        w = e.a;
      } else {
        continue;
      }
      if (parent.contains(w)) continue;
      parent[w] = u;
      if (w == to) {
        Path out{to};
        while (out.back() != from) out.push_back(parent[out.back()]);
        return reversed(out);
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// Walk along a cyclic vertex list from `from` to `to` that passes `through`.
// When from == to the walk is the whole loop.
std::optional<Path> arc(const Local& cycle, Vertex from, Vertex to, Vertex through) {
  const auto n = static_cast<int>(cycle.size());
  const auto i = static_cast<int>(std::find(cycle.begin(), cycle.end(), from) - cycle.begin());
  const auto j = static_cast<int>(std::find(cycle.begin(), cycle.end(), to) - cycle.begin());
  if (i == n || j == n) return std::nullopt;
  for (int dir : {1, -1}) {
    Path p{cycle[i]};
    int k = i;
    do {
      k = (k + dir + n) % n;
      p.push_back(cycle[k]);
    } while (k != j);
    if (contains(p, through)) return p;
  }
  return std::nullopt;
}

std::vector<Vertex> map_local(Corner k, const Local& local) {
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(to_global(k, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> line_vertices(Corner k, Line l) {
  return l == Line::A ? map_local(k, {{3, 1}, {3, 2}, {3, 3}})
                      : map_local(k, {{1, 3}, {2, 3}, {3, 3}});
}

void require_in(const Quadrant& q, Vertex v) {
  if (!q.contains(v)) throw std::invalid_argument(to_string(v) + " is not in the quadrant");
}

void require_in(const AdjustedQuadrant& adj, Vertex v) {
  if (!adj.graph.has_vertex(v)) {
    throw std::invalid_argument(to_string(v) + " is not in " + to_string(adj.kind));
  }
}

std::optional<Certified> route(Instance inst) {
  auto paths = solve(inst);
  if (!paths) return std::nullopt;
  return Certified{std::move(inst), std::move(*paths), "router"};
}

bool holds(const Certified& c) { return verify(c.instance, c.paths).ok; }

}  // namespace

std::string to_string(Line l) { return l == Line::A ? "A" : "B"; }

std::vector<Vertex> cycle_vertices_in(const Quadrant& q, int alpha) {
  if (alpha == 0) return {to_global(q.corner, kX0)};
  return map_local(q.corner, kC1Local);
}

std::vector<Edge> c1_edges_in(const Quadrant& q) {
  std::vector<Edge> out;
  for (const Edge& e : central_cycle_c1()) {
    if (q.contains(e.a) && q.contains(e.b)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Frames

namespace {

// Walk through x0 joining s1 and s2 along a Hamiltonian cycle of Q − x1 or
// Q − x2, or along the x1-x2 Hamiltonian path when {s1, s2} = {x1, x2}.
Path frame_walk(Vertex s1, Vertex s2) {
  if (s1 != kX1 && s2 != kX1) return *arc(kRing, s1, s2, kX0);
  if (s1 != kX2 && s2 != kX2) return *arc(kRingNoCorner, s1, s2, kX0);
  Path p = kHamPath;
  if (p.front() != s1) std::reverse(p.begin(), p.end());
  return p;
}

Frame split_walk(const Path& walk, int alpha, Corner k) {
  std::size_t cut = 0;
  while (cut < walk.size()) {
    const Vertex v = walk[cut];
    if (alpha == 0 ? v == kX0 : contains(kC1Local, v)) break;
    ++cut;
  }
  Frame f;
  f.alpha = alpha;
  f.anchor = to_global(k, walk[cut]);
  Path first(walk.begin(), walk.begin() + static_cast<long>(cut) + 1);
  Path second(walk.begin() + static_cast<long>(cut), walk.end());
  auto g = [k](Vertex v) { return to_global(k, v); };
  f.mating_paths = {map_path(first, g), map_path(reversed(second), g)};
  return f;
}

Instance frame_instance(const Quadrant& q, Vertex s1, Vertex s2, Vertex anchor) {
  return {q.graph, c1_edges_in(q), {Demand::escape(s1, {anchor}), Demand::escape(s2, {anchor})}};
}

}  // namespace

Frame build_frame(const Quadrant& q, Vertex s1, Vertex s2, int alpha) {
  require_in(q, s1);
  require_in(q, s2);
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
  const Vertex l1 = to_local(q.corner, s1);
  const Vertex l2 = to_local(q.corner, s2);
  Frame f;
  if (l1 == l2 && (alpha == 0 ? l1 == kX0 : contains(kC1Local, l1))) {
    f.alpha = alpha;
    f.anchor = s1;
    f.mating_paths = {Path{s1}, Path{s2}};
  } else {
    f = split_walk(frame_walk(l1, l2), alpha, q.corner);
  }
  f.forbidden_respected = holds(lower_frame(q, s1, s2, f));
  if (f.forbidden_respected) return f;

  // Not expected; the walk above covers every placement.
  for (Vertex w : cycle_vertices_in(q, alpha)) {
    if (auto paths = solve(frame_instance(q, s1, s2, w))) {
      f.anchor = w;
      f.mating_paths = {paths->paths[0], paths->paths[1]};
      f.forbidden_respected = true;
      return f;
    }
  }
  return f;
}

Certified lower_frame(const Quadrant& q, Vertex s1, Vertex s2, const Frame& f) {
  return {frame_instance(q, s1, s2, f.anchor), {{f.mating_paths[0], f.mating_paths[1]}}, "frame"};
}

Certified mate_pair_to_cycles(const Quadrant& q, Vertex s1, Vertex s2, std::array<int, 2> gamma) {
  require_in(q, s1);
  require_in(q, s2);
  for (int g : gamma) {
    if (g != 0 && g != 1) throw std::invalid_argument("gamma must map to 0 or 1");
  }
  Instance inst{q.graph,
                c1_edges_in(q),
                {Demand::escape(s1, cycle_vertices_in(q, gamma[0])),
                 Demand::escape(s2, cycle_vertices_in(q, gamma[1]))}};

  // Cut the frame walk through x0 from each end at the first vertex of the
  // assigned cycle.
  const Vertex l1 = to_local(q.corner, s1);
  const Vertex l2 = to_local(q.corner, s2);
  const Path walk = l1 == l2 ? Path{l1} : frame_walk(l1, l2);
  auto hit = [](int g, Vertex v) { return g == 0 ? v == kX0 : contains(kC1Local, v); };
  std::size_t i = 0;
  while (i + 1 < walk.size() && !hit(gamma[0], walk[i])) ++i;
  std::size_t j = walk.size() - 1;
  while (j > 0 && !hit(gamma[1], walk[j])) --j;
  auto g = [&q](Vertex v) { return to_global(q.corner, v); };
  Path first(walk.begin(), walk.begin() + static_cast<long>(i) + 1);
  Path second(walk.begin() + static_cast<long>(j), walk.end());
  Certified c{inst, {{map_path(first, g), map_path(reversed(second), g)}}, "frame walk"};
  if (holds(c)) return c;
  if (auto r = route(inst)) return *r;
  return c;
}

namespace {

std::optional<FramedTriple> framed_search(const Quadrant& q, std::array<Vertex, 3> t,
                                          const std::vector<std::array<int, 3>>& roles,
                                          const std::vector<int>& alphas,
                                          const std::function<std::vector<Vertex>(int)>& third) {
  for (const auto& role : roles) {
    for (int alpha : alphas) {
      for (Vertex w : cycle_vertices_in(q, alpha)) {
        Instance inst{q.graph,
                      c1_edges_in(q),
                      {Demand::escape(t[role[0]], {w}), Demand::escape(t[role[1]], {w}),
                       Demand::escape(t[role[2]], third(alpha))}};
        auto paths = solve(inst);
        if (!paths) continue;
        FramedTriple out;
        out.frame.alpha = alpha;
        out.frame.anchor = w;
        out.frame.mating_paths = {paths->paths[0], paths->paths[1]};
        out.framed = {role[0], role[1]};
        out.mated = role[2];
        out.mate = paths->paths[2];
        out.cert = {std::move(inst), std::move(*paths), "router"};
        return out;
      }
    }
  }
  return std::nullopt;
}

void require_distinct_triple(const Quadrant& q, const std::array<Vertex, 3>& t) {
  for (Vertex v : t) require_in(q, v);
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
    throw std::invalid_argument("terminals must be distinct");
  }
}

const std::vector<std::array<int, 3>> kPairChoices{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};

}  // namespace

std::optional<FramedTriple> frame_two_mate_third(const Quadrant& q, std::array<Vertex, 3> triple) {
  require_distinct_triple(q, triple);
  return framed_search(q, triple, kPairChoices, {0, 1},
                       [&q](int alpha) { return cycle_vertices_in(q, 1 - alpha); });
}

std::optional<FramedTriple> frame_c0_mate_c1(const Quadrant& q, std::array<Vertex, 3> triple) {
  require_distinct_triple(q, triple);
  return framed_search(q, triple, kPairChoices, {0},
                       [&q](int) { return cycle_vertices_in(q, 1); });
}

std::optional<FramedTriple> frame_c1_mate_corner(const Quadrant& q, std::array<Vertex, 3> triple,
                                                 Vertex z) {
  require_distinct_triple(q, triple);
  if (z != to_global(q.corner, kX0) && z != to_global(q.corner, kY0)) {
    throw std::invalid_argument("z must be x0 or y0");
  }
  return framed_search(q, triple, kPairChoices, {1}, [z](int) { return std::vector<Vertex>{z}; });
}

// ---------------------------------------------------------------------------
// Escapes into A

std::optional<Certified> escape_three_shared(const AdjustedQuadrant& adj,
                                             std::array<Vertex, 3> triple) {
  std::set<Vertex> nodes;
  for (Vertex v : triple) {
    require_in(adj, v);
    nodes.insert(adj.graph.representative(v));
  }
  if (nodes.size() != 3) throw std::invalid_argument("terminals must be distinct");
  Instance inst{adj.graph, {}, {}};
  for (Vertex v : triple) inst.demands.push_back(Demand::escape(v, adj.A));
  return route(std::move(inst));
}

std::optional<Certified> link_and_escape(const AdjustedQuadrant& q0, Vertex s1, Vertex t1,
                                         Vertex s2) {
  for (Vertex v : {s1, t1, s2}) require_in(q0, v);
  return route({q0.graph, {}, {Demand::pair(s1, t1), Demand::escape(s2, q0.A)}});
}

std::optional<Certified> escape_three_distinct(const AdjustedQuadrant& q0,
                                               std::array<Vertex, 3> terminals) {
  for (Vertex v : terminals) require_in(q0, v);
  std::array<Vertex, 3> s = terminals;
  std::sort(s.begin(), s.end());
  const bool distinct = s[0] != s[1] && s[1] != s[2];
  const bool one_repeat = (s[0] == s[1]) != (s[1] == s[2]);
  if (!distinct) {
    const Vertex twice = s[0] == s[1] ? s[0] : s[1];
    if (!one_repeat || contains(q0.A, twice)) {
      throw std::invalid_argument("only two coincident terminals outside A are allowed");
    }
  }
  Instance inst{q0.graph, {}, {}};
  for (Vertex v : terminals) inst.demands.push_back(Demand::escape(v, q0.A, 0));
  return route(std::move(inst));
}

std::optional<Certified> project_with_b_link(const AdjustedQuadrant& q0,
                                             const std::vector<Vertex>& T, Vertex s) {
  for (Vertex v : T) require_in(q0, v);
  std::set<Vertex> distinct(T.begin(), T.end());
  if (distinct.size() != T.size() || T.size() > 4) {
    throw std::invalid_argument("T must hold at most four distinct vertices");
  }
  if (!distinct.contains(s)) throw std::invalid_argument("s must belong to T");
  Instance inst{q0.graph, {}, {Demand::pair(s, to_global(q0.corner, kB))}};
  for (Vertex v : T) {
    if (v != s) inst.demands.push_back(Demand::escape(v, q0.A));
  }
  return route(std::move(inst));
}

// ---------------------------------------------------------------------------
// Clamps

std::vector<Vertex> Clamp::vertices() const {
  std::vector<Vertex> out(anchors.begin(), anchors.end());
  for (const Edge& e : edges) {
    out.push_back(e.a);
    out.push_back(e.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Clamp::contains(Vertex v) const {
  if (std::find(anchors.begin(), anchors.end(), v) != anchors.end()) return true;
  return std::any_of(edges.begin(), edges.end(),
                     [v](const Edge& e) { return e.a == v || e.b == v; });
}

namespace {

bool connected_through_anchors(const Clamp& y) {
  if (y.anchors.empty()) return false;
  for (Vertex v : y.vertices()) {
    if (!path_within(y.edges, y.anchors.front(), v)) return false;
  }
  return true;
}

}  // namespace

ClampMatch clamp_matching(const Path& p1, const Clamp& y2, const Clamp& y3,
                          std::array<Vertex, 2> pi0) {
  ClampMatch m;
  auto violated = [&m](std::string why) {
    m.status = MatchStatus::PreconditionViolated;
    m.reason = std::move(why);
    return m;
  };
  const std::vector<Edge> p1_edges = walk_edges(p1);
  for (const Edge& e : y2.edges) {
    if (std::find(y3.edges.begin(), y3.edges.end(), e) != y3.edges.end()) {
      return violated("clamps share edge " + to_string(e));
    }
  }
  for (const Clamp* y : {&y2, &y3}) {
    for (const Edge& e : y->edges) {
      if (std::find(p1_edges.begin(), p1_edges.end(), e) != p1_edges.end()) {
        return violated("clamp meets the linking path at " + to_string(e));
      }
    }
    if (!connected_through_anchors(*y)) return violated("clamp not connected to its anchors");
  }
  for (Vertex a : y2.anchors) {
    if (contains(y3.anchors, a)) return violated("anchor sets overlap at " + to_string(a));
  }

  int only2 = 0;
  int only3 = 0;
  for (Vertex s : pi0) {
    const bool in2 = y2.contains(s);
    const bool in3 = y3.contains(s);
    if (!in2 && !in3) return m;
    only2 += in2 && !in3;
    only3 += in3 && !in2;
  }
  if (only2 > 1 || only3 > 1) return m;
  const std::array<const Clamp*, 2> ys{&y2, &y3};
  for (const std::array<int, 2>& a : {std::array<int, 2>{0, 1}, std::array<int, 2>{1, 0}}) {
    if (ys[a[0]]->contains(pi0[0]) && ys[a[1]]->contains(pi0[1])) {
      m.status = MatchStatus::Matched;
      m.assignment = a;
      return m;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Linking a pair and escorting two singletons

namespace {

// All twelve quadrant edges in local coordinates.
std::vector<Edge> quadrant_edges() {
  std::vector<Edge> out;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      if (c < 3) out.emplace_back(Vertex{r, c}, Vertex{r, c + 1});
      if (r < 3) out.emplace_back(Vertex{r, c}, Vertex{r + 1, c});
    }
  }
  return out;
}

std::vector<Edge> chain(const Local& walk) { return walk_edges(walk); }

// Quadrant edges outside `used`, optionally dropping those at `skip`.
std::vector<Edge> rest(const std::vector<std::vector<Edge>>& used,
                       std::optional<Vertex> skip = std::nullopt) {
  std::vector<Edge> out;
  for (const Edge& e : quadrant_edges()) {
    if (skip && (e.a == *skip || e.b == *skip)) continue;
    bool taken = false;
    for (const auto& u : used) taken = taken || std::find(u.begin(), u.end(), e) != u.end();
    if (!taken) out.push_back(e);
  }
  return out;
}

std::vector<Edge> minus(std::vector<Edge> es, const std::vector<Edge>& drop) {
  std::erase_if(es, [&drop](const Edge& e) {
    return std::find(drop.begin(), drop.end(), e) != drop.end();
  });
  return es;
}

// Recurring clamps, local coordinates.
const Local kCorner1Path{{3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}};  // row 1 ∪ col 1
const Local kHook{{1, 3}, {1, 2}, {2, 2}, {3, 2}};                 // (1,3) down col 2
const Local kAB{{3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}};           // A ∪ B
const Local kLineA{{3, 1}, {3, 2}, {3, 3}};

std::vector<Edge> z_edges() {
  return {Edge({1, 2}, {2, 2}), Edge({2, 1}, {2, 2}), Edge({2, 2}, {2, 3}), Edge({2, 2}, {3, 2})};
}

const std::vector<Vertex> kZ{{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
const std::vector<Vertex> kAUnionB{{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
const std::vector<Vertex> kS{{1, 1}, {1, 2}, {2, 1}, {2, 2}};

// A decomposition of the quadrant's edges into an s1-t1 path (inside
// `p1`) and two clamps for the singletons.
struct Plan {
  std::string name;
  std::vector<Edge> p1;
  Clamp y2;
  Clamp y3;
};

// Local-coordinate view of an instance: s = {s1, t1, s2, s3}.
struct View {
  Vertex s1, t1, s2, s3;
  std::array<Line, 2> psi;
};

bool is_pair(const View& v, Vertex a, Vertex b) {
  return (v.s1 == a && v.t1 == b) || (v.s1 == b && v.t1 == a);
}

Clamp clamp(std::vector<Edge> edges, std::vector<Vertex> anchors) {
  return {std::move(edges), std::move(anchors)};
}

// Constructions when x0 is an end of the pair (s1 = x0 after relabelling).
std::vector<Plan> plans_at_x0(const View& v) {
  std::vector<Plan> out;
  if (v.s1 != kX0) return out;
  const std::vector<Vertex> zx{{3, 2}, {2, 3}};
  if (contains(kZ, v.s2)) {
    if (contains(kRing, v.t1) && contains(kRing, v.s3) && v.t1 != v.s3) {
      // Ring arc t1 .. x0 .. s3 split at x0.
      const Path w = *arc(kRing, v.t1, v.s3, kX0);
      const auto k = std::find(w.begin(), w.end(), kX0) - w.begin();
      out.push_back({"x0 ring split", chain(Path(w.begin(), w.begin() + k + 1)),
                     clamp(z_edges(), zx), clamp(chain(Path(w.begin() + k, w.end())), {kX0})});
    }
    if ((v.t1 == kX1) != (v.s3 == kX1)) {
      const Vertex y1 = v.t1 == kX1 ? v.s3 : v.t1;
      const Vertex hop = v.s2 == Vertex{1, 2} ? Vertex{2, 1} : Vertex{1, 2};
      if (contains(kRing, y1)) {
        if (auto around = arc(kRing, hop, y1, kX0)) {
          Path w{kX1};
          w.insert(w.end(), around->begin(), around->end());
          const auto k = std::find(w.begin(), w.end(), kX0) - w.begin();
          auto head = chain(Path(w.begin(), w.begin() + k + 1));
          auto tail = chain(Path(w.begin() + k, w.end()));
          const bool t1_first = v.t1 == kX1;
          out.push_back({"x0 walk from x1", t1_first ? head : tail,
                         clamp(minus(z_edges(), {Edge(kX1, hop)}), zx),
                         clamp(t1_first ? tail : head, {kX0})});
        }
      }
    }
  }
  if (v.s3 == Vertex{3, 1} && v.s2 == Vertex{1, 1}) {
    const auto y2 = chain(kCorner1Path);
    const auto y3 = chain(kLineA);
    out.push_back({"x0 corner clamp", rest({y2, y3}), clamp(y2, {{3, 1}, {1, 3}}),
                   clamp(y3, {kX0})});
  }
  if (v.s3 == Vertex{3, 1} && v.s2 == Vertex{1, 3} && v.t1.row != 3) {
    const auto y2 = chain(kHook);
    const auto y3 = chain(kLineA);
    out.push_back({"x0 hook clamp", rest({y2, y3}), clamp(y2, {{1, 3}, {3, 2}}),
                   clamp(y3, {kX0})});
  }
  return out;
}

// Constructions when x0 is not on the pair.
std::vector<Plan> plans_off_x0(const View& v) {
  std::vector<Plan> out;
  if (v.s1 == kX0 || v.t1 == kX0) return out;
  const std::vector<Vertex> corner_anchors{{3, 1}, {1, 3}};
  const std::vector<Vertex> hook_anchors{{1, 3}, {3, 2}};
  auto complement_at_x0 = [&](std::string name, std::vector<Edge> p1, const Local& y2_walk,
                              std::vector<Vertex> y2_anchors,
                              std::optional<Vertex> skip = std::nullopt) {
    auto y2 = chain(y2_walk);
    auto y3 = rest({p1, y2}, skip);
    out.push_back({std::move(name), std::move(p1), clamp(y2, std::move(y2_anchors)),
                   clamp(y3, {kX0})});
  };

  // Pair inside S.
  if (is_pair(v, {1, 1}, {1, 2})) {
    complement_at_x0("pair in row 1 of S", chain({{1, 1}, {1, 2}}),
                     {{3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}}, corner_anchors, Vertex{1, 1});
  }
  if (is_pair(v, {1, 2}, {2, 2})) {
    complement_at_x0("pair in col 2 of S", chain({{1, 2}, {2, 2}}), kCorner1Path, corner_anchors);
  }
  if (is_pair(v, {1, 2}, {2, 1})) {
    complement_at_x0("pair across S", chain({{1, 2}, {2, 2}, {2, 1}}), kCorner1Path,
                     corner_anchors);
  }
  if (is_pair(v, {1, 1}, kX1)) {
    const int in_col1 = (v.s2.col == 1) + (v.s3.col == 1);
    if (in_col1 <= 1) {
      out.push_back({"pair on diagonal of S", chain({{1, 1}, {2, 1}, {2, 2}}),
                     clamp(chain(kHook), hook_anchors),
                     clamp(chain({{1, 3}, {2, 3}, {3, 3}, {3, 2}, {3, 1}, {2, 1}}), {kX0})});
    }
  }
  // Pair inside A ∪ B.
  if (contains(kAUnionB, v.s1) && contains(kAUnionB, v.t1)) {
    out.push_back({"pair on boundary lines", chain(kAB), clamp(chain(kCorner1Path), corner_anchors),
                   clamp(z_edges(), {{3, 2}, {2, 3}})});
  }
  // Pair spanning S and A ∪ B.
  if (is_pair(v, {1, 1}, {3, 1})) {
    const auto y2 = chain(kHook);
    const std::vector<Edge> y3{Edge({2, 1}, {2, 2}), Edge({2, 2}, {2, 3}), Edge({1, 3}, {2, 3}),
                               Edge({2, 3}, {3, 3}), Edge({3, 2}, {3, 3})};
    out.push_back({"pair on col 1", chain({{1, 1}, {2, 1}, {3, 1}}), clamp(y2, hook_anchors),
                   clamp(y3, {kX0})});
  }
  if (is_pair(v, {2, 1}, {3, 1})) {
    const auto p1 = chain({{2, 1}, {3, 1}});
    const auto y2 = chain({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    out.push_back({"pair low on col 1", p1, clamp(y2, {kX0}),
                   clamp(rest({p1, y2}), {{3, 2}, {2, 3}})});
  }
  if (is_pair(v, {1, 2}, {3, 2})) {
    complement_at_x0("pair on col 2", chain({{1, 2}, {2, 2}, {3, 2}}), kCorner1Path,
                     corner_anchors);
  }
  if (is_pair(v, {1, 2}, {2, 3})) {
    complement_at_x0("pair through x1 to b", chain({{1, 2}, {2, 2}, {2, 3}}), kCorner1Path,
                     corner_anchors);
  }
  for (Vertex s : {Vertex{2, 1}, Vertex{2, 2}}) {
    if (!is_pair(v, s, {1, 3})) continue;
    Local walk;
    for (int c = s.col; c <= 3; ++c) walk.push_back({2, c});
    walk.push_back({1, 3});
    complement_at_x0("pair along row 2", chain(walk), kHook, hook_anchors);
  }
  if (is_pair(v, {1, 1}, {2, 3})) {
    if (v.s2 == Vertex{1, 3} || v.s3 == Vertex{1, 3}) {
      out.push_back({"corner to b under row 1", chain({{1, 1}, {2, 1}, {2, 2}, {2, 3}}),
                     clamp(chain(kHook), hook_anchors),
                     clamp(chain({{2, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}}), {kX0})});
    } else {
      std::vector<Edge> y3 = chain({{1, 2}, {2, 2}, {3, 2}});
      for (const Edge& e : chain(kLineA)) y3.push_back(e);
      out.push_back({"corner to b along row 1", chain({{1, 1}, {1, 2}, {1, 3}, {2, 3}}),
                     clamp(chain({{3, 1}, {2, 1}, {2, 2}, {2, 3}}), {{3, 1}, {2, 3}}),
                     clamp(y3, {kX0})});
    }
  }
  return out;
}

bool on_line_local(Line l, Vertex v) { return l == Line::A ? v.row == 3 : v.col == 3; }

Vertex transpose(Vertex v) { return {v.col, v.row}; }
Line flip(Line l) { return l == Line::A ? Line::B : Line::A; }

}  // namespace

std::optional<EscortResult> link_pair_escort_singletons(const Quadrant& q, Vertex s1, Vertex t1,
                                                        Vertex s2, Vertex s3,
                                                        std::array<Line, 2> psi) {
  for (Vertex v : {s1, t1, s2, s3}) require_in(q, v);
  Instance inst{q.graph,
                {},
                {Demand::pair(s1, t1), Demand::escape(s2, line_vertices(q.corner, psi[0]), 0),
                 Demand::escape(s3, line_vertices(q.corner, psi[1]), 0)}};
  EscortResult result;
  result.cert.instance = inst;
  const Vertex x0 = to_global(q.corner, kX0);

  for (bool tr : {false, true}) {
    auto in = [&](Vertex g) {
      const Vertex l = to_local(q.corner, g);
      return tr ? transpose(l) : l;
    };
    auto out = [&](Vertex l) { return to_global(q.corner, tr ? transpose(l) : l); };
    for (bool swap_singletons : {false, true}) {
      for (bool swap_pair : {false, true}) {
        View v{in(s1), in(t1), in(s2), in(s3), psi};
        if (tr) v.psi = {flip(psi[0]), flip(psi[1])};
        if (swap_pair) std::swap(v.s1, v.t1);
        if (swap_singletons) {
          std::swap(v.s2, v.s3);
          std::swap(v.psi[0], v.psi[1]);
        }
        // Assemble global paths in the caller's labelling.
        auto finish = [&](Path p1, Path p2, Path p3, const std::string& name) {
          if (swap_pair) p1 = reversed(p1);
          if (swap_singletons) std::swap(p2, p3);
          Certified c{inst, {{map_path(p1, out), map_path(p2, out), map_path(p3, out)}}, name};
          if (!holds(c)) return false;
          result.cert = std::move(c);
          return true;
        };

        // Singleton next to x0: send it to x0 and route the rest in Q − x0.
        if ((v.s3 == kX0 || v.s3 == Vertex{3, 2} || v.s3 == Vertex{2, 3}) && v.s2 != kX0) {
          const GridGraph rest_graph = q.graph.without_vertices(std::vector<Vertex>{x0});
          const Path p3 = v.s3 == kX0 ? Path{kX0} : Path{v.s3, kX0};
          const bool x0_on_pair = v.s1 == kX0 || v.t1 == kX0;
          for (Vertex shift : {Vertex{3, 2}, Vertex{2, 3}}) {
            if (x0_on_pair && shift == v.s3) continue;
            for (Vertex target : {Vertex{3, 1}, Vertex{3, 2}, Vertex{1, 3}, Vertex{2, 3}}) {
              if (!on_line_local(v.psi[0], target)) continue;
              Demand link = Demand::pair(out(v.s1), out(v.t1));
              if (v.s1 == kX0 && v.t1 == kX0) {
                link = Demand::pair(out(shift), out(shift));
              } else if (v.s1 == kX0) {
                link = Demand::pair(out(shift), out(v.t1));
              } else if (v.t1 == kX0) {
                link = Demand::pair(out(v.s1), out(shift));
              }
              auto paths = solve({rest_graph, {}, {link, Demand::pair(out(v.s2), out(target))}});
              if (!paths) continue;
              Path p1 = map_path(paths->paths[0], [&](Vertex g) { return in(g); });
              if (v.s1 == kX0 && v.t1 == kX0) {
                p1 = {kX0};
              } else if (v.s1 == kX0) {
                p1.insert(p1.begin(), kX0);
              } else if (v.t1 == kX0) {
                p1.push_back(kX0);
              }
              Path p2 = map_path(paths->paths[1], [&](Vertex g) { return in(g); });
              if (finish(p1, p2, p3, "singleton next to x0")) return result;
            }
            if (!x0_on_pair) break;
          }
        }

        std::vector<Plan> plans = plans_at_x0(v);
        for (Plan& p : plans_off_x0(v)) plans.push_back(std::move(p));
        for (const Plan& plan : plans) {
          const auto p1 = path_within(plan.p1, v.s1, v.t1);
          if (!p1) continue;
          const ClampMatch m = clamp_matching(*p1, plan.y2, plan.y3, {v.s2, v.s3});
          auto map_clamp = [&](const Clamp& y) {
            return Clamp{map_edges(y.edges, out), map_path(y.anchors, out)};
          };
          result.attempts.push_back({map_path(*p1, out), map_clamp(plan.y2), map_clamp(plan.y3),
                                     {out(v.s2), out(v.s3)}, m});
          if (m.status != MatchStatus::Matched) continue;
          std::array<Path, 2> escorts;
          bool ok = true;
          for (int j = 0; j < 2 && ok; ++j) {
            const Clamp& y = m.assignment[j] == 0 ? plan.y2 : plan.y3;
            const Vertex s = j == 0 ? v.s2 : v.s3;
            std::optional<Path> p;
            for (Vertex a : y.anchors) {
              if (on_line_local(v.psi[j], a) && (p = path_within(y.edges, s, a))) break;
            }
            ok = p.has_value();
            if (ok) escorts[j] = *p;
          }
          if (ok && finish(*p1, escorts[0], escorts[1], plan.name)) return result;
        }
      }
    }
  }

  if (auto r = route(inst)) {
    result.cert = std::move(*r);
    return result;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Crowded quadrants

namespace {

// Exit lists per escaping terminal. With `one_off_a`, at most one terminal
// may end in B − A: either none does, or exactly the chosen one may.
std::vector<std::vector<std::vector<Vertex>>> exit_choices(const Quadrant& q, std::size_t n,
                                                           bool one_off_a) {
  const auto a = line_vertices(q.corner, Line::A);
  auto ab = a;
  for (Vertex v : line_vertices(q.corner, Line::B)) {
    if (!contains(ab, v)) ab.push_back(v);
  }
  std::sort(ab.begin(), ab.end());
  if (!one_off_a) return {std::vector<std::vector<Vertex>>(n, ab)};
  std::vector<std::vector<std::vector<Vertex>>> out{std::vector<std::vector<Vertex>>(n, a)};
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(n, a);
    out.back()[i] = ab;
  }
  return out;
}

}  // namespace

std::optional<CrowdedResult> crowded_escape(const Quadrant& q, const CrowdedConfig& config,
                                            int variant) {
  const auto& pairs = config.pairs;
  const std::size_t count = 2 * pairs.size() + config.singletons.size();
  std::vector<Vertex> all(config.singletons);
  for (const auto& p : pairs) all.insert(all.end(), p.begin(), p.end());
  for (Vertex v : all) require_in(q, v);
  if (std::set<Vertex>(all.begin(), all.end()).size() != all.size()) {
    throw std::invalid_argument("crowded terminals must be distinct");
  }
  const bool fits = (variant == 1 && (count == 7 || count == 8)) || (variant == 2 && count == 6) ||
                    (variant == 3 && count == 5 && !pairs.empty());
  if (!fits) throw std::invalid_argument("configuration does not fit variant " + std::to_string(variant));

  // Candidate sets of pairs to link, smallest first.
  std::vector<std::vector<int>> link_sets;
  const int k = static_cast<int>(pairs.size());
  if (variant == 3) {
    link_sets.push_back({0});
  } else {
    const int least = variant == 1 ? 2 : 1;
    for (int size = least; size <= k; ++size) {
      for (int mask = 0; mask < (1 << k); ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != size) continue;
        std::vector<int> set;
        for (int i = 0; i < k; ++i) {
          if (mask >> i & 1) set.push_back(i);
        }
        link_sets.push_back(std::move(set));
      }
    }
  }

  for (const auto& linked : link_sets) {
    std::vector<Vertex> escaping(config.singletons);
    for (int i = 0; i < k; ++i) {
      if (std::find(linked.begin(), linked.end(), i) == linked.end()) {
        escaping.insert(escaping.end(), pairs[i].begin(), pairs[i].end());
      }
    }
    for (const auto& exits : exit_choices(q, escaping.size(), variant != 1)) {
      Instance inst{q.graph, {}, {}};
      for (int i : linked) inst.demands.push_back(Demand::pair(pairs[i][0], pairs[i][1]));
      for (std::size_t j = 0; j < escaping.size(); ++j) {
        inst.demands.push_back(Demand::escape(escaping[j], exits[j], 0));
      }
      if (auto c = route(std::move(inst))) return CrowdedResult{linked, std::move(*c)};
    }
  }
  return std::nullopt;
}

}  // namespace gridlink
