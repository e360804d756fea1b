#include "gridlink/routing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "network.hpp"

namespace gridlink {

namespace {

using detail::Network;

constexpr int kMaxNodes = 64;
constexpr int kMaxEdges = 128;
constexpr std::array<long, 2> kRestartBudgets{300, 3000};
constexpr int kMaxRestarts = 24;
constexpr int kMaxCutDemands = 10;
constexpr int kMaxCutSubset = 4;

struct EdgeMask {
  std::array<std::uint64_t, 2> w{};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
};

struct MemoKey {
  std::array<std::uint64_t, 2> used;
  std::array<std::uint64_t, 2> taken;
  int demand;

  bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k.demand + 1);
    for (std::uint64_t x : {k.used[0], k.used[1], k.taken[0], k.taken[1]}) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct CompiledDemand {
  DemandKind kind;
  Vertex source_vertex;
  int source;
  int target = -1;
  std::uint64_t exits = 0;
  int group = -1;  // compact group slot
  std::vector<int> dist;
};

std::uint64_t bit(int n) { return std::uint64_t{1} << n; }

// Depth-first search over one simple path per demand, with a failure memo
// keyed at demand boundaries. Complete: any edge-disjoint system of walks
// shortcuts to one of simple paths.
class Router {
 public:
  // `order[i]` is the instance demand routed i-th.
  Router(const Instance& inst, const Network& net, std::vector<int> order)
      : inst_(inst), net_(net), order_(std::move(order)) {
    std::map<int, int> slots;
    for (int idx : order_) {
      const Demand& d = inst.demands[idx];
      CompiledDemand c;
      c.kind = d.kind;
      c.source_vertex = d.source;
      c.source = net_.node(d.source);
      if (d.kind == DemandKind::Pair) {
        c.target = net_.node(d.target);
        c.exits = bit(c.target);
      } else {
        for (Vertex x : d.exits) c.exits |= bit(net_.node(x));
        if (d.group) {
          auto [it, inserted] = slots.try_emplace(*d.group, static_cast<int>(slots.size()));
          c.group = it->second;
        }
      }
      c.dist = distances(c.exits);
      demands_.push_back(std::move(c));
    }
    use_memo_ = slots.size() <= 2;
    taken_.assign(std::max<std::size_t>(slots.size(), 2), 0);
    paths_.resize(demands_.size());
    ends_.resize(demands_.size(), -1);
  }

  enum class Outcome { Found, Infeasible, OutOfBudget };

  // `budget` caps search nodes; 0 means unbounded.
  Outcome run(long budget) {
    budget_ = budget;
    try {
      if (!route(0)) return Outcome::Infeasible;
    } catch (const OutOfBudget&) {
      return Outcome::OutOfBudget;
    }
    return Outcome::Found;
  }

  PathSystem certificate() const {
    PathSystem out;
    out.paths.resize(demands_.size());
    for (std::size_t i = 0; i < demands_.size(); ++i) {
      const Demand& d = inst_.demands[order_[i]];
      const Vertex end = d.kind == DemandKind::Pair ? d.target : pick_exit(d, ends_[i], paths_[i]);
      out.paths[order_[i]] = net_.expand(d.source, paths_[i], end);
    }
    return out;
  }

 private:
  std::vector<int> distances(std::uint64_t goals) const {
    std::vector<int> dist(net_.node_count(), 1 << 20);
    std::deque<int> queue;
    for (int n = 0; n < net_.node_count(); ++n) {
      if ((goals >> n) & 1U) {
        dist[n] = 0;
        queue.push_back(n);
      }
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& arc : net_.adj[u]) {
        if (dist[arc.to] > dist[u] + 1) {
          dist[arc.to] = dist[u] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return dist;
  }

  // Prefer the walk's own last vertex, then the first listed exit in the
  // final node.
  Vertex pick_exit(const Demand& d, int end_node, const std::vector<int>& edges) const {
    const Path raw = net_.expand(d.source, edges);
    if (std::find(d.exits.begin(), d.exits.end(), raw.back()) != d.exits.end()) return raw.back();
    for (Vertex x : d.exits) {
      if (net_.node(x) == end_node) return x;
    }
    return raw.back();
  }

  bool goal_open(const CompiledDemand& d, int node) const {
    if (!((d.exits >> node) & 1U)) return false;
    return d.group < 0 || !((taken_[d.group] >> node) & 1U);
  }

  bool route(std::size_t d) {
    if (d == demands_.size()) return true;
    MemoKey key{used_.w, {taken_[0], taken_[1]}, static_cast<int>(d)};
    if (use_memo_ && failed_.contains(key)) return false;
    paths_[d].clear();
    if (extend(d, demands_[d].source, bit(demands_[d].source))) return true;
    if (use_memo_) failed_.insert(key);
    return false;
  }

  bool extend(std::size_t d, int cur, std::uint64_t visited) {
    if (budget_ > 0 && ++spent_ > budget_) throw OutOfBudget{};
    const CompiledDemand& dm = demands_[d];
    if (goal_open(dm, cur)) {
      if (dm.group >= 0) taken_[dm.group] |= bit(cur);
      ends_[d] = cur;
      if (route(d + 1)) return true;
      if (dm.group >= 0) taken_[dm.group] &= ~bit(cur);
      // A shorter walk to a shared goal dominates any extension of it.
      if (dm.group < 0) return false;
    }
    if (!lookahead(d, cur, visited)) return false;

    // Closest-to-goal first; stable sort keeps edge order among ties.
    std::vector<std::pair<int, int>> all;
    for (std::size_t i = 0; i < net_.adj[cur].size(); ++i) {
      const auto& arc = net_.adj[cur][i];
      if (used_.test(arc.edge) || ((visited >> arc.to) & 1U)) continue;
      all.emplace_back(dm.dist[arc.to], static_cast<int>(i));
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [dist, i] : all) {
      const auto& arc = net_.adj[cur][i];
      used_.set(arc.edge);
      paths_[d].push_back(arc.edge);
      if (extend(d, arc.to, visited | bit(arc.to))) return true;
      paths_[d].pop_back();
      used_.reset(arc.edge);
    }
    return false;
  }

  // Necessary conditions on the free graph: the current walk can still reach
  // an open goal without revisiting, every later demand still has an open
  // goal in its component, and no node has fewer free edges than demand
  // endpoints that must leave it.
  bool lookahead(std::size_t d, int cur, std::uint64_t visited) const {
    const int n = net_.node_count();
    const CompiledDemand& dm = demands_[d];

    {
      std::uint64_t seen = bit(cur);
      std::array<int, kMaxNodes> stack{};
      int top = 0;
      stack[top++] = cur;
      bool ok = false;
      while (top > 0 && !ok) {
        const int u = stack[--top];
        for (const auto& arc : net_.adj[u]) {
          if (used_.test(arc.edge)) continue;
          if ((seen >> arc.to) & 1U) continue;
          if ((visited >> arc.to) & 1U) continue;
          if (goal_open(dm, arc.to)) {
            ok = true;
            break;
          }
          seen |= bit(arc.to);
          stack[top++] = arc.to;
        }
      }
      if (!ok) return false;
    }

    std::array<int, kMaxNodes> comp{};
    comp.fill(-1);
    std::vector<std::uint64_t> comp_nodes;
    std::array<int, kMaxNodes> free_degree{};
    for (int s = 0; s < n; ++s) {
      for (const auto& arc : net_.adj[s]) {
        if (!used_.test(arc.edge)) ++free_degree[s];
      }
      if (comp[s] >= 0) continue;
      const int id = static_cast<int>(comp_nodes.size());
      std::uint64_t members = bit(s);
      std::array<int, kMaxNodes> stack{};
      int top = 0;
      stack[top++] = s;
      comp[s] = id;
      while (top > 0) {
        const int u = stack[--top];
        for (const auto& arc : net_.adj[u]) {
          if (used_.test(arc.edge) || comp[arc.to] >= 0) continue;
          comp[arc.to] = id;
          members |= bit(arc.to);
          stack[top++] = arc.to;
        }
      }
      comp_nodes.push_back(members);
    }

    std::array<int, kMaxNodes> need{};
    ++need[cur];
    for (std::size_t j = d + 1; j < demands_.size(); ++j) {
      const CompiledDemand& other = demands_[j];
      if ((other.exits >> other.source) & 1U) {
        if (other.group < 0) continue;
        if (!((taken_[other.group] >> other.source) & 1U)) continue;
      }
      std::uint64_t open = other.exits;
      if (other.group >= 0) open &= ~taken_[other.group];
      if ((comp_nodes[comp[other.source]] & open) == 0) return false;
      ++need[other.source];
      if (other.kind == DemandKind::Pair) ++need[other.target];
    }
    for (int v = 0; v < n; ++v) {
      if (need[v] > free_degree[v]) return false;
    }
    return cut_condition(d, cur, visited);
  }

  // Each subset of outstanding demands, with each member oriented either
  // way, must push one unit per member from its start side to its goal side
  // through the free edges.
  bool cut_condition(std::size_t d, int cur, std::uint64_t visited) const {
    struct Side {
      std::uint64_t from;
      std::uint64_t to;
    };
    std::vector<Side> open;
    {
      const CompiledDemand& dm = demands_[d];
      std::uint64_t goals = dm.exits;
      if (dm.group >= 0) goals &= ~taken_[dm.group];
      goals &= ~(visited & ~bit(cur));
      open.push_back({bit(cur), goals});
    }
    for (std::size_t j = d + 1; j < demands_.size(); ++j) {
      const CompiledDemand& other = demands_[j];
      std::uint64_t goals = other.exits;
      if (other.group >= 0) goals &= ~taken_[other.group];
      if ((goals >> other.source) & 1U) continue;
      open.push_back({bit(other.source), goals});
    }
    const int k = static_cast<int>(open.size());
    if (k < 2 || k > kMaxCutDemands) return true;
    for (int subset = 1; subset < (1 << k); ++subset) {
      const int members = std::popcount(static_cast<unsigned>(subset));
      if (members < 2 || members > kMaxCutSubset) continue;
      const int lowest = std::countr_zero(static_cast<unsigned>(subset));
      // Flipping every member gives the same cut, so the lowest member keeps
      // its orientation.
      for (int flips = 0; flips < (1 << k); ++flips) {
        if ((flips & ~subset) != 0 || ((flips >> lowest) & 1)) continue;
        std::vector<Side> sides;
        for (int c = 0; c < k; ++c) {
          if (!((subset >> c) & 1)) continue;
          sides.push_back(((flips >> c) & 1) ? Side{open[c].to, open[c].from} : open[c]);
        }
        if (!flow_reaches(sides)) return false;
      }
    }
    return true;
  }

  // Unit-capacity max flow on an implicit network: free edges carry one unit
  // either way; commodity c enters through node n+c into any node of its
  // start side and leaves through node n+k+c from any node of its goal side.
  template <typename SideVec>
  bool flow_reaches(const SideVec& sides) const {
    const int n = net_.node_count();
    const int k = static_cast<int>(sides.size());
    const int sink = n + 2 * k;
    std::array<signed char, kMaxEdges> flow{};
    std::array<int, 16> entered{};  // node the commodity entered, -1 if none
    std::array<int, 16> left{};     // node the commodity left from, -1 if none
    entered.fill(-1);
    left.fill(-1);
    // parent[v] = (previous node, edge id or -1)
    std::array<std::pair<int, int>, kMaxNodes + 34> parent{};
    std::array<int, kMaxNodes + 34> queue{};
    for (int unit = 0; unit < k; ++unit) {
      parent.fill({-2, -1});
      int head = 0;
      int tail = 0;
      auto push = [&](int v, int from, int edge) {
        if (parent[v].first != -2) return;
        parent[v] = {from, edge};
        queue[tail++] = v;
      };
      for (int c = 0; c < k; ++c) {
        if (entered[c] < 0) push(n + c, -1, -1);
      }
      while (head < tail && parent[sink].first == -2) {
        const int u = queue[head++];
        if (u < n) {
          for (const auto& arc : net_.adj[u]) {
            if (used_.test(arc.edge)) continue;
            const int dir = net_.edge_nodes[arc.edge][0] == u ? 1 : -1;
            if (flow[arc.edge] * dir < 1) push(arc.to, u, arc.edge);
          }
          for (int c = 0; c < k; ++c) {
            if (entered[c] == u) push(n + c, u, -1);
            if (((sides[c].to >> u) & 1U) && left[c] != u) push(n + k + c, u, -1);
          }
        } else if (u < n + k) {
          const int c = u - n;
          for (int v = 0; v < n; ++v) {
            if (((sides[c].from >> v) & 1U) && entered[c] != v) push(v, u, -1);
          }
        } else {
          const int c = u - n - k;
          if (left[c] < 0) push(sink, u, -1);
          if (left[c] >= 0) push(left[c], u, -1);
        }
      }
      if (parent[sink].first == -2) return false;
      for (int v = sink; parent[v].first != -1;) {
        const auto [u, edge] = parent[v];
        if (edge >= 0) {
          flow[edge] += net_.edge_nodes[edge][0] == u ? 1 : -1;
        } else if (u >= n && u < n + k) {
          entered[u - n] = v;
        } else if (v >= n && v < n + k) {
          if (entered[v - n] == u) entered[v - n] = -1;  // cancelled entry
        } else if (v >= n + k && v < sink) {
          left[v - n - k] = u;
        } else if (u >= n + k && u < sink && v < n) {
          if (left[u - n - k] == v) left[u - n - k] = -1;  // cancelled exit
        }
        v = u;
      }
    }
    return true;
  }

  struct OutOfBudget {};

  const Instance& inst_;
  const Network& net_;
  std::vector<int> order_;
  long budget_ = 0;
  long spent_ = 0;
  std::vector<CompiledDemand> demands_;
  EdgeMask used_;
  std::vector<std::uint64_t> taken_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> ends_;
  bool use_memo_ = true;
  std::unordered_set<MemoKey, MemoHash> failed_;
};

}  // namespace

void validate(const Instance& inst) {
  const GridGraph& g = inst.graph;
  for (const Edge& e : inst.forbidden_edges) {
    if (!g.has_edge(e)) throw std::invalid_argument("forbidden edge not in graph: " + to_string(e));
  }
  for (std::size_t i = 0; i < inst.demands.size(); ++i) {
    const Demand& d = inst.demands[i];
    const std::string where = " (demand " + std::to_string(i) + ")";
    if (!g.has_vertex(d.source)) {
      throw std::invalid_argument("source not present: " + to_string(d.source) + where);
    }
    if (d.kind == DemandKind::Pair) {
      if (!g.has_vertex(d.target)) {
        throw std::invalid_argument("target not present: " + to_string(d.target) + where);
      }
    } else {
      if (d.exits.empty()) throw std::invalid_argument("escape without exits" + where);
      for (Vertex x : d.exits) {
        if (!g.has_vertex(x)) throw std::invalid_argument("exit not present: " + to_string(x) + where);
      }
    }
  }
}

std::optional<PathSystem> solve(const Instance& inst) {
  validate(inst);
  const Network net(inst.graph, inst.forbidden_edges);
  if (net.node_count() > kMaxNodes || net.edge_count() > kMaxEdges) {
    throw std::invalid_argument("router supports at most 64 nodes and 128 edges");
  }
  // Budgeted attempts over demand orders cut the heavy tail of unlucky first
  // choices. Each demand is tried first once, then the remaining
  // permutations, with a budget that grows per round. The final unbounded
  // attempt in the given order keeps the search complete.
  const int k = static_cast<int>(inst.demands.size());
  std::vector<int> order(inst.demands.size());
  std::iota(order.begin(), order.end(), 0);
  if (k > 1) {
    std::vector<std::vector<int>> orders;
    for (int first = 0; first < k; ++first) {
      std::vector<int> o{first};
      for (int i = 0; i < k; ++i) {
        if (i != first) o.push_back(i);
      }
      orders.push_back(std::move(o));
    }
    std::vector<int> perm = order;
    while (static_cast<int>(orders.size()) < kMaxRestarts &&
           std::next_permutation(perm.begin(), perm.end())) {
      if (std::find(orders.begin(), orders.end(), perm) == orders.end()) orders.push_back(perm);
    }
    for (long budget : kRestartBudgets) {
      for (const auto& o : orders) {
        Router router(inst, net, o);
        const auto outcome = router.run(budget);
        if (outcome == Router::Outcome::Found) return router.certificate();
        if (outcome == Router::Outcome::Infeasible) return std::nullopt;
      }
    }
  }
  Router router(inst, net, order);
  if (router.run(0) == Router::Outcome::Found) return router.certificate();
  return std::nullopt;
}

std::vector<Edge> path_edges(const GridGraph& graph, const Path& path) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (graph.representative(path[i]) == graph.representative(path[i + 1])) continue;
    out.emplace_back(path[i], path[i + 1]);
  }
  return out;
}

VerifyReport verify(const Instance& inst, const PathSystem& cert) {
  auto fail = [](std::string msg) { return VerifyReport{false, std::move(msg)}; };
  const GridGraph& g = inst.graph;
  const std::size_t want = inst.demands.size();
  if (cert.paths.size() != want) {
    return fail("expected " + std::to_string(want) + " paths, found " +
                std::to_string(cert.paths.size()));
  }
  const std::set<Edge> forbidden(inst.forbidden_edges.begin(), inst.forbidden_edges.end());
  std::set<Edge> used;
  std::map<int, std::vector<Vertex>> group_ends;
  for (std::size_t k = 0; k < want; ++k) {
    const Demand& d = inst.demands[k];
    const Path& p = cert.paths[k];
    const std::string at = " at demand " + std::to_string(k);
    if (p.empty()) return fail("empty path" + at);
    if (p.front() != d.source) return fail("path does not start at source" + at);
    for (Vertex v : p) {
      if (!g.has_vertex(v)) return fail("vertex " + to_string(v) + " not in graph" + at);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const Vertex u = p[i];
      const Vertex v = p[i + 1];
      if (u == v) return fail("repeated vertex " + to_string(u) + at);
      if (g.representative(u) == g.representative(v)) continue;
      const Edge e(u, v);
      if (!g.has_edge(e)) return fail("non-adjacent step " + to_string(u) + " -> " + to_string(v) + at);
      if (forbidden.contains(e)) return fail("forbidden edge " + to_string(e) + at);
      if (!used.insert(e).second) return fail("edge reuse" + at);
    }
    if (d.kind == DemandKind::Pair) {
      if (p.back() != d.target) return fail("path does not end at target" + at);
    } else {
      if (std::find(d.exits.begin(), d.exits.end(), p.back()) == d.exits.end()) {
        return fail("path does not end at an exit" + at);
      }
      if (d.group) {
        auto& ends = group_ends[*d.group];
        const Vertex r = g.representative(p.back());
        if (std::find(ends.begin(), ends.end(), r) != ends.end()) return fail("exit collision" + at);
        ends.push_back(r);
      }
    }
  }
  return {};
}

// Unit-capacity augmenting-path max flow on the compiled network. Each
// undirected edge carries one unit in either direction.
std::optional<PathSystem> escape_flow(const GridGraph& graph, const std::vector<Vertex>& sources,
                                      const std::vector<Vertex>& exits, bool distinct,
                                      const std::vector<Edge>& forbidden) {
  if (sources.empty()) throw std::invalid_argument("escape_flow: no sources");
  Instance probe{graph, forbidden, {}};
  for (Vertex s : sources) probe.demands.push_back(Demand::escape(s, exits));
  validate(probe);

  const Network net(graph, forbidden);
  const int n = net.node_count();
  const int super_source = n;
  const int super_sink = n + 1;
  const int units = static_cast<int>(sources.size());

  struct FlowArc {
    int to;
    int cap;
    int rev;
    int edge;  // network edge id, -1 for terminal arcs
  };
  std::vector<std::vector<FlowArc>> res(n + 2);
  auto add = [&res](int u, int v, int cap_uv, int cap_vu, int edge) {
    res[u].push_back({v, cap_uv, static_cast<int>(res[v].size()), edge});
    res[v].push_back({u, cap_vu, static_cast<int>(res[u].size()) - 1, edge});
  };
  for (int e = 0; e < net.edge_count(); ++e) add(net.edge_nodes[e][0], net.edge_nodes[e][1], 1, 1, e);
  std::vector<int> supply(n, 0);
  for (Vertex s : sources) ++supply[net.node(s)];
  for (int v = 0; v < n; ++v) {
    if (supply[v] > 0) add(super_source, v, supply[v], 0, -1);
  }
  std::vector<bool> is_exit(n, false);
  for (Vertex x : exits) is_exit[net.node(x)] = true;
  for (int v = 0; v < n; ++v) {
    if (is_exit[v]) add(v, super_sink, distinct ? 1 : units, 0, -1);
  }

  int flow = 0;
  while (flow < units) {
    std::vector<std::pair<int, int>> parent(n + 2, {-1, -1});
    std::deque<int> queue{super_source};
    parent[super_source] = {super_source, -1};
    while (!queue.empty() && parent[super_sink].first < 0) {
      const int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(res[u].size()); ++i) {
        const FlowArc& a = res[u][i];
        if (a.cap > 0 && parent[a.to].first < 0) {
          parent[a.to] = {u, i};
          queue.push_back(a.to);
        }
      }
    }
    if (parent[super_sink].first < 0) break;
    for (int v = super_sink; v != super_source;) {
      auto [u, i] = parent[v];
      FlowArc& a = res[u][i];
      a.cap -= 1;
      res[v][a.rev].cap += 1;
      v = u;
    }
    ++flow;
  }
  if (flow < units) return std::nullopt;

  // The two arcs of an undirected edge are mutual reverses with capacity 1
  // each, so the residual of the forward arc alone encodes
  // flow(a -> b) - flow(b -> a) = 1 - cap(a -> b).
  std::vector<int> net_flow(net.edge_count(), 0);
  std::vector<int> sink_flow(n, 0);
  for (int u = 0; u < n; ++u) {
    for (const FlowArc& a : res[u]) {
      if (a.edge >= 0 && u == net.edge_nodes[a.edge][0] && a.to == net.edge_nodes[a.edge][1]) {
        net_flow[a.edge] = 1 - a.cap;
      }
      if (a.to == super_sink) sink_flow[u] = (distinct ? 1 : units) - a.cap;
    }
  }

  std::vector<std::vector<int>> out_edges(n);
  for (int e = 0; e < net.edge_count(); ++e) {
    if (net_flow[e] > 0) out_edges[net.edge_nodes[e][0]].push_back(e);
    if (net_flow[e] < 0) out_edges[net.edge_nodes[e][1]].push_back(e);
  }
  std::vector<std::size_t> cursor(n, 0);
  PathSystem cert;
  for (Vertex s : sources) {
    int u = net.node(s);
    std::vector<int> walk;
    while (sink_flow[u] == 0) {
      const int e = out_edges[u][cursor[u]++];
      walk.push_back(e);
      u = net.edge_nodes[e][0] == u ? net.edge_nodes[e][1] : net.edge_nodes[e][0];
    }
    --sink_flow[u];
    Path p = net.expand(s, walk);
    Vertex end = p.back();
    if (std::find(exits.begin(), exits.end(), end) == exits.end()) {
      for (Vertex x : exits) {
        if (net.node(x) == u) {
          end = x;
          break;
        }
      }
      p.push_back(end);
    }
    cert.paths.push_back(std::move(p));
  }
  return cert;
}

bool is_weakly_2_linked(const GridGraph& graph) {
  if (!graph.is_connected()) return false;
  const auto nodes = graph.nodes();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i; j < nodes.size(); ++j) pairs.emplace_back(nodes[i], nodes[j]);
  }
  // Demands are unordered pairs and the two demands are interchangeable.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i; j < pairs.size(); ++j) {
      Instance inst{graph, {}, {Demand::pair(pairs[i].first, pairs[i].second),
                                Demand::pair(pairs[j].first, pairs[j].second)}};
      if (!solve(inst)) return false;
    }
  }
  return true;
}

}  // namespace gridlink
