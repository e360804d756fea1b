#include "gridlink/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gridlink {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string to_string(const Edge& e) { return to_string(e.a) + " " + to_string(e.b); }

GridGraph GridGraph::full(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid dimensions must be at least 1x1");
  }
  GridGraph g;
  g.rows_ = rows;
  g.cols_ = cols;
  const int n = rows * cols;
  g.vertex_on_.assign(n, true);
  g.edge_on_.assign(2 * n, false);
  g.rep_.resize(n);
  std::iota(g.rep_.begin(), g.rep_.end(), 0);
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      const int i = g.index({r, c});
      if (c < cols) g.edge_on_[2 * i] = true;
      if (r < rows) g.edge_on_[2 * i + 1] = true;
    }
  }
  return g;
}

int GridGraph::edge_slot(const Edge& e) const {
  if (!in_bounds(e.a) || !in_bounds(e.b)) return -1;
  if (e.a.row == e.b.row && e.b.col == e.a.col + 1) return 2 * index(e.a);
  if (e.a.col == e.b.col && e.b.row == e.a.row + 1) return 2 * index(e.a) + 1;
  return -1;
}

bool GridGraph::has_vertex(Vertex v) const { return in_bounds(v) && vertex_on_[index(v)]; }

bool GridGraph::has_edge(const Edge& e) const {
  const int slot = edge_slot(e);
  return slot >= 0 && edge_on_[slot];
}

bool GridGraph::is_routable_edge(const Edge& e) const {
  return has_edge(e) && representative(e.a) != representative(e.b);
}

Vertex GridGraph::representative(Vertex v) const {
  if (!in_bounds(v)) return v;
  return vertex_at(rep_[index(v)]);
}

std::vector<Vertex> GridGraph::vertices() const {
  std::vector<Vertex> out;
  for (int i = 0; i < rows_ * cols_; ++i) {
    if (vertex_on_[i]) out.push_back(vertex_at(i));
  }
  return out;
}

std::vector<Vertex> GridGraph::nodes() const {
  std::vector<Vertex> out;
  for (int i = 0; i < rows_ * cols_; ++i) {
    if (vertex_on_[i] && rep_[i] == i) out.push_back(vertex_at(i));
  }
  return out;
}

std::vector<Edge> GridGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < rows_ * cols_; ++i) {
    const Vertex v = vertex_at(i);
    if (edge_on_[2 * i]) out.emplace_back(v, Vertex{v.row, v.col + 1});
    if (edge_on_[2 * i + 1]) out.emplace_back(v, Vertex{v.row + 1, v.col});
  }
  return out;
}

std::size_t GridGraph::vertex_count() const {
  return static_cast<std::size_t>(std::count(vertex_on_.begin(), vertex_on_.end(), true));
}

std::size_t GridGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(edge_on_.begin(), edge_on_.end(), true));
}

std::vector<Vertex> GridGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  if (!has_vertex(v)) return out;
  const Vertex r = representative(v);
  for (const Edge& e : edges()) {
    const Vertex ra = representative(e.a);
    const Vertex rb = representative(e.b);
    if (ra == rb) continue;
    if (ra == r) out.push_back(rb);
    if (rb == r) out.push_back(ra);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int GridGraph::degree(Vertex v) const {
  if (!has_vertex(v)) return 0;
  const Vertex r = representative(v);
  int d = 0;
  for (const Edge& e : edges()) {
    const Vertex ra = representative(e.a);
    const Vertex rb = representative(e.b);
    if (ra != rb && (ra == r || rb == r)) ++d;
  }
  return d;
}

bool GridGraph::is_connected() const {
  const auto ns = nodes();
  if (ns.empty()) return true;
  std::vector<Vertex> seen{ns.front()};
  std::vector<Vertex> stack{ns.front()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
    }
  }
  return seen.size() == ns.size();
}

GridGraph GridGraph::without_edges(std::span<const Edge> removed) const {
  GridGraph g = *this;
  for (const Edge& e : removed) {
    const int slot = edge_slot(e);
    if (slot >= 0) g.edge_on_[slot] = false;
  }
  return g;
}

GridGraph GridGraph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<Vertex> keep;
  for (Vertex v : vertices()) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  }
  return induced(keep);
}

GridGraph GridGraph::induced(std::span<const Vertex> keep) const {
  GridGraph g = *this;
  std::fill(g.vertex_on_.begin(), g.vertex_on_.end(), false);
  for (Vertex v : keep) {
    if (has_vertex(v)) g.vertex_on_[index(v)] = true;
  }
  for (int i = 0; i < rows_ * cols_; ++i) {
    if (!g.vertex_on_[i]) {
      g.edge_on_[2 * i] = false;
      g.edge_on_[2 * i + 1] = false;
      if (i % cols_ > 0) g.edge_on_[2 * (i - 1)] = false;
      if (i >= cols_) g.edge_on_[2 * (i - cols_) + 1] = false;
    }
  }
  // A removed representative would orphan its class; re-root each class at
  // its first surviving member.
  for (int i = 0; i < rows_ * cols_; ++i) {
    if (!g.vertex_on_[i] || g.vertex_on_[g.rep_[i]]) continue;
    const int old = g.rep_[i];
    for (int j = i; j < rows_ * cols_; ++j) {
      if (g.vertex_on_[j] && rep_[j] == old) g.rep_[j] = i;
    }
  }
  return g;
}

GridGraph GridGraph::contract(Vertex from, Vertex into) const {
  if (!has_vertex(from) || !has_vertex(into)) {
    throw std::invalid_argument("contract: vertex not present " + to_string(from) + " " +
                                to_string(into));
  }
  const int rf = rep_[index(from)];
  const int ri = rep_[index(into)];
  if (rf == ri) return *this;
  bool joined = false;
  for (const Edge& e : edges()) {
    const int ra = rep_[index(e.a)];
    const int rb = rep_[index(e.b)];
    if ((ra == rf && rb == ri) || (ra == ri && rb == rf)) {
      joined = true;
      break;
    }
  }
  if (!joined) {
    throw std::invalid_argument("contract: no edge joins " + to_string(from) + " and " +
                                to_string(into));
  }
  GridGraph g = *this;
  for (int& r : g.rep_) {
    if (r == rf) r = ri;
  }
  return g;
}

int terminal_count(std::span<const Vertex> sub, std::span<const Vertex> terminals) {
  std::vector<Vertex> s(sub.begin(), sub.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  int n = 0;
  for (Vertex v : s) {
    if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) ++n;
  }
  return n;
}

}  // namespace gridlink
