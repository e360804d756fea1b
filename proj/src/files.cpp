#include "gridlink/files.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace gridlink {

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int line) : s_(s), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ == s_.size();
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string word() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }
  int number() {
    skip_ws();
    int v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    i_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  Vertex vertex() {
    expect("(");
    const int r = number();
    expect(",");
    const int c = number();
    expect(")");
    return {r, c};
  }
  void finish() {
    if (!done()) fail("unexpected trailing text '" + std::string(s_.substr(i_)) + "'");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  int line_;
};

// Calls fn(line_number, text) for each line with comments stripped and
// blank lines skipped.
template <class F>
void for_each_line(std::string_view text, F&& fn) {
  int n = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++n;
    if (const auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) fn(n, line);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Edge grid_edge(Cursor& c, const GridGraph& g) {
  const Vertex a = c.vertex();
  const Vertex b = c.vertex();
  if (!g.in_bounds(a) || !g.in_bounds(b)) c.fail("vertex outside the grid");
  if (manhattan(a, b) != 1) c.fail("not a grid edge: " + to_string(a) + " " + to_string(b));
  return Edge(a, b);
}

Vertex present_vertex(Cursor& c, const GridGraph& g) {
  const Vertex v = c.vertex();
  if (!g.has_vertex(v)) c.fail("vertex not in graph: " + to_string(v));
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  bool have_grid = false;
  int last = 0;
  for_each_line(text, [&](int n, std::string_view line) {
    last = n;
    Cursor c(line, n);
    const std::string d = c.word();
    if (!have_grid) {
      if (d != "grid") c.fail("first directive must be 'grid'");
      const int rows = c.number();
      const int cols = c.number();
      c.finish();
      if (rows < 1 || cols < 1) c.fail("grid dimensions must be positive");
      inst.graph = GridGraph::full(rows, cols);
      have_grid = true;
      return;
    }
    GridGraph& g = inst.graph;
    if (d == "grid") {
      c.fail("duplicate 'grid' directive");
    } else if (d == "remove_vertex") {
      const Vertex v = present_vertex(c, g);
      c.finish();
      const Vertex gone[] = {v};
      g = g.without_vertices(gone);
    } else if (d == "remove_edge") {
      const Edge e = grid_edge(c, g);
      c.finish();
      if (!g.has_edge(e)) c.fail("edge not in graph: " + to_string(e));
      const Edge gone[] = {e};
      g = g.without_edges(gone);
    } else if (d == "contract") {
      const Vertex from = present_vertex(c, g);
      const Vertex into = present_vertex(c, g);
      c.finish();
      try {
        g = g.contract(from, into);
      } catch (const std::invalid_argument& e) {
        c.fail(e.what());
      }
    } else if (d == "forbid_edge") {
      const Edge e = grid_edge(c, g);
      c.finish();
      if (!g.has_edge(e)) c.fail("edge not in graph: " + to_string(e));
      inst.forbidden_edges.push_back(e);
    } else if (d == "demand") {
      const std::string kind = c.word();
      if (kind == "pair") {
        const Vertex s = present_vertex(c, g);
        const Vertex t = present_vertex(c, g);
        c.finish();
        inst.demands.push_back(Demand::pair(s, t));
      } else if (kind == "escape") {
        const Vertex s = present_vertex(c, g);
        c.expect("->");
        c.expect("{");
        std::vector<Vertex> exits;
        if (!c.eat("}")) {
          do {
            exits.push_back(present_vertex(c, g));
          } while (c.eat(","));
          c.expect("}");
        }
        if (exits.empty()) c.fail("escape without exits");
        std::optional<int> group;
        if (c.eat("group")) group = c.number();
        c.finish();
        inst.demands.push_back(Demand::escape(s, std::move(exits), group));
      } else {
        c.fail("unknown demand kind '" + kind + "'");
      }
    } else {
      c.fail("unknown directive '" + d + "'");
    }
  });
  if (!have_grid) throw ParseError(last, "missing 'grid' directive");
  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(last, e.what());
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  const GridGraph& g = inst.graph;
  std::ostringstream os;
  os << "grid " << g.rows() << " " << g.cols() << "\n";
  const GridGraph full = GridGraph::full(g.rows(), g.cols());
  for (Vertex v : full.vertices()) {
    if (!g.has_vertex(v)) os << "remove_vertex " << to_string(v) << "\n";
  }
  for (const Edge& e : full.edges()) {
    if (g.has_vertex(e.a) && g.has_vertex(e.b) && !g.has_edge(e)) {
      os << "remove_edge " << to_string(e.a) << " " << to_string(e.b) << "\n";
    }
  }
  // Grow each contracted node from its representative along present edges.
  std::map<Vertex, std::vector<Vertex>> members;
  for (Vertex v : g.vertices()) {
    if (g.representative(v) != v) members[g.representative(v)].push_back(v);
  }
  for (auto& [rep, rest] : members) {
    std::vector<Vertex> merged{rep};
    while (!rest.empty()) {
      auto it = std::find_if(rest.begin(), rest.end(), [&](Vertex v) {
        return std::any_of(merged.begin(), merged.end(),
                           [&](Vertex m) { return manhattan(m, v) == 1 && g.has_edge(Edge(m, v)); });
      });
      if (it == rest.end()) it = rest.begin();
      os << "contract " << to_string(*it) << " " << to_string(rep) << "\n";
      merged.push_back(*it);
      rest.erase(it);
    }
  }
  for (const Edge& e : inst.forbidden_edges) {
    os << "forbid_edge " << to_string(e.a) << " " << to_string(e.b) << "\n";
  }
  for (const Demand& d : inst.demands) {
    if (d.kind == DemandKind::Pair) {
      os << "demand pair " << to_string(d.source) << " " << to_string(d.target) << "\n";
      continue;
    }
    os << "demand escape " << to_string(d.source) << " -> {";
    for (std::size_t i = 0; i < d.exits.size(); ++i) os << (i ? ", " : "") << to_string(d.exits[i]);
    os << "}";
    if (d.group) os << " group " << *d.group;
    os << "\n";
  }
  return os.str();
}

std::optional<PathSystem> parse_certificate(std::string_view text) {
  PathSystem ps;
  bool infeasible = false;
  bool any = false;
  for_each_line(text, [&](int n, std::string_view line) {
    Cursor c(line, n);
    if (infeasible) c.fail("'infeasible' must be the only line");
    const std::string d = c.word();
    if (d == "infeasible") {
      if (any) c.fail("'infeasible' must be the only line");
      c.finish();
      infeasible = true;
      return;
    }
    if (d != "path") c.fail("expected 'path' or 'infeasible'");
    const int k = c.number();
    if (k != static_cast<int>(ps.paths.size())) {
      c.fail("expected path " + std::to_string(ps.paths.size()) + ", found path " + std::to_string(k));
    }
    c.expect(":");
    Path p;
    while (!c.done()) p.push_back(c.vertex());
    ps.paths.push_back(std::move(p));
    any = true;
  });
  if (infeasible) return std::nullopt;
  return ps;
}

std::string write_certificate(const std::optional<PathSystem>& cert) {
  if (!cert) return "infeasible\n";
  std::ostringstream os;
  for (std::size_t k = 0; k < cert->paths.size(); ++k) {
    os << "path " << k << ":";
    for (Vertex v : cert->paths[k]) os << " " << to_string(v);
    os << "\n";
  }
  return os.str();
}

}  // namespace gridlink
