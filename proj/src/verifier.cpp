#include "gridlink/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridlink/lemmas.hpp"
#include "gridlink/quadrant.hpp"

namespace gridlink {

namespace {

// ---------------------------------------------------------------------------
// Seeds and parallel evaluation

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

// Uniform draw in [0, n) by rejection, so results do not depend on the
// standard library's distribution code.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

struct Outcome {
  enum class Kind { Feasible, Exceptional, Defect };
  Kind kind = Kind::Feasible;
  std::string detail;
  std::map<std::string, std::uint64_t> counters;
};

Outcome defect(std::string why) { return {Outcome::Kind::Defect, std::move(why), {}}; }

std::vector<Outcome> run_all(std::size_t n, int workers,
                             const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i] = defect(std::string("exception: ") + e.what());
      }
    }
  };
  const int w = std::clamp(workers, 1, 256);
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += to_string(v);
  return s;
}

std::string set_text(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + to_string(vs[i]);
  return s + "}";
}

std::string key_text(std::string s) {
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration helpers

const Quadrant& ul() {
  static const Quadrant q = quadrant(Corner::UL);
  return q;
}

const AdjustedQuadrant& adjusted(AdjustedKind k) {
  static const std::array<AdjustedQuadrant, 5> all{
      adjusted_quadrant(AdjustedKind::Q0), adjusted_quadrant(AdjustedKind::Q1),
      adjusted_quadrant(AdjustedKind::Q2), adjusted_quadrant(AdjustedKind::Q3),
      adjusted_quadrant(AdjustedKind::Q4)};
  return all[static_cast<int>(k)];
}

void subsets(const std::vector<Vertex>& from, std::size_t k,
             const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t j = i; j < from.size(); ++j) {
      cur.push_back(from[j]);
      rec(j + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// Perfect matchings of a sorted list, flattened pair by pair.
void matchings(const std::vector<Vertex>& vs, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> flat;
  std::vector<bool> used(vs.size(), false);
  std::function<void()> rec = [&] {
    std::size_t i = 0;
    while (i < vs.size() && used[i]) ++i;
    if (i == vs.size()) {
      fn(flat);
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      flat.push_back(vs[i]);
      flat.push_back(vs[j]);
      rec();
      flat.resize(flat.size() - 2);
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
}

std::vector<Vertex> minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  for (Vertex v : a) {
    if (std::find(b.begin(), b.end(), v) == b.end()) out.push_back(v);
  }
  return out;
}

std::vector<LemmaInstance> all_instances(const std::string& id) {
  std::vector<LemmaInstance> out;
  const auto& q = ul().vertices;
  auto add = [&](std::string part, std::vector<Vertex> t, std::vector<int> p) {
    out.push_back({id, std::move(part), std::move(t), std::move(p), 1});
  };
  if (id == "L1") {
    subsets(q, 8, [&](const std::vector<Vertex>& s) {
      matchings(s, [&](const std::vector<Vertex>& m) { add("8 terminals", m, {4}); });
    });
    subsets(q, 7, [&](const std::vector<Vertex>& s) {
      for (Vertex single : s) {
        matchings(minus(s, {single}), [&](const std::vector<Vertex>& m) {
          auto t = m;
          t.push_back(single);
          add("7 terminals", t, {3});
        });
      }
    });
  } else if (id == "L2") {
    subsets(q, 6, [&](const std::vector<Vertex>& s) {
      matchings(s, [&](const std::vector<Vertex>& m) { add("3 pairs", m, {3}); });
      subsets(s, 2, [&](const std::vector<Vertex>& singles) {
        matchings(minus(s, singles), [&](const std::vector<Vertex>& m) {
          auto t = m;
          t.insert(t.end(), singles.begin(), singles.end());
          add("2 pairs", t, {2});
        });
      });
    });
  } else if (id == "L3") {
    subsets(q, 2, [&](const std::vector<Vertex>& pair) {
      subsets(minus(q, pair), 3, [&](const std::vector<Vertex>& singles) {
        auto t = pair;
        t.insert(t.end(), singles.begin(), singles.end());
        add("1 pair", t, {1});
      });
    });
  } else if (id == "L4") {
    for (int k = 3; k <= 6; ++k) add("P3 x Pk", {}, {0, k});
    for (int k = 3; k <= 6; ++k) add("L-shaped", {}, {1, k});
    add("P1 x P3", {}, {2, 3});
  } else if (id == "L5") {
    for (Vertex a : q) {
      for (Vertex b : q) {
        for (int alpha : {0, 1}) add("frame", {a, b}, {alpha});
      }
    }
  } else if (id == "L6") {
    subsets(q, 3, [&](const std::vector<Vertex>& s) {
      for (int r = 0; r < 3; ++r) {
        auto framed = s;
        framed.erase(framed.begin() + r);
        framed.push_back(s[r]);
        add("triple", framed, {});
      }
    });
  } else if (id == "L7") {
    subsets(q, 3, [&](const std::vector<Vertex>& s) { add("(i)", s, {}); });
    subsets(q, 3, [&](const std::vector<Vertex>& s) {
      add("(ii) z=x0", s, {0});
      add("(ii) z=y0", s, {1});
    });
  } else if (id == "L8") {
    for (AdjustedKind k : {AdjustedKind::Q1, AdjustedKind::Q2, AdjustedKind::Q3, AdjustedKind::Q4}) {
      subsets(adjusted(k).graph.nodes(), 3, [&](const std::vector<Vertex>& s) {
        add("(i) " + to_string(k), s, {static_cast<int>(k)});
      });
    }
    for (Vertex a : q) {
      for (Vertex b : q) {
        for (Vertex c : q) add("(ii)", {a, b, c}, {});
      }
    }
    subsets(q, 3, [&](const std::vector<Vertex>& s) { add("(iii) distinct", s, {}); });
    const auto& A = adjusted(AdjustedKind::Q0).A;
    for (Vertex u : q) {
      if (std::find(A.begin(), A.end(), u) != A.end()) continue;
      for (Vertex v : q) {
        if (v != u) add("(iii) coincident", {u, u, v}, {});
      }
    }
  } else if (id == "L9") {
    for (std::size_t k = 1; k <= 4; ++k) {
      subsets(q, k, [&](const std::vector<Vertex>& T) {
        for (int i = 0; i < static_cast<int>(k); ++i) add("T", T, {i});
      });
    }
  } else if (id == "L10" || id == "P1-matching") {
    for (Vertex a : q) {
      for (Vertex b : q) {
        for (Vertex c : q) {
          for (Vertex d : q) {
            for (int psi = 0; psi < 4; ++psi) add("placement", {a, b, c, d}, {psi});
          }
        }
      }
    }
  } else {
    throw std::invalid_argument("unknown lemma id: " + id);
  }
  return out;
}

// Transpose about x0 (the main diagonal in the upper-left quadrant), or
// nullopt for parts of the domain the transpose does not preserve.
std::optional<LemmaInstance> transposed(const LemmaInstance& in) {
  const std::string& id = in.lemma;
  const bool symmetric = id == "L1" || id == "L5" || id == "L6" || id == "L10" ||
                         id == "P1-matching" || (id == "L7" && in.part != "(ii) z=y0");
  if (!symmetric) return std::nullopt;
  LemmaInstance t = in;
  for (Vertex& v : t.terminals) v = {v.col, v.row};
  if (id == "L10" || id == "P1-matching") t.params[0] = ((in.params[0] & 1) << 1) | ((in.params[0] >> 1) & 1);
  // Restore the enumeration's canonical ordering.
  if (id == "L1") {
    const int pairs = in.params[0];
    std::vector<std::array<Vertex, 2>> ps;
    for (int i = 0; i < pairs; ++i) {
      std::array<Vertex, 2> p{t.terminals[2 * i], t.terminals[2 * i + 1]};
      std::sort(p.begin(), p.end());
      ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());
    std::vector<Vertex> flat;
    for (const auto& p : ps) flat.insert(flat.end(), p.begin(), p.end());
    flat.insert(flat.end(), t.terminals.begin() + 2 * pairs, t.terminals.end());
    t.terminals = flat;
  } else if (id == "L6") {
    std::sort(t.terminals.begin(), t.terminals.begin() + 2);
  } else if (id == "L7") {
    std::sort(t.terminals.begin(), t.terminals.end());
  }
  return t;
}

// ---------------------------------------------------------------------------
// Per-instance checks

bool touches_c1(const GridGraph& g, const PathSystem& ps) {
  const auto c1 = central_cycle_c1();
  for (const Path& p : ps.paths) {
    for (const Edge& e : path_edges(g, p)) {
      if (std::find(c1.begin(), c1.end(), e) != c1.end()) return true;
    }
  }
  return false;
}

Outcome check_certified(const Certified& c) {
  const VerifyReport r = verify(c.instance, c.paths);
  if (!r) return defect("certificate rejected: " + r.message);
  Outcome o;
  ++o.counters["method." + key_text(c.method)];
  return o;
}

Outcome check_crowded(const LemmaInstance& in, int variant) {
  CrowdedConfig cfg;
  const int pairs = in.params[0];
  for (int i = 0; i < pairs; ++i) cfg.pairs.push_back({in.terminals[2 * i], in.terminals[2 * i + 1]});
  cfg.singletons.assign(in.terminals.begin() + 2 * pairs, in.terminals.end());
  const auto r = crowded_escape(ul(), cfg, variant);
  if (!r) return defect("no linkage with escapes");
  Outcome o = check_certified(r->cert);
  if (o.kind == Outcome::Kind::Defect) return o;
  const std::size_t need = variant == 1 ? 2 : 1;
  if (r->linked.size() < need) return defect("too few linked pairs");
  const auto& lm = landmarks(ul());
  int off_a = 0;
  for (std::size_t k = 0; k < r->cert.instance.demands.size(); ++k) {
    if (r->cert.instance.demands[k].kind != DemandKind::Escape) continue;
    const Vertex end = r->cert.paths.paths[k].back();
    off_a += std::find(lm.A.begin(), lm.A.end(), end) == lm.A.end();
  }
  if (variant != 1 && off_a > 1) return defect("more than one exit in B - A");
  ++o.counters["linked_pairs_" + std::to_string(r->linked.size())];
  return o;
}

Outcome check_weak_linkage(const LemmaInstance& in) {
  const int kind = in.params[0];
  const int k = in.params[1];
  GridGraph g;
  bool expect = true;
  if (kind == 0) {
    g = GridGraph::full(3, k);
  } else if (kind == 1) {
    std::vector<Vertex> keep;
    for (Vertex v : GridGraph::full(k, k).vertices()) {
      if (v.row <= 2 || v.col <= 2) keep.push_back(v);
    }
    g = GridGraph::full(k, k).induced(keep);
  } else {
    g = GridGraph::full(1, 3);
    expect = false;
  }
  const bool got = is_weakly_2_linked(g);
  if (got != expect) return defect(std::string("weakly 2-linked returned ") + (got ? "true" : "false"));
  Outcome o;
  ++o.counters[expect ? "weakly_2_linked" : "not_weakly_2_linked"];
  return o;
}

Outcome check_frame(const LemmaInstance& in) {
  const Vertex s1 = in.terminals[0];
  const Vertex s2 = in.terminals[1];
  const int alpha = in.params[0];
  const Frame f = build_frame(ul(), s1, s2, alpha);
  const Certified c = lower_frame(ul(), s1, s2, f);
  const auto on = cycle_vertices_in(ul(), alpha);
  if (std::find(on.begin(), on.end(), f.anchor) == on.end()) return defect("anchor off the cycle");
  Outcome o = check_certified(c);
  if (o.kind == Outcome::Kind::Defect) return o;
  if (!f.forbidden_respected || touches_c1(ul().graph, c.paths)) return defect("frame uses a C1 edge");
  for (int g2 : {0, 1}) {
    const Certified m = mate_pair_to_cycles(ul(), s1, s2, {alpha, g2});
    const Outcome om = check_certified(m);
    if (om.kind == Outcome::Kind::Defect) return defect("cycle mating: " + om.detail);
    if (touches_c1(ul().graph, m.paths)) return defect("cycle mating uses a C1 edge");
    ++o.counters["mating." + key_text(m.method)];
  }
  return o;
}

Outcome check_framed(const std::optional<FramedTriple>& r) {
  if (!r) return defect("no frame and mating");
  Outcome o = check_certified(r->cert);
  if (o.kind == Outcome::Kind::Defect) return o;
  if (touches_c1(ul().graph, r->cert.paths)) return defect("path uses a C1 edge");
  ++o.counters["alpha_" + std::to_string(r->frame.alpha)];
  return o;
}

// Compares the router with the flow reduction on an all-escape instance.
void flow_cross_check(Outcome& o, bool router_feasible, const GridGraph& g,
                      const std::vector<Vertex>& sources, const std::vector<Vertex>& exits,
                      bool distinct) {
  ++o.counters["oracle_checks"];
  const auto flow = escape_flow(g, sources, exits, distinct);
  bool agree = flow.has_value() == router_feasible;
  if (flow) {
    Instance inst{g, {}, {}};
    for (Vertex s : sources) {
      inst.demands.push_back(distinct ? Demand::escape(s, exits, 0) : Demand::escape(s, exits));
    }
    agree = agree && verify(inst, *flow).ok;
  }
  if (!agree) {
    ++o.counters["oracle_mismatches"];
    o = defect("router and flow disagree");
    ++o.counters["oracle_checks"];
    ++o.counters["oracle_mismatches"];
  }
}

Outcome check_escape_lemma(const LemmaInstance& in) {
  const auto& t = in.terminals;
  if (in.part.starts_with("(i) ")) {
    const auto& adj = adjusted(static_cast<AdjustedKind>(in.params[0]));
    const auto r = escape_three_shared(adj, {t[0], t[1], t[2]});
    Outcome o = r ? check_certified(*r) : defect("no shared escape");
    flow_cross_check(o, r.has_value(), adj.graph, t, adj.A, false);
    return o;
  }
  const auto& q0 = adjusted(AdjustedKind::Q0);
  if (in.part == "(ii)") {
    const auto r = link_and_escape(q0, t[0], t[1], t[2]);
    return r ? check_certified(*r) : defect("no link and escape");
  }
  const auto r = escape_three_distinct(q0, {t[0], t[1], t[2]});
  Outcome o = r ? check_certified(*r) : defect("no distinct escape");
  flow_cross_check(o, r.has_value(), q0.graph, t, q0.A, true);
  return o;
}

Outcome check_projection(const LemmaInstance& in) {
  const auto& q0 = adjusted(AdjustedKind::Q0);
  const Vertex s = in.terminals[in.params[0]];
  const auto r = project_with_b_link(q0, in.terminals, s);
  Outcome o;
  if (r) {
    o = check_certified(*r);
  } else {
    Instance inst{q0.graph, {}, {Demand::pair(s, landmarks(ul()).b)}};
    for (Vertex v : in.terminals) {
      if (v != s) inst.demands.push_back(Demand::escape(v, q0.A));
    }
    if (brute_force_feasible(inst)) return defect("refused but trail enumeration finds a linkage");
    o.kind = Outcome::Kind::Exceptional;
    o.detail = "no path system";
    ++o.counters["refusals_confirmed"];
  }
  // With s = b the pair is trivial and the rest is a plain escape.
  const auto others = minus(in.terminals, {s});
  if (s == landmarks(ul()).b && !others.empty() && o.kind != Outcome::Kind::Defect) {
    flow_cross_check(o, r.has_value(), q0.graph, others, q0.A, false);
  }
  return o;
}

std::array<Line, 2> psi_of(int bits) {
  return {bits & 1 ? Line::B : Line::A, bits & 2 ? Line::B : Line::A};
}

Instance escort_instance(const LemmaInstance& in) {
  const auto& t = in.terminals;
  const auto psi = psi_of(in.params[0]);
  const auto& lm = landmarks(ul());
  return {ul().graph,
          {},
          {Demand::pair(t[0], t[1]), Demand::escape(t[2], psi[0] == Line::A ? lm.A : lm.B, 0),
           Demand::escape(t[3], psi[1] == Line::A ? lm.A : lm.B, 0)}};
}

Outcome check_escort(const LemmaInstance& in) {
  const auto& t = in.terminals;
  const auto r = link_pair_escort_singletons(ul(), t[0], t[1], t[2], t[3], psi_of(in.params[0]));
  if (r) return check_certified(r->cert);
  Outcome o = defect("no linkage with escorts");
  if (!brute_force_feasible(escort_instance(in))) {
    o.detail += "; infeasible by trail enumeration";
    ++o.counters["confirmed_infeasible"];
  }
  std::set<Vertex> distinct(t.begin(), t.end());
  ++o.counters[distinct.size() == 4 ? "defects_distinct_terminals" : "defects_coincident_terminals"];
  if (t[2] == t[3]) ++o.counters["defects_coincident_singletons"];
  return o;
}

Outcome check_matching(const LemmaInstance& in) {
  const auto& t = in.terminals;
  const auto r = link_pair_escort_singletons(ul(), t[0], t[1], t[2], t[3], psi_of(in.params[0]));
  Outcome o;
  if (!r) return o;
  for (const ClampAttempt& a : r->attempts) {
    ++o.counters["clamp_configurations"];
    if (a.match.status == MatchStatus::PreconditionViolated) {
      return defect("construction breaks the matching preconditions: " + a.match.reason);
    }
    // Direct enumeration of the two assignments.
    std::optional<std::array<int, 2>> direct;
    const std::array<const Clamp*, 2> ys{&a.y2, &a.y3};
    for (const std::array<int, 2>& g : {std::array<int, 2>{0, 1}, std::array<int, 2>{1, 0}}) {
      if (!direct && ys[g[0]]->contains(a.pi0[0]) && ys[g[1]]->contains(a.pi0[1])) direct = g;
    }
    const bool matched = a.match.status == MatchStatus::Matched;
    if (matched != direct.has_value() || (matched && a.match.assignment != *direct)) {
      return defect("matching disagrees with direct enumeration");
    }
    ++o.counters[matched ? "matched" : "no_match"];
  }
  return o;
}

Outcome check(const LemmaInstance& in) {
  const std::string& id = in.lemma;
  if (id == "L1") return check_crowded(in, 1);
  if (id == "L2") return check_crowded(in, 2);
  if (id == "L3") return check_crowded(in, 3);
  if (id == "L4") return check_weak_linkage(in);
  if (id == "L5") return check_frame(in);
  const auto& t = in.terminals;
  if (id == "L6") {
    const auto r = frame_two_mate_third(ul(), {t[0], t[1], t[2]});
    Outcome o = check_framed(r);
    if (o.kind == Outcome::Kind::Defect || r->framed == std::array<int, 2>{0, 1}) return o;
    // The given roles had to be swapped; confirm they admit no solution.
    ++o.counters["relabelled"];
    for (int alpha : {0, 1}) {
      for (Vertex w : cycle_vertices_in(ul(), alpha)) {
        const Instance fixed{ul().graph,
                             c1_edges_in(ul()),
                             {Demand::escape(t[0], {w}), Demand::escape(t[1], {w}),
                              Demand::escape(t[2], cycle_vertices_in(ul(), 1 - alpha))}};
        if (brute_force_feasible(fixed)) return defect("given roles were feasible but relabelled");
      }
    }
    ++o.counters["given_roles_infeasible"];
    return o;
  }
  if (id == "L7") {
    if (in.part == "(i)") return check_framed(frame_c0_mate_c1(ul(), {t[0], t[1], t[2]}));
    const auto& lm = landmarks(ul());
    return check_framed(frame_c1_mate_corner(ul(), {t[0], t[1], t[2]}, in.params[0] == 0 ? lm.x0 : lm.y0));
  }
  if (id == "L8") return check_escape_lemma(in);
  if (id == "L9") return check_projection(in);
  if (id == "L10") return check_escort(in);
  return check_matching(in);
}

// Sorts each T by its admissible choices of s and checks the exceptional
// family against the two expected sets.
void classify_projection(LemmaReport& report, const std::vector<LemmaInstance>& insts,
                         const std::vector<Outcome>& outs) {
  const auto& lm = landmarks(ul());
  const std::vector<Vertex> t1{{1, 1}, {2, 1}, {3, 1}};
  const std::vector<Vertex> t1_ok{{1, 1}, {2, 1}};
  const std::vector<Vertex> t2{{1, 1}, {1, 2}, {1, 3}, {2, 3}};
  const std::vector<Vertex> t2_ok{{2, 3}, {1, 3}};
  std::map<std::vector<Vertex>, std::vector<Vertex>> works;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    auto& w = works[insts[i].terminals];
    if (outs[i].kind == Outcome::Kind::Feasible) w.push_back(insts[i].terminals[insts[i].params[0]]);
  }
  std::vector<std::vector<Vertex>> family;
  for (const auto& [T, ok] : works) {
    auto sorted_ok = ok;
    std::sort(sorted_ok.begin(), sorted_ok.end());
    const bool off_a = std::none_of(T.begin(), T.end(), [&](Vertex v) {
      return std::find(lm.A.begin(), lm.A.end(), v) != lm.A.end();
    });
    const bool has_c = std::find(T.begin(), T.end(), lm.c) != T.end();
    if (off_a && !has_c && ok.size() != T.size()) {
      report.defects.push_back("clause (i) fails for T=" + set_text(T));
    }
    const std::size_t need = std::min<std::size_t>(3, T.size());
    if (ok.size() < need) {
      family.push_back(T);
      std::string name = T == t1 ? "T1 " : T == t2 ? "T2 " : "";
      report.notes.push_back("exceptional_set: " + name + set_text(T) + " admissible " +
                             set_text(sorted_ok));
      auto want = T == t1 ? t1_ok : T == t2 ? t2_ok : std::vector<Vertex>{};
      std::sort(want.begin(), want.end());
      if (name.empty()) {
        report.defects.push_back("clause (ii) fails for T=" + set_text(T));
      } else if (sorted_ok != want) {
        report.defects.push_back("clause (iii) admissible set differs for T=" + set_text(T));
      }
    }
  }
  const bool exact = family.size() == 2 &&
                     std::find(family.begin(), family.end(), t1) != family.end() &&
                     std::find(family.begin(), family.end(), t2) != family.end();
  report.notes.push_back(std::string("exceptional_family_matches: ") + (exact ? "yes" : "no"));
  if (!exact) report.defects.push_back("exceptional family is not {T1, T2}");
}

LemmaReport aggregate(const std::string& id, const Strategy& s,
                      const std::vector<LemmaInstance>& insts, const std::vector<Outcome>& outs) {
  LemmaReport r;
  r.lemma_id = id;
  r.strategy = s;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const Outcome& o = outs[i];
    const std::uint64_t w = insts[i].weight;
    r.instances_checked += w;
    ++r.evaluated;
    for (const auto& [k, v] : o.counters) r.counters[k] += v;
    switch (o.kind) {
      case Outcome::Kind::Feasible:
        r.feasible += w;
        break;
      case Outcome::Kind::Exceptional:
        r.exceptional.push_back(insts[i].label());
        break;
      case Outcome::Kind::Defect:
        r.defects.push_back(insts[i].label() + ": " + o.detail);
        break;
    }
  }
  return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::Exhaustive: return "exhaustive";
    case StrategyKind::Reduced: return "reduced";
    case StrategyKind::Random: return "random";
  }
  return "?";
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"L1", "L2", "L3", "L4", "L5", "L6",
                                            "L7", "L8", "L9", "L10", "P1-matching"};
  return ids;
}

std::string LemmaInstance::label() const {
  std::string s = lemma + " " + part + " " + join(terminals);
  if (lemma == "L10" || lemma == "P1-matching") {
    s += " psi=" + to_string(params[0] & 1 ? Line::B : Line::A) +
         to_string(params[0] & 2 ? Line::B : Line::A);
  } else if (lemma == "L5") {
    s += " alpha=" + std::to_string(params[0]);
  } else if (lemma == "L9") {
    s += " s=" + to_string(terminals[params[0]]);
  }
  return s;
}

std::vector<LemmaInstance> enumerate_instances(const std::string& lemma_id, const Strategy& s) {
  std::vector<LemmaInstance> all = all_instances(lemma_id);
  if (s.kind == StrategyKind::Exhaustive) return all;
  if (s.kind == StrategyKind::Random) {
    if (s.samples == 0) throw std::invalid_argument("random strategy needs samples >= 1");
    std::vector<LemmaInstance> out;
    for (std::uint64_t i = 0; i < s.samples; ++i) {
      auto rng = rng_for(s.seed, i);
      out.push_back(all[bounded(rng, all.size())]);
    }
    return out;
  }
  std::vector<LemmaInstance> out;
  for (LemmaInstance& in : all) {
    const auto t = transposed(in);
    if (!t) {
      out.push_back(std::move(in));
      continue;
    }
    auto key = [](const LemmaInstance& x) { return std::tie(x.part, x.terminals, x.params); };
    if (key(in) < key(*t)) {
      in.weight = 2;
      out.push_back(std::move(in));
    } else if (key(in) == key(*t)) {
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::string report_body(const LemmaReport& r) {
  std::ostringstream os;
  os << "lemma: " << r.lemma_id << "\n";
  const bool orbit_sweep = r.lemma_id == "pairability" && r.strategy.kind == StrategyKind::Reduced;
  os << "strategy: " << (orbit_sweep ? "exhaustive-reduced" : to_string(r.strategy.kind)) << "\n";
  if (r.strategy.kind == StrategyKind::Random) {
    os << "seed: " << r.strategy.seed << "\n";
    os << "samples: " << r.strategy.samples << "\n";
  }
  os << "instances: " << r.instances_checked << "\n";
  if (r.evaluated != r.instances_checked) os << "evaluated: " << r.evaluated << "\n";
  os << "feasible: " << r.feasible << "\n";
  os << "exceptional: " << r.exceptional.size() << "\n";
  os << "defects: " << r.defects.size() << "\n";
  for (const auto& [k, v] : r.counters) os << k << ": " << v << "\n";
  for (const auto& n : r.notes) os << n << "\n";
  for (const auto& e : r.exceptional) os << "exceptional_instance: " << e << "\n";
  for (const auto& d : r.defects) os << "defect: " << d << "\n";
  os << "status: " << (r.ok() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string format_report(const LemmaReport& r) {
  std::ostringstream os;
  os << report_body(r) << "elapsed_ms: " << static_cast<long long>(r.elapsed_ms) << "\n";
  return os.str();
}

LemmaReport verify_lemma(const std::string& lemma_id, const Strategy& s, int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto insts = enumerate_instances(lemma_id, s);
  const auto outs = run_all(insts.size(), workers, [&insts](std::size_t i) { return check(insts[i]); });
  LemmaReport r = aggregate(lemma_id, s, insts, outs);
  if (lemma_id == "L9" && s.kind != StrategyKind::Random) classify_projection(r, insts, outs);
  if (lemma_id == "L10") r.counters["defects_distinct_terminals"] += 0;
  if (lemma_id == "L8" || lemma_id == "L9") r.counters["oracle_mismatches"] += 0;
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Pairability

PairabilityInstance pairability_sample(std::uint64_t seed, std::uint64_t index) {
  auto rng = rng_for(seed, index);
  std::array<int, 36> cells;
  for (int i = 0; i < 36; ++i) cells[i] = i;
  PairabilityInstance p;
  for (int i = 0; i < 8; ++i) {
    const auto j = i + static_cast<int>(bounded(rng, 36 - i));
    std::swap(cells[i], cells[j]);
    p.terminals[i] = {cells[i] / 6 + 1, cells[i] % 6 + 1};
  }
  return p;
}

namespace {

std::string pairing_text(const PairabilityInstance& p) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    s += (i ? " " : "") + to_string(p.terminals[2 * i]) + "-" + to_string(p.terminals[2 * i + 1]);
  }
  return s;
}

Outcome check_pairing(const PairabilityInstance& p) {
  static const GridGraph grid = GridGraph::full(6, 6);
  Instance inst{grid, {}, {}};
  for (int i = 0; i < 4; ++i) inst.demands.push_back(Demand::pair(p.terminals[2 * i], p.terminals[2 * i + 1]));
  const auto r = solve(inst);
  if (!r) return defect("counterexample " + pairing_text(p));
  const VerifyReport v = verify(inst, *r);
  if (!v) return defect("certificate rejected for " + pairing_text(p) + ": " + v.message);
  return {};
}

// The eight symmetries of the 6x6 grid on cell indices.
int map_cell(int cell, int sym) {
  int r = cell / 6;
  int c = cell % 6;
  if (sym & 4) std::swap(r, c);
  if (sym & 1) r = 5 - r;
  if (sym & 2) c = 5 - c;
  return r * 6 + c;
}

using Pairing = std::array<int, 8>;

Pairing canonical_form(const Pairing& p, int sym) {
  std::array<std::array<int, 2>, 4> ps;
  for (int i = 0; i < 4; ++i) {
    ps[i] = {map_cell(p[2 * i], sym), map_cell(p[2 * i + 1], sym)};
    std::sort(ps[i].begin(), ps[i].end());
  }
  std::sort(ps.begin(), ps.end());
  Pairing out;
  for (int i = 0; i < 4; ++i) {
    out[2 * i] = ps[i][0];
    out[2 * i + 1] = ps[i][1];
  }
  return out;
}

// Orbit size when p is the least member of its orbit, else 0.
int orbit_if_least(const Pairing& p) {
  const Pairing base = canonical_form(p, 0);
  int stabilizer = 0;
  for (int sym = 0; sym < 8; ++sym) {
    const Pairing img = canonical_form(p, sym);
    if (img < base) return 0;
    stabilizer += img == base;
  }
  return 8 / stabilizer;
}

}  // namespace

LemmaReport pairability_check(const PairabilityOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  LemmaReport r;
  r.lemma_id = "pairability";
  if (!opt.exhaustive_reduced) {
    if (opt.samples == 0) throw std::invalid_argument("pairability needs samples >= 1");
    r.strategy = {StrategyKind::Random, opt.samples, opt.seed};
    const auto outs = run_all(opt.samples, opt.workers, [&opt](std::size_t i) {
      return check_pairing(pairability_sample(opt.seed, i));
    });
    for (std::size_t i = 0; i < outs.size(); ++i) {
      ++r.instances_checked;
      ++r.evaluated;
      if (outs[i].kind == Outcome::Kind::Defect) {
        r.defects.push_back("sample " + std::to_string(i) + ": " + outs[i].detail);
      } else {
        ++r.feasible;
      }
    }
    r.elapsed_ms = ms_since(t0);
    return r;
  }

  r.strategy = {StrategyKind::Reduced, 0, 0};
  r.notes.push_back("symmetry: dihedral group of the grid (8 elements)");
  constexpr std::size_t kBatch = 4096;
  std::vector<std::pair<Pairing, int>> batch;
  bool stop = false;
  auto flush = [&] {
    const auto outs = run_all(batch.size(), opt.workers, [&batch](std::size_t i) {
      PairabilityInstance p;
      for (int k = 0; k < 8; ++k) p.terminals[k] = {batch[i].first[k] / 6 + 1, batch[i].first[k] % 6 + 1};
      return check_pairing(p);
    });
    for (std::size_t i = 0; i < outs.size(); ++i) {
      ++r.evaluated;
      r.instances_checked += static_cast<std::uint64_t>(batch[i].second);
      if (outs[i].kind == Outcome::Kind::Defect) {
        r.defects.push_back(outs[i].detail);
      } else {
        r.feasible += static_cast<std::uint64_t>(batch[i].second);
      }
    }
    batch.clear();
  };
  std::vector<Vertex> cells;
  for (int i = 0; i < 36; ++i) cells.push_back({i / 6 + 1, i % 6 + 1});
  std::uint64_t produced = 0;
  subsets(cells, 8, [&](const std::vector<Vertex>& chosen) {
    if (stop) return;
    matchings(chosen, [&](const std::vector<Vertex>& m) {
      if (stop) return;
      Pairing p;
      for (int k = 0; k < 8; ++k) p[k] = (m[k].row - 1) * 6 + (m[k].col - 1);
      const int orbit = orbit_if_least(p);
      if (orbit == 0) return;
      batch.push_back({p, orbit});
      ++produced;
      if (batch.size() == kBatch) flush();
      if (opt.limit != 0 && produced >= opt.limit) stop = true;
    });
  });
  flush();
  r.notes.push_back(std::string("complete: ") + (stop ? "no" : "yes"));
  r.elapsed_ms = ms_since(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Trail enumeration oracle

bool brute_force_feasible(const Instance& inst) {
  const GridGraph& g = inst.graph;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!g.is_routable_edge(e)) continue;
    if (std::find(inst.forbidden_edges.begin(), inst.forbidden_edges.end(), e) != inst.forbidden_edges.end()) {
      continue;
    }
    edges.push_back(e);
  }
  if (edges.size() > 64) throw std::invalid_argument("trail enumeration is limited to 64 edges");
  std::uint64_t used = 0;
  std::map<int, std::vector<Vertex>> taken;

  std::function<bool(std::size_t)> demand;
  std::function<bool(std::size_t, Vertex)> extend = [&](std::size_t k, Vertex at) -> bool {
    const Demand& d = inst.demands[k];
    const Vertex here = g.representative(at);
    bool done = false;
    if (d.kind == DemandKind::Pair) {
      done = here == g.representative(d.target);
    } else {
      for (Vertex x : d.exits) done = done || g.representative(x) == here;
      if (done && d.group) {
        auto& t = taken[*d.group];
        if (std::find(t.begin(), t.end(), here) != t.end()) {
          done = false;
        } else {
          t.push_back(here);
          const bool ok = demand(k + 1);
          t.pop_back();
          if (ok) return true;
          done = false;
        }
      }
    }
    if (done && demand(k + 1)) return true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used >> i & 1) continue;
      const Vertex a = g.representative(edges[i].a);
      const Vertex b = g.representative(edges[i].b);
      if (a != here && b != here) continue;
      used |= std::uint64_t{1} << i;
      const bool ok = extend(k, a == here ? b : a);
      used &= ~(std::uint64_t{1} << i);
      if (ok) return true;
    }
    return false;
  };
  demand = [&](std::size_t k) -> bool {
    if (k == inst.demands.size()) return true;
    return extend(k, inst.demands[k].source);
  };
  return demand(0);
}

}  // namespace gridlink
