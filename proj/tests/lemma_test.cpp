#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gridlink/lemmas.hpp"

using namespace gridlink;

namespace {

const Quadrant& ul() {
  static const Quadrant q = quadrant(Corner::UL);
  return q;
}

bool avoids_c1(const Certified& c) {
  const auto c1 = central_cycle_c1();
  for (const Path& p : c.paths.paths) {
    for (const Edge& e : path_edges(c.instance.graph, p)) {
      if (std::find(c1.begin(), c1.end(), e) != c1.end()) return false;
    }
  }
  return true;
}

bool zero_length(const Certified& c) {
  return std::all_of(c.paths.paths.begin(), c.paths.paths.end(),
                     [](const Path& p) { return p.size() == 1; });
}

void check_framed(const std::optional<FramedTriple>& r) {
  REQUIRE(r);
  CHECK(verify(r->cert.instance, r->cert.paths).ok);
  CHECK(avoids_c1(r->cert));
}

}  // namespace

TEST_CASE("build_frame") {
  const Vertex x0{3, 3};
  SUBCASE("terminals on C0") {
    const Frame f = build_frame(ul(), x0, x0, 0);
    CHECK(f.anchor == x0);
    CHECK(f.mating_paths[0] == Path{x0});
    CHECK(f.mating_paths[1] == Path{x0});
  }
  SUBCASE("anchored on C1") {
    const Frame f = build_frame(ul(), {1, 2}, {2, 1}, 1);
    const auto c1 = cycle_vertices_in(ul(), 1);
    CHECK(std::find(c1.begin(), c1.end(), f.anchor) != c1.end());
    const Certified c = lower_frame(ul(), {1, 2}, {2, 1}, f);
    CHECK(verify(c.instance, c.paths).ok);
    CHECK(avoids_c1(c));
  }
  SUBCASE("every placement") {
    for (Vertex a : ul().vertices) {
      for (Vertex b : ul().vertices) {
        for (int alpha : {0, 1}) {
          const Certified c = lower_frame(ul(), a, b, build_frame(ul(), a, b, alpha));
          CHECK(verify(c.instance, c.paths).ok);
          CHECK(avoids_c1(c));
        }
      }
    }
  }
  CHECK_THROWS_AS(build_frame(ul(), {4, 4}, x0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_frame(ul(), x0, x0, 2), std::invalid_argument);
}

TEST_CASE("mate_pair_to_cycles") {
  const Certified both = mate_pair_to_cycles(ul(), {2, 2}, {2, 2}, {0, 0});
  CHECK(verify(both.instance, both.paths).ok);
  CHECK(avoids_c1(both));
  CHECK(both.paths.paths[0].back() == Vertex{3, 3});
  CHECK(both.paths.paths[1].back() == Vertex{3, 3});

  const Certified on = mate_pair_to_cycles(ul(), {3, 3}, {2, 2}, {0, 1});
  CHECK(zero_length(on));
}

TEST_CASE("frame_two_mate_third") {
  check_framed(frame_two_mate_third(ul(), {Vertex{3, 3}, Vertex{2, 2}, Vertex{1, 1}}));
  // Third terminal on the boundary walk between the framed two.
  const auto r = frame_two_mate_third(ul(), {Vertex{1, 3}, Vertex{3, 1}, Vertex{2, 3}});
  check_framed(r);
  CHECK(r->framed == std::array<int, 2>{0, 1});
  // The given roles admit nothing here; another pair is framed instead.
  const auto swapped = frame_two_mate_third(ul(), {Vertex{1, 2}, Vertex{1, 3}, Vertex{1, 1}});
  check_framed(swapped);
  CHECK(swapped->framed != std::array<int, 2>{0, 1});
  CHECK_THROWS_AS(frame_two_mate_third(ul(), {Vertex{1, 1}, Vertex{1, 1}, Vertex{2, 2}}),
                  std::invalid_argument);
}

TEST_CASE("frame_c0_mate_c1 and frame_c1_mate_corner") {
  check_framed(frame_c0_mate_c1(ul(), {Vertex{1, 1}, Vertex{1, 3}, Vertex{3, 1}}));
  const auto r = frame_c0_mate_c1(ul(), {Vertex{3, 3}, Vertex{1, 2}, Vertex{2, 1}});
  check_framed(r);
  CHECK(r->frame.alpha == 0);
  CHECK(r->frame.anchor == Vertex{3, 3});

  const auto y = frame_c1_mate_corner(ul(), {Vertex{2, 2}, Vertex{1, 3}, Vertex{2, 1}}, {3, 1});
  check_framed(y);
  CHECK(y->frame.alpha == 1);
  CHECK(y->mate.back() == Vertex{3, 1});
  check_framed(frame_c1_mate_corner(ul(), {Vertex{3, 3}, Vertex{1, 1}, Vertex{1, 3}}, {3, 3}));
  CHECK_THROWS_AS(frame_c1_mate_corner(ul(), {Vertex{3, 3}, Vertex{1, 1}, Vertex{1, 3}}, {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("escape_three_shared") {
  const auto q1 = adjusted_quadrant(AdjustedKind::Q1);
  const auto r = escape_three_shared(q1, {Vertex{3, 1}, Vertex{2, 2}, Vertex{2, 3}});
  REQUIRE(r);
  CHECK(verify(r->instance, r->paths).ok);
  CHECK(r->paths.paths[0] == Path{{3, 1}});
  // Neighbours of A reach it in one step.
  const auto n = escape_three_shared(q1, {Vertex{2, 1}, Vertex{2, 2}, Vertex{2, 3}});
  REQUIRE(n);
  for (const Path& p : n->paths.paths) CHECK(p.size() == 2);
  CHECK_THROWS_AS(escape_three_shared(q1, {Vertex{1, 1}, Vertex{2, 2}, Vertex{2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("link_and_escape") {
  const auto q0 = adjusted_quadrant(AdjustedKind::Q0);
  const auto a = link_and_escape(q0, {3, 2}, {3, 2}, {3, 2});
  REQUIRE(a);
  CHECK(zero_length(*a));
  const auto b = link_and_escape(q0, {1, 1}, {3, 3}, {1, 1});
  REQUIRE(b);
  CHECK(verify(b->instance, b->paths).ok);
}

TEST_CASE("escape_three_distinct") {
  const auto q0 = adjusted_quadrant(AdjustedKind::Q0);
  const auto a = escape_three_distinct(q0, {Vertex{3, 1}, Vertex{3, 2}, Vertex{3, 3}});
  REQUIRE(a);
  CHECK(zero_length(*a));
  const auto col = escape_three_distinct(q0, {Vertex{1, 1}, Vertex{2, 1}, Vertex{3, 1}});
  REQUIRE(col);
  CHECK(verify(col->instance, col->paths).ok);
  const auto twice = escape_three_distinct(q0, {Vertex{1, 2}, Vertex{1, 2}, Vertex{2, 2}});
  REQUIRE(twice);
  CHECK(verify(twice->instance, twice->paths).ok);
  CHECK_THROWS_AS(escape_three_distinct(q0, {Vertex{3, 1}, Vertex{3, 1}, Vertex{2, 2}}),
                  std::invalid_argument);
}

TEST_CASE("project_with_b_link") {
  const auto q0 = adjusted_quadrant(AdjustedKind::Q0);
  const auto b = project_with_b_link(q0, {{2, 3}}, {2, 3});
  REQUIRE(b);
  CHECK(zero_length(*b));
  const std::vector<Vertex> t1{{1, 1}, {2, 1}, {3, 1}};
  CHECK_FALSE(project_with_b_link(q0, t1, {3, 1}));
  CHECK(project_with_b_link(q0, t1, {2, 1}));
  const std::vector<Vertex> t2{{1, 1}, {1, 2}, {1, 3}, {2, 3}};
  const auto r = project_with_b_link(q0, t2, {2, 3});
  REQUIRE(r);
  CHECK(verify(r->instance, r->paths).ok);
  CHECK_FALSE(project_with_b_link(q0, t2, {1, 1}));
}

TEST_CASE("clamp_matching") {
  const Path p1{{1, 1}, {1, 2}};
  const Clamp y2{{{{2, 2}, {2, 3}}, {{2, 2}, {3, 2}}}, {{3, 2}, {2, 3}}};
  const Clamp y3{{{{3, 2}, {3, 3}}, {{2, 3}, {3, 3}}}, {{3, 3}}};

  SUBCASE("both in the overlap") {
    const auto m = clamp_matching(p1, y2, y3, {Vertex{2, 3}, Vertex{3, 2}});
    CHECK(m.status == MatchStatus::Matched);
    CHECK(m.assignment == std::array<int, 2>{0, 1});
  }
  SUBCASE("forced") {
    const auto m = clamp_matching(p1, y2, y3, {Vertex{2, 3}, Vertex{2, 2}});
    CHECK(m.status == MatchStatus::Matched);
    CHECK(m.assignment == std::array<int, 2>{1, 0});
  }
  SUBCASE("both only in y2") {
    CHECK(clamp_matching(p1, y2, y3, {Vertex{2, 2}, Vertex{2, 2}}).status == MatchStatus::NoMatch);
  }
  SUBCASE("singleton outside both") {
    CHECK(clamp_matching(p1, y2, y3, {Vertex{1, 1}, Vertex{2, 2}}).status == MatchStatus::NoMatch);
  }
  SUBCASE("shared edge") {
    Clamp bad = y3;
    bad.edges.push_back({{2, 2}, {2, 3}});
    CHECK(clamp_matching(p1, y2, bad, {Vertex{2, 3}, Vertex{3, 2}}).status ==
          MatchStatus::PreconditionViolated);
  }
  SUBCASE("clamp meets p1") {
    const Path through{{2, 2}, {2, 3}};
    CHECK(clamp_matching(through, y2, y3, {Vertex{2, 3}, Vertex{3, 2}}).status ==
          MatchStatus::PreconditionViolated);
  }
}

TEST_CASE("link_pair_escort_singletons") {
  const std::array<Line, 2> aa{Line::A, Line::A};
  const auto r = link_pair_escort_singletons(ul(), {1, 1}, {1, 3}, {2, 2}, {2, 2}, aa);
  REQUIRE(r);
  CHECK(verify(r->cert.instance, r->cert.paths).ok);
  for (Vertex s3 : {Vertex{3, 3}, Vertex{3, 2}, Vertex{2, 3}}) {
    const auto e = link_pair_escort_singletons(ul(), {1, 1}, {2, 1}, {1, 2}, s3, {Line::B, Line::A});
    REQUIRE(e);
    CHECK(verify(e->cert.instance, e->cert.paths).ok);
  }
  // Both singletons on the corner: its two edges cannot carry three paths.
  CHECK_FALSE(link_pair_escort_singletons(ul(), {1, 1}, {1, 2}, {1, 1}, {1, 1}, aa));
}

TEST_CASE("crowded_escape") {
  const auto lm = landmarks(ul());
  auto off_a = [&](const CrowdedResult& r) {
    int n = 0;
    const auto& d = r.cert.instance.demands;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k].kind != DemandKind::Escape) continue;
      const Vertex end = r.cert.paths.paths[k].back();
      n += std::find(lm.A.begin(), lm.A.end(), end) == lm.A.end();
    }
    return n;
  };
  SUBCASE("four pairs") {
    const CrowdedConfig cfg{{{Vertex{1, 1}, Vertex{3, 3}}, {Vertex{1, 2}, Vertex{3, 2}},
                             {Vertex{1, 3}, Vertex{3, 1}}, {Vertex{2, 1}, Vertex{2, 3}}},
                            {}};
    const auto r = crowded_escape(ul(), cfg, 1);
    REQUIRE(r);
    CHECK(r->linked.size() >= 2);
    CHECK(verify(r->cert.instance, r->cert.paths).ok);
  }
  SUBCASE("one pair at the corners") {
    const CrowdedConfig cfg{{{Vertex{3, 3}, Vertex{1, 1}}}, {Vertex{1, 2}, Vertex{2, 1}, Vertex{2, 2}}};
    const auto r = crowded_escape(ul(), cfg, 3);
    REQUIRE(r);
    CHECK(verify(r->cert.instance, r->cert.paths).ok);
    CHECK(off_a(*r) <= 1);
  }
  SUBCASE("three pairs") {
    const CrowdedConfig cfg{{{Vertex{1, 1}, Vertex{2, 2}}, {Vertex{1, 2}, Vertex{2, 1}},
                             {Vertex{1, 3}, Vertex{2, 3}}},
                            {}};
    const auto r = crowded_escape(ul(), cfg, 2);
    REQUIRE(r);
    CHECK(r->linked.size() >= 1);
    CHECK(verify(r->cert.instance, r->cert.paths).ok);
    CHECK(off_a(*r) <= 1);
  }
  CHECK_THROWS_AS(crowded_escape(ul(), {{}, {Vertex{1, 1}}}, 1), std::invalid_argument);
}
