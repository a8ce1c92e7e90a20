#include <doctest.h>

#include "lgvx/drawing.hpp"
#include "lgvx/lattices.hpp"

#include "support.hpp"

using namespace lgvx;

namespace {

WeightPoly wx() { return WeightPoly::variable(grid_vars(), "x"); }
WeightPoly wy() { return WeightPoly::variable(grid_vars(), "y"); }

int grid_id(const Drawing& d, long long x, long long y) {
    return *d.find_vertex(grid_vertex_name(x, y));
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
    for (const auto& item : v)
        if (item.kind == k) return true;
    return false;
}

// The 6x6 grid instance with two marked pairs used throughout.
struct TwoPairExample {
    Drawing d = build_grid(6, 6, wx(), wy());
    MarkedConfig m;
    int u1, u2, v1, v2;
    TwoPairExample() {
        u1 = grid_id(d, 2, 0);
        u2 = grid_id(d, 0, 2);
        v1 = grid_id(d, 3, 3);
        v2 = grid_id(d, 4, 4);
        m.starts = {u1, u2};
        m.ends = {v1, v2};
    }
    Path grid_path(std::vector<std::pair<int, int>> pts) const {
        Path p;
        for (auto [x, y] : pts) p.push_back(grid_id(d, x, y));
        return p;
    }
};

} // namespace

TEST_SUITE_BEGIN("drawing");

TEST_CASE("a grid drawing validates") {
    Drawing d = build_grid(2, 2, wx(), wy());
    CHECK(validate_drawing(d).empty());
}

TEST_CASE("a reversed edge breaks upwardness") {
    Drawing d(grid_vars());
    int a = d.add_vertex("a", 0, 0);
    int b = d.add_vertex("b", 1, 0);
    int c = d.add_vertex("c", 0, 1);
    int t = d.add_vertex("t", 1, 1);
    d.add_edge(a, b, wx());
    d.add_edge(c, a, wy()); // south-pointing
    d.add_edge(b, t, wy());
    d.add_edge(c, t, wx());
    d.set_source(a);
    d.set_sink(t);
    CHECK(has_kind(validate_drawing(d), ViolationKind::Upwardness));
}

TEST_CASE("crossing diagonals break planarity") {
    Drawing d(grid_vars());
    int a = d.add_vertex("a", 0, 0);
    int b = d.add_vertex("b", 2, 2);
    int c = d.add_vertex("c", 2, 0);
    int e = d.add_vertex("e", 0, 2);
    int s = d.add_vertex("s", 1, -1);
    int t = d.add_vertex("t", 1, 3);
    d.add_edge(s, a, wx());
    d.add_edge(s, c, wx());
    d.add_edge(a, b, wx());
    d.add_edge(c, e, wx());
    d.add_edge(b, t, wx());
    d.add_edge(e, t, wx());
    d.set_source(s);
    d.set_sink(t);
    CHECK(has_kind(validate_drawing(d), ViolationKind::Planarity));
}

TEST_CASE("an interior sink must sit on the outer face") {
    // Wheel-like drawing: the sink is enclosed by a triangle of supergraph
    // edges, so it cannot lie on the outer face.
    Drawing d(grid_vars());
    int s = d.add_vertex("s", 0, 0);
    int l = d.add_vertex("l", -2, 2);
    int r = d.add_vertex("r", 2, 2);
    int t = d.add_vertex("t", 0, 1); // inside the triangle s-l-r
    d.add_edge(s, l, wx());
    d.add_edge(s, r, wx());
    d.add_edge(l, r, wx());
    d.add_edge(s, t, wy());
    d.set_source(s);
    d.set_sink(t);
    auto violations = validate_drawing(d);
    CHECK(has_kind(violations, ViolationKind::OuterFace));
}

TEST_CASE("duplicate coordinates and parallel edges are reported") {
    Drawing d(grid_vars());
    int a = d.add_vertex("a", 0, 0);
    int b = d.add_vertex("b", 1, 1);
    d.add_vertex("c", 1, 1);
    d.add_edge(a, b, wx());
    d.add_edge(a, b, wx());
    d.set_source(a);
    d.set_sink(b);
    auto violations = validate_drawing(d);
    CHECK(has_kind(violations, ViolationKind::Coordinates));
    CHECK(has_kind(violations, ViolationKind::Simplicity));
}

TEST_CASE("angular order walks counterclockwise from east") {
    Drawing d = build_grid(2, 2, wx(), wy());
    int center = grid_id(d, 1, 1);
    auto order = angular_order(d, center);
    REQUIRE(order.size() == 4);
    // east out, north out, west in, south in
    CHECK(d.edge(order[0]).dst == grid_id(d, 2, 1));
    CHECK(d.edge(order[1]).dst == grid_id(d, 1, 2));
    CHECK(d.edge(order[2]).src == grid_id(d, 0, 1));
    CHECK(d.edge(order[3]).src == grid_id(d, 1, 0));

    auto at_source = angular_order(d, grid_id(d, 0, 0));
    REQUIRE(at_source.size() == 2);
    CHECK(d.edge(at_source[0]).dst == grid_id(d, 1, 0)); // east first
    CHECK(d.edge(at_source[1]).dst == grid_id(d, 0, 1)); // then north
}

TEST_CASE("angular order on the triangular lattice") {
    Drawing d = build_tri_rhombus(1, WeightPoly::variable(tri_vars(), "x"),
                                  WeightPoly::variable(tri_vars(), "y"),
                                  WeightPoly::variable(tri_vars(), "z"));
    int origin = *d.find_vertex(tri_vertex_name(0, 0));
    auto order = angular_order(d, origin);
    REQUIRE(order.size() == 3);
    // Directions (1,1) at 45, (0,2) at 90, (-1,1) at 135 degrees.
    auto dir = [&](int e) {
        return d.position(d.edge(e).dst) - d.position(origin);
    };
    CHECK(dir(order[0]) == Pt{1, 1});
    CHECK(dir(order[1]) == Pt{0, 2});
    CHECK(dir(order[2]) == Pt{-1, 1});
}

TEST_CASE("leftmost paths prefer the most counterclockwise feasible step") {
    TwoPairExample ex;
    // Only east steps can still reach (2,0).
    CHECK(leftmost_path(ex.d, ex.d.source(), ex.u1) ==
          ex.grid_path({{0, 0}, {1, 0}, {2, 0}}));
    // North beats east while feasible.
    CHECK(leftmost_path(ex.d, ex.v2, ex.d.sink()) ==
          ex.grid_path({{4, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 6}}));
    CHECK(leftmost_path(ex.d, ex.u1, ex.u1) == Path{ex.u1});
    CHECK(leftmost_path(ex.d, ex.d.source(), ex.d.sink()) ==
          ex.grid_path({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                        {1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}, {6, 6}}));
    // Deterministic across calls.
    CHECK(leftmost_path(ex.d, ex.d.source(), ex.v1) ==
          leftmost_path(ex.d, ex.d.source(), ex.v1));
    CHECK_THROWS_AS(leftmost_path(ex.d, ex.v2, ex.u1), input_error);
}

TEST_CASE("the left boundary path is its own degenerate region") {
    TwoPairExample ex;
    Path boundary = leftmost_path(ex.d, ex.d.source(), ex.d.sink());
    LeftSideRegion region = left_side_region(ex.d, boundary);
    // The region is the doubled-back path: only points on the path itself
    // are inside. u2 = (0,2) lies on it; the rest of the marked points do
    // not.
    auto left = left_marked_points(ex.d, boundary, ex.m);
    CHECK(left == std::set<int>{ex.u2});
    CHECK(region_contains(region.boundary, ex.d.position(grid_id(ex.d, 0, 3))));
    CHECK_FALSE(region_contains(region.boundary, ex.d.position(grid_id(ex.d, 1, 3))));
}

TEST_CASE("left sides on the two-pair example") {
    TwoPairExample ex;

    // Any u1 -> v1 path: u2 sits on the west boundary, v2 stays right.
    Path p11 = ex.grid_path({{2, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}});
    CHECK(left_marked_points(ex.d, p11, ex.m) ==
          std::set<int>{ex.u1, ex.u2, ex.v1});
    CHECK(path_sign(ex.d, p11, ex.m) == -1);

    // u2 -> v1 paths carry exactly their endpoints.
    Path p21 = ex.grid_path({{0, 2}, {1, 2}, {2, 2}, {3, 2}, {3, 3}});
    CHECK(left_marked_points(ex.d, p21, ex.m) == std::set<int>{ex.u2, ex.v1});
    CHECK(path_sign(ex.d, p21, ex.m) == +1);

    // u1 -> v2 keeping v1 on the left: all four points.
    Path q = ex.grid_path({{2, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 4}});
    CHECK(left_marked_points(ex.d, q, ex.m) ==
          std::set<int>{ex.u1, ex.u2, ex.v1, ex.v2});
    CHECK(path_sign(ex.d, q, ex.m) == +1);

    // The single u1 -> v2 path without v1 on its left.
    Path p = ex.grid_path({{2, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4}});
    CHECK(left_marked_points(ex.d, p, ex.m) == std::set<int>{ex.u1, ex.u2, ex.v2});
    CHECK(path_sign(ex.d, p, ex.m) == -1);

    // A u2 -> v2 path through v1 keeps v1 on the boundary, hence inside.
    Path thru = ex.grid_path({{0, 2}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {4, 4}});
    CHECK(left_marked_points(ex.d, thru, ex.m).count(ex.v1) == 1);
}

TEST_CASE("family sign multiplies path signs") {
    TwoPairExample ex;
    // A vertex-disjoint identity-type family: the u2 -> v2 partner passes
    // above v1, so v1 stays on its right and its sign is +1.
    Path p11 = ex.grid_path({{2, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}});
    Path p22 = ex.grid_path({{0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 4}});
    std::vector<Path> family{p11, p22};
    CHECK(path_sign(ex.d, p11, ex.m) == -1);
    CHECK(path_sign(ex.d, p22, ex.m) == +1);
    CHECK(family_sign(ex.d, family, ex.m) == -1);
    // Two negative signs multiply to +1.
    Path q11 = ex.grid_path({{2, 0}, {2, 1}, {3, 1}, {3, 2}, {3, 3}});
    CHECK(path_sign(ex.d, q11, ex.m) == -1);
    std::vector<Path> intersecting{p11, q11};
    CHECK(family_sign(ex.d, intersecting, ex.m) == +1);
    std::vector<Path> single{p11};
    CHECK(family_sign(ex.d, single, ex.m) == path_sign(ex.d, p11, ex.m));
}

TEST_CASE("a path's own marked endpoints are always on its left side") {
    TwoPairExample ex;
    SignEvaluator eval(ex.d, ex.m);
    for (auto [sx, sy, tx, ty] : std::vector<std::array<int, 4>>{
             {2, 0, 3, 3}, {0, 2, 4, 4}, {0, 2, 3, 3}, {2, 0, 4, 4}}) {
        // Walk an arbitrary monotone staircase.
        Path p;
        int x = sx, y = sy;
        p.push_back(grid_id(ex.d, x, y));
        while (x < tx || y < ty) {
            if (x < tx) {
                ++x;
            } else {
                ++y;
            }
            p.push_back(grid_id(ex.d, x, y));
        }
        auto left = eval.left_points(p);
        CHECK(left.count(p.front()) == 1);
        CHECK(left.count(p.back()) == 1);
    }
}

TEST_CASE("marked configs reject coincident points") {
    TwoPairExample ex;
    MarkedConfig bad;
    bad.starts = {ex.u1};
    bad.ends = {ex.u1};
    CHECK_THROWS_AS(validate_marked_config(ex.d, bad), input_error);
    MarkedConfig uneven;
    uneven.starts = {ex.u1, ex.u2};
    uneven.ends = {ex.v1};
    CHECK_THROWS_AS(validate_marked_config(ex.d, uneven), input_error);
    CHECK_NOTHROW(validate_marked_config(ex.d, ex.m));
}

TEST_SUITE_END();
