#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.h"
#include "tkh/rational.h"

using namespace tkh;

namespace {

Rat frac(long n, long d) { return Rat(n) / Rat(d); }

QPoint pt(long nx, long dx, long ny, long dy) {
    return {frac(nx, dx), frac(ny, dy)};
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rat a = frac(1, 3), b = frac(1, 6);
    CHECK(a + b == frac(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == frac(1, 18));
    // A sum that collapses only under exact arithmetic.
    Rat s = 0;
    for (int i = 0; i < 300; ++i) s += frac(1, 300);
    CHECK(s == 1);
}

TEST_CASE("orientation and segment predicates") {
    QPoint o{Rat(0), Rat(0)}, e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
    CHECK(sgn(cross(o, e1, e2)) == 1);
    CHECK(sgn(cross(o, e2, e1)) == -1);
    CHECK(sgn(cross(o, e1, {Rat(2), Rat(0)})) == 0);

    CHECK(on_segment(o, e1, pt(1, 2, 0, 1)));
    CHECK(!on_segment(o, e1, pt(1, 2, 1, 1000000)));
    CHECK(on_segment(o, e1, o));

    // proper crossing
    CHECK(segments_intersect(o, {Rat(1), Rat(1)}, {Rat(0), Rat(1)},
                             {Rat(1), Rat(0)}));
    // shared endpoint only
    CHECK(segments_intersect(o, e1, e1, {Rat(2), Rat(5)}));
    // touch at an interior point of one segment
    CHECK(segments_intersect(o, e1, pt(1, 2, 0, 1), pt(1, 2, 1, 1)));
    // disjoint but collinear
    CHECK(!segments_intersect(o, e1, {Rat(2), Rat(0)}, {Rat(3), Rat(0)}));
    // near miss with tiny gap
    CHECK(!segments_intersect(o, e1, pt(1, 2, 1, 1000000000L),
                              pt(1, 2, 1, 1)));
}

TEST_CASE("polygon area sign and magnitude") {
    std::vector<QPoint> sq = {{Rat(0), Rat(0)},
                              {Rat(1), Rat(0)},
                              {Rat(1), Rat(1)},
                              {Rat(0), Rat(1)}};
    CHECK(polygon_area2(sq) == 2);
    std::reverse(sq.begin(), sq.end());
    CHECK(polygon_area2(sq) == -2);
}

TEST_CASE("winding number agrees with an independent ray cast") {
    // A star-shaped octagon with rational vertices, plus a pseudo-random
    // point cloud; the oracle is a separate crossing-parity ray cast.
    std::vector<QPoint> poly = {pt(0, 1, 0, 1),     pt(1, 2, 1, 5),
                                pt(1, 1, 0, 1),     pt(4, 5, 1, 2),
                                pt(1, 1, 1, 1),     pt(1, 2, 4, 5),
                                pt(0, 1, 1, 1),     pt(1, 5, 1, 2)};
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> num(-30, 40);
    int tested = 0;
    while (tested < 200) {
        QPoint p{frac(num(rng), 29), frac(num(rng), 31)};
        if (on_polygon_boundary(poly, p)) continue;
        ++tested;
        bool inside_lib = winding_number(poly, p) != 0;
        CHECK(inside_lib == oracle::ray_inside(poly, p));
    }
}

TEST_CASE("boundary detection") {
    std::vector<QPoint> tri = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)},
                               {Rat(0), Rat(2)}};
    CHECK(on_polygon_boundary(tri, {Rat(1), Rat(0)}));
    CHECK(on_polygon_boundary(tri, {Rat(1), Rat(1)}));  // hypotenuse
    CHECK(!on_polygon_boundary(tri, pt(1, 2, 1, 2)));
}

TEST_CASE("angular order sweeps counterclockwise from positive x") {
    std::vector<QPoint> dirs = {{Rat(1), Rat(0)},   {Rat(2), Rat(1)},
                                {Rat(0), Rat(1)},   {Rat(-1), Rat(1)},
                                {Rat(-1), Rat(0)},  {Rat(-2), Rat(-1)},
                                {Rat(0), Rat(-1)},  {Rat(1), Rat(-1)}};
    for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = 0; j < dirs.size(); ++j)
            CHECK(angle_less(dirs[i], dirs[j]) == (i < j));
    // Scaling does not change the order.
    CHECK(!angle_less({Rat(2), Rat(2)}, {Rat(3), Rat(3)}));
    CHECK(!angle_less({Rat(3), Rat(3)}, {Rat(2), Rat(2)}));
}

TEST_CASE("integer floor and ceiling of rationals") {
    CHECK(ifloor(frac(7, 2)) == 3);
    CHECK(iceil(frac(7, 2)) == 4);
    CHECK(ifloor(frac(-7, 2)) == -4);
    CHECK(iceil(frac(-7, 2)) == -3);
    CHECK(ifloor(Rat(5)) == 5);
    CHECK(iceil(Rat(5)) == 5);
    CHECK(ifloor(frac(-12, 4)) == -3);
    CHECK(iceil(frac(-12, 4)) == -3);
}
