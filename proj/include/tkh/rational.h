// Exact rational planar geometry: points, segments, orientation predicates,
// polygon area and point-in-polygon. No floating point anywhere.
#pragma once

#include <gmpxx.h>
#include <utility>
#include <vector>

namespace tkh {

using Rat = mpq_class;

// gmpxx has no long long constructor; go through long (LP64 here).
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

struct QPoint {
    Rat x, y;

    QPoint() : x(0), y(0) {}
    QPoint(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const QPoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const QPoint& o) const { return !(*this == o); }
    QPoint operator+(const QPoint& o) const { return {x + o.x, y + o.y}; }
    QPoint operator-(const QPoint& o) const { return {x - o.x, y - o.y}; }
};

// Cross product (b - a) x (c - a). Positive iff a,b,c make a left turn.
Rat cross(const QPoint& a, const QPoint& b, const QPoint& c);

// Sign of a rational as -1, 0, +1.
int sgn(const Rat& r);

// True iff p lies on the closed segment [a, b].
bool on_segment(const QPoint& a, const QPoint& b, const QPoint& p);

// True iff closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const QPoint& a, const QPoint& b,
                        const QPoint& c, const QPoint& d);

// Twice the signed area of the closed polygon (vertices in order, first !=
// last is fine: the closing edge is implied). Positive = counterclockwise.
Rat polygon_area2(const std::vector<QPoint>& poly);

// Winding number of the closed polygon around p. p must not lie on the
// boundary. For a simple polygon: nonzero iff p is inside.
int winding_number(const std::vector<QPoint>& poly, const QPoint& p);

// True iff p lies on some edge of the closed polygon.
bool on_polygon_boundary(const std::vector<QPoint>& poly, const QPoint& p);

// Angular comparison of direction vectors around the origin, starting from
// the positive x axis and sweeping counterclockwise. Vectors must be nonzero.
// Returns true iff a comes strictly before b.
bool angle_less(const QPoint& a, const QPoint& b);

// Integer floor / ceiling of an exact rational.
long long ifloor(const Rat& r);
long long iceil(const Rat& r);

}  // namespace tkh
