#include "tkh/rational.h"

namespace tkh {

Rat cross(const QPoint& a, const QPoint& b, const QPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

bool on_segment(const QPoint& a, const QPoint& b, const QPoint& p) {
    if (sgn(cross(a, b, p)) != 0) return false;
    // Collinear: check bounding box.
    Rat lox = a.x < b.x ? a.x : b.x, hix = a.x < b.x ? b.x : a.x;
    Rat loy = a.y < b.y ? a.y : b.y, hiy = a.y < b.y ? b.y : a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

bool segments_intersect(const QPoint& a, const QPoint& b,
                        const QPoint& c, const QPoint& d) {
    int d1 = sgn(cross(c, d, a));
    int d2 = sgn(cross(c, d, b));
    int d3 = sgn(cross(a, b, c));
    int d4 = sgn(cross(a, b, d));
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(c, d, a)) return true;
    if (d2 == 0 && on_segment(c, d, b)) return true;
    if (d3 == 0 && on_segment(a, b, c)) return true;
    if (d4 == 0 && on_segment(a, b, d)) return true;
    return false;
}

Rat polygon_area2(const std::vector<QPoint>& poly) {
    Rat s = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const QPoint& p = poly[i];
        const QPoint& q = poly[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

int winding_number(const std::vector<QPoint>& poly, const QPoint& p) {
    // Standard crossing-count winding number with exact arithmetic.
    int wn = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const QPoint& a = poly[i];
        const QPoint& b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && sgn(cross(a, b, p)) > 0) ++wn;
        } else {
            if (b.y <= p.y && sgn(cross(a, b, p)) < 0) --wn;
        }
    }
    return wn;
}

bool on_polygon_boundary(const std::vector<QPoint>& poly, const QPoint& p) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], p)) return true;
    return false;
}

long long ifloor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

long long iceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q.get_si();
}

bool angle_less(const QPoint& a, const QPoint& b) {
    // Half-plane trick: lower half (y<0, or y==0 && x<0) comes after the
    // upper half when sweeping ccw from the positive x axis.
    auto half = [](const QPoint& v) {
        if (v.y != 0) return v.y > 0 ? 0 : 1;
        return v.x > 0 ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    // Same half-plane: compare by cross product.
    Rat cr = a.x * b.y - a.y * b.x;
    return sgn(cr) > 0;
}

}  // namespace tkh
