#include "tkh/classify.h"

#include <algorithm>
#include <cstdlib>

#include "tkh/diagram.h"

namespace tkh {

namespace {

const IVec kZero{};

// Sum of circle gains walking forward from slot p to slot q (empty at p==q).
IVec walk(const CCircle& z, int p, int q) {
    IVec s;
    const int k = z.size();
    for (int t = p; t % k != q % k; ++t) s = s + z.gains[t % k];
    return s;
}

int slot_on(const CArc& a, int circle) {
    for (int e = 0; e < 2; ++e)
        if (a.end[e].circle == circle) return a.end[e].pos;
    throw TkhError("MALFORMED", "arc does not touch the requested circle");
}

// Band translation oriented out of the given circle.
IVec gain_from(const CArc& a, int circle) {
    return a.end[0].circle == circle ? a.gain : -a.gain;
}

}  // namespace

IVec chord_class(const Configuration& c, int arc) {
    const CArc& a = c.arcs[arc];
    if (!c.is_chord(arc))
        throw TkhError("MALFORMED", "chord class requested for a joining arc");
    const CCircle& z = c.circles[a.end[0].circle];
    return a.gain + walk(z, a.end[1].pos, a.end[0].pos);
}

bool chord_inner(const Configuration& c, int arc) {
    const CArc& a = c.arcs[arc];
    if (a.side[0] != a.side[1])
        throw TkhError("MALFORMED", "twisted chord has no disk side");
    const CCircle& z = c.circles[a.end[0].circle];
    if (!z.disk_left)
        throw TkhError("MISSING_GEOMETRY",
                       "no disk orientation on the chord's circle");
    return (a.side[0] == ArcSide::Left) == *z.disk_left;
}

IVec joining_loop_class(const Configuration& c, int a, int b) {
    const CArc& x = c.arcs[a];
    const CArc& y = c.arcs[b];
    if (c.is_chord(a) || c.is_chord(b))
        throw TkhError("MALFORMED", "loop class requested for a chord");
    const int lo = std::min(x.end[0].circle, x.end[1].circle);
    const int hi = std::max(x.end[0].circle, x.end[1].circle);
    if (std::min(y.end[0].circle, y.end[1].circle) != lo ||
        std::max(y.end[0].circle, y.end[1].circle) != hi)
        throw TkhError("MALFORMED", "arcs join different circle pairs");
    const CCircle& top = c.circles[hi];
    const CCircle& bot = c.circles[lo];
    return gain_from(x, lo) + walk(top, slot_on(x, hi), slot_on(y, hi)) -
           gain_from(y, lo) + walk(bot, slot_on(y, lo), slot_on(x, lo));
}

CaseTag classify_index2(const Decorated& dec) {
    if (dec.config.index() != 2)
        throw TkhError("WRONG_INDEX", "index-2 classification on index " +
                                          std::to_string(dec.config.index()));
    if (build_poset(dec).empty()) return {"EMPTY", {}};
    const int mu = multiplicity_bruteforce(dec);
    if (mu == 1) return {"SQUARE", {}};
    if (mu != 2)
        throw TkhError("MALFORMED", "index-2 multiplicity " + std::to_string(mu));

    // Multiplicity 2 forces one circle with two interlaced same-side chords.
    const Decorated d = core(dec);
    const Configuration& c = d.config;
    const std::vector<int> arcs = c.alive_arcs();
    if (c.circles.size() != 1 || !c.is_chord(arcs[0]) || !c.is_chord(arcs[1]) ||
        !interlaced(c, arcs[0], arcs[1]))
        throw TkhError("MALFORMED", "multiplicity 2 without interlaced chords");
    for (int a : arcs)
        if (c.arcs[a].side[0] != c.arcs[a].side[1])
            throw TkhError("MALFORMED", "twisted chord in a nonempty pair");
    const bool in0 = chord_inner(c, arcs[0]);
    const bool in1 = chord_inner(c, arcs[1]);
    const IVec c0 = normalize(chord_class(c, arcs[0]));
    const IVec c1 = normalize(chord_class(c, arcs[1]));
    if (in0 && in1)
        throw TkhError("MALFORMED", "two interlaced arcs on the disk side");
    if (in0 || in1) {
        const IVec inner_cls = in0 ? c0 : c1;
        const IVec outer_cls = in0 ? c1 : c0;
        if (!inner_cls.is_zero())
            throw TkhError("MALFORMED", "disk-side arc with a nonzero class");
        if (outer_cls.is_zero()) return {"L0", {}};
        return {"L_ALPHA", {outer_cls}};
    }
    if (det(c0, c1) == 0)
        throw TkhError("MALFORMED", "interlaced outer arcs with parallel classes");
    if (c.genus != 1)
        throw TkhError("MALFORMED", "quasi-ladybug outside the torus");
    return {"Q", {c0, c1}};
}

namespace {

// Index-3 tag table, keyed purely on computed data. Tags denote the case
// numbers of the irreducible index-3 enumeration; primed variants are
// rendered 1p, 2p, 2pp.
//
//   1 circle, path interlacement (middle arc linked with both ends):
//     1   middle inner, ends outer, everything trivial
//     1p  middle outer, ends inner, everything trivial
//     3   middle outer of class alpha, ends inner
//     4   middle inner, ends outer of parallel class alpha
//     7   all outer: two quasi-ladybug pairs (ends parallel, middle unimodular
//         against them)
//   1 circle, triangle interlacement:
//     8   all outer, classes pairwise unimodular (the DQ configuration; the
//         middle-of-three is the sum of the others up to signs)
//   2 circles:
//     2   three joining arcs, all loop classes trivial
//     5   three joining arcs, loop classes of rank 1 (direction alpha)
//     10  three joining arcs, loop classes pairwise unimodular (DQ')
//     2p  two joining arcs + separating chord, everything trivial
//     6   two joining arcs + separating chord, class span of rank 1
//     9   two joining arcs + separating outer chord, chord class unimodular
//         against the joining loop
//   3 circles:
//     2pp three joining arcs in a cycle, everything trivial
//
// Nonempty configurations outside this table contradict the grading
// obstructions that make the enumeration exhaustive, so they raise MALFORMED
// rather than silently landing in a wrong case.
CaseTag one_circle_cases(const Configuration& c, const std::vector<int>& arcs) {
    for (int a : arcs)
        if (c.arcs[a].side[0] != c.arcs[a].side[1])
            throw TkhError("MALFORMED", "twisted chord in a nonempty triple");
    const bool l01 = interlaced(c, arcs[0], arcs[1]);
    const bool l02 = interlaced(c, arcs[0], arcs[2]);
    const bool l12 = interlaced(c, arcs[1], arcs[2]);
    const int links = l01 + l02 + l12;

    if (links == 3) {
        // Attachment order around the circle.
        std::vector<int> order;
        for (const auto& [ai, e] : c.circles[0].slots)
            if (std::find(order.begin(), order.end(), ai) == order.end())
                order.push_back(ai);
        std::vector<IVec> cls;
        for (int a : order) {
            if (chord_inner(c, a))
                throw TkhError("MALFORMED",
                               "disk-side arc inside a triangle interlacement");
            cls.push_back(normalize(chord_class(c, a)));
        }
        if (std::abs(det(cls[0], cls[1])) != 1 ||
            std::abs(det(cls[0], cls[2])) != 1 ||
            std::abs(det(cls[1], cls[2])) != 1)
            throw TkhError("MALFORMED",
                           "triangle interlacement without unimodular classes");
        if (cls[1] != normalize(cls[0] + cls[2]) &&
            cls[1] != normalize(cls[0] - cls[2]))
            throw TkhError("MALFORMED", "triangle classes violate the sum rule");
        return {"8", cls};
    }
    if (links != 2)
        throw TkhError("MALFORMED", "coleafless chords with a lone chord");

    const int mid = !l01 ? arcs[2] : (!l02 ? arcs[1] : arcs[0]);
    std::vector<int> ends;
    for (int a : arcs)
        if (a != mid) ends.push_back(a);
    const bool mi = chord_inner(c, mid);
    const IVec mc = normalize(chord_class(c, mid));
    const bool i1 = chord_inner(c, ends[0]);
    const bool i2 = chord_inner(c, ends[1]);
    const IVec e1 = normalize(chord_class(c, ends[0]));
    const IVec e2 = normalize(chord_class(c, ends[1]));

    if (mi) {
        if (!mc.is_zero())
            throw TkhError("MALFORMED", "disk-side arc with a nonzero class");
        if (i1 || i2)
            throw TkhError("MALFORMED", "two interlaced arcs on the disk side");
        if (e1.is_zero() && e2.is_zero()) return {"1", {}};
        if (!e1.is_zero() && e1 == e2) return {"4", {e1}};
        throw TkhError("MALFORMED", "end classes match no nonempty pattern");
    }
    if (mc.is_zero()) {
        if (i1 && i2 && e1.is_zero() && e2.is_zero()) return {"1p", {}};
        throw TkhError("MALFORMED", "trivial outer middle over nontrivial ends");
    }
    if (i1 && i2) {
        if (!e1.is_zero() || !e2.is_zero())
            throw TkhError("MALFORMED", "disk-side arc with a nonzero class");
        return {"3", {mc}};
    }
    if (!i1 && !i2) {
        if (e1 != e2 || std::abs(det(mc, e1)) != 1)
            throw TkhError("MALFORMED",
                           "outer path without a double quasi-ladybug");
        return {"7", {e1, mc}};
    }
    throw TkhError("MALFORMED", "mixed ladybug and quasi-ladybug pairs");
}

CaseTag two_circle_cases(const Configuration& c, const std::vector<int>& arcs) {
    std::vector<int> joins, chords;
    for (int a : arcs) (c.is_chord(a) ? chords : joins).push_back(a);

    if (joins.size() == 3) {
        const IVec u = joining_loop_class(c, joins[0], joins[1]);
        const IVec v = joining_loop_class(c, joins[1], joins[2]);
        const IVec w = joining_loop_class(c, joins[0], joins[2]);
        const bool local = c.circles[0].cls().is_zero() &&
                           c.circles[1].cls().is_zero();
        if (u.is_zero() && v.is_zero() && w.is_zero()) {
            if (!local)
                throw TkhError("MALFORMED",
                               "trivial loops around essential circles");
            return {"2", {}};
        }
        if (det(u, v) == 0 && det(u, w) == 0 && det(v, w) == 0) {
            if (!local)
                throw TkhError("MALFORMED", "rank-1 loops around essential circles");
            const IVec dir = !u.is_zero() ? u : (!v.is_zero() ? v : w);
            return {"5", {normalize(dir)}};
        }
        const IVec nu = normalize(u), nv = normalize(v), nw = normalize(w);
        if (!local || std::abs(det(nu, nv)) != 1 || std::abs(det(nu, nw)) != 1 ||
            std::abs(det(nv, nw)) != 1)
            throw TkhError("MALFORMED",
                           "joining loops without unimodular classes");
        if (nw != normalize(nu + nv) && nw != normalize(nu - nv))
            throw TkhError("MALFORMED", "joining loops violate the sum rule");
        return {"10", {nv, nw, nu}};
    }
    if (joins.size() == 2 && chords.size() == 1) {
        const bool inner = chord_inner(c, chords[0]);
        const IVec sigma = normalize(chord_class(c, chords[0]));
        const IVec tau = normalize(joining_loop_class(c, joins[0], joins[1]));
        if (inner && !sigma.is_zero())
            throw TkhError("MALFORMED", "disk-side arc with a nonzero class");
        if (sigma.is_zero() && tau.is_zero()) return {"2p", {}};
        if (det(sigma, tau) == 0)
            return {"6", {!sigma.is_zero() ? sigma : tau}};
        if (!inner && std::abs(det(sigma, tau)) == 1) return {"9", {sigma, tau}};
        throw TkhError("MALFORMED", "chord against loop matches no pattern");
    }
    throw TkhError("MALFORMED", "two-circle shape that should have reduced");
}

CaseTag three_circle_cases(const Configuration& c, const std::vector<int>& arcs) {
    for (const CCircle& z : c.circles) {
        if (z.size() != 2)
            throw TkhError("MALFORMED", "three-circle shape that should have reduced");
        if (!z.cls().is_zero())
            throw TkhError("MALFORMED", "essential circle in a joining cycle");
    }
    for (int a : arcs)
        if (c.is_chord(a))
            throw TkhError("MALFORMED", "chord inside a three-circle cycle");
    Configuration t = surger(surger(c, arcs[0]), arcs[1]);
    if (!chord_class(t, arcs[2]).is_zero())
        throw TkhError("MALFORMED", "essential cycle through three circles");
    return {"2pp", {}};
}

}  // namespace

CaseTag classify_index3(const Decorated& dec) {
    if (dec.config.index() != 3)
        throw TkhError("WRONG_INDEX", "index-3 classification on index " +
                                          std::to_string(dec.config.index()));
    for (int a : dec.config.alive_arcs())
        if (is_leaf(dec.config, a) || is_coleaf(dec.config, a))
            return {"REDUCIBLE", {}};
    if (build_poset(dec).empty()) return {"EMPTY", {}};

    const Decorated d = core(dec);
    const Configuration& c = d.config;
    const std::vector<int> arcs = c.alive_arcs();
    switch (c.circles.size()) {
        case 1:
            return one_circle_cases(c, arcs);
        case 2:
            return two_circle_cases(c, arcs);
        case 3:
            return three_circle_cases(c, arcs);
        default:
            throw TkhError("MALFORMED", "irreducible index 3 with " +
                                            std::to_string(c.circles.size()) +
                                            " circles");
    }
}

}  // namespace tkh
