#include <algorithm>
#include <map>
#include <sstream>

#include "tkh/diagram.h"

namespace tkh {

namespace {

// Smoothings: bit 0 joins ports (1,2) and (3,0); bit 1 joins (0,1) and (2,3).
int partner_port(int p, int bit) {
    if (bit == 0) {
        switch (p) {
            case 0: return 3;
            case 1: return 2;
            case 2: return 1;
            default: return 0;
        }
    }
    switch (p) {
        case 0: return 1;
        case 1: return 0;
        case 2: return 3;
        default: return 2;
    }
}

QPoint ivec_point(const IVec& v) { return {to_rat(v.a), to_rat(v.b)}; }

struct PassEvent {
    int circle = -1;
    int pos = -1;
    int in_port = -1;
    ArcSide side = ArcSide::Right;
    IVec offset;  // deck translation of the canonical slot lift
};

std::string canonical_key(const std::vector<std::pair<int, bool>>& steps) {
    auto encode = [](const std::vector<std::pair<int, bool>>& w) {
        std::vector<std::string> out;
        for (auto [e, f] : w) {
            std::ostringstream os;
            os << e << (f ? '+' : '-');
            out.push_back(os.str());
        }
        return out;
    };
    std::vector<std::pair<int, bool>> rev(steps.rbegin(), steps.rend());
    for (auto& [e, f] : rev) f = !f;
    std::vector<std::string> best;
    for (const auto& word : {encode(steps), encode(rev)}) {
        size_t k = word.size();
        for (size_t r = 0; r < k; ++r) {
            std::vector<std::string> rot;
            rot.reserve(k);
            for (size_t i = 0; i < k; ++i) rot.push_back(word[(r + i) % k]);
            if (best.empty() || rot < best) best = rot;
        }
    }
    std::ostringstream os;
    for (size_t i = 0; i < best.size(); ++i) os << (i ? "," : "") << best[i];
    return os.str();
}

void append_lift(std::vector<QPoint>& lift, const Edge& e, bool fwd,
                 const IVec& t) {
    QPoint tv = ivec_point(t);
    size_t m = e.path.size();
    for (size_t k = 0; k < m; ++k) {
        QPoint p = (fwd ? e.path[k] : e.path[m - 1 - k]) + tv;
        if (lift.empty() || !(lift.back() == p)) lift.push_back(p);
    }
}

}  // namespace

Resolution resolve(const Diagram& d, const std::vector<int>& u) {
    if (static_cast<int>(u.size()) != d.n()) {
        std::ostringstream os;
        os << "resolution word has " << u.size() << " bits for " << d.n()
           << " crossings";
        throw TkhError("LENGTH_MISMATCH", os.str());
    }
    for (int b : u)
        if (b != 0 && b != 1)
            throw TkhError("PARSE_ERROR", "resolution bits must be 0 or 1");
    for (int ci = 0; ci < d.n(); ++ci)
        for (int p = 0; p < 4; ++p)
            if (d.ports[ci][p].edge < 0)
                throw TkhError("PARSE_ERROR",
                               "cannot resolve a diagram with dangling ports");

    Resolution r;
    r.u = u;
    std::vector<int> visited(d.edges.size(), 0);
    std::map<int, std::vector<PassEvent>> events;  // crossing -> passes

    for (size_t e0 = 0; e0 < d.edges.size(); ++e0) {
        if (visited[e0]) continue;
        ResolvedCircle circ;
        std::vector<IVec> slot_offsets;
        int ci_idx = static_cast<int>(r.circles.size());

        if (d.edges[e0].closed()) {
            visited[e0] = 1;
            circ.steps = {{static_cast<int>(e0), true}};
            circ.cls = d.edges[e0].winding;
            append_lift(circ.lift, d.edges[e0], true, IVec{0, 0});
            if (circ.cls.is_zero() && circ.lift.size() > 1 &&
                circ.lift.front() == circ.lift.back())
                circ.lift.pop_back();
        } else {
            int e = static_cast<int>(e0);
            bool fwd = true;
            IVec t{0, 0};
            while (true) {
                visited[e] = 1;
                circ.steps.push_back({e, fwd});
                append_lift(circ.lift, d.edges[e], fwd, t);
                const Edge& ed = d.edges[e];
                const EdgeEnd& arr = fwd ? *ed.to : *ed.from;
                int ci = d.crossing_index.at(arr.crossing);
                IVec w = t + (fwd ? ed.winding : IVec{0, 0});
                int p = arr.port;
                int q = partner_port(p, u[ci]);
                if (u[ci] == 0) {
                    PassEvent ev;
                    ev.circle = ci_idx;
                    ev.pos = static_cast<int>(slot_offsets.size());
                    ev.in_port = p;
                    bool ascending = (p == 1 && q == 2) || (p == 3 && q == 0);
                    ev.side = ascending ? ArcSide::Left : ArcSide::Right;
                    ev.offset = w;
                    events[ci].push_back(ev);
                    slot_offsets.push_back(w);
                }
                const Diagram::PortRef& pr = d.ports[ci][q];
                int ne = pr.edge;
                bool nf = (pr.end == 0);
                IVec nt = w - (nf ? IVec{0, 0} : d.edges[ne].winding);
                if (ne == static_cast<int>(e0) && nf) {
                    circ.cls = nt;
                    break;
                }
                e = ne;
                fwd = nf;
                t = nt;
            }
            if (circ.cls.is_zero() && circ.lift.size() > 1 &&
                circ.lift.front() == circ.lift.back())
                circ.lift.pop_back();
        }

        circ.contractible = circ.cls.is_zero();
        if (circ.contractible) circ.lift_ccw = sgn(polygon_area2(circ.lift)) > 0;
        circ.key = canonical_key(circ.steps);
        r.circles.push_back(std::move(circ));

        std::vector<IVec> gains;
        for (size_t i = 0; i + 1 < slot_offsets.size(); ++i)
            gains.push_back(slot_offsets[i + 1] - slot_offsets[i]);
        if (!slot_offsets.empty())
            gains.push_back(slot_offsets.front() + r.circles.back().cls -
                            slot_offsets.back());
        r.gains.push_back(std::move(gains));
    }

    for (int ci = 0; ci < d.n(); ++ci) {
        if (u[ci] != 0) continue;
        const auto& evs = events[ci];
        if (evs.size() != 2)
            throw TkhError("PARSE_ERROR",
                           "crossing " + d.crossings[ci].id +
                               " not traversed exactly twice");
        // End 0 is the pass through ports {1,2}; end 1 through {3,0}.
        const PassEvent* e0 = &evs[0];
        const PassEvent* e1 = &evs[1];
        if (!(e0->in_port == 1 || e0->in_port == 2)) std::swap(e0, e1);
        ResolvedArc arc;
        arc.crossing = ci;
        arc.end[0] = {e0->circle, e0->pos};
        arc.end[1] = {e1->circle, e1->pos};
        arc.side[0] = e0->side;
        arc.side[1] = e1->side;
        r.arcs.push_back(arc);
    }
    // Band deck translations. A band joins the two strand passes of one
    // crossing, so its planar displacement is zero: between two circles the
    // gain is the translate between the passes' canonical lifts (end 0 to
    // end 1); on a single circle the canonical frame is walk-connected and
    // the local band contributes nothing beyond the stored circle gains.
    std::map<std::pair<int, int>, IVec> slot_off;
    for (const auto& [ci, evs] : events)
        for (const PassEvent& ev : evs) slot_off[{ev.circle, ev.pos}] = ev.offset;
    for (ResolvedArc& a : r.arcs) {
        if (a.end[0].circle == a.end[1].circle)
            a.band_gain = IVec{0, 0};
        else
            a.band_gain = slot_off.at({a.end[0].circle, a.end[0].pos}) -
                          slot_off.at({a.end[1].circle, a.end[1].pos});
    }
    return r;
}

std::vector<bool> circle_side_decomposition(const Diagram& d,
                                            const Resolution& r, int circle) {
    (void)d;
    if (circle < 0 || circle >= static_cast<int>(r.circles.size()))
        throw TkhError("PARSE_ERROR", "circle index out of range");
    const ResolvedCircle& c = r.circles[circle];
    if (!c.contractible)
        throw TkhError("NOT_CONTRACTIBLE",
                       "side decomposition needs a null-homologous circle");
    size_t nslots = r.gains[circle].size();
    std::vector<bool> inner(nslots, false);
    for (const ResolvedArc& a : r.arcs)
        for (int k = 0; k < 2; ++k)
            if (a.end[k].circle == circle)
                inner[a.end[k].pos] = (a.side[k] == ArcSide::Left) == c.lift_ccw;
    return inner;
}

IVec arc_class(const Diagram& d, const Resolution& r, int arc) {
    (void)d;
    if (arc < 0 || arc >= static_cast<int>(r.arcs.size()))
        throw TkhError("PARSE_ERROR", "arc index out of range");
    const ResolvedArc& a = r.arcs[arc];
    int c0 = a.end[0].circle, c1 = a.end[1].circle;
    if (!r.circles[c0].contractible || !r.circles[c1].contractible)
        throw TkhError("NONCONTRACTIBLE_ANCHOR",
                       "arc class undefined against an essential circle");
    if (c0 == c1) {
        // Chord: close the band through either piece of the circle.
        const std::vector<IVec>& g = r.gains[c0];
        int n = static_cast<int>(g.size());
        IVec s{0, 0};
        for (int i = a.end[0].pos; i != a.end[1].pos; i = (i + 1) % n)
            s = s + g[i];
        return normalize(s - a.band_gain);
    }
    return normalize(a.band_gain);
}

namespace {

// Reverse the stored traversal of one circle in a configuration under
// construction: slots, gains and gap ids are re-indexed, side bits of arc
// ends on the circle flip. Band gains are unchanged (they relate canonical
// lifts, which do not move).
void reverse_circle(Configuration& c, int ci) {
    CCircle& cc = c.circles[ci];
    int k = cc.size();
    if (k > 0) {
        std::vector<std::pair<int, int>> slots(k);
        std::vector<IVec> gains(k);
        std::vector<std::vector<int>> gaps(cc.gaps.empty() ? 0 : k);
        for (int i = 0; i < k; ++i) {
            slots[i] = cc.slots[i == 0 ? 0 : k - i];
            gains[i] = -cc.gains[(2 * k - 1 - i) % k];
            if (!gaps.empty()) gaps[i] = cc.gaps[(2 * k - 1 - i) % k];
        }
        // Positions: old j maps to (j == 0 ? 0 : k - j).
        for (CArc& a : c.arcs)
            for (int e = 0; e < 2; ++e)
                if (a.end[e].circle == ci) {
                    int j = a.end[e].pos;
                    a.end[e].pos = (j == 0 ? 0 : k - j);
                    a.side[e] = flip(a.side[e]);
                }
        cc.slots = std::move(slots);
        cc.gains = std::move(gains);
        cc.gaps = std::move(gaps);
    } else {
        cc.gains = {-cc.gains[0]};
    }
    if (cc.disk_left.has_value()) cc.disk_left = !*cc.disk_left;
}

}  // namespace

Configuration to_configuration(const Diagram& d, const Resolution& r) {
    Configuration c;
    c.genus = d.genus;
    c.circles.resize(r.circles.size());
    c.arcs.resize(r.arcs.size());

    for (size_t i = 0; i < r.arcs.size(); ++i) {
        const ResolvedArc& ra = r.arcs[i];
        CArc& a = c.arcs[i];
        a.name = d.crossings[ra.crossing].id;
        a.end[0] = ra.end[0];
        a.end[1] = ra.end[1];
        a.side[0] = ra.side[0];
        a.side[1] = ra.side[1];
        a.gain = ra.band_gain;
    }
    for (size_t ci = 0; ci < r.circles.size(); ++ci) {
        CCircle& cc = c.circles[ci];
        std::ostringstream os;
        os << "s" << ci;
        cc.name = os.str();
        cc.gains = r.gains[ci];
        cc.slots.assign(cc.gains.size(), {-1, -1});
        if (cc.gains.empty()) cc.gains = {r.circles[ci].cls};
        if (r.circles[ci].contractible) cc.disk_left = r.circles[ci].lift_ccw;
    }
    for (size_t ai = 0; ai < c.arcs.size(); ++ai)
        for (int e = 0; e < 2; ++e)
            c.circles[c.arcs[ai].end[e].circle]
                .slots[c.arcs[ai].end[e].pos] = {static_cast<int>(ai), e};

    // Canonical orientations: contractible circles disk-counterclockwise,
    // essential circles with normalized class.
    for (size_t ci = 0; ci < c.circles.size(); ++ci) {
        const CCircle& cc = c.circles[ci];
        if (cc.disk_left.has_value()) {
            if (!*cc.disk_left) reverse_circle(c, static_cast<int>(ci));
        } else if (normalize(cc.cls()) != cc.cls()) {
            reverse_circle(c, static_cast<int>(ci));
        }
    }

    // Arc classes where defined.
    for (CArc& a : c.arcs) {
        const CCircle& c0 = c.circles[a.end[0].circle];
        const CCircle& c1 = c.circles[a.end[1].circle];
        if (!c0.cls().is_zero() || !c1.cls().is_zero()) continue;
        if (a.end[0].circle == a.end[1].circle) {
            int n = c0.size();
            IVec s{0, 0};
            for (int i = a.end[0].pos; i != a.end[1].pos; i = (i + 1) % n)
                s = s + c0.gains[i];
            a.cls = normalize(s - a.gain);
        } else {
            a.cls = normalize(a.gain);
        }
    }

    assign_gap_ids(c);
    c.check();
    return c;
}

}  // namespace tkh
