#include "tkh/diagram.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tkh {

namespace {

std::string port_name(const Diagram& d, int ci, int p) {
    std::ostringstream os;
    os << d.crossings[ci].id << ":" << p;
    return os.str();
}

// Direction of the edge leaving the crossing at the given end, i.e. the first
// path segment read away from that end.
QPoint away_vector(const Edge& e, int endidx) {
    if (endidx == 0) return e.path[1] - e.path[0];
    size_t m = e.path.size();
    return e.path[m - 2] - e.path[m - 1];
}

QPoint ivec_point(const IVec& v) { return {to_rat(v.a), to_rat(v.b)}; }

}  // namespace

void Diagram::finalize() {
    crossing_index.clear();
    edge_index.clear();
    ports.assign(crossings.size(), {});
    sign.assign(crossings.size(), 0);
    n_plus = n_minus = 0;

    for (size_t i = 0; i < crossings.size(); ++i) {
        const Crossing& c = crossings[i];
        if (!crossing_index.emplace(c.id, static_cast<int>(i)).second)
            throw TkhError("PARSE_ERROR", "duplicate crossing id " + c.id);
        if (c.pos.x < 0 || c.pos.x >= 1 || c.pos.y < 0 || c.pos.y >= 1)
            throw TkhError("PARSE_ERROR",
                           "crossing " + c.id + " position outside [0,1)^2");
        for (size_t j = 0; j < i; ++j)
            if (crossings[j].pos == c.pos)
                throw TkhError("PARSE_ERROR", "crossings " + crossings[j].id +
                                                  " and " + c.id +
                                                  " share a position");
    }

    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (!edge_index.emplace(e.id, static_cast<int>(i)).second)
            throw TkhError("PARSE_ERROR", "duplicate edge id " + e.id);
        if (e.from.has_value() != e.to.has_value())
            throw TkhError("PARSE_ERROR",
                           "edge " + e.id + " has exactly one attached end");
        if (e.path.size() < 2)
            throw TkhError("PARSE_ERROR",
                           "edge " + e.id + " path needs at least two points");
        for (size_t k = 0; k + 1 < e.path.size(); ++k)
            if (e.path[k] == e.path[k + 1])
                throw TkhError("PARSE_ERROR",
                               "edge " + e.id + " has a zero-length segment");
    }

    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.closed()) continue;
        const EdgeEnd* ends[2] = {&*e.from, &*e.to};
        for (int k = 0; k < 2; ++k) {
            auto it = crossing_index.find(ends[k]->crossing);
            if (it == crossing_index.end())
                throw TkhError("PARSE_ERROR", "edge " + e.id +
                                                  " references unknown crossing " +
                                                  ends[k]->crossing);
            int p = ends[k]->port;
            if (p < 0 || p > 3)
                throw TkhError("PARSE_ERROR",
                               "edge " + e.id + " references port out of range");
            PortRef& pr = ports[it->second][p];
            if (pr.edge >= 0)
                throw TkhError("PARSE_ERROR",
                               "port " + port_name(*this, it->second, p) +
                                   " attached twice");
            pr.edge = static_cast<int>(i);
            pr.end = k;
        }
    }

    // Components: every edge exactly once; closed edges as singletons; open
    // edges chained through opposite ports of their shared crossings.
    std::vector<int> seen(edges.size(), 0);
    for (const auto& comp : components) {
        if (comp.empty())
            throw TkhError("PARSE_ERROR", "empty link component");
        for (auto [ei, fwd] : comp) {
            if (ei < 0 || ei >= static_cast<int>(edges.size()))
                throw TkhError("PARSE_ERROR", "component references bad edge");
            if (seen[ei]++)
                throw TkhError("PARSE_ERROR",
                               "edge " + edges[ei].id + " used twice");
        }
        if (edges[comp[0].first].closed()) {
            if (comp.size() != 1)
                throw TkhError("PARSE_ERROR",
                               "closed edge inside a longer component");
            continue;
        }
        for (size_t k = 0; k < comp.size(); ++k) {
            auto [ei, fwd] = comp[k];
            auto [ej, fwdj] = comp[(k + 1) % comp.size()];
            if (edges[ei].closed() || edges[ej].closed())
                throw TkhError("PARSE_ERROR",
                               "closed edge inside a longer component");
            const EdgeEnd& out = fwd ? *edges[ei].to : *edges[ei].from;
            const EdgeEnd& in = fwdj ? *edges[ej].from : *edges[ej].to;
            if (in.crossing != out.crossing || in.port != (out.port + 2) % 4)
                throw TkhError("PARSE_ERROR",
                               "component breaks at edge " + edges[ei].id +
                                   ": strand must continue through the "
                                   "opposite port");
        }
    }
    for (size_t i = 0; i < edges.size(); ++i)
        if (!seen[i])
            throw TkhError("PARSE_ERROR",
                           "edge " + edges[i].id + " not in any component");

    // Orientation of each edge within its component.
    std::vector<int> fwd_flag(edges.size(), 1);
    for (const auto& comp : components)
        for (auto [ei, fwd] : comp) fwd_flag[ei] = fwd ? 1 : 0;

    // Crossing signs: determinant of (understrand, overstrand) exit
    // directions. Ports 0 and 2 carry the understrand.
    for (size_t ci = 0; ci < crossings.size(); ++ci) {
        QPoint dir[2];  // 0 = under, 1 = over
        bool ok = true;
        for (int strand = 0; strand < 2 && ok; ++strand) {
            int found = 0;
            for (int p = strand; p < 4; p += 2) {
                const PortRef& pr = ports[ci][p];
                if (pr.edge < 0) {
                    ok = false;
                    break;
                }
                bool exits = (pr.end == 0) == (fwd_flag[pr.edge] == 1);
                if (exits) {
                    dir[strand] = away_vector(edges[pr.edge], pr.end);
                    ++found;
                }
            }
            if (ok && found != 1)
                throw TkhError("PARSE_ERROR",
                               "crossing " + crossings[ci].id +
                                   ": strand orientation inconsistent");
        }
        if (!ok) continue;  // dangling port; validation reports it
        int s = sgn(dir[0].x * dir[1].y - dir[0].y * dir[1].x);
        sign[ci] = s;
        if (s > 0) ++n_plus;
        if (s < 0) ++n_minus;
    }
}

namespace {

struct Seg {
    QPoint a, b;
    int edge;
    int idx;   // segment index within the edge
    int last;  // last segment index of that edge
};

// Allowed single-point contacts between lifted segments s and t+v:
//   - consecutive segments of one edge sharing their join vertex,
//   - the closure vertex of one closed edge,
//   - polyline endpoints that attach to a crossing, meeting at its lift.
bool allowed_touch(const Diagram& d, const Seg& s, const Seg& t,
                   const QPoint& v, long long vx, long long vy) {
    const Edge& es = d.edges[s.edge];
    const Edge& et = d.edges[t.edge];
    // Intersection must be a single shared endpoint; find it.
    QPoint ta = t.a + v, tb = t.b + v;
    QPoint touch;
    bool found = false;
    for (const QPoint& p : {s.a, s.b}) {
        if ((p == ta || p == tb) && on_segment(s.a, s.b, p)) {
            touch = p;
            found = true;
            break;
        }
    }
    if (!found) return false;
    // The touch must be an endpoint of both segments (not interior contact),
    // and the segments must not overlap beyond the point.
    bool s_end0 = (touch == s.a), s_end1 = (touch == s.b);
    bool t_end0 = (touch == ta), t_end1 = (touch == tb);
    if (!(s_end0 || s_end1) || !(t_end0 || t_end1)) return false;
    // Reject collinear overlap: the other endpoints must not lie on the
    // opposite segment.
    const QPoint& s_other = s_end0 ? s.b : s.a;
    const QPoint& t_other = t_end0 ? tb : ta;
    if (on_segment(s.a, s.b, t_other) && t_other != touch) return false;
    if (on_segment(ta, tb, s_other) && s_other != touch) return false;

    if (s.edge == t.edge) {
        if (vx == 0 && vy == 0) {
            // Consecutive segments of one polyline.
            if (s.idx + 1 == t.idx && s_end1 && t_end0) return true;
            if (t.idx + 1 == s.idx && t_end1 && s_end0) return true;
        }
        if (es.closed()) {
            // Closure contact between the last and first segment.
            IVec w = es.winding;
            if (s.idx == 0 && t.idx == t.last && s_end0 && t_end1 &&
                vx == -w.a && vy == -w.b)
                return true;
            if (s.idx == s.last && t.idx == 0 && s_end1 && t_end0 &&
                vx == w.a && vy == w.b)
                return true;
        }
        // Fall through: an open edge with both ends on one crossing legally
        // touches itself at that crossing's lift.
    }
    // Both touching endpoints must be crossing attachments; equal positions
    // then force the same crossing, where all attached ends may meet.
    auto is_attachment = [&](const Edge& e, const Seg& g, bool at0) {
        if (e.closed()) return false;
        if (at0 && g.idx == 0) return true;          // path front
        if (!at0 && g.idx == g.last) return true;    // path back
        return false;
    };
    return is_attachment(es, s, s_end0) && is_attachment(et, t, t_end0);
}

int euler_genus_violation(const Diagram& d, std::string* detail) {
    // Union-find over crossings via open edges.
    int n = d.n();
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const Edge& e : d.edges) {
        if (e.closed()) continue;
        int a = find(d.crossing_index.at(e.from->crossing));
        int b = find(d.crossing_index.at(e.to->crossing));
        uf[a] = b;
    }
    // Darts: (edge, arriving end). Face rule: arrive at (c,p), depart via the
    // counterclockwise successor port.
    std::map<std::pair<int, int>, int> face;
    std::vector<std::pair<int, int>> darts;
    for (size_t ei = 0; ei < d.edges.size(); ++ei) {
        if (d.edges[ei].closed()) continue;
        darts.push_back({static_cast<int>(ei), 0});
        darts.push_back({static_cast<int>(ei), 1});
    }
    int nfaces = 0;
    for (const auto& start : darts) {
        if (face.count(start)) continue;
        auto cur = start;
        while (!face.count(cur)) {
            face[cur] = nfaces;
            const Edge& e = d.edges[cur.first];
            const EdgeEnd& arr = cur.second == 0 ? *e.from : *e.to;
            int ci = d.crossing_index.at(arr.crossing);
            int q = (arr.port + 1) % 4;
            const Diagram::PortRef& pr = d.ports[ci][q];
            cur = {pr.edge, 1 - pr.end};
        }
        ++nfaces;
    }
    // Per component: V - E + F  =  2 - 2 g.
    std::map<int, std::array<long long, 3>> comp;  // root -> V,E,F
    for (int i = 0; i < n; ++i) comp[find(i)][0]++;
    for (const Edge& e : d.edges)
        if (!e.closed()) comp[find(d.crossing_index.at(e.from->crossing))][1]++;
    std::map<int, std::set<int>> comp_faces;
    for (const auto& [dart, f] : face) {
        const Edge& e = d.edges[dart.first];
        comp_faces[find(d.crossing_index.at(e.from->crossing))].insert(f);
    }
    for (auto& [root, vef] : comp) {
        vef[2] = static_cast<long long>(comp_faces[root].size());
        long long chi = vef[0] - vef[1] + vef[2];
        long long g2 = 2 - chi;  // 2 * genus of the rotation system
        if (g2 < 0 || g2 % 2) {
            *detail = "rotation system is non-orientable or inconsistent";
            return 1;
        }
        if (g2 / 2 > d.genus) {
            std::ostringstream os;
            os << "a diagram component needs genus " << g2 / 2
               << " but the surface has genus " << d.genus;
            *detail = os.str();
            return 1;
        }
    }
    return 0;
}

}  // namespace

ValidationReport validate(const Diagram& d) {
    ValidationReport rep;
    auto fail = [&](const std::string& code, const std::string& detail) {
        rep.pass = false;
        rep.code = code;
        rep.detail = detail;
        return rep;
    };

    // 1. Every port attached.
    for (int ci = 0; ci < d.n(); ++ci)
        for (int p = 0; p < 4; ++p)
            if (d.ports[ci][p].edge < 0)
                return fail("DANGLING_PORT",
                            "no edge attached at " + port_name(d, ci, p));

    // 2. Path endpoints vs. attachments and declared windings.
    for (const Edge& e : d.edges) {
        if (e.closed()) {
            if (e.path.back() != e.path.front() + ivec_point(e.winding))
                return fail("WINDING_MISMATCH",
                            "closed edge " + e.id +
                                " does not end one declared deck translation "
                                "from its start");
        } else {
            const QPoint& p0 = d.cpos(d.crossing_index.at(e.from->crossing));
            const QPoint& p1 = d.cpos(d.crossing_index.at(e.to->crossing));
            if (e.path.front() != p0)
                return fail("WINDING_MISMATCH",
                            "edge " + e.id +
                                " does not start at its crossing position");
            if (e.path.back() != p1 + ivec_point(e.winding))
                return fail("WINDING_MISMATCH",
                            "edge " + e.id +
                                " does not end at its crossing position "
                                "shifted by the declared winding");
        }
        if (d.genus == 0 && !e.winding.is_zero())
            return fail("WINDING_MISMATCH",
                        "edge " + e.id + " has nonzero winding on a sphere");
    }

    // 3. Counterclockwise port order at every crossing.
    for (int ci = 0; ci < d.n(); ++ci) {
        QPoint dir[4];
        for (int p = 0; p < 4; ++p) {
            const Diagram::PortRef& pr = d.ports[ci][p];
            dir[p] = away_vector(d.edges[pr.edge], pr.end);
        }
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                if (!angle_less(dir[p], dir[q]) && !angle_less(dir[q], dir[p]))
                    return fail("PORT_ORDER_MISMATCH",
                                "two edges leave crossing " +
                                    d.crossings[ci].id +
                                    " in the same direction");
        int wraps = 0;
        for (int p = 0; p < 4; ++p)
            if (angle_less(dir[(p + 1) % 4], dir[p])) ++wraps;
        if (wraps != 1)
            return fail("PORT_ORDER_MISMATCH",
                        "ports of crossing " + d.crossings[ci].id +
                            " are not in counterclockwise order");
    }

    // 4. Embeddedness: pairwise segment disjointness modulo deck
    // translations, allowing only the declared contacts.
    std::vector<Seg> segs;
    for (size_t ei = 0; ei < d.edges.size(); ++ei) {
        const Edge& e = d.edges[ei];
        int last = static_cast<int>(e.path.size()) - 2;
        for (int k = 0; k + 1 < static_cast<int>(e.path.size()); ++k)
            segs.push_back({e.path[k], e.path[k + 1], static_cast<int>(ei), k,
                            last});
    }
    auto lox = [](const Seg& s) { return s.a.x < s.b.x ? s.a.x : s.b.x; };
    auto hix = [](const Seg& s) { return s.a.x < s.b.x ? s.b.x : s.a.x; };
    auto loy = [](const Seg& s) { return s.a.y < s.b.y ? s.a.y : s.b.y; };
    auto hiy = [](const Seg& s) { return s.a.y < s.b.y ? s.b.y : s.a.y; };
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            long long x0 = iceil(lox(s) - hix(t)), x1 = ifloor(hix(s) - lox(t));
            long long y0 = iceil(loy(s) - hiy(t)), y1 = ifloor(hiy(s) - loy(t));
            if (d.genus == 0) {
                // No deck group on the sphere: only the identity applies.
                if (x0 > 0 || x1 < 0 || y0 > 0 || y1 < 0) continue;
                x0 = x1 = y0 = y1 = 0;
            }
            for (long long vx = x0; vx <= x1; ++vx) {
                for (long long vy = y0; vy <= y1; ++vy) {
                    if (i == j && vx == 0 && vy == 0) continue;
                    if (i == j && (vx < 0 || (vx == 0 && vy < 0)))
                        continue;  // same pair, opposite translation
                    QPoint v{to_rat(vx), to_rat(vy)};
                    if (!segments_intersect(s.a, s.b, t.a + v, t.b + v))
                        continue;
                    if (allowed_touch(d, s, t, v, vx, vy)) continue;
                    std::ostringstream os;
                    os << "edges " << d.edges[s.edge].id << " and "
                       << d.edges[t.edge].id
                       << " intersect away from their shared crossings";
                    return fail("SELF_INTERSECTION", os.str());
                }
            }
        }
    }

    // 5. The rotation system must fit the declared surface.
    std::string detail;
    if (euler_genus_violation(d, &detail)) return fail("EULER_MISMATCH", detail);

    return rep;
}

}  // namespace tkh
