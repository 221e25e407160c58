// Fixture constructors. All geometry is exact rational; every builder
// returns a finalized diagram (indices built, signs computed) but does not
// run the geometric validator - tests do that explicitly.

#include "tkh/builders.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

namespace tkh {
namespace {

Rat frac(long num, long den) { return Rat(num) / Rat(den); }

QPoint scaled(const QPoint& p, const Rat& s) { return {p.x * s, p.y * s}; }

QPoint rot90(const QPoint& p) { return {-p.y, p.x}; }

// Which port number sits at each corner of a braid crossing. Corners are
// ll / lr / ul / ur; strands flow upward, so ll and lr are the entries.
struct CornerPorts {
    int ll, lr, ul, ur;
};

CornerPorts corner_ports(bool positive) {
    // Positive: ports (0:NE, 1:NW, 2:SW, 3:SE); the strand from the lower
    // right leaves at the upper left and carries the overstrand (port 3->1).
    if (positive) return {2, 3, 1, 0};
    // Negative: ports (0:SE, 1:NE, 2:NW, 3:SW); overstrand runs SW->NE.
    return {3, 0, 2, 1};
}

struct BraidGeom {
    int k = 0, m = 0;
    std::vector<int> word;
    bool toral = true;
    Rat h, v;  // stub half extents

    Rat xcol(int j) const {  // column line, j = 1..k
        return toral ? frac(2 * j - 1, 2 * k) : frac(j, 2 * (k + 1));
    }
    Rat xcross(int j) const {  // crossing between columns j and j+1
        return toral ? frac(j, k) : frac(2 * j + 1, 4 * (k + 1));
    }
    Rat ycross(int i) const {  // 0-based position in the word
        return toral ? frac(2 * i + 1, 2 * m)
                     : frac(1, 4) + frac(2 * i + 1, 4 * m);
    }
};

struct StrandEdge {
    Edge edge;
    int to_cross = -1;   // crossing entered from below at the far end
    int to_left = -1;    // 1 if it enters on the left corner, 0 right
};

// Shared braid-closure assembly. Builds the crossings, the per-column
// strand edges, and the oriented components by chasing strands upward.
Diagram braid_closure(int strands, const std::vector<int>& word, bool toral) {
    if (strands < 1) throw TkhError("PARSE_ERROR", "braid needs >= 1 strand");
    for (int g : word)
        if (g == 0 || std::abs(g) >= strands)
            throw TkhError("PARSE_ERROR", "braid letter out of range");

    BraidGeom G;
    G.k = strands;
    G.m = static_cast<int>(word.size());
    G.word = word;
    G.toral = toral;
    if (G.m > 0) {
        G.h = toral ? frac(1, 8 * G.k) : frac(1, 16 * (G.k + 1));
        G.v = toral ? frac(1, 8 * G.m) : frac(1, 16 * G.m);
    }

    Diagram d;
    d.genus = toral ? 1 : 0;
    for (int i = 0; i < G.m; ++i) {
        std::ostringstream os;
        os << "c" << (i + 1);
        d.crossings.push_back({os.str(), {G.xcross(std::abs(word[i])),
                                          G.ycross(i)}});
    }

    // Crossings met by each column, in height order.
    std::vector<std::vector<int>> events(strands);
    for (int i = 0; i < G.m; ++i) {
        int j = std::abs(word[i]);
        events[j - 1].push_back(i);
        events[j].push_back(i);
    }

    auto cpos = [&](int i) { return d.crossings[i].pos; };
    auto is_left = [&](int col, int i) {  // column `col` is the left leg of i
        return std::abs(G.word[i]) == col;
    };
    auto top_port = [&](int col, int i) {
        CornerPorts cp = corner_ports(G.word[i] > 0);
        return is_left(col, i) ? cp.ul : cp.ur;
    };
    auto bottom_port = [&](int col, int i) {
        CornerPorts cp = corner_ports(G.word[i] > 0);
        return is_left(col, i) ? cp.ll : cp.lr;
    };
    auto anchor = [&](int col, int i, bool top) {
        Rat dx = is_left(col, i) ? -G.h : G.h;
        Rat dy = top ? G.v : -G.v;
        return cpos(i) + QPoint{dx, dy};
    };

    std::vector<StrandEdge> built;
    // Edge leaving the top of crossing i on the given column.
    std::map<std::pair<int, int>, int> top_out;  // (crossing, left?) -> idx
    std::vector<int> loop_edges;  // crossingless columns

    for (int col = 1; col <= strands; ++col) {
        const std::vector<int>& ev = events[col - 1];
        Rat x = G.xcol(col);
        std::ostringstream base;
        base << "s" << col;
        if (ev.empty()) {
            Edge e;
            e.id = base.str();
            if (toral) {
                e.path = {{x, Rat(0)}, {x, Rat(1)}};
                e.winding = {0, 1};
            } else {
                // Round trip through this column's return lane.
                Rat yb = frac(1, 4) - frac(G.k + 1 - col, 8 * G.k);
                Rat yt = frac(3, 4) + frac(G.k + 1 - col, 8 * G.k);
                Rat rx = frac(1, 2) + frac(G.k + 1 - col, 4 * G.k);
                e.path = {{x, yb}, {x, yt}, {rx, yt}, {rx, yb}, {x, yb}};
                e.winding = {0, 0};
            }
            StrandEdge se;
            se.edge = std::move(e);
            loop_edges.push_back(static_cast<int>(built.size()));
            built.push_back(std::move(se));
            continue;
        }
        int T = static_cast<int>(ev.size());
        // Internal segments: top of ev[t] to bottom of ev[t+1]; on the
        // torus the last one wraps back to ev[0].
        int segs = toral ? T : T - 1;
        for (int t = 0; t < segs; ++t) {
            int a = ev[t], b = ev[(t + 1) % T];
            int wrap = (toral && t + 1 == T) ? 1 : 0;
            QPoint lift{Rat(0), Rat(wrap)};
            Edge e;
            std::ostringstream os;
            os << base.str() << "_" << t;
            e.id = os.str();
            e.from = EdgeEnd{d.crossings[a].id, top_port(col, a)};
            e.to = EdgeEnd{d.crossings[b].id, bottom_port(col, b)};
            e.winding = {0, wrap};
            e.path = {cpos(a),
                      anchor(col, a, true),
                      {x, cpos(a).y + 2 * G.v},
                      {x, cpos(b).y + Rat(wrap) - 2 * G.v},
                      anchor(col, b, false) + lift,
                      cpos(b) + lift};
            StrandEdge se;
            se.edge = std::move(e);
            se.to_cross = b;
            se.to_left = is_left(col, b) ? 1 : 0;
            top_out[{a, is_left(col, a) ? 1 : 0}] =
                static_cast<int>(built.size());
            built.push_back(std::move(se));
        }
        if (!toral) {
            // Return arc: top of the last crossing around the right side
            // down to the bottom of the first.
            int a = ev[T - 1], b = ev[0];
            Rat yb = frac(1, 4) - frac(G.k + 1 - col, 8 * G.k);
            Rat yt = frac(3, 4) + frac(G.k + 1 - col, 8 * G.k);
            Rat rx = frac(1, 2) + frac(G.k + 1 - col, 4 * G.k);
            Edge e;
            e.id = "r" + std::to_string(col);
            e.from = EdgeEnd{d.crossings[a].id, top_port(col, a)};
            e.to = EdgeEnd{d.crossings[b].id, bottom_port(col, b)};
            e.winding = {0, 0};
            e.path = {cpos(a),
                      anchor(col, a, true),
                      {x, cpos(a).y + 2 * G.v},
                      {x, yt},
                      {rx, yt},
                      {rx, yb},
                      {x, yb},
                      {x, cpos(b).y - 2 * G.v},
                      anchor(col, b, false),
                      cpos(b)};
            StrandEdge se;
            se.edge = std::move(e);
            se.to_cross = b;
            se.to_left = is_left(col, b) ? 1 : 0;
            top_out[{a, is_left(col, a) ? 1 : 0}] =
                static_cast<int>(built.size());
            built.push_back(std::move(se));
        }
    }

    for (StrandEdge& se : built) d.edges.push_back(std::move(se.edge));

    // Components: strands flow upward, crossing over to the other column
    // at each crossing they enter.
    std::vector<char> seen(built.size(), 0);
    for (int e0 : loop_edges) {
        d.components.push_back({{e0, true}});
        seen[e0] = 1;
    }
    for (size_t start = 0; start < built.size(); ++start) {
        if (seen[start] || built[start].to_cross < 0) continue;
        std::vector<std::pair<int, bool>> comp;
        int cur = static_cast<int>(start);
        while (!seen[cur]) {
            seen[cur] = 1;
            comp.push_back({cur, true});
            int b = built[cur].to_cross;
            int next_left = 1 - built[cur].to_left;
            auto it = top_out.find({b, next_left});
            if (it == top_out.end())
                throw TkhError("PARSE_ERROR", "braid chaining failed");
            cur = it->second;
        }
        d.components.push_back(std::move(comp));
    }

    d.finalize();
    return d;
}

}  // namespace

Diagram toral_braid_closure(int strands, const std::vector<int>& word) {
    return braid_closure(strands, word, true);
}

Diagram planar_braid_closure(int strands, const std::vector<int>& word) {
    return braid_closure(strands, word, false);
}

namespace {

Diagram square_loop(int genus) {
    Diagram d;
    d.genus = genus;
    Edge e;
    e.id = "e0";
    e.path = {{frac(1, 4), frac(1, 4)},
              {frac(3, 4), frac(1, 4)},
              {frac(3, 4), frac(3, 4)},
              {frac(1, 4), frac(3, 4)},
              {frac(1, 4), frac(1, 4)}};
    e.winding = {0, 0};
    d.edges.push_back(std::move(e));
    d.components = {{{0, true}}};
    d.finalize();
    return d;
}

}  // namespace

Diagram torus_unknot0() { return square_loop(1); }

Diagram planar_unknot0() { return square_loop(0); }

Diagram torus_curve10() {
    Diagram d;
    d.genus = 1;
    Edge e;
    e.id = "e0";
    e.path = {{Rat(0), frac(1, 2)}, {Rat(1), frac(1, 2)}};
    e.winding = {1, 0};
    d.edges.push_back(std::move(e));
    d.components = {{{0, true}}};
    d.finalize();
    return d;
}

Diagram with_r1_kink(const Diagram& d, const std::string& edge_id,
                     bool positive) {
    auto ei = d.edge_index.find(edge_id);
    if (ei == d.edge_index.end())
        throw TkhError("PARSE_ERROR", "kink host edge not found: " + edge_id);
    const Edge& host = d.edges[ei->second];
    if (host.path.size() < 2)
        throw TkhError("PARSE_ERROR", "kink host edge has no segment");

    const QPoint& p0 = host.path[0];
    const QPoint& p1 = host.path[1];
    QPoint u = p1 - p0;
    QPoint r = rot90(u);
    QPoint c = p0 + scaled(u, frac(1, 2));
    if (sgn(c.x) < 0 || c.x >= 1 || sgn(c.y) < 0 || c.y >= 1)
        throw TkhError("PARSE_ERROR", "kink midpoint escapes the square");

    // Diamond loop on the left of the traversal; the crossing sits at the
    // segment midpoint. Port base 0 gives a positive crossing, base 1 the
    // negative one (it swaps which passage carries the overstrand).
    int base = positive ? 0 : 1;
    QPoint db = c + scaled(u + r, frac(1, 8));
    QPoint dc = c + scaled(r, frac(1, 4));
    QPoint dd = c + scaled(r - u, frac(1, 8));

    Diagram out;
    out.genus = d.genus;
    out.crossings = d.crossings;
    std::string kc = edge_id + "_kink";
    out.crossings.push_back({kc, c});

    // Map from old edge index to replacement indices in traversal order.
    std::vector<std::vector<int>> repl(d.edges.size());
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (static_cast<int>(i) != ei->second) {
            repl[i] = {static_cast<int>(out.edges.size())};
            out.edges.push_back(d.edges[i]);
            continue;
        }
        Edge loop;
        loop.id = edge_id + "b";
        loop.from = EdgeEnd{kc, (base + 1) % 4};
        loop.to = EdgeEnd{kc, (base + 2) % 4};
        loop.path = {c, db, dc, dd, c};
        loop.winding = {0, 0};
        if (host.closed()) {
            Edge big;
            big.id = edge_id + "a";
            big.from = EdgeEnd{kc, base};
            big.to = EdgeEnd{kc, (base + 3) % 4};
            big.path.push_back(c);
            for (size_t t = 1; t < host.path.size(); ++t)
                big.path.push_back(host.path[t]);
            big.path.push_back(c + QPoint{to_rat(host.winding.a),
                                          to_rat(host.winding.b)});
            big.winding = host.winding;
            repl[i] = {static_cast<int>(out.edges.size()),
                       static_cast<int>(out.edges.size()) + 1};
            out.edges.push_back(std::move(big));
            out.edges.push_back(std::move(loop));
        } else {
            Edge head;
            head.id = edge_id + "a";
            head.from = host.from;
            head.to = EdgeEnd{kc, (base + 3) % 4};
            head.path = {p0, c};
            head.winding = {0, 0};
            Edge tail;
            tail.id = edge_id + "c";
            tail.from = EdgeEnd{kc, base};
            tail.to = host.to;
            tail.path.push_back(c);
            for (size_t t = 1; t < host.path.size(); ++t)
                tail.path.push_back(host.path[t]);
            tail.winding = host.winding;
            repl[i] = {static_cast<int>(out.edges.size()),
                       static_cast<int>(out.edges.size()) + 1,
                       static_cast<int>(out.edges.size()) + 2};
            out.edges.push_back(std::move(head));
            out.edges.push_back(std::move(loop));
            out.edges.push_back(std::move(tail));
        }
    }

    for (const auto& comp : d.components) {
        std::vector<std::pair<int, bool>> nc;
        for (auto [e, fwd] : comp) {
            const std::vector<int>& rs = repl[e];
            if (fwd)
                for (int re : rs) nc.push_back({re, true});
            else
                for (auto it = rs.rbegin(); it != rs.rend(); ++it)
                    nc.push_back({*it, false});
        }
        out.components.push_back(std::move(nc));
    }

    out.finalize();
    return out;
}

Diagram torus_hex_link() {
    // Convex hexagon in the cover with vertex lifts
    //   A, B, C+(1,0), A+(1,0), B+(1,1), C+(1,1)
    // traversed in that order by the all-0 circle; every corner is convex,
    // so all three chords sit on the outside of the disk.
    Diagram d;
    d.genus = 1;
    QPoint A{frac(1, 4), frac(5, 8)};
    QPoint B{frac(5, 8), frac(3, 8)};
    QPoint C{Rat(0), frac(1, 2)};
    d.crossings = {{"ca", A}, {"cb", B}, {"cc", C}};

    auto add = [&](const std::string& id, const std::string& cf, int pf,
                   const std::string& ct, int pt_, IVec w,
                   std::vector<QPoint> path) {
        Edge e;
        e.id = id;
        e.from = EdgeEnd{cf, pf};
        e.to = EdgeEnd{ct, pt_};
        e.winding = w;
        e.path = std::move(path);
        d.edges.push_back(std::move(e));
    };

    add("e1", "ca", 1, "cb", 2, {0, 0}, {A, B});
    add("e2", "cb", 1, "cc", 2, {1, 0}, {B, {Rat(1), frac(1, 2)}});
    add("e3", "cc", 1, "ca", 0, {0, 0}, {C, A});
    add("e4", "ca", 3, "cb", 0, {0, 1}, {A, {frac(5, 8), frac(11, 8)}});
    add("e5", "cb", 3, "cc", 0, {0, 0}, {B, C});
    add("e6", "cc", 3, "ca", 2, {-1, -1}, {C, {frac(-3, 4), frac(-3, 8)}});

    d.components = {{{0, true}, {3, false}},
                    {{1, true}, {4, false}},
                    {{2, true}, {5, false}}};
    d.finalize();
    return d;
}

}  // namespace tkh
