// Single-arc surgery on abstract configurations. Each case is assembled from
// a cyclic token stream (slot / gain-piece) describing the walk around the
// spliced boundary circle, which keeps the bookkeeping of gains, gap ids and
// side bits in one place.
#include <algorithm>
#include <stdexcept>

#include "tkh/config.h"

namespace tkh {

namespace {

struct Token {
    bool is_slot = false;
    std::pair<int, int> slot{-1, -1};  // (arc, end); (-2, e) = adjoint end e
    IVec gain;
    std::vector<int> ids;

    static Token mk_slot(std::pair<int, int> s) {
        Token t;
        t.is_slot = true;
        t.slot = s;
        return t;
    }
    static Token mk_gain(const IVec& g, const std::vector<int>& ids) {
        Token t;
        t.gain = g;
        t.ids = ids;
        return t;
    }
};

struct CircleBuild {
    std::vector<std::pair<int, int>> slots;
    std::vector<IVec> gains;
    std::vector<std::vector<int>> gaps;
    IVec cls;
};

CircleBuild assemble(const std::vector<Token>& toks, bool gapless) {
    CircleBuild out;
    size_t first = toks.size();
    for (size_t i = 0; i < toks.size(); ++i)
        if (toks[i].is_slot) {
            first = i;
            break;
        }
    IVec acc{0, 0};
    std::vector<int> ids;
    if (first == toks.size()) {
        for (const Token& t : toks) {
            acc = acc + t.gain;
            ids.insert(ids.end(), t.ids.begin(), t.ids.end());
        }
        out.gains = {acc};
        std::sort(ids.begin(), ids.end());
        if (!gapless) out.gaps = {ids};
        out.cls = acc;
        return out;
    }
    for (size_t k = 0; k < toks.size(); ++k) {
        const Token& t = toks[(first + k) % toks.size()];
        if (t.is_slot) {
            if (!out.slots.empty()) {
                out.gains.push_back(acc);
                std::sort(ids.begin(), ids.end());
                out.gaps.push_back(ids);
                acc = IVec{0, 0};
                ids.clear();
            }
            out.slots.push_back(t.slot);
        } else {
            acc = acc + t.gain;
            ids.insert(ids.end(), t.ids.begin(), t.ids.end());
        }
    }
    out.gains.push_back(acc);
    std::sort(ids.begin(), ids.end());
    out.gaps.push_back(ids);
    for (const IVec& g : out.gains) out.cls = out.cls + g;
    if (gapless) out.gaps.clear();
    return out;
}

std::vector<int> gap_of(const CCircle& c, int i) {
    if (c.gaps.empty()) return {};
    return c.gaps[i];
}

}  // namespace

Configuration surger(const Configuration& cin, int arc, int* adjoint) {
    if (arc < 0 || arc >= static_cast<int>(cin.arcs.size()) ||
        !cin.arcs[arc].alive)
        throw std::logic_error("surgery along a missing arc");
    Configuration out = cin;
    CArc& a = out.arcs[arc];
    a.alive = false;

    const int cA = a.end[0].circle, i = a.end[0].pos;
    const int cB = a.end[1].circle, j = a.end[1].pos;
    const ArcSide sA = a.side[0], sB = a.side[1];
    const IVec g = a.gain;

    std::vector<CircleBuild> made;
    std::vector<std::optional<bool>> made_flags;
    bool merge = (cA != cB);
    int adjoint_idx = -1;
    if (adjoint && !merge)
        throw std::logic_error("adjoint marker only applies to a merge");

    if (merge) {
        const CCircle& C1 = out.circles[cA];
        const CCircle& C2 = out.circles[cB];
        bool gapless = C1.gaps.empty() && C2.gaps.empty();
        int k1 = C1.size(), k2 = C2.size();
        bool same = (sA == sB);
        std::vector<Token> toks;
        // Walk all of C1 from just past the cut (the loop's trailing token is
        // the gain through C1's gap ending at the cut), cross the band, walk
        // all of C2, cross back, and close through C1's gap after the cut.
        for (int t = (i + 1) % k1; t != i; t = (t + 1) % k1) {
            toks.push_back(Token::mk_slot(C1.slots[t]));
            toks.push_back(Token::mk_gain(C1.gains[t], gap_of(C1, t)));
        }
        if (adjoint) toks.push_back(Token::mk_slot({-2, 0}));
        toks.push_back(Token::mk_gain(g, {}));
        if (same) {
            toks.push_back(Token::mk_gain(C2.gains[j], gap_of(C2, j)));
            for (int t = (j + 1) % k2; t != j; t = (t + 1) % k2) {
                toks.push_back(Token::mk_slot(C2.slots[t]));
                toks.push_back(Token::mk_gain(C2.gains[t], gap_of(C2, t)));
            }
            toks.push_back(Token::mk_gain(-g, {}));
        } else {
            // C2 is traversed against its stored order; its side bits flip.
            toks.push_back(Token::mk_gain(-C2.gains[(j - 1 + k2) % k2],
                                          gap_of(C2, (j - 1 + k2) % k2)));
            for (int t = (j - 1 + k2) % k2; t != j; t = (t - 1 + k2) % k2) {
                toks.push_back(Token::mk_slot(C2.slots[t]));
                toks.push_back(Token::mk_gain(-C2.gains[(t - 1 + k2) % k2],
                                              gap_of(C2, (t - 1 + k2) % k2)));
            }
            toks.push_back(Token::mk_gain(-g, {}));
        }
        if (adjoint) toks.push_back(Token::mk_slot({-2, 1}));
        toks.push_back(Token::mk_gain(C1.gains[i], gap_of(C1, i)));
        if (!same)
            for (CArc& other : out.arcs)
                if (other.alive)
                    for (int e = 0; e < 2; ++e)
                        if (other.end[e].circle == cB)
                            other.side[e] = flip(other.side[e]);
        CircleBuild cb = assemble(toks, gapless);
        std::optional<bool> fl;
        if (cb.cls.is_zero()) {
            bool c1z = C1.cls().is_zero(), c2z = C2.cls().is_zero();
            if (c1z && C1.disk_left.has_value())
                fl = *C1.disk_left;
            else if (c2z && C2.disk_left.has_value())
                fl = same ? *C2.disk_left : !*C2.disk_left;
            else if (!c1z && !c2z)
                fl = (sA == ArcSide::Left);
        }
        made.push_back(std::move(cb));
        made_flags.push_back(fl);
    } else {
        const CCircle& C = out.circles[cA];
        bool gapless = C.gaps.empty();
        int k = C.size();
        if (sA == sB) {
            // Untwisted chord: split into the (end0 -> end1) piece closed by
            // one band edge, and the (end1 -> end0) piece closed by the other.
            auto piece = [&](int from, int to, const IVec& band) {
                std::vector<Token> toks;
                for (int t = (from + 1) % k; t != to; t = (t + 1) % k) {
                    toks.push_back(Token::mk_slot(C.slots[t]));
                    toks.push_back(Token::mk_gain(C.gains[t], gap_of(C, t)));
                }
                toks.push_back(Token::mk_gain(band, {}));
                toks.push_back(Token::mk_gain(C.gains[from], gap_of(C, from)));
                return assemble(toks, gapless);
            };
            // The walk from end0's cut to end1's cut closes through the band
            // against its gain; the complementary piece closes with it.
            CircleBuild X = piece(i, j, -g);
            std::vector<Token> ytoks;
            for (int t = (j + 1) % k; t != i; t = (t + 1) % k) {
                ytoks.push_back(Token::mk_slot(C.slots[t]));
                ytoks.push_back(Token::mk_gain(C.gains[t], gap_of(C, t)));
            }
            ytoks.push_back(Token::mk_gain(g, {}));
            ytoks.push_back(Token::mk_gain(C.gains[j], gap_of(C, j)));
            CircleBuild Y = assemble(ytoks, gapless);
            std::optional<bool> fx, fy;
            if (X.cls.is_zero() && C.disk_left.has_value()) fx = *C.disk_left;
            if (Y.cls.is_zero()) fy = (sA == ArcSide::Left);
            if (X.cls.is_zero() && !C.disk_left.has_value() &&
                !C.cls().is_zero())
                fx = (sA == ArcSide::Left);
            made.push_back(std::move(X));
            made_flags.push_back(fx);
            made.push_back(std::move(Y));
            made_flags.push_back(fy);
        } else {
            // Twisted chord: reconnection into a single circle; the piece
            // strictly between end 0 and end 1 is traversed against its
            // stored order. Both band edges carry the gain end0 -> end1.
            std::vector<Token> toks;
            for (int t = (j + 1) % k; t != i; t = (t + 1) % k) {
                toks.push_back(Token::mk_slot(C.slots[t]));
                toks.push_back(Token::mk_gain(C.gains[t], gap_of(C, t)));
            }
            toks.push_back(Token::mk_gain(g, {}));
            toks.push_back(Token::mk_gain(-C.gains[(j - 1 + k) % k],
                                          gap_of(C, (j - 1 + k) % k)));
            for (int t = (j - 1 + k) % k; t != i; t = (t - 1 + k) % k) {
                toks.push_back(Token::mk_slot(C.slots[t]));
                toks.push_back(Token::mk_gain(-C.gains[(t - 1 + k) % k],
                                              gap_of(C, (t - 1 + k) % k)));
            }
            toks.push_back(Token::mk_gain(g, {}));
            toks.push_back(Token::mk_gain(C.gains[j], gap_of(C, j)));
            // Side bits on the reversed piece flip.
            for (CArc& other : out.arcs)
                if (other.alive)
                    for (int e = 0; e < 2; ++e)
                        if (other.end[e].circle == cA) {
                            int pth = other.end[e].pos;
                            bool in_piece = false;
                            for (int t = (i + 1) % k; t != j; t = (t + 1) % k)
                                if (t == pth) in_piece = true;
                            if (in_piece) other.side[e] = flip(other.side[e]);
                        }
            made.push_back(assemble(toks, gapless));
            made_flags.push_back(std::nullopt);
        }
    }

    // Rebuild the circle list: replace cA by the first result, insert any
    // second result right after it, and drop cB on a merge.
    std::vector<CCircle> circles;
    for (int ci = 0; ci < static_cast<int>(out.circles.size()); ++ci) {
        if (ci == cA) {
            for (size_t m = 0; m < made.size(); ++m) {
                CCircle nc;
                nc.slots = made[m].slots;
                nc.gains = made[m].gains;
                nc.gaps = made[m].gaps;
                nc.disk_left = made_flags[m];
                if (nc.slots.empty() && nc.gains.empty())
                    nc.gains = {IVec{0, 0}};
                circles.push_back(std::move(nc));
            }
        } else if (merge && ci == cB) {
            continue;
        } else {
            circles.push_back(out.circles[ci]);
        }
    }
    out.circles = std::move(circles);

    // Create the adjoint chord if requested.
    if (adjoint) {
        CArc co;
        co.name = cin.arcs[arc].name + "*";
        co.gain = IVec{0, 0};
        co.side[0] = flip(sA);
        co.side[1] = flip(sA);
        co.alive = true;
        adjoint_idx = static_cast<int>(out.arcs.size());
        out.arcs.push_back(co);
        *adjoint = adjoint_idx;
    }

    // Re-anchor every arc end from the slot lists.
    for (int ci = 0; ci < static_cast<int>(out.circles.size()); ++ci) {
        CCircle& c = out.circles[ci];
        for (int s = 0; s < c.size(); ++s) {
            auto [ai, e] = c.slots[s];
            if (ai == -2) {
                c.slots[s] = {adjoint_idx, e};
                ai = adjoint_idx;
            }
            out.arcs[ai].end[e] = {ci, s};
        }
    }
    out.check();
    return out;
}

Configuration surger_set(const Configuration& c, const std::vector<int>& arcs) {
    std::vector<int> order = arcs;
    std::sort(order.begin(), order.end());
    Configuration cur = c;
    for (int a : order) cur = surger(cur, a);
    return cur;
}

Configuration full_surgery(const Configuration& c) {
    return surger_set(c, c.alive_arcs());
}

Configuration remove_arc(const Configuration& cin, int arc) {
    if (arc < 0 || arc >= static_cast<int>(cin.arcs.size()) ||
        !cin.arcs[arc].alive)
        throw std::logic_error("removing a dead or missing arc");
    Configuration c = cin;
    std::vector<int> touched{c.arcs[arc].end[0].circle};
    if (c.arcs[arc].end[1].circle != touched[0])
        touched.push_back(c.arcs[arc].end[1].circle);
    for (int ci : touched) {
        const CCircle old = c.circles[ci];
        std::vector<Token> toks;
        for (int k = 0; k < old.size(); ++k) {
            if (old.slots[k].first != arc) toks.push_back(Token::mk_slot(old.slots[k]));
            toks.push_back(Token::mk_gain(old.gains[k], gap_of(old, k)));
        }
        CircleBuild nb = assemble(toks, old.gaps.empty());
        CCircle& z = c.circles[ci];
        z.slots = nb.slots;
        z.gains = nb.gains;
        z.gaps = nb.gaps;
        for (int s = 0; s < z.size(); ++s) {
            auto [ai, e] = z.slots[s];
            c.arcs[ai].end[e] = {ci, s};
        }
    }
    c.arcs[arc].alive = false;
    c.check();
    return c;
}

}  // namespace tkh
