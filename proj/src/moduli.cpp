#include "tkh/moduli.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

#include "moduli_detail.h"

namespace tkh {

std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

std::string to_string(Slope s) {
    return s == Slope::Lambda ? "lambda" : "lambdabar";
}

Side Pairing::side_for(const CaseTag& tag) const {
    if (tag.tag == "L0") return l0;
    if (tag.tag == "L_ALPHA") {
        auto it = lalpha_by_class.find(tag.classes.at(0));
        return it == lalpha_by_class.end() ? lalpha : it->second;
    }
    throw TkhError("MALFORMED", "side choice requested for tag " + tag.tag);
}

Slope Pairing::slope_for(const CaseTag& tag) const {
    if (tag.tag != "Q")
        throw TkhError("MALFORMED", "slope choice requested for tag " + tag.tag);
    auto [lo, hi] = std::minmax(tag.classes.at(0), tag.classes.at(1));
    auto it = q_by_pair.find({lo, hi});
    return it == q_by_pair.end() ? q : it->second;
}

IVec canonical_mu(const IVec& lambda) {
    if (gcd_abs(lambda) != 1)
        throw TkhError("MALFORMED", "lambda must be primitive");
    // Extended gcd on the components: a*s + b*t = 1.
    long long old_r = lambda.a, r = lambda.b;
    long long old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long qq = old_r / r;
        long long tmp = old_r - qq * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qq * s;
        old_s = s;
        s = tmp;
        tmp = old_t - qq * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    IVec mu{-old_t, old_s};  // det(lambda, mu) = a*s + b*t = 1
    // Reduce the component of mu along lambda into [0, 1).
    Rat g = to_rat(mu.a * lambda.a + mu.b * lambda.b) /
            to_rat(lambda.a * lambda.a + lambda.b * lambda.b);
    long long k = ifloor(g);
    return {mu.a - k * lambda.a, mu.b - k * lambda.b};
}

namespace detail {

std::map<std::string, int> key_labels(const Configuration& c, const Labeling& z) {
    std::map<std::string, int> m;
    for (size_t i = 0; i < c.circles.size(); ++i)
        m[c.circle_key(static_cast<int>(i))] = z[i];
    if (m.size() != c.circles.size())
        throw std::logic_error("duplicate circle keys");
    return m;
}

std::string sign_string(const std::map<std::string, int>& m) {
    std::string s;
    for (const auto& [k, v] : m) s += v > 0 ? '+' : '-';
    return s;
}

std::string arc_name(const Configuration& c, int a) {
    return c.arcs[a].name.empty() ? std::to_string(a) : c.arcs[a].name;
}

Labeling transfer_labels(const Configuration& src, const Labeling& zsrc,
                         const Configuration& dst) {
    const auto m = key_labels(src, zsrc);
    Labeling out(dst.circles.size());
    for (size_t i = 0; i < dst.circles.size(); ++i) {
        auto it = m.find(dst.circle_key(static_cast<int>(i)));
        if (it == m.end())
            throw TkhError("MALFORMED", "label transfer across mismatched circles");
        out[i] = it->second;
    }
    return out;
}

Decorated face_decorated(const Decorated& dec, const Poset& P, bool top,
                         int arc, int def_vert) {
    const PosetVertex& v = P.verts[def_vert];
    const Configuration& vs = P.states.at(v.mask);
    Decorated f;
    if (top) {
        f.config = remove_arc(dec.config, arc);
        f.y = dec.y;
        f.x = transfer_labels(vs, v.z, full_surgery(f.config));
    } else {
        f.config = vs;
        f.y = v.z;
        const unsigned full = (1u << P.levels()) - 1;
        f.x = transfer_labels(P.states.at(full), dec.x, full_surgery(f.config));
    }
    return f;
}

}  // namespace detail

using namespace detail;

namespace {

std::vector<int> gap_union(const CCircle& z) {
    std::vector<int> u;
    for (const auto& g : z.gaps) u.insert(u.end(), g.begin(), g.end());
    std::sort(u.begin(), u.end());
    return u;
}

std::string circle_containing(const Configuration& c,
                              const std::vector<int>& want) {
    std::optional<std::string> found;
    for (size_t ci = 0; ci < c.circles.size(); ++ci) {
        std::vector<int> u = gap_union(c.circles[ci]);
        if (std::includes(u.begin(), u.end(), want.begin(), want.end())) {
            if (found)
                throw TkhError("MALFORMED", "gap piece in two circles");
            found = c.circle_key(static_cast<int>(ci));
        }
    }
    if (!found) throw TkhError("MALFORMED", "gap piece lost by surgery");
    return *found;
}

// The four segments of the matching circle between the two interlaced
// chords' endpoints, listed along the disk's boundary orientation with the
// arc each segment starts at.
struct QuarterData {
    int p = -1, q = -1;  // the two live arcs, ascending
    std::array<std::vector<int>, 4> gapids;
    std::array<int, 4> start;
};

QuarterData quarters(const Configuration& c) {
    QuarterData qd;
    const std::vector<int> arcs = c.alive_arcs();
    if (arcs.size() != 2)
        throw TkhError("MALFORMED", "matching face must carry two arcs");
    qd.p = arcs[0];
    qd.q = arcs[1];
    if (!c.is_chord(qd.p) || !c.is_chord(qd.q) ||
        c.arcs[qd.p].end[0].circle != c.arcs[qd.q].end[0].circle)
        throw TkhError("MALFORMED",
                       "matching face is not two chords on one circle");
    const CCircle& z = c.circles[c.arcs[qd.p].end[0].circle];
    if (z.size() != 4)
        throw TkhError("MALFORMED", "matching circle has stray endpoints");
    if (!z.disk_left)
        throw TkhError("MISSING_GEOMETRY",
                       "no disk orientation on the matching circle");
    if (z.gaps.empty())
        throw TkhError("MALFORMED", "matching circle lacks gap ids");
    for (int t = 0; t < 4; ++t) {
        if (*z.disk_left) {
            qd.gapids[t] = z.gaps[t];
            qd.start[t] = z.slots[t].first;
        } else {
            qd.gapids[t] = z.gaps[(6 - t) % 4];
            qd.start[t] = z.slots[(3 - t + 4) % 4].first;
        }
    }
    return qd;
}

// Pair the two intermediate states of each single-surgery mask so that
// labels agree on the circles sharing a chosen segment (and on all common
// circles). start_arc selects the chosen segment pair by its starting arc.
Matching build_matching(const Decorated& dec, const QuarterData& qd,
                        int start_arc) {
    const Poset P = build_poset(dec);
    const std::vector<int> fp = P.fiber(1u);
    const std::vector<int> fq = P.fiber(2u);
    if (fp.size() != 2 || fq.size() != 2)
        throw TkhError("MALFORMED", "matching face fibers are not 2 + 2");
    const Configuration& sp = P.states.at(1u);
    const Configuration& sq = P.states.at(2u);

    std::map<std::string, std::string> to_p;  // circle key in sq -> in sp
    for (int t = 0; t < 4; ++t) {
        if (qd.start[t] != start_arc) continue;
        to_p[circle_containing(sq, qd.gapids[t])] =
            circle_containing(sp, qd.gapids[t]);
    }
    if (to_p.size() != 2)
        throw TkhError("MALFORMED", "chosen segments do not separate the splits");

    auto inter = [&](int vid, int arc, const Configuration& st) {
        return Intermediate{arc, key_labels(st, P.verts[vid].z)};
    };
    const std::array<Intermediate, 2> ip{inter(fp[0], qd.p, sp),
                                         inter(fp[1], qd.p, sp)};
    const std::array<Intermediate, 2> iq{inter(fq[0], qd.q, sq),
                                         inter(fq[1], qd.q, sq)};

    Matching m;
    std::set<int> used;
    for (int i = 0; i < 2; ++i) {
        std::map<std::string, int> want;
        for (const auto& [k, lab] : iq[0].labels) {
            (void)lab;
            auto mapped = to_p.count(k) ? to_p.at(k) : k;
            auto it = ip[i].labels.find(mapped);
            if (it == ip[i].labels.end())
                throw TkhError("MALFORMED", "matching circles fail to correspond");
            want[k] = it->second;
        }
        int j = want == iq[0].labels ? 0 : (want == iq[1].labels ? 1 : -1);
        if (j < 0 || used.count(j))
            throw TkhError("MALFORMED", "segment labels admit no matching");
        used.insert(j);
        m.pairs[i] = {ip[i], iq[j]};
    }
    return m;
}

}  // namespace

Matching right_left_match(const Decorated& dec, Side choice) {
    const CaseTag tag = classify_index2(dec);
    if (tag.tag != "L0" && tag.tag != "L_ALPHA")
        throw TkhError("MALFORMED",
                       "right/left matching on a " + tag.tag + " face");
    const QuarterData qd = quarters(dec.config);
    const bool p_inner = chord_inner(dec.config, qd.p);
    const int inner = p_inner ? qd.p : qd.q;
    const int outer = p_inner ? qd.q : qd.p;
    return build_matching(dec, qd, choice == Side::Right ? outer : inner);
}

namespace {

// Finite slope value -p/q of a class p*lambda + q*mu; multiples of lambda
// get minus infinity (no value).
struct SlopeVal {
    bool finite = false;
    Rat v;
};

SlopeVal slope_value(const IVec& cls, const IVec& lambda, const IVec& mu) {
    const long long qq = det(lambda, cls);
    const long long pp = det(cls, mu);
    if (qq == 0) return {false, Rat(0)};
    return {true, to_rat(-pp) / to_rat(qq)};
}

bool slope_less(const SlopeVal& a, const SlopeVal& b) {
    if (!a.finite) return b.finite;
    if (!b.finite) return false;
    return a.v < b.v;
}

bool slope_equal(const SlopeVal& a, const SlopeVal& b) {
    return !slope_less(a, b) && !slope_less(b, a);
}

}  // namespace

Matching lambda_match(const Decorated& dec, const Pairing& pairing) {
    const CaseTag tag = classify_index2(dec);
    if (tag.tag != "Q")
        throw TkhError("NOT_QUASI_LADYBUG",
                       "slope matching on a " + tag.tag + " face");
    const QuarterData qd = quarters(dec.config);
    const IVec mu = pairing.mu ? *pairing.mu : canonical_mu(pairing.lambda);
    if (det(pairing.lambda, mu) != 1)
        throw TkhError("MALFORMED", "mu is not a complement of lambda");
    const SlopeVal vp = slope_value(chord_class(dec.config, qd.p),
                                    pairing.lambda, mu);
    const SlopeVal vq = slope_value(chord_class(dec.config, qd.q),
                                    pairing.lambda, mu);
    if (slope_equal(vp, vq))
        throw TkhError("MALFORMED", "quasi-ladybug arcs with equal slopes");
    const int bigger = slope_less(vp, vq) ? qd.q : qd.p;
    const int smaller = bigger == qd.p ? qd.q : qd.p;
    const Slope sl = pairing.slope_for(tag);
    return build_matching(dec, qd, sl == Slope::Lambda ? bigger : smaller);
}

namespace {

// A reusable index-2 face of an index-3 boundary: which surgery step is held
// fixed (first = bottom, last = top), the state defining the face, the
// chains running through it and their middle states.
struct FaceInfo {
    std::string key;
    bool top = false;
    int arc = -1;
    int def_vert = -1;
    std::vector<int> chain_ids;
    std::vector<Intermediate> mids;
    Decorated fd;
    CaseTag tag;
    std::array<std::optional<Matching>, 2> match;  // per choice index
};

struct Prepared {
    Poset P;
    std::vector<std::vector<int>> chains;
    std::vector<FaceInfo> faces;  // sorted by key
};

Prepared prepare(const Decorated& dec) {
    if (dec.config.index() != 3)
        throw TkhError("WRONG_INDEX", "boundary graph of index " +
                                          std::to_string(dec.config.index()));
    Prepared pr;
    pr.P = build_poset(dec);
    if (pr.P.empty())
        throw TkhError("EMPTY_CONFIGURATION", "no labeled surgery chains");
    pr.chains = pr.P.chains();

    std::map<std::string, FaceInfo> fm;
    auto touch = [&](const std::string& key, bool top, int arc, int def_vert,
                     int chain, const Intermediate& mid) {
        FaceInfo& f = fm[key];
        if (f.arc < 0) {
            f.key = key;
            f.top = top;
            f.arc = arc;
            f.def_vert = def_vert;
        }
        f.chain_ids.push_back(chain);
        f.mids.push_back(mid);
    };
    for (size_t ci = 0; ci < pr.chains.size(); ++ci) {
        const auto& ch = pr.chains[ci];
        const PosetVertex& v1 = pr.P.verts[ch[1]];
        const PosetVertex& v2 = pr.P.verts[ch[2]];
        const PosetVertex& v3 = pr.P.verts[ch[3]];
        const int a1 = pr.P.arc_ids[std::countr_zero(v1.mask)];
        const int a2 = pr.P.arc_ids[std::countr_zero(v2.mask ^ v1.mask)];
        const int a3 = pr.P.arc_ids[std::countr_zero(v3.mask ^ v2.mask)];
        const auto l1 = key_labels(pr.P.states.at(v1.mask), v1.z);
        const auto l2 = key_labels(pr.P.states.at(v2.mask), v2.z);
        touch("bot:" + arc_name(dec.config, a1) + ":" + sign_string(l1), false,
              a1, ch[1], static_cast<int>(ci), Intermediate{a2, l2});
        touch("top:" + arc_name(dec.config, a3) + ":" + sign_string(l2), true,
              a3, ch[2], static_cast<int>(ci), Intermediate{a1, l1});
    }
    for (auto& [key, f] : fm) {
        f.fd = face_decorated(dec, pr.P, f.top, f.arc, f.def_vert);
        f.tag = classify_index2(f.fd);
        pr.faces.push_back(std::move(f));
    }
    return pr;
}

bool is_mu2_tag(const CaseTag& t) {
    return t.tag == "L0" || t.tag == "L_ALPHA" || t.tag == "Q";
}

// Choice index: 0 = left / lambda, 1 = right / lambdabar.
int pairing_choice(const Pairing& pairing, const CaseTag& tag) {
    if (tag.tag == "Q") return pairing.slope_for(tag) == Slope::Lambda ? 0 : 1;
    return pairing.side_for(tag) == Side::Left ? 0 : 1;
}

const Matching& face_matching(FaceInfo& f, const Pairing& pairing, int choice) {
    if (!f.match[choice]) {
        if (f.tag.tag == "Q") {
            Pairing p = pairing;
            p.q = choice == 0 ? Slope::Lambda : Slope::LambdaBar;
            p.q_by_pair.clear();
            f.match[choice] = lambda_match(f.fd, p);
        } else {
            f.match[choice] =
                right_left_match(f.fd, choice == 0 ? Side::Left : Side::Right);
        }
    }
    return *f.match[choice];
}

std::vector<std::pair<int, int>> assemble_edges(
    Prepared& pr, const Pairing& pairing,
    const std::map<std::string, int>* choice_override) {
    std::vector<std::pair<int, int>> edges;
    for (FaceInfo& f : pr.faces) {
        if (f.tag.tag == "SQUARE") {
            if (f.chain_ids.size() != 2)
                throw TkhError("MALFORMED",
                               "square face without exactly two chains");
            edges.emplace_back(f.chain_ids[0], f.chain_ids[1]);
            continue;
        }
        if (!is_mu2_tag(f.tag))
            throw TkhError("MALFORMED", "face of unexpected type " + f.tag.tag);
        if (f.chain_ids.size() != 4)
            throw TkhError("MALFORMED",
                           "multiplicity-2 face without exactly four chains");
        int choice = pairing_choice(pairing, f.tag);
        if (choice_override) {
            auto it = choice_override->find(f.key);
            if (it != choice_override->end()) choice = it->second;
        }
        const Matching& m = face_matching(f, pairing, choice);
        for (const auto& [a, b] : m.pairs) {
            auto find_mid = [&](const Intermediate& want) {
                for (size_t i = 0; i < f.mids.size(); ++i)
                    if (f.mids[i] == want) return f.chain_ids[i];
                throw TkhError("MALFORMED", "matching state absent from face");
            };
            edges.emplace_back(find_mid(a), find_mid(b));
        }
    }
    return edges;
}

std::vector<int> cycle_lengths(int n,
                               const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge id, other)
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].emplace_back(static_cast<int>(e), edges[e].second);
        adj[edges[e].second].emplace_back(static_cast<int>(e), edges[e].first);
    }
    for (const auto& a : adj)
        if (a.size() != 2)
            throw TkhError("MALFORMED", "boundary graph is not 2-regular");
    std::vector<bool> seen(n, false);
    std::vector<int> out;
    for (int v0 = 0; v0 < n; ++v0) {
        if (seen[v0]) continue;
        int len = 0;
        int cur = v0;
        int in_edge = -1;
        do {
            seen[cur] = true;
            const auto& step =
                adj[cur][0].first == in_edge ? adj[cur][1] : adj[cur][0];
            in_edge = step.first;
            cur = step.second;
            ++len;
        } while (cur != v0);
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

BoundaryGraph boundary_graph(const Decorated& dec, const Pairing& pairing) {
    Prepared pr = prepare(dec);
    BoundaryGraph g;
    g.vertices = static_cast<int>(pr.chains.size());
    g.edges = assemble_edges(pr, pairing, nullptr);
    g.cycles = cycle_lengths(g.vertices, g.edges);
    for (const FaceInfo& f : pr.faces)
        if (is_mu2_tag(f.tag)) g.mu2_faces.push_back(f.key);
    return g;
}

CoverType classify_cover(const BoundaryGraph& g) {
    if (g.cycles == std::vector<int>{6}) return {"SINGLE_SHEET", 0};
    if (g.cycles == std::vector<int>{6, 6}) return {"TRIVIAL_2FOLD", 0};
    if (g.cycles == std::vector<int>{12}) return {"BRANCHED", 1};
    throw TkhError("MALFORMED", "cycle multiset matches no covering type");
}

std::vector<MultivaluedEntry> enumerate_multivalued(const Decorated& dec,
                                                    const Pairing& base) {
    Prepared pr = prepare(dec);
    std::vector<size_t> mu2;
    for (size_t i = 0; i < pr.faces.size(); ++i)
        if (is_mu2_tag(pr.faces[i].tag)) mu2.push_back(i);
    if (mu2.size() > 16)
        throw TkhError("TOO_LARGE", "too many independent choices");

    std::vector<MultivaluedEntry> out;
    for (unsigned bits = 0; bits < (1u << mu2.size()); ++bits) {
        std::map<std::string, int> override_map;
        MultivaluedEntry e;
        for (size_t i = 0; i < mu2.size(); ++i) {
            const FaceInfo& f = pr.faces[mu2[i]];
            const int c = (bits >> i) & 1;
            override_map[f.key] = c;
            e.choices[f.key] =
                f.tag.tag == "Q"
                    ? to_string(c ? Slope::LambdaBar : Slope::Lambda)
                    : to_string(c ? Side::Right : Side::Left);
        }
        const auto edges = assemble_edges(pr, base, &override_map);
        e.cycles = cycle_lengths(static_cast<int>(pr.chains.size()), edges);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const MultivaluedEntry& a, const MultivaluedEntry& b) {
                  return a.choices < b.choices;
              });
    return out;
}

char moduli_system_type(const Diagram& d, const Pairing& pairing) {
    const int n = d.n();
    if (n > 20)
        throw TkhError("TOO_LARGE", "cube too large for moduli enumeration");
    for (unsigned u = 0; u < (1u << n); ++u) {
        std::vector<int> bits(n);
        std::vector<int> zeros;
        for (int i = 0; i < n; ++i) {
            bits[i] = (u >> i) & 1;
            if (!bits[i]) zeros.push_back(i);
        }
        if (zeros.size() < 3) continue;
        const Resolution r = resolve(d, bits);
        const Configuration base = to_configuration(d, r);
        const int z = static_cast<int>(zeros.size());
        for (int i = 0; i < z; ++i)
            for (int j = i + 1; j < z; ++j)
                for (int k = j + 1; k < z; ++k) {
                    const std::set<int> keep{zeros[i], zeros[j], zeros[k]};
                    Configuration cfg = base;
                    for (size_t ai = 0; ai < r.arcs.size(); ++ai)
                        if (!keep.count(r.arcs[ai].crossing))
                            cfg = remove_arc(cfg, static_cast<int>(ai));
                    const Configuration fin = full_surgery(cfg);
                    const int cc = static_cast<int>(cfg.circles.size());
                    const int cf = static_cast<int>(fin.circles.size());
                    for (unsigned ym = 0; ym < (1u << cc); ++ym) {
                        Labeling y(cc);
                        for (int b = 0; b < cc; ++b)
                            y[b] = (ym >> b) & 1 ? 1 : -1;
                        for (unsigned xm = 0; xm < (1u << cf); ++xm) {
                            Labeling x(cf);
                            for (int b = 0; b < cf; ++b)
                                x[b] = (xm >> b) & 1 ? 1 : -1;
                            if (label_sum(y) - 3 != label_sum(x)) continue;
                            if (!(homotopical_grading(cfg, y) ==
                                  homotopical_grading(fin, x)))
                                continue;
                            const Decorated dec{cfg, y, x};
                            if (build_poset(dec).empty()) continue;
                            if (classify_cover(boundary_graph(dec, pairing))
                                    .type == "BRANCHED")
                                return 'D';
                        }
                    }
                }
    }
    return 'C';
}

}  // namespace tkh
