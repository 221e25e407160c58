// Posets of labeled intermediate surgery states over a decorated
// configuration, and the two multiplicity computations (exhaustive walk of
// the poset vs. mod-2 interlacement ranks).
#include "tkh/poset.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tkh/diagram.h"

namespace tkh {

namespace {

// Gap ids are the circle identity mechanism; hand-built configurations may
// arrive without them.
void ensure_gaps(Configuration& c) {
    for (const CCircle& circ : c.circles)
        if (circ.gaps.empty() && !circ.gains.empty()) {
            assign_gap_ids(c);
            return;
        }
}

void check_labels(const Labeling& z, size_t want, const char* what) {
    if (z.size() != want)
        throw std::logic_error(std::string(what) + " labeling has wrong length");
    for (int v : z)
        if (v != 1 && v != -1)
            throw std::logic_error(std::string(what) + " labels must be +1/-1");
}

std::map<std::string, int> labels_by_key(const Configuration& st,
                                         const Labeling& z) {
    std::map<std::string, int> out;
    for (size_t i = 0; i < st.circles.size(); ++i)
        out[st.circle_key(static_cast<int>(i))] = z[i];
    return out;
}

std::vector<std::vector<int>> submatrix(
    const std::vector<std::vector<int>>& m, const std::vector<int>& rows,
    const std::vector<int>& cols) {
    std::vector<std::vector<int>> out;
    out.reserve(rows.size());
    for (int r : rows) {
        std::vector<int> row;
        row.reserve(cols.size());
        for (int c : cols) row.push_back(m[r][c]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_minus(const std::vector<int>& a,
                           const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
    return out;
}

std::vector<int> set_cap(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<int> Poset::fiber(unsigned mask) const {
    std::vector<int> out;
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].mask == mask) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<std::vector<int>> Poset::chains() const {
    std::vector<std::vector<int>> result;
    if (verts.empty()) return result;
    unsigned full = arc_ids.empty() ? 0u : ((1u << arc_ids.size()) - 1u);
    // Adjacency in sorted cover order keeps the enumeration deterministic;
    // depth-first from each unsurgered vertex in index order.
    std::map<int, std::vector<int>> succ;
    for (const auto& [a, b] : covers) succ[a].push_back(b);
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int v) -> void {
        cur.push_back(v);
        if (verts[v].mask == full) result.push_back(cur);
        auto it = succ.find(v);
        if (it != succ.end())
            for (int w : it->second) self(self, w);
        cur.pop_back();
    };
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].mask == 0u) dfs(dfs, static_cast<int>(i));
    return result;
}

Poset build_poset(const Decorated& dec) {
    Poset P;
    Configuration base = dec.config;
    ensure_gaps(base);
    P.arc_ids = base.alive_arcs();
    int n = static_cast<int>(P.arc_ids.size());
    if (n > 20) throw std::logic_error("poset too large to enumerate");
    unsigned full = n == 0 ? 0u : ((1u << n) - 1u);

    for (unsigned m = 0; m <= full; ++m) {
        std::vector<int> subset;
        for (int b = 0; b < n; ++b)
            if (m & (1u << b)) subset.push_back(P.arc_ids[b]);
        P.states[m] = surger_set(base, subset);
        if (m == full) break;  // guard for n == 0 wraparound
    }

    check_labels(dec.y, base.circles.size(), "initial");
    check_labels(dec.x, P.states.at(full).circles.size(), "final");
    HClass target = homotopical_grading(base, dec.y);

    using VKey = std::pair<unsigned, Labeling>;
    std::map<VKey, int> vid;
    std::vector<PosetVertex> verts;
    std::vector<std::pair<int, int>> covers;
    auto add_vertex = [&](unsigned mask, const Labeling& z) {
        auto [it, fresh] = vid.try_emplace({mask, z}, static_cast<int>(verts.size()));
        if (fresh) verts.push_back({mask, z});
        return it->second;
    };

    add_vertex(0u, dec.y);
    // Sweep level by level; verts grows monotonically and is grouped by level
    // because every cover adds exactly one arc.
    for (size_t vi = 0; vi < verts.size(); ++vi) {
        unsigned mask = verts[vi].mask;
        const Labeling z1 = verts[vi].z;
        const Configuration& st1 = P.states.at(mask);
        for (int b = 0; b < n; ++b) {
            if (mask & (1u << b)) continue;
            unsigned m2 = mask | (1u << b);
            const Configuration& st2 = P.states.at(m2);
            // Circles untouched by this surgery keep their labels; only the
            // circles holding the surgered arc's ends are renegotiated.
            int aid = P.arc_ids[b];
            const CArc& arc = st1.arcs[aid];
            std::set<int> touched{arc.end[0].circle, arc.end[1].circle};
            std::map<std::string, int> kept;
            for (size_t ci = 0; ci < st1.circles.size(); ++ci)
                if (!touched.count(static_cast<int>(ci)))
                    kept[st1.circle_key(static_cast<int>(ci))] = z1[ci];
            Labeling z2(st2.circles.size(), 0);
            std::vector<int> free_idx;
            for (size_t ci = 0; ci < st2.circles.size(); ++ci) {
                auto it = kept.find(st2.circle_key(static_cast<int>(ci)));
                if (it != kept.end())
                    z2[ci] = it->second;
                else
                    free_idx.push_back(static_cast<int>(ci));
            }
            int nf = static_cast<int>(free_idx.size());
            for (unsigned combo = 0; combo < (1u << nf); ++combo) {
                for (int f = 0; f < nf; ++f)
                    z2[free_idx[f]] = (combo & (1u << f)) ? 1 : -1;
                if (label_sum(z2) != label_sum(z1) - 1) continue;
                if (!(homotopical_grading(st2, z2) == target)) continue;
                int wid = add_vertex(m2, z2);
                covers.push_back({static_cast<int>(vi), wid});
            }
        }
    }

    // Keep only the interval between the initial and final labeled states.
    auto bot = vid.find({full, dec.x});
    std::vector<char> up(verts.size(), 0);
    if (bot != vid.end()) {
        std::map<int, std::vector<int>> pred;
        for (const auto& [a, b] : covers) pred[b].push_back(a);
        std::vector<int> stack{bot->second};
        up[bot->second] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto it = pred.find(v);
            if (it != pred.end())
                for (int w : it->second)
                    if (!up[w]) {
                        up[w] = 1;
                        stack.push_back(w);
                    }
        }
    }

    std::vector<int> keep;
    for (size_t i = 0; i < verts.size(); ++i)
        if (up[i]) keep.push_back(static_cast<int>(i));
    std::sort(keep.begin(), keep.end(), [&](int a, int b) {
        int la = __builtin_popcount(verts[a].mask);
        int lb = __builtin_popcount(verts[b].mask);
        if (la != lb) return la < lb;
        if (verts[a].mask != verts[b].mask) return verts[a].mask < verts[b].mask;
        return verts[a].z < verts[b].z;
    });
    std::vector<int> remap(verts.size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    for (int old : keep) P.verts.push_back(verts[old]);
    for (const auto& [a, b] : covers)
        if (remap[a] >= 0 && remap[b] >= 0)
            P.covers.push_back({remap[a], remap[b]});
    std::sort(P.covers.begin(), P.covers.end());
    return P;
}

std::map<unsigned, int> fiber_sizes(const Decorated& dec) {
    Poset P = build_poset(dec);
    std::map<unsigned, int> out;
    unsigned full =
        P.arc_ids.empty() ? 0u : ((1u << P.arc_ids.size()) - 1u);
    for (unsigned m = 0; m <= full; ++m) {
        out[m] = 0;
        if (m == full) break;
    }
    for (const PosetVertex& v : P.verts) out[v.mask] += 1;
    return out;
}

int multiplicity_bruteforce(const Decorated& dec) {
    int best = 0;
    for (const auto& [m, k] : fiber_sizes(dec)) best = std::max(best, k);
    return best;
}

namespace {

// Closed-form fiber multiplicity at one arc subset, given the interlacement
// matrix and the merge tree. All index sets are ascending arc-index lists.
int rank_mu(const std::vector<std::vector<int>>& M, const std::vector<int>& alive,
            const std::vector<int>& tree, const std::vector<int>& aprime) {
    std::vector<int> off_tree = set_minus(alive, tree);
    int r = rank_mod2(submatrix(M, off_tree, off_tree));
    if (r == 0) return 1;
    if (r != 2)
        throw std::logic_error(
            "interlacement rank above two on a nonempty configuration");
    std::vector<int> rows = set_minus(aprime, tree);
    std::vector<int> cols_main = set_minus(alive, set_cap(aprime, tree));
    std::vector<int> cols_aux = set_minus(tree, aprime);
    int ra = rank_mod2(submatrix(M, rows, cols_main));
    int rb = rank_mod2(submatrix(M, rows, cols_aux));
    return (ra - rb == 1) ? 2 : 1;
}

}  // namespace

int multiplicity_rank(const Decorated& dec, const std::vector<int>& aprime) {
    if (!dec.config.arcs_connected())
        throw TkhError("DISCONNECTED",
                       "closed-form multiplicity needs a connected configuration");
    if (build_poset(dec).empty())
        throw TkhError("EMPTY_CONFIGURATION",
                       "closed-form multiplicity needs a nonempty poset");
    std::vector<int> alive = dec.config.alive_arcs();
    std::vector<int> sub = sorted_unique(aprime);
    for (int a : sub)
        if (!std::binary_search(alive.begin(), alive.end(), a))
            throw std::logic_error("arc subset leaves the alive arc set");
    std::vector<std::vector<int>> M = interlacement_matrix(dec.config);
    std::vector<int> tree = merge_tree(dec.config);
    std::sort(tree.begin(), tree.end());
    return rank_mu(M, alive, tree, sub);
}

int multiplicity_rank_global(const Decorated& dec) {
    if (!dec.config.arcs_connected())
        throw TkhError("DISCONNECTED",
                       "closed-form multiplicity needs a connected configuration");
    if (build_poset(dec).empty())
        throw TkhError("EMPTY_CONFIGURATION",
                       "closed-form multiplicity needs a nonempty poset");
    std::vector<int> alive = dec.config.alive_arcs();
    std::vector<std::vector<int>> M = interlacement_matrix(dec.config);
    std::vector<int> tree = merge_tree(dec.config);
    std::sort(tree.begin(), tree.end());
    int n = static_cast<int>(alive.size());
    int best = 1;
    for (unsigned m = 0; m < (1u << n); ++m) {
        std::vector<int> sub;
        for (int b = 0; b < n; ++b)
            if (m & (1u << b)) sub.push_back(alive[b]);
        best = std::max(best, rank_mu(M, alive, tree, sub));
    }
    return best;
}

std::vector<Decorated> split_components(const Decorated& dec) {
    Configuration whole = dec.config;
    ensure_gaps(whole);
    check_labels(dec.y, whole.circles.size(), "initial");
    Configuration fullw = full_surgery(whole);
    check_labels(dec.x, fullw.circles.size(), "final");

    int nc = static_cast<int>(whole.circles.size());
    std::vector<int> uf(nc);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const CArc& a : whole.arcs)
        if (a.alive) uf[find(a.end[0].circle)] = find(a.end[1].circle);

    // Components ordered by their smallest circle index.
    std::map<int, int> comp_of_root;
    std::vector<std::vector<int>> comp_circles;
    for (int i = 0; i < nc; ++i) {
        int r = find(i);
        auto [it, fresh] =
            comp_of_root.try_emplace(r, static_cast<int>(comp_circles.size()));
        if (fresh) comp_circles.push_back({});
        comp_circles[it->second].push_back(i);
    }

    std::map<int, int> comp_of_gap;
    for (int i = 0; i < nc; ++i)
        for (const auto& ids : whole.circles[i].gaps)
            for (int id : ids) comp_of_gap[id] = comp_of_root.at(find(i));

    std::map<std::string, int> final_labels = labels_by_key(fullw, dec.x);

    std::vector<Decorated> out;
    for (const std::vector<int>& circles : comp_circles) {
        Decorated part;
        part.config.genus = whole.genus;
        part.config.next_gap_id = whole.next_gap_id;
        std::vector<int> circle_map(nc, -1);
        for (int ci : circles) {
            circle_map[ci] = static_cast<int>(part.config.circles.size());
            part.config.circles.push_back(whole.circles[ci]);
            part.y.push_back(dec.y[ci]);
        }
        std::vector<int> arc_map(whole.arcs.size(), -1);
        for (size_t ai = 0; ai < whole.arcs.size(); ++ai) {
            const CArc& a = whole.arcs[ai];
            if (!a.alive || circle_map[a.end[0].circle] < 0) continue;
            CArc na = a;
            na.end[0].circle = circle_map[a.end[0].circle];
            na.end[1].circle = circle_map[a.end[1].circle];
            arc_map[ai] = static_cast<int>(part.config.arcs.size());
            part.config.arcs.push_back(na);
        }
        for (CCircle& c : part.config.circles)
            for (auto& [ai, e] : c.slots) ai = arc_map[ai];
        part.config.check();
        Configuration fullp = full_surgery(part.config);
        for (size_t ci = 0; ci < fullp.circles.size(); ++ci)
            part.x.push_back(
                final_labels.at(fullp.circle_key(static_cast<int>(ci))));
        out.push_back(std::move(part));
    }
    return out;
}

int multiplicity_product(const Decorated& dec) {
    int prod = 1;
    for (const Decorated& part : split_components(dec))
        prod *= multiplicity_bruteforce(part);
    return prod;
}

int circuit_nullity(const std::vector<std::vector<int>>& m,
                    const std::vector<int>& aprime) {
    std::vector<int> sub = sorted_unique(aprime);
    for (int a : sub)
        if (a < 0 || a >= static_cast<int>(m.size()))
            throw std::logic_error("arc index outside the matrix");
    int r = rank_mod2(submatrix(m, sub, sub));
    return static_cast<int>(sub.size()) - r + 1;
}

bool is_leaf(const Configuration& c, int arc) {
    const CArc& a = c.arcs[arc];
    if (!a.alive || a.end[0].circle == a.end[1].circle) return false;
    return c.circles[a.end[0].circle].size() == 1 ||
           c.circles[a.end[1].circle].size() == 1;
}

bool is_coleaf(const Configuration& c, int arc) {
    const CArc& a = c.arcs[arc];
    if (!a.alive || a.end[0].circle != a.end[1].circle) return false;
    return surger(c, arc).components() == c.components() + 1;
}

std::pair<Decorated, int> reduce_leaf_coleaf(const Decorated& dec) {
    Decorated cur = dec;
    ensure_gaps(cur.config);
    check_labels(cur.y, cur.config.circles.size(), "initial");
    int factor = 0;
    for (;;) {
        int pick = -1;
        for (int ai : cur.config.alive_arcs())
            if (is_leaf(cur.config, ai) || is_coleaf(cur.config, ai)) {
                pick = ai;
                break;
            }
        if (pick < 0) break;

        Configuration next = surger(cur.config, pick);
        // Untouched circles keep labels; each new circle's label is forced by
        // per-component quantum bookkeeping: within its component, the labels
        // of the fully surgered state determine the label sum.
        const CArc& arc = cur.config.arcs[pick];
        std::set<int> touched{arc.end[0].circle, arc.end[1].circle};
        std::map<std::string, int> kept;
        for (size_t ci = 0; ci < cur.config.circles.size(); ++ci)
            if (!touched.count(static_cast<int>(ci)))
                kept[cur.config.circle_key(static_cast<int>(ci))] = cur.y[ci];

        int nn = static_cast<int>(next.circles.size());
        std::vector<int> uf(nn);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const CArc& a : next.arcs)
            if (a.alive) uf[find(a.end[0].circle)] = find(a.end[1].circle);
        std::map<int, int> comp_of_gap;
        for (int ci = 0; ci < nn; ++ci)
            for (const auto& ids : next.circles[ci].gaps)
                for (int id : ids) comp_of_gap[id] = find(ci);
        std::map<int, int> arcs_in;
        for (const CArc& a : next.arcs)
            if (a.alive) arcs_in[find(a.end[0].circle)] += 1;
        Configuration fullc = full_surgery(cur.config);
        std::map<int, int> final_sum;
        for (size_t fi = 0; fi < fullc.circles.size(); ++fi) {
            const auto& gaps = fullc.circles[fi].gaps;
            int comp = comp_of_gap.at(gaps.at(0).at(0));
            final_sum[comp] += cur.x[fi];
        }

        Labeling z(nn, 0);
        std::map<int, int> new_in_comp;  // component root -> new circle index
        for (int ci = 0; ci < nn; ++ci) {
            auto it = kept.find(next.circle_key(ci));
            if (it != kept.end()) {
                z[ci] = it->second;
            } else {
                if (!new_in_comp.emplace(find(ci), ci).second)
                    throw TkhError("AMBIGUOUS_LABEL",
                                   "two relabeled circles share a component");
            }
        }
        for (const auto& [comp, ci] : new_in_comp) {
            int want = final_sum.count(comp) ? final_sum.at(comp) : 0;
            want += arcs_in.count(comp) ? arcs_in.at(comp) : 0;
            int others = 0;
            for (int cj = 0; cj < nn; ++cj)
                if (cj != ci && find(cj) == comp) others += z[cj];
            int mine = want - others;
            if (mine != 1 && mine != -1)
                throw TkhError("AMBIGUOUS_LABEL",
                               "no unit label completes the component sum");
            z[ci] = mine;
        }
        if (!(homotopical_grading(next, z) ==
              homotopical_grading(cur.config, cur.y)))
            throw TkhError("AMBIGUOUS_LABEL",
                           "forced label breaks the homotopical grading");

        // The fully surgered state is unchanged as a set of circles, but its
        // index order can shift; re-align the final labels by identity.
        std::map<std::string, int> final_labels = labels_by_key(fullc, cur.x);
        Configuration fulln = full_surgery(next);
        Labeling nx;
        for (size_t fi = 0; fi < fulln.circles.size(); ++fi)
            nx.push_back(final_labels.at(fulln.circle_key(static_cast<int>(fi))));

        cur.config = std::move(next);
        cur.y = std::move(z);
        cur.x = std::move(nx);
        ++factor;
    }
    return {cur, factor};
}

Decorated core(const Decorated& dec) {
    Decorated cur = dec;
    ensure_gaps(cur.config);
    check_labels(cur.y, cur.config.circles.size(), "initial");
    std::vector<int> circle_map(cur.config.circles.size(), -1);
    Decorated out;
    out.config.genus = cur.config.genus;
    out.config.next_gap_id = cur.config.next_gap_id;
    for (size_t ci = 0; ci < cur.config.circles.size(); ++ci) {
        if (cur.config.circles[ci].size() == 0) continue;
        circle_map[ci] = static_cast<int>(out.config.circles.size());
        out.config.circles.push_back(cur.config.circles[ci]);
        out.y.push_back(cur.y[ci]);
    }
    out.config.arcs = cur.config.arcs;
    for (CArc& a : out.config.arcs) {
        if (!a.alive) {
            a.end[0] = {};
            a.end[1] = {};
            continue;
        }
        a.end[0].circle = circle_map[a.end[0].circle];
        a.end[1].circle = circle_map[a.end[1].circle];
    }
    out.config.check();
    Configuration fullo = full_surgery(cur.config);
    std::map<std::string, int> final_labels = labels_by_key(fullo, cur.x);
    Configuration fulln = full_surgery(out.config);
    for (size_t fi = 0; fi < fulln.circles.size(); ++fi)
        out.x.push_back(final_labels.at(fulln.circle_key(static_cast<int>(fi))));
    return out;
}

}  // namespace tkh
