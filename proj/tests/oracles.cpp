#include "oracles.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

using tkh::Diagram;
using tkh::QPoint;
using tkh::Rat;

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The two port pairs each smoothing joins (counterclockwise ports 0..3).
constexpr int kJoin0[2][2] = {{1, 2}, {3, 0}};
constexpr int kJoin1[2][2] = {{0, 1}, {2, 3}};

UnionFind joined_edges(const Diagram& d, const std::vector<int>& u) {
    UnionFind uf(static_cast<int>(d.edges.size()));
    for (int ci = 0; ci < d.n(); ++ci) {
        const auto& pr = d.ports[ci];
        const auto& join = u[ci] ? kJoin1 : kJoin0;
        for (const auto& pair : join)
            uf.unite(pr[pair[0]].edge, pr[pair[1]].edge);
    }
    return uf;
}

}  // namespace

int circle_count(const Diagram& d, const std::vector<int>& u) {
    if (u.size() != static_cast<size_t>(d.n()))
        throw std::invalid_argument("resolution vector size");
    UnionFind uf = joined_edges(d, u);
    std::set<int> roots;
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
        roots.insert(uf.find(e));
    return static_cast<int>(roots.size());
}

namespace {

// --- Smith reduction, local to the oracle ---------------------------------

using Mat = std::vector<std::vector<mpz_class>>;

// Diagonalizes (destructively) and returns the positive nonzero diagonal as
// a divisor chain.
std::vector<mpz_class> smith(Mat m) {
    std::vector<mpz_class> diag;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the submatrix
        size_t pr = rows, pc = cols;
        mpz_class best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    pr = i;
                    pc = j;
                    best = a;
                }
            }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
        bool clean = true;
        for (size_t i = t + 1; i < rows && clean; ++i)
            if (m[i][t] != 0) {
                mpz_class q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;  // remainder: iterate
            }
        if (!clean) continue;
        for (size_t j = t + 1; j < cols && clean; ++j)
            if (m[t][j] != 0) {
                mpz_class q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
        if (!clean) continue;
        // divisibility of the remaining block
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    return diag;
}

// --- The labeled resolution cube ------------------------------------------

// Circles of one resolution, identified by their sorted edge sets.
std::vector<std::vector<int>> mask_circles(const Diagram& d, unsigned mask) {
    std::vector<int> u(d.n());
    for (int i = 0; i < d.n(); ++i) u[i] = (mask >> i) & 1;
    UnionFind uf = joined_edges(d, u);
    std::map<int, std::vector<int>> by_root;
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
        by_root[uf.find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, edges] : by_root) out.push_back(edges);
    std::sort(out.begin(), out.end());
    return out;
}

struct State {
    unsigned mask = 0;
    unsigned labels = 0;  // bit c = circle c of mask_circles(mask) is plus
};

int popcount(unsigned x) { return __builtin_popcount(x); }

}  // namespace

Table planar_khovanov(const Diagram& d) {
    if (d.genus != 0)
        throw std::invalid_argument("planar oracle needs a sphere diagram");
    const int n = d.n();
    const int np = d.n_plus, nm = d.n_minus;

    std::vector<std::vector<std::vector<int>>> circ(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        circ[mask] = mask_circles(d, mask);

    // dense state list per (q, h) block
    struct Key {
        int q, h;
        bool operator<(const Key& o) const {
            return std::tie(q, h) < std::tie(o.q, o.h);
        }
    };
    std::map<Key, std::vector<State>> blocks;
    std::map<std::pair<unsigned, unsigned>, int> pos;  // within its block
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int nc = static_cast<int>(circ[mask].size());
        for (unsigned lab = 0; lab < (1u << nc); ++lab) {
            int h = popcount(mask) - nm;
            int q = np - 2 * nm + popcount(mask) + 2 * popcount(lab) - nc;
            auto& vec = blocks[{q, h}];
            pos[{mask, lab}] = static_cast<int>(vec.size());
            vec.push_back({mask, lab});
        }
    }

    // boundary coefficients: state -> list of (target state, coeff)
    auto boundary = [&](const State& s) {
        std::vector<std::pair<State, int>> out;
        const auto& from_circ = circ[s.mask];
        for (int i = 0; i < n; ++i) {
            if ((s.mask >> i) & 1) continue;
            unsigned m2 = s.mask | (1u << i);
            int sign = popcount(s.mask & ((1u << i) - 1)) % 2 ? -1 : 1;
            const auto& to_circ = circ[m2];
            // circles touching crossing i, on either side
            std::set<int> touch;
            for (const auto& pr : d.ports[i]) touch.insert(pr.edge);
            auto touching = [&](const std::vector<std::vector<int>>& cs) {
                std::vector<int> idx;
                for (int c = 0; c < static_cast<int>(cs.size()); ++c)
                    for (int e : cs[c])
                        if (touch.count(e)) {
                            idx.push_back(c);
                            break;
                        }
                return idx;
            };
            std::vector<int> a = touching(from_circ), b = touching(to_circ);
            // labels on untouched circles carry over by edge-set identity
            auto carry = [&](unsigned lab, unsigned extra_mask) {
                State t{m2, 0};
                for (int c2 = 0; c2 < static_cast<int>(to_circ.size());
                     ++c2) {
                    if ((extra_mask >> c2) & 1) continue;  // set by rule
                    for (int c1 = 0; c1 < static_cast<int>(from_circ.size());
                         ++c1)
                        if (from_circ[c1] == to_circ[c2] &&
                            ((lab >> c1) & 1))
                            t.labels |= 1u << c2;
                }
                return t;
            };
            if (a.size() == 2 && b.size() == 1) {
                bool p0 = (s.labels >> a[0]) & 1, p1 = (s.labels >> a[1]) & 1;
                if (p0 && p1) {  // ++ -> +
                    State t = carry(s.labels, 1u << b[0]);
                    t.labels |= 1u << b[0];
                    out.push_back({t, sign});
                } else if (p0 != p1) {  // +- -> -
                    out.push_back({carry(s.labels, 1u << b[0]), sign});
                }  // -- -> 0
            } else if (a.size() == 1 && b.size() == 2) {
                bool p = (s.labels >> a[0]) & 1;
                unsigned em = (1u << b[0]) | (1u << b[1]);
                if (p) {
                    State t1 = carry(s.labels, em);
                    t1.labels |= 1u << b[0];
                    State t2 = carry(s.labels, em);
                    t2.labels |= 1u << b[1];
                    out.push_back({t1, sign});
                    out.push_back({t2, sign});
                } else {
                    out.push_back({carry(s.labels, em), sign});
                }
            } else {
                throw std::logic_error("smoothing changes 2 circles");
            }
        }
        return out;
    };

    // per quantum grading: matrices d_h, ranks, torsion
    Table table;
    std::set<int> qs;
    for (const auto& [key, vec] : blocks) qs.insert(key.q);
    for (int q : qs) {
        std::map<int, std::vector<State>> level;
        for (const auto& [key, vec] : blocks)
            if (key.q == q) level[key.h] = vec;
        std::map<int, int> rank;
        std::map<int, std::vector<mpz_class>> tors;  // torsion of H^(h+1)
        for (const auto& [h, vec] : level) {
            auto up = level.find(h + 1);
            int rows = up == level.end()
                           ? 0
                           : static_cast<int>(up->second.size());
            Mat m(rows, std::vector<mpz_class>(vec.size(), 0));
            for (size_t col = 0; col < vec.size(); ++col)
                for (const auto& [t, coeff] : boundary(vec[col])) {
                    int row = pos.at({t.mask, t.labels});
                    m[row][col] += coeff;
                }
            std::vector<mpz_class> inv = smith(std::move(m));
            rank[h] = static_cast<int>(inv.size());
            std::vector<mpz_class> tt;
            for (const mpz_class& v : inv)
                if (v > 1) tt.push_back(v);
            tors[h + 1] = tt;
        }
        for (const auto& [h, vec] : level) {
            Group g;
            int rh = rank.count(h) ? rank[h] : 0;
            int rl = rank.count(h - 1) ? rank[h - 1] : 0;
            g.rank = static_cast<int>(vec.size()) - rh - rl;
            if (tors.count(h)) g.torsion = tors[h];
            if (g.rank || !g.torsion.empty()) table[{h, q}] = g;
        }
    }
    return table;
}

bool ray_inside(const std::vector<QPoint>& poly, const QPoint& p) {
    bool inside = false;
    size_t k = poly.size();
    for (size_t i = 0; i < k; ++i) {
        const QPoint& a = poly[i];
        const QPoint& b = poly[(i + 1) % k];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        Rat x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x > p.x) inside = !inside;
    }
    return inside;
}

}  // namespace oracle
