#include "tkh/config.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tkh {

std::vector<int> Configuration::alive_arcs() const {
    std::vector<int> out;
    for (size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].alive) out.push_back(static_cast<int>(i));
    return out;
}

std::string Configuration::circle_key(int ci) const {
    std::vector<int> g;
    for (const auto& ids : circles[ci].gaps) g.insert(g.end(), ids.begin(), ids.end());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::ostringstream os;
    for (size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
    return os.str();
}

bool Configuration::is_chord(int ai) const {
    return arcs[ai].end[0].circle == arcs[ai].end[1].circle;
}

int Configuration::components() const {
    int n = static_cast<int>(circles.size());
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const CArc& a : arcs)
        if (a.alive) uf[find(a.end[0].circle)] = find(a.end[1].circle);
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++c;
    return c;
}

bool Configuration::arcs_connected() const { return components() <= 1; }

void Configuration::check() const {
    for (size_t ci = 0; ci < circles.size(); ++ci) {
        const CCircle& c = circles[ci];
        size_t k = c.slots.size();
        size_t want_gains = k == 0 ? 1 : k;
        if (c.gains.size() != want_gains)
            throw std::logic_error("circle gain array has wrong length");
        if (!c.gaps.empty() && c.gaps.size() != want_gains)
            throw std::logic_error("circle gap array has wrong length");
        for (size_t s = 0; s < k; ++s) {
            auto [ai, e] = c.slots[s];
            if (ai < 0 || ai >= static_cast<int>(arcs.size()) || e < 0 || e > 1)
                throw std::logic_error("slot references a bad arc end");
            if (!arcs[ai].alive)
                throw std::logic_error("slot references a dead arc");
            if (arcs[ai].end[e].circle != static_cast<int>(ci) ||
                arcs[ai].end[e].pos != static_cast<int>(s))
                throw std::logic_error("arc end back reference mismatch");
        }
    }
    for (const CArc& a : arcs) {
        if (!a.alive) continue;
        for (int e = 0; e < 2; ++e) {
            int ci = a.end[e].circle;
            if (ci < 0 || ci >= static_cast<int>(circles.size()))
                throw std::logic_error("arc end references a bad circle");
            int p = a.end[e].pos;
            if (p < 0 || p >= circles[ci].size())
                throw std::logic_error("arc end position out of range");
        }
    }
}

int label_sum(const Labeling& z) {
    int s = 0;
    for (int v : z) s += v;
    return s;
}

HClass homotopical_grading(const Configuration& c, const Labeling& z) {
    HClass h;
    for (size_t i = 0; i < c.circles.size(); ++i)
        h.add(normalize(c.circles[i].cls()), z[i]);
    return h;
}

void assign_gap_ids(Configuration& c) {
    c.next_gap_id = 0;
    for (CCircle& circ : c.circles) {
        circ.gaps.clear();
        size_t n = circ.gains.size();
        for (size_t i = 0; i < n; ++i) circ.gaps.push_back({c.next_gap_id++});
    }
}

bool interlaced(const Configuration& c, int a, int b) {
    const CArc& x = c.arcs[a];
    const CArc& y = c.arcs[b];
    if (x.end[0].circle != x.end[1].circle) return false;
    if (y.end[0].circle != x.end[0].circle ||
        y.end[1].circle != x.end[0].circle)
        return false;
    int n = c.circles[x.end[0].circle].size();
    // Walk the open interval from x's end 0 to x's end 1; count y ends inside.
    int inside = 0;
    for (int i = (x.end[0].pos + 1) % n; i != x.end[1].pos; i = (i + 1) % n)
        if (i == y.end[0].pos || i == y.end[1].pos) ++inside;
    return inside == 1;
}

std::vector<int> merge_tree(const Configuration& c) {
    int n = static_cast<int>(c.circles.size());
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<int> tree;
    for (size_t i = 0; i < c.arcs.size(); ++i) {
        const CArc& a = c.arcs[i];
        if (!a.alive) continue;
        int r0 = find(a.end[0].circle), r1 = find(a.end[1].circle);
        if (r0 != r1) {
            uf[r0] = r1;
            tree.push_back(static_cast<int>(i));
        }
    }
    return tree;
}

std::vector<std::vector<int>> interlacement_matrix(const Configuration& c) {
    if (!c.arcs_connected())
        throw std::logic_error("interlacement needs a connected configuration");
    std::vector<int> tree = merge_tree(c);
    // Merge down to one circle, leaving the co-core of every merged band as a
    // phantom chord that stands in for the merged arc.
    Configuration m = c;
    std::vector<int> stand_in(c.arcs.size());
    std::iota(stand_in.begin(), stand_in.end(), 0);
    for (int ai : tree) {
        int adj = -1;
        m = surger(m, ai, &adj);
        stand_in[ai] = adj;
    }
    size_t n = c.arcs.size();
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        if (!c.arcs[i].alive) continue;
        for (size_t j = 0; j < n; ++j) {
            if (j == i || !c.arcs[j].alive) continue;
            mat[i][j] = interlaced(m, stand_in[i], stand_in[j]) ? 1 : 0;
        }
    }
    return mat;
}

int rank_mod2(std::vector<std::vector<int>> m) {
    int rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && !(m[piv][c] & 1)) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = 0; i < rows; ++i)
            if (i != r && (m[i][c] & 1))
                for (size_t j = c; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace tkh
