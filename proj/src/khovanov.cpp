#include "tkh/khovanov.h"

#include <algorithm>
#include <sstream>

#include "tkh/snf.h"

namespace tkh {

namespace {

int popcount(unsigned v) {
    int c = 0;
    for (; v; v &= v - 1) ++c;
    return c;
}

}  // namespace

Cube::Cube(const Diagram& d) : n_(d.n()) {
    if (n_ > 20)
        throw TkhError("TOO_LARGE", "cube of " + std::to_string(n_) + " crossings");
    res_.reserve(1u << n_);
    std::vector<int> u(n_, 0);
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        for (int i = 0; i < n_; ++i) u[i] = (mask >> i) & 1;
        res_.push_back(resolve(d, u));
    }
}

Gradings gradings(const Diagram& d, const Resolution& r, unsigned labels) {
    Gradings g;
    int weight = 0;
    for (const int bit : r.u) weight += bit;
    int plus = 0, minus = 0;
    for (size_t i = 0; i < r.circles.size(); ++i) {
        const int deg = (labels >> i) & 1 ? 1 : -1;
        (deg > 0 ? plus : minus) += 1;
        g.H.add(r.circles[i].cls, deg);
    }
    g.h = -d.n_minus + weight;
    g.q = d.n_plus - 2 * d.n_minus + weight + plus - minus;
    return g;
}

std::vector<unsigned> covers(const Diagram& d, const Cube& cube,
                             const EnhancedState& source, unsigned target_mask) {
    const unsigned added = target_mask & ~source.mask;
    if ((source.mask & ~target_mask) != 0 || popcount(added) != 1)
        throw TkhError("NOT_ADJACENT",
                       "target vertex is not one surgery above the source");
    const Resolution& rs = cube.at(source.mask);
    const Resolution& rt = cube.at(target_mask);

    // Circles common to both resolutions keep their labels; the rest are free.
    std::map<std::string, int> source_pos;
    for (size_t i = 0; i < rs.circles.size(); ++i)
        source_pos[rs.circles[i].key] = static_cast<int>(i);
    unsigned fixed_bits = 0, fixed_vals = 0;
    std::vector<int> free_pos;
    for (size_t i = 0; i < rt.circles.size(); ++i) {
        auto it = source_pos.find(rt.circles[i].key);
        if (it == source_pos.end()) {
            free_pos.push_back(static_cast<int>(i));
        } else {
            fixed_bits |= 1u << i;
            if ((source.labels >> it->second) & 1) fixed_vals |= 1u << i;
        }
    }

    const Gradings gs = gradings(d, rs, source.labels);
    std::vector<unsigned> out;
    for (unsigned combo = 0; combo < (1u << free_pos.size()); ++combo) {
        unsigned labels = fixed_vals;
        for (size_t k = 0; k < free_pos.size(); ++k)
            if ((combo >> k) & 1) labels |= 1u << free_pos[k];
        const Gradings gt = gradings(d, rt, labels);
        if (gt.q == gs.q && gt.H == gs.H) out.push_back(labels);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Complex differential(const Diagram& d) {
    Complex c;
    Cube cube(d);
    const int n = cube.n();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const Resolution& r = cube.at(mask);
        const size_t nc = r.circles.size();
        for (unsigned labels = 0; labels < (1u << nc); ++labels) {
            const Gradings g = gradings(d, r, labels);
            Generator gen{mask, labels, g.h, g.q, g.H.key()};
            c.index[{mask, labels}] = static_cast<int>(c.gens.size());
            c.hclasses.emplace(gen.hkey, g.H);
            c.gens.push_back(std::move(gen));
        }
    }
    for (int id = 0; id < static_cast<int>(c.gens.size()); ++id) {
        const Generator& gen = c.gens[id];
        for (int i = 0; i < n; ++i) {
            if ((gen.mask >> i) & 1) continue;
            int sign = 1;
            for (int j = 0; j < i; ++j)
                if ((gen.mask >> j) & 1) sign = -sign;
            const unsigned tmask = gen.mask | (1u << i);
            for (unsigned tl :
                 covers(d, cube, EnhancedState{gen.mask, gen.labels}, tmask))
                c.delta.push_back({id, c.index.at({tmask, tl}), sign});
        }
    }
    std::sort(c.delta.begin(), c.delta.end(),
              [](const Complex::Entry& a, const Complex::Entry& b) {
                  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
              });
    return c;
}

namespace {

// Generators of one (quantum, homotopical) block, grouped by homological
// degree, with the differential restricted to the block.
struct Block {
    std::map<int, std::vector<int>> by_h;  // h -> generator ids
};

}  // namespace

HomologyResult homology(const Complex& c) {
    std::map<std::pair<int, std::string>, Block> blocks;
    for (int id = 0; id < static_cast<int>(c.gens.size()); ++id) {
        const Generator& g = c.gens[id];
        blocks[{g.q, g.hkey}].by_h[g.h].push_back(id);
    }
    // The differential preserves (q, hkey) and raises h by one; a violation
    // would be an upstream grading bug, so check it.
    for (const Complex::Entry& e : c.delta) {
        const Generator& a = c.gens[e.from];
        const Generator& b = c.gens[e.to];
        if (a.q != b.q || a.hkey != b.hkey || b.h != a.h + 1)
            throw TkhError("NOT_A_COMPLEX",
                           "differential entry violates the grading contract");
    }

    HomologyResult result;
    result.hclasses = c.hclasses;
    for (const auto& [key, block] : blocks) {
        // Dense matrices per adjacent level pair, indexed inside the block.
        std::map<int, std::map<int, int>> col_of;  // h -> gen id -> column
        for (const auto& [h, ids] : block.by_h)
            for (size_t k = 0; k < ids.size(); ++k)
                col_of[h][ids[k]] = static_cast<int>(k);
        std::map<int, ZMat> d_at;  // h -> matrix C_h -> C_{h+1}
        for (const auto& [h, ids] : block.by_h) {
            auto next = block.by_h.find(h + 1);
            const size_t rows = next == block.by_h.end() ? 0 : next->second.size();
            d_at[h] = ZMat(rows, std::vector<mpz_class>(ids.size(), 0));
        }
        for (const Complex::Entry& e : c.delta) {
            const Generator& a = c.gens[e.from];
            if (a.q != key.first || a.hkey != key.second) continue;
            d_at[a.h][col_of[a.h + 1][e.to]][col_of[a.h][e.from]] += e.coeff;
        }
        // The squared differential must vanish on every adjacent pair.
        for (const auto& [h, m] : d_at) {
            auto up = d_at.find(h + 1);
            if (up == d_at.end() || up->second.empty() || m.empty()) continue;
            const ZMat& a = up->second;
            const ZMat& b = m;
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b[0].size(); ++j) {
                    mpz_class s = 0;
                    for (size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
                    if (s != 0)
                        throw TkhError("NOT_A_COMPLEX",
                                       "squared differential is nonzero");
                }
        }
        std::map<int, std::vector<mpz_class>> inv_at;
        for (const auto& [h, m] : d_at)
            inv_at[h] = m.empty() ? std::vector<mpz_class>{} : smith_invariants(m);
        for (const auto& [h, ids] : block.by_h) {
            const int out_rank = static_cast<int>(inv_at[h].size());
            int in_rank = 0;
            std::vector<mpz_class> torsion;
            auto below = inv_at.find(h - 1);
            if (below != inv_at.end()) {
                in_rank = static_cast<int>(below->second.size());
                for (const mpz_class& f : below->second)
                    if (f > 1) torsion.push_back(f);
            }
            Group g;
            g.rank = static_cast<int>(ids.size()) - out_rank - in_rank;
            g.torsion = std::move(torsion);
            if (g.rank != 0 || !g.torsion.empty())
                result.groups[{key.first, key.second, h}] = std::move(g);
        }
    }
    return result;
}

HomologyResult compute_homology(const Diagram& d) {
    return homology(differential(d));
}

bool verify_dsquare(const Diagram& d) {
    try {
        homology(differential(d));
    } catch (const TkhError& e) {
        if (e.code == "NOT_A_COMPLEX") return false;
        throw;
    }
    return true;
}

InvarianceReport verify_invariance(const Diagram& a, const Diagram& b) {
    const HomologyResult ha = compute_homology(a);
    const HomologyResult hb = compute_homology(b);
    InvarianceReport rep;
    if (ha.groups.size() != hb.groups.size()) {
        rep.equal = false;
        rep.detail = "different numbers of nonzero groups";
        return rep;
    }
    auto ia = ha.groups.begin();
    auto ib = hb.groups.begin();
    for (; ia != ha.groups.end(); ++ia, ++ib) {
        if (ia->first != ib->first || ia->second.rank != ib->second.rank ||
            ia->second.torsion != ib->second.torsion) {
            std::ostringstream os;
            os << "mismatch at (q=" << std::get<0>(ia->first) << ", H=\""
               << std::get<1>(ia->first) << "\", h=" << std::get<2>(ia->first)
               << ")";
            rep.equal = false;
            rep.detail = os.str();
            return rep;
        }
    }
    rep.detail = "summaries agree";
    return rep;
}

}  // namespace tkh
