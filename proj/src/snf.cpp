#include "tkh/snf.h"

#include <cstdlib>
#include <utility>

namespace tkh {

namespace {

// Smallest nonzero entry by absolute value in the lower-right block at
// (r, r); returns false if the block is zero.
bool find_pivot(const ZMat& m, int r, int& pi, int& pj) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    bool found = false;
    mpz_class best;
    for (int i = r; i < rows; ++i) {
        for (int j = r; j < cols; ++j) {
            if (m[i][j] == 0) continue;
            mpz_class a = abs(m[i][j]);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

}  // namespace

std::vector<mpz_class> smith_invariants(ZMat m) {
    std::vector<mpz_class> inv;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    const int bound = rows < cols ? rows : cols;

    for (int r = 0; r < bound; ++r) {
        int pi = -1, pj = -1;
        if (!find_pivot(m, r, pi, pj)) break;
        std::swap(m[r], m[pi]);
        if (pj != r)
            for (int i = r; i < rows; ++i) std::swap(m[i][r], m[i][pj]);

        // Knock out row r and column r; a reduction can revive entries, so
        // loop until the pivot divides everything it faces.
        for (;;) {
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][r] == 0) continue;
                mpz_class q = m[i][r] / m[r][r];
                if (q != 0)
                    for (int j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][r] != 0) {
                    // Remainder smaller than the pivot: promote it.
                    std::swap(m[r], m[i]);
                    clean = false;
                }
            }
            for (int j = r + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                mpz_class q = m[r][j] / m[r][r];
                if (q != 0)
                    for (int i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
                if (m[r][j] != 0) {
                    for (int i = r; i < rows; ++i) std::swap(m[i][r], m[i][j]);
                    clean = false;
                }
            }
            if (clean) break;
        }

        // Divisibility repair: if the pivot misses an entry deeper in the
        // block, fold that row in and redo the elimination at this step.
        bool redo = false;
        for (int i = r + 1; i < rows && !redo; ++i)
            for (int j = r + 1; j < cols && !redo; ++j)
                if (m[i][j] % m[r][r] != 0) {
                    for (int jj = r; jj < cols; ++jj) m[r][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) {
            --r;
            continue;
        }
        inv.push_back(abs(m[r][r]));
    }
    return inv;
}

int z_rank(const ZMat& m) {
    return static_cast<int>(smith_invariants(m).size());
}

}  // namespace tkh
