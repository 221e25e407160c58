// Smith normal form over arbitrary-precision integers: ranks and invariant
// factors of sparse integer matrices, sized for desk-scale chain complexes.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace tkh {

using ZMat = std::vector<std::vector<mpz_class>>;

// Invariant factors d1 | d2 | ... (nonzero diagonal of the Smith form, made
// positive). The rank of the matrix is the number of factors returned.
std::vector<mpz_class> smith_invariants(ZMat m);

// Rank over the rationals (= number of invariant factors).
int z_rank(const ZMat& m);

}  // namespace tkh
