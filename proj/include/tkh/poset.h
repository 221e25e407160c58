// Decorated configurations and their posets of labeled intermediate states:
// brute-force enumeration, multiplicity (exhaustive and closed-form via
// interlacement ranks), circuit nullity, leaf/coleaf reduction, core.
#pragma once

#include <map>
#include <vector>

#include "tkh/config.h"

namespace tkh {

// A configuration with a labeling y of its own circles (initial state) and a
// labeling x of the circles of its full surgery (final state).
struct Decorated {
    Configuration config;
    Labeling y;
    Labeling x;
};

struct PosetVertex {
    unsigned mask = 0;  // bit i set = arc arc_ids[i] has been surgered
    Labeling z;         // labels on the circles of that surgered state
};

struct Poset {
    std::vector<int> arc_ids;  // alive arcs in ascending order
    std::map<unsigned, Configuration> states;
    std::vector<PosetVertex> verts;  // sorted by (level, mask, labels)
    // Covering steps (v, w): w surgeres exactly one arc more than v.
    std::vector<std::pair<int, int>> covers;

    bool empty() const { return verts.empty(); }
    int levels() const { return static_cast<int>(arc_ids.size()); }
    std::vector<int> fiber(unsigned mask) const;
    // All maximal chains as vertex-id sequences from the unsurgered state to
    // the fully surgered one, in deterministic order.
    std::vector<std::vector<int>> chains() const;
};

Poset build_poset(const Decorated& dec);

// Largest fiber size over all cube vertices; 0 when the poset is empty.
int multiplicity_bruteforce(const Decorated& dec);
std::map<unsigned, int> fiber_sizes(const Decorated& dec);

// Closed-form multiplicity of the intermediate state at the arc subset
// aprime, from mod-2 ranks of interlacement submatrices. Throws
// DISCONNECTED or EMPTY_CONFIGURATION.
int multiplicity_rank(const Decorated& dec, const std::vector<int>& aprime);

// Largest closed-form multiplicity over all arc subsets.
int multiplicity_rank_global(const Decorated& dec);

// Product of component multiplicities.
int multiplicity_product(const Decorated& dec);

// Split into connected components (free circles form their own components).
std::vector<Decorated> split_components(const Decorated& dec);

// Predicted circle count after surgery along the given arc subset of a
// one-circle configuration with interlacement matrix m.
int circuit_nullity(const std::vector<std::vector<int>>& m,
                    const std::vector<int>& aprime);

// Arc structure tests. A leaf joins a circle whose only arc end it is; a
// coleaf is a chord whose surgery disconnects the configuration.
bool is_leaf(const Configuration& c, int arc);
bool is_coleaf(const Configuration& c, int arc);

// Strip leaves and coleaves repeatedly; the poset of the input is the poset
// of the reduction times a cube factor of the stripped arc count. Throws
// AMBIGUOUS_LABEL if a stripped arc admits no consistent relabeling.
std::pair<Decorated, int> reduce_leaf_coleaf(const Decorated& dec);

// Drop circles untouched by arcs (labels restricted accordingly).
Decorated core(const Decorated& dec);

}  // namespace tkh
