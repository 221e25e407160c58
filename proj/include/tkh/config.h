// Abstract resolution configurations: disjoint circles carrying cyclic
// sequences of arc endpoints, plus surgery arcs. Beyond the combinatorics,
// every circle stores per-segment deck translations ("gains" in Z^2) between
// canonical lifts of consecutive endpoints, and every arc stores a band gain
// and a per-end side bit (left/right of the circle's stored traversal).
// This is enough to recompute homology classes of circles and arcs through
// arbitrary surgeries, entirely combinatorially.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tkh/hclass.h"

namespace tkh {

enum class ArcSide { Left, Right };

inline ArcSide flip(ArcSide s) {
    return s == ArcSide::Left ? ArcSide::Right : ArcSide::Left;
}

struct ArcEnd {
    int circle = -1;  // index into Configuration::circles
    int pos = -1;     // slot index in that circle's cyclic sequence
};

struct CArc {
    std::string name;
    ArcEnd end[2];
    ArcSide side[2] = {ArcSide::Right, ArcSide::Right};
    IVec gain;                      // deck translation across the band, end0 -> end1
    std::optional<IVec> cls;        // declared/derived normalized class, where defined
    bool alive = true;              // false once surgered away
};

struct CCircle {
    // slots[i] = (arc index, end index 0/1); gains[i] = translation from the
    // canonical lift of slots[i] to that of slots[i+1 mod k]. A circle with no
    // slots keeps a single gain entry equal to its class.
    std::vector<std::pair<int, int>> slots;
    std::vector<IVec> gains;
    // gaps[i] lists the ids of the original-configuration pieces between
    // slots[i] and slots[i+1]. Surgery cuts circles only at slots, so gap
    // pieces survive (fusing when slots disappear); the union of a circle's
    // gap ids is a stable identity across surgery orders.
    std::vector<std::vector<int>> gaps;
    std::optional<bool> disk_left;  // for contractible circles: disk side
    std::string name;               // display name of an input circle

    IVec cls() const {
        IVec s;
        for (const IVec& g : gains) s = s + g;
        return s;
    }
    int size() const { return static_cast<int>(slots.size()); }
};

struct Configuration {
    int genus = 1;
    std::vector<CCircle> circles;
    std::vector<CArc> arcs;   // fixed order; arcs keep indices when surgered
    int next_gap_id = 0;

    int index() const {
        int k = 0;
        for (const CArc& a : arcs) k += a.alive ? 1 : 0;
        return k;
    }
    std::vector<int> alive_arcs() const;

    // Canonical identity of a circle: its sorted gap id set, rendered as a key.
    std::string circle_key(int ci) const;

    // Which circle currently carries the given arc end; recomputed views.
    bool is_chord(int ai) const;       // both ends on one circle
    bool arcs_connected() const;       // connectivity of circle+arc incidence
    int components() const;            // count of connected components

    // Internal consistency (slot back references, gain array sizes).
    void check() const;
};

// A labeling assigns +1 / -1 to every circle (by index).
using Labeling = std::vector<int>;

// Sum of labels.
int label_sum(const Labeling& z);

// Homotopical grading of a labeled configuration: sum of deg * [circle].
HClass homotopical_grading(const Configuration& c, const Labeling& z);

// Build a configuration's initial gap ids (call once after hand-construction).
void assign_gap_ids(Configuration& c);

// --- Surgery --------------------------------------------------------------

// Surger along one arc. The arc must be alive; it is marked dead in the
// result. Circles are re-spliced according to the side bits:
//   - ends on distinct circles        -> merge (second circle reversed iff
//                                        the side bits differ),
//   - chord with equal side bits      -> untwisted split into two circles,
//   - chord with opposite side bits   -> reconnection into one circle.
// Classes, gains, side bits and disk flags of everything else are updated.
// If adjoint != nullptr, a merge leaves a phantom chord (the band's co-core)
// in the configuration and *adjoint receives its arc index.
Configuration surger(const Configuration& c, int arc, int* adjoint = nullptr);

// Surger along a set of arcs, ascending by index.
Configuration surger_set(const Configuration& c, const std::vector<int>& arcs);

// Delete a live arc without surgering it: its endpoints vanish from the
// circles (the adjacent gaps fuse) and the arc is marked dead. The circles
// themselves and all other arcs are unchanged.
Configuration remove_arc(const Configuration& c, int arc);

// Full surgery s(D) along all alive arcs.
Configuration full_surgery(const Configuration& c);

// --- Interlacement --------------------------------------------------------

// True iff chords a and b on the same circle have interlaced endpoints.
bool interlaced(const Configuration& c, int a, int b);

// Lexicographically smallest spanning tree of the circle-arc incidence graph
// (arc indices, ascending greedy). Empty for one-circle configurations.
std::vector<int> merge_tree(const Configuration& c);

// Interlacement matrix over the full arc set: merge the configuration to one
// circle along merge_tree (leaving adjoint chords for the merged arcs), then
// record interlacement of everything on that circle. Requires connectivity.
// Entry (i,j) indexed by original arc order.
std::vector<std::vector<int>> interlacement_matrix(const Configuration& c);

// Rank of a 0/1 matrix over Z/2.
int rank_mod2(std::vector<std::vector<int>> m);

}  // namespace tkh
