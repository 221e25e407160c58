// Structural classification of decorated configurations of index 2 and 3:
// squares, ladybugs, quasi-ladybugs, and the index-3 case table, keyed
// entirely on computed data (circle count, interlacement shape, disk-side
// flags, normalized classes).
#pragma once

#include <string>
#include <vector>

#include "tkh/poset.h"

namespace tkh {

struct CaseTag {
    std::string tag;
    std::vector<IVec> classes;  // normalized class parameters, when any
};

// Index-2 classification: EMPTY, SQUARE, L0, L_ALPHA(alpha), Q(alpha,beta).
// Throws WRONG_INDEX; throws MALFORMED when a multiplicity-2 configuration
// matches no geometric pattern (inconsistent synthetic input).
CaseTag classify_index2(const Decorated& dec);

// Index-3 classification: REDUCIBLE, EMPTY, or a case tag
// 1, 1p, 2, 2p, 2pp, 3, 4, 5, 6, 7, 8 (= DQ), 9, 10 (= DQ'), with class
// parameters for the tags that carry them. Throws WRONG_INDEX / MALFORMED.
CaseTag classify_index3(const Decorated& dec);

// Loop class of a chord: through the band, closed along the circle piece
// from end 1 forward to end 0. Unnormalized; sign is orientation-dependent.
IVec chord_class(const Configuration& c, int arc);

// Disk side of a chord on a contractible circle. Throws MISSING_GEOMETRY
// without a disk flag, MALFORMED for a twisted (opposite-side) chord.
bool chord_inner(const Configuration& c, int arc);

// Loop class through two joining arcs between the same pair of circles,
// oriented out of the lower-indexed circle through arc a and back through b.
IVec joining_loop_class(const Configuration& c, int a, int b);

}  // namespace tkh
