// Independent reference implementations used only by the tests. Nothing here
// calls into the library's cube, grading, sign, or normal-form code: circle
// counting is plain union-find over port identifications, the planar homology
// table is computed directly from labeled resolutions with textbook edge
// signs and a local Smith reduction, and point-in-polygon is a rational
// ray cast.
#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "tkh/diagram.h"

namespace oracle {

// Number of circles of the resolution u, by union-find over the edge
// identifications each smoothing induces at its crossing.
int circle_count(const tkh::Diagram& d, const std::vector<int>& u);

struct Group {
    int rank = 0;
    std::vector<mpz_class> torsion;  // divisor chain, each > 1

    bool operator==(const Group&) const = default;
};

// (homological grading, quantum grading) -> group; zero groups omitted.
using Table = std::map<std::pair<int, int>, Group>;

// Homology of a crossing-diagram on the sphere, straight from the labeled
// resolution cube with (-1)^(number of earlier 1-bits) edge signs.
Table planar_khovanov(const tkh::Diagram& d);

// Ray-crossing parity of a point against a closed polygon given by its
// vertex cycle (the point must not lie on the boundary): true = inside.
bool ray_inside(const std::vector<tkh::QPoint>& poly, const tkh::QPoint& p);

}  // namespace oracle
