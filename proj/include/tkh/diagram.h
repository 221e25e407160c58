// Link diagrams drawn on a closed orientable thickened surface, given by
// exact rational geometry in the universal cover of the unit square torus.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tkh/config.h"
#include "tkh/hclass.h"
#include "tkh/rational.h"

namespace tkh {

// Error with a machine-readable code plus human detail, mirrored into the
// CLI's error objects.
struct TkhError : std::runtime_error {
    std::string code;
    TkhError(std::string c, const std::string& detail)
        : std::runtime_error(detail), code(std::move(c)) {}
};

struct Crossing {
    std::string id;
    QPoint pos;  // representative position, components in [0,1)
};

struct EdgeEnd {
    std::string crossing;
    int port = -1;  // 0..3, counterclockwise; odd ports carry the overstrand
};

struct Edge {
    std::string id;
    // Open edges run between two crossing ports; closed edges (no ends) are
    // crossingless loop components.
    std::optional<EdgeEnd> from, to;
    std::vector<QPoint> path;  // polyline lift; endpoints pinned to crossings
    IVec winding;              // deck translation from start lift to end lift
    bool closed() const { return !from.has_value(); }
};

struct Diagram {
    int genus = 1;
    std::vector<Crossing> crossings;
    std::vector<Edge> edges;
    // Oriented link components as sequences of (edge index, forward?).
    std::vector<std::vector<std::pair<int, bool>>> components;

    // Derived on finalize():
    std::map<std::string, int> crossing_index;
    std::map<std::string, int> edge_index;
    struct PortRef {
        int edge = -1;
        int end = -1;  // 0 = from, 1 = to
    };
    std::vector<std::array<PortRef, 4>> ports;  // per crossing
    std::vector<int> sign;                      // +1 / -1 per crossing
    int n_plus = 0, n_minus = 0;

    int n() const { return static_cast<int>(crossings.size()); }
    const QPoint& cpos(int ci) const { return crossings[ci].pos; }

    // Build indices, check structural completeness (every port filled exactly
    // once, components traverse consistently), compute crossing signs.
    // Throws TkhError("PARSE_ERROR", ...) on structural nonsense.
    void finalize();
};

struct ValidationReport {
    bool pass = true;
    std::string code;    // first violated invariant, when !pass
    std::string detail;
};

// Geometric validation: endpoint incidence vs. declared windings, pairwise
// embedded interiors modulo deck translations, counterclockwise port order,
// and genus bounds from the rotation system.
ValidationReport validate(const Diagram& d);

// --- Resolutions ----------------------------------------------------------

// One smoothed circle of a resolution: the cyclic sequence of traversed
// edges, its homology class, and the polyline lift used for disk tests.
struct ResolvedCircle {
    std::vector<std::pair<int, bool>> steps;  // (edge index, forward?)
    IVec cls;
    bool contractible = false;
    std::string key;   // canonical identity, stable across resolutions
    std::vector<QPoint> lift;  // closed polygon (first vertex not repeated)
    bool lift_ccw = false;     // positive signed area (contractible only)
};

// One surgery arc of a resolution: sits at a 0-smoothed crossing. Each end
// records which circle passes it, at which slot, and on which side of that
// circle's traversal the band leaves.
struct ResolvedArc {
    int crossing = -1;
    ArcEnd end[2];
    ArcSide side[2] = {ArcSide::Right, ArcSide::Right};
    IVec band_gain;  // deck translation across the band, end 0 to end 1
};

struct Resolution {
    std::vector<int> u;  // resolution bits, one per crossing in diagram order
    std::vector<ResolvedCircle> circles;
    std::vector<ResolvedArc> arcs;
    // Per circle, per slot: deck translation between consecutive slot lifts,
    // mirroring the configuration's gain structure.
    std::vector<std::vector<IVec>> gains;
};

// Smooth the diagram at every crossing: bit 0 joins ports (1,2) and (3,0),
// bit 1 joins (0,1) and (2,3). Throws LENGTH_MISMATCH if u has wrong size.
Resolution resolve(const Diagram& d, const std::vector<int>& u);

// Inner/outer decomposition of the arcs at a contractible circle. Throws
// NOT_CONTRACTIBLE for a homologically essential circle.
// Returned flags align with the circle's slot order.
std::vector<bool> circle_side_decomposition(const Diagram& d, const Resolution& r,
                                            int circle);

// Normalized homology class of an arc: for a chord, the class of the loop
// through the band closed along either piece of the circle; for an arc
// joining two circles, the class of the band's core closed through canonical
// lifts. Throws NONCONTRACTIBLE_ANCHOR if a touched circle is essential.
IVec arc_class(const Diagram& d, const Resolution& r, int arc);

// Export a resolution as an abstract configuration (circle order preserved;
// contractible circles oriented disk-counterclockwise). Chord classes and
// inner/outer flags are filled in where defined.
Configuration to_configuration(const Diagram& d, const Resolution& r);

}  // namespace tkh
