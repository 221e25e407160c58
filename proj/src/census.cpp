// Index-4 face census: enumerate the index-3 faces of a 4-arc decorated
// configuration's moduli boundary, tally the DQ / DQ' shapes by class
// triple, and count the branch points of their boundary coverings.
#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "moduli_detail.h"
#include "tkh/moduli.h"

namespace tkh {

Census index4_face_census(const Decorated& dec, const Pairing& pairing) {
    if (dec.config.index() != 4)
        throw TkhError("WRONG_INDEX", "face census of index " +
                                          std::to_string(dec.config.index()));
    const Poset P = build_poset(dec);
    if (P.empty())
        throw TkhError("EMPTY_CONFIGURATION", "no labeled surgery chains");

    // One face per arc surgered first and level-1 state, one per arc
    // surgered last and level-3 state; a state with two compatible labelings
    // yields two faces.
    std::vector<Decorated> faces;
    const unsigned full = (1u << 4) - 1;
    for (int bit = 0; bit < 4; ++bit) {
        const int arc = P.arc_ids[bit];
        for (int vid : P.fiber(1u << bit))
            faces.push_back(detail::face_decorated(dec, P, false, arc, vid));
        for (int vid : P.fiber(full ^ (1u << bit)))
            faces.push_back(detail::face_decorated(dec, P, true, arc, vid));
    }

    std::map<std::pair<std::string, std::vector<IVec>>, int> tally;
    int branch = 0;
    for (const Decorated& f : faces) {
        CaseTag t;
        try {
            t = classify_index3(f);
        } catch (const TkhError& e) {
            // Shapes outside the irreducible case table are never DQ / DQ'.
            if (e.code == "MALFORMED" || e.code == "MISSING_GEOMETRY") continue;
            throw;
        }
        if (t.tag != "8" && t.tag != "10") continue;
        std::vector<IVec> triple = t.classes;
        std::sort(triple.begin(), triple.end());
        ++tally[{t.tag == "8" ? "DQ" : "DQ'", triple}];
        const CoverType cv = classify_cover(boundary_graph(f, pairing));
        if (cv.type == "BRANCHED") branch += cv.branch_points;
    }

    Census out;
    out.branch_points = branch;
    for (const auto& [k, n] : tally)
        out.faces.push_back({k.first, k.second, n});
    return out;
}

}  // namespace tkh
