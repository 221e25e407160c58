// Constructors for the diagram fixtures: braid closures on the torus and on
// the sphere, zero-crossing curves, Reidemeister-I kink insertion, and a
// three-crossing toral link whose all-0 resolution is one contractible
// circle carrying three mutually unimodular wrapping chords.
#pragma once

#include <string>
#include <vector>

#include "tkh/diagram.h"

namespace tkh {

// Closure of a braid word on `strands` strands. Entries of `word` are
// nonzero integers g with 1 <= |g| < strands; g > 0 crosses strands |g| and
// |g|+1 with the strand entering from the lower right passing over (a
// positive crossing under the file-format sign rule), g < 0 the mirror
// image. The toral closure winds every strand once around the vertical
// period of the torus; the planar closure joins each top to its own bottom
// with nested return arcs on the right.
Diagram toral_braid_closure(int strands, const std::vector<int>& word);
Diagram planar_braid_closure(int strands, const std::vector<int>& word);

// Zero-crossing fixtures.
Diagram torus_unknot0();   // contractible square loop on the torus
Diagram planar_unknot0();  // square circle on the sphere
Diagram torus_curve10();   // embedded (1,0) curve, no crossings

// Returns a copy of `d` with a small Reidemeister-I kink inserted halfway
// along the first path segment of edge `edge_id`. The new crossing is named
// `<edge_id>_kink` and has the requested sign; the kink loop sits on the
// left of the traversal direction, scaled to 1/4 of the host segment. The
// caller is responsible for picking a segment with enough clearance; run
// validate() on the result to be sure.
Diagram with_r1_kink(const Diagram& d, const std::string& edge_id,
                     bool positive);

// Three-crossing, three-component toral link whose all-0 resolution is a
// single contractible hexagonal circle with three outer chords of classes
// (1,0), (1,1), (0,1). Exercises essential components, wrapping edges, and
// the branched double covers on the moduli side.
Diagram torus_hex_link();

}  // namespace tkh
