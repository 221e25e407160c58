// Internal helpers shared between the boundary-graph assembly and the
// index-4 face census: stable-key label maps and face construction.
#pragma once

#include <map>
#include <string>

#include "tkh/moduli.h"

namespace tkh::detail {

// Labels keyed by stable circle identity; keys are unique per configuration.
std::map<std::string, int> key_labels(const Configuration& c, const Labeling& z);

// "+-+" rendering of a key-label map, in key order.
std::string sign_string(const std::map<std::string, int>& m);

// Display name of an arc (declared name, else its index).
std::string arc_name(const Configuration& c, int a);

// Re-index a labeling onto another configuration with the same circles.
Labeling transfer_labels(const Configuration& src, const Labeling& zsrc,
                         const Configuration& dst);

// The decorated face of a poset obtained by holding one surgery step fixed:
// top = the arc is surgered last (the arc is dropped, the defining state
// becomes the final labeling); bottom = the arc is surgered first (the
// defining state becomes the initial labeling).
Decorated face_decorated(const Decorated& dec, const Poset& P, bool top,
                         int arc, int def_vert);

}  // namespace tkh::detail
