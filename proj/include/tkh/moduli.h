// Pairing systems and matchings on multiplicity-2 faces; boundary graphs of
// index-3 decorated configurations as disjoint unions of cycles; covering
// type over the hexagon; multivalued-choice enumeration; index-4 face census.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tkh/classify.h"
#include "tkh/diagram.h"

namespace tkh {

enum class Side { Left, Right };
enum class Slope { Lambda, LambdaBar };

std::string to_string(Side s);   // "left" / "right"
std::string to_string(Slope s);  // "lambda" / "lambdabar"

// A pairing: constant choices for trivial-class and essential-class
// ladybugs, a slope choice for quasi-ladybugs, the primitive class lambda
// and (optionally) an explicit mu with det(lambda, mu) = 1. The override
// maps refine the constants per normalized class (essential ladybugs) or per
// unordered normalized class pair (quasi-ladybugs); the four constant
// pairings with empty overrides are the regular ones.
struct Pairing {
    Side l0 = Side::Right;
    Side lalpha = Side::Right;
    Slope q = Slope::Lambda;
    IVec lambda{1, 0};
    std::optional<IVec> mu;
    std::map<IVec, Side> lalpha_by_class;
    std::map<std::pair<IVec, IVec>, Slope> q_by_pair;

    Side side_for(const CaseTag& tag) const;
    Slope slope_for(const CaseTag& tag) const;
};

// Canonical complement of a primitive class: det(lambda, mu) = 1, with the
// component of mu along lambda reduced into [0, 1). Matchings are invariant
// under mu -> mu + k*lambda; the reduction only pins determinism. Throws
// MALFORMED for an imprimitive lambda.
IVec canonical_mu(const IVec& lambda);

// One intermediate state of an index-2 face: the arc surgered to reach it
// and the labels of the resulting circles, keyed by stable circle identity.
struct Intermediate {
    int arc = -1;
    std::map<std::string, int> labels;

    bool operator==(const Intermediate&) const = default;
};

// The four intermediates of a multiplicity-2 face, split into two pairs
// (each pair joins states of the two different arcs).
struct Matching {
    std::array<std::pair<Intermediate, Intermediate>, 2> pairs;
};

// Ladybug matching by the right/left rule: the four segments between the
// interlaced arcs' endpoints split into the pair running, along the disk's
// boundary orientation, from the outer arc to the inner arc ("right") and
// the complementary pair ("left"); intermediates are paired by equal labels
// on the circles carrying the chosen segments. Throws MALFORMED unless the
// face is a trivial- or essential-class ladybug, MISSING_GEOMETRY without
// disk data.
Matching right_left_match(const Decorated& dec, Side choice);

// Quasi-ladybug matching by the slope rule: an arc of class p*lambda + q*mu
// gets the value -p/q (-infinity for multiples of lambda); the segments from
// the bigger-valued arc to the smaller-valued one, along the circle's
// canonical orientation, form the lambda pair, the complement the lambdabar
// pair. Throws NOT_QUASI_LADYBUG for any other shape.
Matching lambda_match(const Decorated& dec, const Pairing& pairing);

// Boundary of an index-3 moduli space: vertices are the maximal chains of
// the poset; every index-2 face (the first or last surgery step held fixed
// together with the labeling of the state it defines) contributes one edge
// when it has multiplicity 1 and a matching's two edges when it has
// multiplicity 2. The result is 2-regular, hence a union of cycles.
struct BoundaryGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cycles;             // cycle lengths, ascending
    std::vector<std::string> mu2_faces;  // keys of multiplicity-2 faces, sorted
};

// Throws WRONG_INDEX unless ind = 3, EMPTY_CONFIGURATION when the poset is
// empty, MALFORMED if the faces fail to assemble into a 2-regular graph.
BoundaryGraph boundary_graph(const Decorated& dec, const Pairing& pairing);

// Covering type of a boundary graph over the hexagon: {6} single sheet,
// {6,6} trivial 2-fold, {12} a 2-fold cover branched over one interior
// point of the disk. Any other multiset throws MALFORMED.
struct CoverType {
    std::string type;  // SINGLE_SHEET / TRIVIAL_2FOLD / BRANCHED
    int branch_points = 0;
};

CoverType classify_cover(const BoundaryGraph& g);

// Whether every index-3 decorated configuration between enhanced states of
// the diagram's cube has an unbranched boundary covering under the pairing
// ('C'), or some branched one ('D').
char moduli_system_type(const Diagram& d, const Pairing& pairing);

// Every independent left/right (or lambda/lambdabar) assignment to the
// multiplicity-2 faces of an index-3 decorated configuration, with the
// cycle multiset each assignment produces. Entries sorted by choice map.
struct MultivaluedEntry {
    std::map<std::string, std::string> choices;  // face key -> choice name
    std::vector<int> cycles;
};

std::vector<MultivaluedEntry> enumerate_multivalued(const Decorated& dec,
                                                    const Pairing& base);

// Index-4 face census: tally the DQ / DQ' faces among the index-3 faces of
// the moduli boundary (one face per first-surgered arc and level-1 state,
// one per last-surgered arc and level-3 state) by sorted class triple, and
// sum the branch points their boundary coverings contribute under the
// pairing. Throws WRONG_INDEX / EMPTY_CONFIGURATION.
struct CensusFace {
    std::string type;           // "DQ" or "DQ'"
    std::vector<IVec> classes;  // normalized class triple, lexicographic
    int count = 0;
};

struct Census {
    std::vector<CensusFace> faces;
    int branch_points = 0;
};

Census index4_face_census(const Decorated& dec, const Pairing& pairing);

}  // namespace tkh
