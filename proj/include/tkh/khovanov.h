// The cube of resolutions of a diagram, enhanced states with their three
// gradings, the covering relation between adjacent enhanced states, the
// signed differential, and integral homology per (quantum, homotopical)
// grading block.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tkh/diagram.h"
#include "tkh/hclass.h"

namespace tkh {

// An enhanced state: a cube vertex (bit i = crossing i gets its 1-smoothing)
// plus a labeling of the resolution circles (bit j set = circle j carries the
// plus label).
struct EnhancedState {
    unsigned mask = 0;
    unsigned labels = 0;
};

// All 2^n resolutions of a diagram, indexed by vertex mask.
class Cube {
public:
    explicit Cube(const Diagram& d);
    const Resolution& at(unsigned mask) const { return res_[mask]; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<Resolution> res_;
};

struct Gradings {
    int h = 0;
    int q = 0;
    HClass H;
};

// The three gradings of a labeled resolution.
Gradings gradings(const Diagram& d, const Resolution& r, unsigned labels);

// Label masks of every enhanced state at target_mask covering the source:
// labels agree on circles common to both resolutions, the quantum grading is
// unchanged, and the homotopical grading is unchanged. Throws NOT_ADJACENT
// unless target_mask adds exactly one bit to the source vertex.
std::vector<unsigned> covers(const Diagram& d, const Cube& cube,
                             const EnhancedState& source, unsigned target_mask);

struct Generator {
    unsigned mask = 0;
    unsigned labels = 0;
    int h = 0;
    int q = 0;
    std::string hkey;
};

// The full signed cube complex, graded by (quantum, homotopical class).
struct Complex {
    std::vector<Generator> gens;  // sorted by (mask, labels)
    std::map<std::pair<unsigned, unsigned>, int> index;
    struct Entry {
        int from = 0, to = 0, coeff = 0;
    };
    std::vector<Entry> delta;                 // sorted by (from, to)
    std::map<std::string, HClass> hclasses;   // hkey -> class
};

Complex differential(const Diagram& d);

struct Group {
    int rank = 0;
    std::vector<mpz_class> torsion;  // divisor chain, each > 1
};

// Nonzero homology groups keyed by (quantum grading, homotopical key,
// homological grading).
using HomologySummary = std::map<std::tuple<int, std::string, int>, Group>;

struct HomologyResult {
    HomologySummary groups;
    std::map<std::string, HClass> hclasses;
};

// Integral homology via Smith normal form per grading block. Throws
// NOT_A_COMPLEX if the differential does not square to zero.
HomologyResult homology(const Complex& c);

// Convenience: differential + homology.
HomologyResult compute_homology(const Diagram& d);

// True iff the squared differential vanishes identically.
bool verify_dsquare(const Diagram& d);

struct InvarianceReport {
    bool equal = true;
    std::string detail;
};

// Compare the homology summaries of two diagrams as graded groups.
InvarianceReport verify_invariance(const Diagram& a, const Diagram& b);

}  // namespace tkh
