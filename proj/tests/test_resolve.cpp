#include "doctest.h"

#include <set>
#include <vector>

#include "helpers.h"
#include "oracles.h"
#include "tkh/builders.h"
#include "tkh/classify.h"
#include "tkh/diagram.h"

using namespace tkh;

namespace {

std::vector<int> bits(unsigned mask, int n) {
    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = (mask >> i) & 1;
    return u;
}

}  // namespace

TEST_CASE("circle counts match union-find over port identifications") {
    for (const char* name :
         {"trefoil_sphere.json", "hopf_sphere.json", "braid3_torus.json",
          "hex_link_torus.json", "unknot3_sphere.json", "r3_a_torus.json",
          "unlink2_r2_torus.json", "t2_6_sphere.json"}) {
        Diagram d = fixture_diagram(name);
        for (unsigned mask = 0; mask < (1u << d.n()); ++mask) {
            std::vector<int> u = bits(mask, d.n());
            Resolution r = resolve(d, u);
            CHECK_MESSAGE(static_cast<int>(r.circles.size()) ==
                              oracle::circle_count(d, u),
                          name, " mask ", mask);
        }
    }
}

TEST_CASE("three positive half-twists: known resolution circle counts") {
    Diagram d = toral_braid_closure(2, {1, 1, 1});
    CHECK(resolve(d, {1, 1, 1}).circles.size() == 3);
    CHECK(resolve(d, {0, 0, 0}).circles.size() == 2);
    // All-1 circles of the 2-strand closure are the two strand loops plus
    // one contractible circle per crossing pair boundary; each is stable
    // under which specific crossing produced it.
    Resolution r = resolve(d, {1, 1, 1});
    int contractible = 0;
    for (const ResolvedCircle& c : r.circles) contractible += c.contractible;
    CHECK(contractible == 3);
}

TEST_CASE("resolution circle classes of braid closures") {
    // Identity 2-braid closure on the torus: two (0,1) loops.
    Diagram d = toral_braid_closure(2, {});
    Resolution r = resolve(d, {});
    REQUIRE(r.circles.size() == 2);
    for (const ResolvedCircle& c : r.circles) {
        CHECK(c.cls == IVec{0, 1});
        CHECK(!c.contractible);
    }
    // The 0-resolution of a positive toral 2-braid word keeps the strands.
    Diagram e = toral_braid_closure(2, {1, 1});
    Resolution re = resolve(e, {0, 0});
    REQUIRE(re.circles.size() == 2);
    for (const ResolvedCircle& c : re.circles) CHECK(c.cls == IVec{0, 1});
    // ... and the all-1 state of one crossing merges them into class (0,2).
    Resolution r1 = resolve(toral_braid_closure(2, {1}), {1});
    REQUIRE(r1.circles.size() == 1);
    CHECK(normalize(r1.circles[0].cls) == IVec{0, 2});
}

TEST_CASE("per-circle gains sum to the circle class") {
    for (const char* name : {"hex_link_torus.json", "braid3_torus.json",
                             "trefoil_sphere.json"}) {
        Diagram d = fixture_diagram(name);
        for (unsigned mask = 0; mask < (1u << d.n()); ++mask) {
            Resolution r = resolve(d, bits(mask, d.n()));
            for (size_t c = 0; c < r.circles.size(); ++c) {
                if (r.gains[c].empty()) continue;
                IVec s{0, 0};
                for (const IVec& g : r.gains[c]) s = s + g;
                CHECK(s == r.circles[c].cls);
            }
        }
    }
}

TEST_CASE("hexagonal link: the all-0 state is the three-chord configuration") {
    Diagram d = fixture_diagram("hex_link_torus.json");
    Resolution r = resolve(d, {0, 0, 0});
    REQUIRE(r.circles.size() == 1);
    CHECK(r.circles[0].contractible);
    REQUIRE(r.arcs.size() == 3);

    Configuration c = to_configuration(d, r);
    std::set<IVec> classes;
    for (int ai = 0; ai < 3; ++ai) {
        CHECK(c.is_chord(ai));
        classes.insert(normalize(chord_class(c, ai)));
        CHECK(!chord_inner(c, ai));  // all three sit outside the disk
    }
    CHECK(classes == std::set<IVec>{{1, 0}, {1, 1}, {0, 1}});
    for (int ai = 0; ai < 3; ++ai)
        for (int aj = ai + 1; aj < 3; ++aj) CHECK(interlaced(c, ai, aj));
}

TEST_CASE("hexagonal link: one surgery splits into the expected classes") {
    Diagram d = fixture_diagram("hex_link_torus.json");
    std::set<std::set<IVec>> splits;
    for (unsigned mask : {1u, 2u, 4u}) {
        Resolution r = resolve(d, bits(mask, 3));
        REQUIRE(r.circles.size() == 2);
        splits.insert({r.circles[0].cls, r.circles[1].cls});
    }
    CHECK(splits == std::set<std::set<IVec>>{{{1, 0}, {-1, 0}},
                                             {{1, 1}, {-1, -1}},
                                             {{0, 1}, {0, -1}}});
}

TEST_CASE("surgery on the exported configuration matches direct resolution") {
    // Chord and joining-arc band gains must splice exactly like flipping
    // the corresponding crossing in the diagram.
    for (const char* name : {"hex_link_torus.json", "braid3_torus.json"}) {
        Diagram d = fixture_diagram(name);
        for (unsigned mask = 0; mask < (1u << d.n()); ++mask) {
            std::vector<int> u = bits(mask, d.n());
            Resolution r = resolve(d, u);
            Configuration c = to_configuration(d, r);
            for (size_t ai = 0; ai < r.arcs.size(); ++ai) {
                std::vector<int> u2 = u;
                u2[r.arcs[ai].crossing] = 1;
                Resolution r2 = resolve(d, u2);
                Configuration c2 = surger(c, static_cast<int>(ai));
                // Circles are unoriented: compare classes up to sign.
                std::multiset<IVec> direct, spliced;
                for (const ResolvedCircle& z : r2.circles)
                    direct.insert(normalize(z.cls));
                for (const CCircle& z : c2.circles)
                    spliced.insert(normalize(z.cls()));
                CHECK_MESSAGE(direct == spliced, name, " mask ", mask,
                              " arc ", ai);
            }
        }
    }
}

TEST_CASE("disk side decomposition flags interlaced kink arcs") {
    // The 3-crossing unknot's all-0 state is one circle with three chords:
    // one doubly-interlaced outer chord and two inner ones.
    Diagram d = fixture_diagram("unknot3_sphere.json");
    Resolution r = resolve(d, {0, 0, 0});
    REQUIRE(r.circles.size() == 1);
    Configuration c = to_configuration(d, r);
    int inner = 0, outer = 0;
    for (int ai = 0; ai < 3; ++ai) {
        (chord_inner(c, ai) ? inner : outer)++;
        CHECK(normalize(chord_class(c, ai)).is_zero());
    }
    CHECK(inner == 2);
    CHECK(outer == 1);
    int pairs = 0;
    for (int ai = 0; ai < 3; ++ai)
        for (int aj = ai + 1; aj < 3; ++aj) pairs += interlaced(c, ai, aj);
    CHECK(pairs == 2);  // the outer chord interlaces both inner ones

    std::vector<bool> sides = circle_side_decomposition(d, r, 0);
    CHECK(sides.size() == 6);
    int inner_slots = 0;
    for (bool b : sides) inner_slots += b;
    CHECK(inner_slots == 4);  // two inner chords, two slots each
}

TEST_CASE("arc classes against essential circles are rejected") {
    Diagram d = fixture_diagram("hex_link_torus.json");
    Resolution r = resolve(d, {1, 0, 0});  // two essential circles
    REQUIRE(r.arcs.size() == 2);
    CHECK_THROWS_AS(arc_class(d, r, 0), TkhError);
}

TEST_CASE("resolution input validation") {
    Diagram d = fixture_diagram("trefoil_sphere.json");
    CHECK_THROWS_AS(resolve(d, {0, 0}), TkhError);
    CHECK_THROWS_AS(resolve(d, {0, 2, 0}), TkhError);
}
