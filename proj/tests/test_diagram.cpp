#include "doctest.h"

#include <vector>

#include "helpers.h"
#include "tkh/builders.h"
#include "tkh/diagram.h"
#include "tkh/jsonio.h"

using namespace tkh;

namespace {

Rat frac(long n, long d) { return Rat(n) / Rat(d); }

// A one-crossing diagram used for structural error cases: a kinked unknot.
Diagram kinked_unknot() { return with_r1_kink(torus_unknot0(), "e0", true); }

}  // namespace

TEST_CASE("built diagrams pass geometric validation") {
    std::vector<Diagram> ds = {
        planar_unknot0(),
        torus_unknot0(),
        torus_curve10(),
        torus_hex_link(),
        with_r1_kink(torus_unknot0(), "e0", true),
        with_r1_kink(torus_curve10(), "e0", false),
        planar_braid_closure(2, {1, 1, 1}),
        planar_braid_closure(3, {1, -2, 1, -2}),
        toral_braid_closure(2, {}),
        toral_braid_closure(3, {1, 2, 1}),
        toral_braid_closure(4, {3, -2, 1}),
    };
    for (const Diagram& d : ds) {
        ValidationReport rep = validate(d);
        CHECK_MESSAGE(rep.pass, rep.code, ": ", rep.detail);
    }
}

TEST_CASE("crossing signs of braid generators") {
    // A positive generator word gives only positive crossings, and the sign
    // flips with the generator. Both closure styles agree.
    Diagram a = toral_braid_closure(2, {1, 1, 1});
    CHECK(a.n_plus == 3);
    CHECK(a.n_minus == 0);
    Diagram b = toral_braid_closure(2, {-1, -1});
    CHECK(b.n_plus == 0);
    CHECK(b.n_minus == 2);
    Diagram c = planar_braid_closure(3, {1, 2, -1});
    CHECK(c.n_plus == 2);
    CHECK(c.n_minus == 1);
}

TEST_CASE("braid closures carry the expected component structure") {
    // 2-strand identity braid: two parallel loops.
    CHECK(toral_braid_closure(2, {}).components.size() == 2);
    // A single positive crossing merges them.
    CHECK(toral_braid_closure(2, {1}).components.size() == 1);
    // The trefoil closure is a knot, the Hopf closure a 2-component link.
    CHECK(planar_braid_closure(2, {1, 1, 1}).components.size() == 1);
    CHECK(planar_braid_closure(2, {1, 1}).components.size() == 2);
    // 3-strand braid with only generator 1: strand 3 closes separately.
    CHECK(toral_braid_closure(3, {1, 1}).components.size() == 2);
}

TEST_CASE("finalize rejects structural nonsense") {
    Diagram d = kinked_unknot();
    // Duplicate port reference.
    Diagram broken = d;
    broken.edges[0].from->port = broken.edges[0].to->port;
    CHECK_THROWS_WITH_AS(broken.finalize(), doctest::Contains("port"),
                         TkhError);

    // Component traversal that jumps between disconnected edges.
    Diagram scrambled = d;
    std::swap(scrambled.components[0][0], scrambled.components[0][1]);
    CHECK_THROWS_AS(scrambled.finalize(), TkhError);

    // Unknown crossing id on an edge end.
    Diagram ghost = d;
    ghost.edges[1].from->crossing = "nowhere";
    CHECK_THROWS_AS(ghost.finalize(), TkhError);
}

TEST_CASE("validation codes for broken geometry") {
    // Winding inconsistent with the drawn path.
    Diagram d = torus_curve10();
    d.edges[0].winding = {2, 0};
    d.finalize();
    CHECK(validate(d).code == "WINDING_MISMATCH");

    // Two closed loops drawn on top of each other.
    Diagram overlap = torus_unknot0();
    Edge copy = overlap.edges[0];
    copy.id = "e0b";
    overlap.edges.push_back(copy);
    overlap.components.push_back({{1, true}});
    overlap.finalize();
    CHECK(validate(overlap).code == "SELF_INTERSECTION");

    // Same picture, conflicting genus declaration: a sphere diagram whose
    // rotation system needs the torus.
    Diagram flat = torus_curve10();
    flat.genus = 0;
    flat.finalize();
    CHECK(!validate(flat).pass);
}

TEST_CASE("sphere diagrams are not compared against deck translates") {
    // The planar closure geometry is wider than one period; on the sphere
    // there is no deck group, so this must pass.
    Diagram d = planar_braid_closure(2, {1, -1});
    CHECK(validate(d).pass);
    // The same drawing declared on the torus collides with its translates.
    Diagram t = d;
    t.genus = 1;
    t.finalize();
    CHECK(!validate(t).pass);
}

TEST_CASE("kink insertion preserves validity on open and closed edges") {
    // Closed host edge (crossingless loop).
    Diagram k1 = with_r1_kink(torus_curve10(), "e0", true);
    CHECK(k1.n() == 1);
    CHECK(k1.n_plus == 1);
    CHECK(validate(k1).pass);

    // Open host edge (an edge of an existing crossing diagram).
    Diagram base = planar_braid_closure(2, {1, 1, 1});
    std::string host = base.edges[0].id;
    Diagram k2 = with_r1_kink(base, host, false);
    CHECK(k2.n() == base.n() + 1);
    CHECK(k2.n_minus == base.n_minus + 1);
    CHECK(validate(k2).pass);
    CHECK(k2.components.size() == base.components.size());
}

TEST_CASE("serialization round-trips byte-identically") {
    for (const Diagram& d :
         {torus_hex_link(), planar_braid_closure(2, {1, 1, 1}),
          with_r1_kink(torus_unknot0(), "e0", true)}) {
        std::string once = diagram_json(d);
        Diagram back = parse_diagram(once);
        CHECK(diagram_json(back) == once);
        CHECK(back.n() == d.n());
        CHECK(back.genus == d.genus);
        CHECK(back.components == d.components);
    }
}

TEST_CASE("fixture files load, validate, and re-serialize identically") {
    for (const char* name :
         {"unknot0_sphere.json", "unknot0_torus.json", "unknot1_torus.json",
          "unknot3_sphere.json", "curve10_torus.json",
          "curve10_kink_torus.json", "trefoil_sphere.json",
          "hopf_sphere.json", "t2_6_sphere.json", "braid3_torus.json",
          "unlink2_torus.json", "unlink2_r2_torus.json",
          "unlink2_sphere.json", "unlink2_r2_sphere.json", "r3_a_torus.json",
          "r3_b_torus.json", "r3_c_torus.json", "r3_d_torus.json",
          "hex_link_torus.json"}) {
        Diagram d = fixture_diagram(name);
        ValidationReport rep = validate(d);
        CHECK_MESSAGE(rep.pass, name, ": ", rep.code, ": ", rep.detail);
        CHECK(diagram_json(d) == slurp(fixture_path(name)));
    }
}

TEST_CASE("crossing positions stay in the fundamental square") {
    Diagram d = torus_hex_link();
    for (const Crossing& c : d.crossings) {
        CHECK(c.pos.x >= 0);
        CHECK(c.pos.x < 1);
        CHECK(c.pos.y >= 0);
        CHECK(c.pos.y < 1);
    }
    CHECK(d.cpos(0) == QPoint{frac(1, 4), frac(5, 8)});
}
