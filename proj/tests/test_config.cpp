#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "helpers.h"
#include "tkh/config.h"
#include "tkh/jsonio.h"

using namespace tkh;

namespace {

Configuration cfg(const std::string& body) {
    return parse_decorated(body).config;
}

// Two circles joined by one band.
const char* kJoin = R"({
  "genus": 0,
  "circles": {"c0": ["a.0"], "c1": ["a.1"]},
  "y": {"c0": "+", "c1": "+"},
  "x": ["-"]
})";

// One circle with two non-interlaced chords.
const char* kTwoChords = R"({
  "genus": 0,
  "circles": {"c0": ["a.0", "a.1", "b.0", "b.1"]},
  "arcs": {"a": {"side": "inner"}, "b": {"side": "inner"}},
  "y": {"c0": "+"},
  "x": ["-", "-", "-"]
})";

// A twisted chord: side bits differ, surgery reconnects to one circle.
const char* kTwisted = R"({
  "genus": 1,
  "circles": {"c0": {"slots": ["a.0", "a.1"], "class": [1, 0]}},
  "arcs": {"a": {"class": [0, 1], "sides": ["left", "right"]}},
  "y": {"c0": "+"},
  "x": ["-"]
})";

// A wrapping chord on a contractible circle: surgery splits it.
const char* kSplit = R"({
  "genus": 1,
  "circles": {"c0": ["a.0", "a.1"]},
  "arcs": {"a": {"class": [0, 1], "side": "outer"}},
  "y": {"c0": "+"},
  "x": ["-", "-"]
})";

}  // namespace

TEST_CASE("index counts alive arcs and components sees the incidence graph") {
    Configuration c = cfg(kJoin);
    CHECK(c.index() == 1);
    CHECK(c.components() == 1);
    CHECK(c.arcs_connected());

    Configuration two = cfg(kTwoChords);
    CHECK(two.index() == 2);
    CHECK(two.components() == 1);
    CHECK(two.is_chord(0));
    CHECK(!cfg(kJoin).is_chord(0));
}

TEST_CASE("surgery merges, splits, and reconnects") {
    // Merge: the joining band fuses the two circles.
    Configuration j = surger(cfg(kJoin), 0);
    int alive = 0;
    for (const CArc& a : j.arcs) alive += a.alive;
    CHECK(alive == 0);
    CHECK(j.circles.size() == 1);
    CHECK(j.index() == 0);

    // Split: an untwisted chord cuts its circle in two.
    Configuration s = surger(cfg(kTwoChords), 0);
    CHECK(s.circles.size() == 2);
    CHECK(s.index() == 1);

    // Reconnect: a twisted chord keeps one circle.
    Configuration t = surger(cfg(kTwisted), 0);
    CHECK(t.circles.size() == 1);
}

TEST_CASE("surgering a set equals surgering one by one") {
    Configuration c = cfg(kTwoChords);
    Configuration all = surger_set(c, {0, 1});
    Configuration steps = surger(surger(c, 0), 1);
    CHECK(all.circles.size() == steps.circles.size());
    CHECK(all.circles.size() == 3);
    CHECK(full_surgery(c).circles.size() == 3);
}

TEST_CASE("surgery updates classes consistently") {
    // Untwisted split along a wrapping chord of class (0,1): the two halves
    // carry classes h and c - h, here both (0,1) up to sign.
    Configuration s = full_surgery(cfg(kSplit));
    REQUIRE(s.circles.size() == 2);
    CHECK(normalize(s.circles[0].cls()) == IVec{0, 1});
    CHECK(normalize(s.circles[1].cls()) == IVec{0, 1});

    // Twisted reconnection shifts the class by twice the chord class:
    // (1,0) - 2*(0,1) = (1,-2) up to sign.
    Configuration t = full_surgery(cfg(kTwisted));
    REQUIRE(t.circles.size() == 1);
    CHECK(normalize(t.circles[0].cls()) == IVec{1, -2});
}

TEST_CASE("removing an arc keeps circles intact") {
    Configuration c = cfg(kTwoChords);
    Configuration r = remove_arc(c, 0);
    CHECK(r.index() == 1);
    CHECK(r.circles.size() == 1);
    CHECK(r.circles[0].size() == 2);  // only b's two slots remain
    CHECK_THROWS_AS(remove_arc(r, 0), TkhError);
}

TEST_CASE("gap identities survive any surgery order") {
    // Surger the two chords in both orders; the final three circles carry
    // the same gap-set keys either way.
    Configuration c = cfg(kTwoChords);
    auto keys = [](const Configuration& k) {
        std::vector<std::string> v;
        for (int i = 0; i < static_cast<int>(k.circles.size()); ++i)
            v.push_back(k.circle_key(i));
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(keys(surger(surger(c, 0), 1)) == keys(surger(surger(c, 1), 0)));
}

TEST_CASE("interlacement of chords") {
    Configuration c = cfg(kTwoChords);
    CHECK(!interlaced(c, 0, 1));
    Decorated lady = fixture_decorated("ladybug.json");
    CHECK(interlaced(lady.config, 0, 1));
}

TEST_CASE("merge tree picks ascending connecting arcs") {
    Decorated six = fixture_decorated("six_arc.json");
    CHECK(merge_tree(six.config) == std::vector<int>{0, 1});
    CHECK(merge_tree(cfg(kTwoChords)).empty());
}

TEST_CASE("interlacement matrix of the six-arc configuration") {
    Decorated six = fixture_decorated("six_arc.json");
    std::vector<std::vector<int>> m = interlacement_matrix(six.config);
    REQUIRE(m.size() == 6);
    std::vector<std::vector<int>> expect(6, std::vector<int>(6, 0));
    expect[0][2] = expect[2][0] = 1;  // first joining arc vs the bridge
    expect[1][2] = expect[2][1] = 1;  // second joining arc vs the bridge
    expect[3][4] = expect[4][3] = 1;  // the interlaced chord pair
    CHECK(m == expect);
}

TEST_CASE("rank over Z/2") {
    CHECK(rank_mod2({{0, 1}, {1, 0}}) == 2);
    CHECK(rank_mod2({{1, 1}, {1, 1}}) == 1);
    CHECK(rank_mod2({{0, 0}, {0, 0}}) == 0);
    CHECK(rank_mod2({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == 2);
    CHECK(rank_mod2({}) == 0);
}

TEST_CASE("homotopical grading of labeled configurations") {
    // A (1,0) circle labeled plus contributes +[(1,0)]; minus negates.
    Configuration c = cfg(kTwisted);
    HClass plus = homotopical_grading(c, {1});
    HClass minus = homotopical_grading(c, {-1});
    HClass zero;
    CHECK(plus.terms().at({1, 0}) == 1);
    CHECK(minus.terms().at({1, 0}) == -1);

    // Contractible circles contribute nothing.
    Configuration flat = cfg(kTwoChords);
    CHECK(homotopical_grading(flat, {1}) == zero);
    CHECK(label_sum({1, -1, -1}) == -1);
}
