#include "doctest.h"

#include "tkh/hclass.h"

using namespace tkh;

TEST_CASE("vector arithmetic and determinant") {
    IVec u{2, 3}, v{-1, 4};
    CHECK(u + v == IVec{1, 7});
    CHECK(u - v == IVec{3, -1});
    CHECK(-u == IVec{-2, -3});
    CHECK(det(u, v) == 11);
    CHECK(det(v, u) == -11);
    CHECK(det(u, u) == 0);
}

TEST_CASE("gcd and sign normalization") {
    CHECK(gcd_abs(IVec{6, -4}) == 2);
    CHECK(gcd_abs(IVec{0, 0}) == 0);
    CHECK(gcd_abs(IVec{0, -7}) == 7);
    CHECK(normalize(IVec{-1, 2}) == IVec{1, -2});
    CHECK(normalize(IVec{1, -2}) == IVec{1, -2});
    CHECK(normalize(IVec{0, -3}) == IVec{0, 3});
    CHECK(normalize(IVec{0, 0}) == IVec{0, 0});
}

TEST_CASE("formal sums drop the zero class and zero coefficients") {
    HClass h;
    CHECK(h.empty());
    h.add({0, 0}, 5);
    CHECK(h.empty());
    h.add({1, 0}, 2);
    h.add({-1, 0}, 1);  // same normalized class
    CHECK(h.terms().size() == 1);
    CHECK(h.terms().at({1, 0}) == 3);
    h.add({1, 0}, -3);
    CHECK(h.empty());
}

TEST_CASE("formal sum addition and keys") {
    HClass a, b;
    a.add({1, 0}, 2);
    a.add({1, 1}, -1);
    b.add({1, 1}, 1);
    b.add({0, 1}, 4);
    a += b;
    CHECK(a.terms().size() == 2);
    CHECK(a.terms().at({1, 0}) == 2);
    CHECK(a.terms().at({0, 1}) == 4);
    CHECK(a.key() == "(0,1):4;(1,0):2");
    CHECK(HClass{}.key() == "");

    HClass c;
    c.add({1, 0}, 2);
    c.add({0, 1}, 4);
    CHECK(a == c);
    CHECK(!(a < c));
    CHECK(!(c < a));
}
