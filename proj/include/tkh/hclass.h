// Integer homology classes on the torus (Z^2), their normalization modulo
// sign, and finitely supported formal sums of normalized classes (the value
// group of the homotopical grading; the trivial class contributes nothing).
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace tkh {

struct IVec {
    long long a = 0, b = 0;

    friend auto operator<=>(const IVec&, const IVec&) = default;

    IVec operator+(const IVec& o) const { return {a + o.a, b + o.b}; }
    IVec operator-(const IVec& o) const { return {a - o.a, b - o.b}; }
    IVec operator-() const { return {-a, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
};

// det(u, v) = u.a * v.b - u.b * v.a.
long long det(const IVec& u, const IVec& v);

// gcd(|a|, |b|); gcd(0,0) = 0.
long long gcd_abs(const IVec& v);

// Representative of the class modulo sign: first nonzero component positive.
IVec normalize(const IVec& v);

// A finitely supported map from nonzero normalized classes to integers.
// The zero class is dropped on insertion; zero coefficients are erased.
class HClass {
public:
    void add(const IVec& cls, int coeff);
    bool operator==(const HClass& o) const { return m_ == o.m_; }
    bool operator<(const HClass& o) const { return m_ < o.m_; }
    bool empty() const { return m_.empty(); }
    const std::map<IVec, int>& terms() const { return m_; }

    HClass& operator+=(const HClass& o);

    // Canonical textual key, e.g. "" for zero, "(1,0):2;(1,1):-1".
    std::string key() const;

private:
    std::map<IVec, int> m_;
};

}  // namespace tkh
