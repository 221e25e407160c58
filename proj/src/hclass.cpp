#include "tkh/hclass.h"

#include <numeric>

namespace tkh {

long long det(const IVec& u, const IVec& v) { return u.a * v.b - u.b * v.a; }

long long gcd_abs(const IVec& v) {
    return std::gcd(v.a < 0 ? -v.a : v.a, v.b < 0 ? -v.b : v.b);
}

IVec normalize(const IVec& v) {
    if (v.a > 0 || (v.a == 0 && v.b > 0)) return v;
    return -v;
}

void HClass::add(const IVec& cls, int coeff) {
    IVec n = normalize(cls);
    if (n.is_zero() || coeff == 0) return;
    auto it = m_.find(n);
    if (it == m_.end()) {
        m_.emplace(n, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) m_.erase(it);
    }
}

HClass& HClass::operator+=(const HClass& o) {
    for (const auto& [c, k] : o.m_) add(c, k);
    return *this;
}

std::string HClass::key() const {
    std::string s;
    for (const auto& [c, k] : m_) {
        if (!s.empty()) s += ';';
        s += '(' + std::to_string(c.a) + ',' + std::to_string(c.b) +
             "):" + std::to_string(k);
    }
    return s;
}

}  // namespace tkh
