#include "qsl4/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsl4 {

UPoly utrim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat ueval(const UPoly& p, const Rat& t) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return utrim(std::move(r));
}

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return utrim(std::move(r));
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return utrim(std::move(r));
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return utrim(std::move(r));
}

UPoly uscale(UPoly a, const Rat& c) {
    for (auto& x : a) x *= c;
    return utrim(std::move(a));
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("udivrem: division by zero");
    UPoly r = a, q;
    int db = udeg(b);
    if (udeg(a) >= db) q.assign(udeg(a) - db + 1, Rat(0));
    while (udeg(r) >= db) {
        int k = udeg(r) - db;
        Rat c = r.back() / b.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
        r = utrim(std::move(r));
    }
    return {utrim(std::move(q)), r};
}

UPoly umonic(UPoly p) {
    p = utrim(std::move(p));
    if (p.empty()) return p;
    Rat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

UPoly ugcd(UPoly a, UPoly b) {
    a = utrim(std::move(a));
    b = utrim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = udivrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(std::move(a));
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p0) {
    UPoly p = umonic(utrim(p0));
    std::vector<UPoly> out;
    if (udeg(p) < 1) return out;
    UPoly d = uderiv(p);
    UPoly a = ugcd(p, d);
    UPoly b = udivrem(p, a).first;
    UPoly c = udivrem(d, a).first;
    UPoly z = usub(c, uderiv(b));
    while (udeg(b) >= 1) {
        UPoly g = ugcd(b, z);
        out.push_back(g);
        b = udivrem(b, g).first;
        z = udivrem(usub(z, uderiv(b)), g).first;
    }
    return out;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    chain.push_back(utrim(p));
    chain.push_back(uderiv(p));
    while (!chain.back().empty() && udeg(chain.back()) >= 0) {
        const UPoly& s1 = chain[chain.size() - 2];
        const UPoly& s2 = chain.back();
        if (udeg(s2) < 1) break;
        UPoly r = udivrem(s1, s2).second;
        if (r.empty()) break;
        chain.push_back(uscale(std::move(r), Rat(-1)));
    }
    return chain;
}

int sign_changes_at_inf(const std::vector<UPoly>& chain, int dir) {
    // dir = +1 for +infinity, -1 for -infinity
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        if (s.empty()) continue;
        int sg = s.back().sign();
        if (dir < 0 && udeg(s) % 2 == 1) sg = -sg;
        if (prev != 0 && sg != 0 && sg != prev) ++changes;
        if (sg != 0) prev = sg;
    }
    return changes;
}

int sign_changes_at(const std::vector<UPoly>& chain, const Rat& t) {
    int changes = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = ueval(s, t).sign();
        if (prev != 0 && sg != 0 && sg != prev) ++changes;
        if (sg != 0) prev = sg;
    }
    return changes;
}

} // namespace

int count_real_roots(const UPoly& p) {
    UPoly sf = utrim(p);
    if (udeg(sf) < 1) return 0;
    sf = udivrem(sf, ugcd(sf, uderiv(sf))).first;  // squarefree part
    auto chain = sturm_chain(sf);
    return sign_changes_at_inf(chain, -1) - sign_changes_at_inf(chain, +1);
}

int count_real_roots(const UPoly& p, const Rat& a, const Rat& b) {
    UPoly sf = utrim(p);
    if (udeg(sf) < 1) return 0;
    sf = udivrem(sf, ugcd(sf, uderiv(sf))).first;
    auto chain = sturm_chain(sf);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

bool is_nonnegative_everywhere(const UPoly& p0) {
    UPoly p = utrim(p0);
    if (p.empty()) return true;  // zero polynomial
    if (udeg(p) == 0) return p[0].sign() >= 0;
    // sign changes happen exactly at real roots of odd multiplicity
    auto sf = squarefree_decomposition(p);
    UPoly odd = {Rat(1)};
    for (size_t i = 0; i < sf.size(); ++i)
        if (i % 2 == 0) odd = umul(odd, sf[i]);  // g_1, g_3, ... (index i holds g_{i+1})
    if (count_real_roots(odd) > 0) return false;
    // constant sign; sample at a non-root point
    Rat t(0);
    while (ueval(p, t).is_zero()) t += Rat(1);
    return ueval(p, t).sign() > 0;
}

} // namespace qsl4
