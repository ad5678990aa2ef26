#include "qsl4/numtheory.hpp"

#include <algorithm>
#include <map>

namespace qsl4 {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n odd composite, not a prime power handled outside.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xql5eedUL);
    while (true) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x, d = 1;
        auto step = [&](Int v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) { d = 0; break; }
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) { out[n]++; return; }
    // perfect power?
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned> sub;
                factor_into(r, sub);
                for (auto& [p, e] : sub) out[p] += e * k;
                return;
            }
        }
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 0) n = -n;
    std::map<Int, unsigned> acc;
    if (n <= 1) return {};
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { acc[Int(p)]++; n /= p; }
    }
    for (long p = 17; p < 100000 && n > 1; p += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) { acc[Int(p)]++; n /= p; }
        }
    }
    if (n > 1) factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n == 0) throw std::invalid_argument("squarefree_decompose: zero");
    int sign = n < 0 ? -1 : 1;
    Int a = sign < 0 ? Int(-n) : n;
    Int s = 1, d = 1;
    for (auto& [p, e] : factorize(a)) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) d *= p;
    }
    return {s, Int(sign * d)};
}

std::pair<Rat, Int> squarefree_decompose(const Rat& q) {
    if (q.is_zero()) throw std::invalid_argument("squarefree_decompose: zero");
    // q = num/den = (num*den)/den^2, so sqrt(q) = sqrt(num*den)/den.
    Int nd = q.num() * q.den();
    auto [s, d] = squarefree_decompose(nd);
    return {Rat(s, q.den()), d};
}

Rat Rat::gcd(const Rat& a, const Rat& b) {
    if (a.is_zero() && b.is_zero()) return Rat(0);
    Int gn, gl;
    Int an = a.num() < 0 ? Int(-a.num()) : a.num();
    Int bn = b.num() < 0 ? Int(-b.num()) : b.num();
    mpz_gcd(gn.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
    mpz_lcm(gl.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rat(gn, gl);
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s.c_str()));
        Int n(s.substr(0, slash).c_str());
        Int d(s.substr(slash + 1).c_str());
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat::parse: bad rational '" + s + "'");
    }
}

std::string Rat::str() const {
    std::string out = num().get_str();
    if (den() != 1) out += "/" + den().get_str();
    return out;
}

} // namespace qsl4
