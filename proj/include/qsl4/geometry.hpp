#ifndef QSL4_GEOMETRY_HPP
#define QSL4_GEOMETRY_HPP

#include "qsl4/algebraic.hpp"
#include "qsl4/system.hpp"

#include <array>
#include <vector>

namespace qsl4 {

/// Singular point of the (compactified) system. Finite points are [x:y:1],
/// infinite points [X:Y:0], first nonzero coordinate normalized to 1.
struct SingPoint {
    std::array<AlgScalar, 3> pt;
    int mult_pq = 0;   // intersection number I_w(P,Q)
    int mult_cz = 0;   // I_w(C,Z), meaningful at infinity only
    bool at_infinity = false;
    bool inexact = false;
};

/// Integer-weighted formal sum of projective points.
struct ZeroCycle {
    std::vector<std::pair<std::array<AlgScalar, 3>, int>> entries;
    int degree() const {
        int d = 0;
        for (auto& [p, n] : entries) d += n;
        return d;
    }
};

struct DivisorSummary {
    ZeroCycle dcz;        // D_S(C,Z): root structure of the binary cubic C2
    ZeroCycle dpqz;       // D_S(P,Q;Z)
    int n_r_inf = 0;      // real points in Supp D_S(C,Z)
    int d_sigma_inf = 0;  // deg D_S(P,Q;Z)
    int divisor_case = 0; // Table-1 case 1..5
};

/// Table-1 divisor gate: case from (eta sign, M, C2), with the divisors built
/// from the factorization of C2 (case 5 leaves dcz empty).
DivisorSummary divisor_type(const QuadSystem& s);

/// Common zeros of p and q with intersection numbers, via resultant
/// elimination with a genericity shear; cross-checked in both orders and
/// against the Bezout total.
std::vector<SingPoint> finite_singularities(const QuadSystem& s);

/// Singular points at infinity (roots of C2) with I_w(C,Z) and, on the common
/// zeros of P and Q (the shared linear factors of p2, q2), I_w(P,Q).
/// Requires C2 != 0.
std::vector<SingPoint> infinite_singularities(const QuadSystem& s);

} // namespace qsl4

#endif
