#ifndef QSL4_EPOLYS_HPP
#define QSL4_EPOLYS_HPP

#include "qsl4/algebraic.hpp"
#include "qsl4/system.hpp"

namespace qsl4 {

/// The affine comitants E~1 (degree 5 in x,y), E~2 (degree 6), their
/// homogenizations E1, E2 over {X,Y,Z} at the fixed degrees 5 and 6, and
/// Hgcd = gcd(E1, E2) normalized primitive with positive leading coefficient.
struct EPolys {
    MPoly E1_affine, E2_affine;  // vars {x, y}
    MPoly E1, E2;                // vars {X, Y, Z}, homogeneous
    MPoly Hgcd;                  // vars {X, Y, Z}, homogeneous, normalized

    int deg_H() const { return Hgcd.total_degree(); }
    /// Exponent of Z in Hgcd (the line at infinity has multiplicity z_exponent()+1).
    int z_exponent() const;
    /// Affine part of Hgcd (Z factor removed, Z set to 1), over {x, y}.
    MPoly affine_part() const;
};

/// Translate by a symbolic point, build C_i of the translated system as
/// 4-variable polynomials, eliminate via formal-degree resultants, divide by
/// the y'-power, substitute back. Raises InternalInconsistency when a step
/// that the construction guarantees (exact division, y'-independence) fails.
EPolys gamma_construction(const QuadSystem& s);

/// True iff line^k divides Hgcd exactly over the line's scalar field.
/// The line is u*X + v*Y + w*Z with AlgScalar coefficients.
bool line_divides_check(const EPolys& e, const AlgScalar& u, const AlgScalar& v,
                        const AlgScalar& w, int k);

} // namespace qsl4

#endif
