#ifndef QSL4_LINES_HPP
#define QSL4_LINES_HPP

#include "qsl4/algebraic.hpp"
#include "qsl4/epolys.hpp"
#include "qsl4/system.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qsl4 {

/// Projective line u X + v Y + w Z = 0, normalized so the first nonzero
/// coordinate equals 1. The line at infinity has (u, v) == (0, 0).
struct LineWithMult {
    AlgScalar u, v, w;
    int multiplicity = 1;
    std::optional<AlgPoly> cofactor;  // absent for the line at infinity
    bool is_infinite = false;
    bool inexact = false;

    std::array<AlgScalar, 3> coeffs() const { return {u, v, w}; }
};

struct LineSet {
    std::vector<LineWithMult> lines;  // deterministic order, infinity line included
    int total_multiplicity = 0;
    bool inexact = false;
};

/// Normalize a projective triple (first nonzero coordinate to 1).
std::array<AlgScalar, 3> normalize_line(const AlgScalar& u, const AlgScalar& v, const AlgScalar& w);

/// Deterministic ordering key comparison for lines (extension degree, then
/// lexicographic on normalized coefficients); the infinity line sorts last.
bool line_order_less(const LineWithMult& a, const LineWithMult& b);

/// Cofactor of the affine invariant line u x + v y + w = 0: the k of degree
/// <= 1 with p f_x + q f_y = f k. Throws NotInvariantError when the division
/// leaves a remainder.
AlgPoly verify_line(const QuadSystem& s, const AlgScalar& u, const AlgScalar& v,
                    const AlgScalar& w);

/// Factor Hgcd into lines with multiplicities: affine factors carry verified
/// cofactors; the Z-exponent m yields the infinity line with multiplicity m+1.
/// Throws NonSplitError when a factor of degree >= 2 resists the scalar tower
/// and certified-numeric splitting fails to certify.
LineSet extract_lines(const QuadSystem& s, const EPolys& e);

/// Invariant-line search that never touches E1/E2: imposes the invariance
/// identity on y = m x + b (and on vertical lines x = c) and solves by
/// elimination over the tower. Returns normalized affine lines, no
/// multiplicities.
std::vector<std::array<AlgScalar, 3>> line_search_oracle(const QuadSystem& s);

} // namespace qsl4

#endif
