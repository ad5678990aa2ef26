#ifndef QSL4_UNIVARIATE_HPP
#define QSL4_UNIVARIATE_HPP

#include "qsl4/rat.hpp"

#include <optional>
#include <vector>

namespace qsl4 {

/// Dense univariate polynomial over Rat, coefficient of t^i at index i.
/// Trailing zeros are trimmed (empty = zero polynomial).
using UPoly = std::vector<Rat>;

UPoly utrim(UPoly p);
int udeg(const UPoly& p);                    // -1 for zero
Rat ueval(const UPoly& p, const Rat& t);
UPoly uderiv(const UPoly& p);
UPoly uadd(const UPoly& a, const UPoly& b);
UPoly usub(const UPoly& a, const UPoly& b);
UPoly umul(const UPoly& a, const UPoly& b);
UPoly uscale(UPoly a, const Rat& c);
/// Quotient and remainder over the field Q.
std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b);
UPoly ugcd(UPoly a, UPoly b);                // monic gcd
UPoly umonic(UPoly p);

/// Yun squarefree decomposition: p = c * prod g_i^i, returns [g_1, g_2, ...]
/// (monic squarefree factors, possibly constant-1 entries).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Number of distinct real roots (Sturm).
int count_real_roots(const UPoly& p);
/// Number of distinct real roots in (a, b].
int count_real_roots(const UPoly& p, const Rat& a, const Rat& b);

/// True iff p(t) >= 0 for every real t (exact, via odd-multiplicity factors).
bool is_nonnegative_everywhere(const UPoly& p);

} // namespace qsl4

#endif
