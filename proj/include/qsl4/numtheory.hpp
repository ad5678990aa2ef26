#ifndef QSL4_NUMTHEORY_HPP
#define QSL4_NUMTHEORY_HPP

#include "qsl4/rat.hpp"
#include <vector>
#include <utility>

namespace qsl4 {

/// Factor n > 1 into prime powers. Trial division up to 10^5, then
/// Pollard rho with Miller-Rabin; adequate at the coefficient sizes
/// this engine produces.
std::vector<std::pair<Int, unsigned>> factorize(Int n);

/// n = s^2 * d with d squarefree; returns {s, d}. n may be negative
/// (sign goes into d); n must be nonzero.
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// Squarefree kernel of a nonzero rational under Q-squares:
/// q = s^2 * d with d a squarefree integer; returns {s: Rat, d: Int}.
std::pair<Rat, Int> squarefree_decompose(const Rat& q);

bool is_probable_prime(const Int& n);

} // namespace qsl4

#endif
