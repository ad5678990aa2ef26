#ifndef QSL4_SYSTEM_HPP
#define QSL4_SYSTEM_HPP

#include "qsl4/mpoly.hpp"
#include "qsl4/rat.hpp"

#include <array>
#include <string>

namespace qsl4 {

/// Planar quadratic system
///   x' = a00 + a10 x + a01 y + a20 x^2 + 2 a11 xy + a02 y^2
///   y' = b00 + b10 x + b01 y + b20 x^2 + 2 b11 xy + b02 y^2
/// (mixed quadratic terms carry the classical factor 2).
struct QuadSystem {
    Rat a00, a10, a01, a20, a11, a02;
    Rat b00, b10, b01, b20, b11, b02;

    static const std::vector<std::string>& xy_vars();

    /// Build from two polynomials in (x, y); throws DegreeError when a degree
    /// exceeds 2 and DegenerateInput when both quadratic parts vanish.
    static QuadSystem from_polys(const MPoly& p, const MPoly& q);

    std::array<Rat, 12> tuple() const {
        return {a00, a10, a01, a20, a11, a02, b00, b10, b01, b20, b11, b02};
    }
    static QuadSystem from_tuple(const std::array<Rat, 12>& t);

    MPoly p() const;
    MPoly q() const;
    MPoly p_part(int deg) const;  // homogeneous part, deg in {0,1,2}
    MPoly q_part(int deg) const;

    /// max(deg p, deg q) == 2, i.e. some quadratic coefficient is nonzero.
    bool well_formed() const;
    /// deg gcd(p, q) >= 1.
    bool is_degenerate() const;

    bool operator==(const QuadSystem& o) const { return tuple() == o.tuple(); }

    std::string str() const;
};

} // namespace qsl4

#endif
