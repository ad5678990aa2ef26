#include "qsl4/system.hpp"
#include "qsl4/errors.hpp"

#include <sstream>

namespace qsl4 {

const std::vector<std::string>& QuadSystem::xy_vars() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

QuadSystem QuadSystem::from_polys(const MPoly& p, const MPoly& q) {
    for (const MPoly* f : {&p, &q})
        if (f->total_degree() > 2)
            throw DegreeError("system degree exceeds 2");
    auto cf = [](const MPoly& f, int i, int j) {
        Mono m;
        m.e[0] = i;
        m.e[1] = j;
        return f.coeff(m);
    };
    QuadSystem s;
    s.a00 = cf(p, 0, 0); s.a10 = cf(p, 1, 0); s.a01 = cf(p, 0, 1);
    s.a20 = cf(p, 2, 0); s.a11 = cf(p, 1, 1) / Rat(2); s.a02 = cf(p, 0, 2);
    s.b00 = cf(q, 0, 0); s.b10 = cf(q, 1, 0); s.b01 = cf(q, 0, 1);
    s.b20 = cf(q, 2, 0); s.b11 = cf(q, 1, 1) / Rat(2); s.b02 = cf(q, 0, 2);
    if (!s.well_formed())
        throw DegreeError("not a quadratic system: both quadratic parts vanish");
    return s;
}

QuadSystem QuadSystem::from_tuple(const std::array<Rat, 12>& t) {
    QuadSystem s;
    s.a00 = t[0]; s.a10 = t[1]; s.a01 = t[2]; s.a20 = t[3]; s.a11 = t[4]; s.a02 = t[5];
    s.b00 = t[6]; s.b10 = t[7]; s.b01 = t[8]; s.b20 = t[9]; s.b11 = t[10]; s.b02 = t[11];
    return s;
}

MPoly QuadSystem::p_part(int deg) const {
    const auto& v = xy_vars();
    MPoly r(v);
    Mono m;
    switch (deg) {
        case 0:
            r.add_term(m, a00);
            break;
        case 1:
            m.e[0] = 1; r.add_term(m, a10);
            m.e[0] = 0; m.e[1] = 1; r.add_term(m, a01);
            break;
        case 2:
            m.e[0] = 2; r.add_term(m, a20);
            m.e[0] = 1; m.e[1] = 1; r.add_term(m, Rat(2) * a11);
            m.e[0] = 0; m.e[1] = 2; r.add_term(m, a02);
            break;
        default:
            throw std::out_of_range("p_part");
    }
    return r;
}

MPoly QuadSystem::q_part(int deg) const {
    const auto& v = xy_vars();
    MPoly r(v);
    Mono m;
    switch (deg) {
        case 0:
            r.add_term(m, b00);
            break;
        case 1:
            m.e[0] = 1; r.add_term(m, b10);
            m.e[0] = 0; m.e[1] = 1; r.add_term(m, b01);
            break;
        case 2:
            m.e[0] = 2; r.add_term(m, b20);
            m.e[0] = 1; m.e[1] = 1; r.add_term(m, Rat(2) * b11);
            m.e[0] = 0; m.e[1] = 2; r.add_term(m, b02);
            break;
        default:
            throw std::out_of_range("q_part");
    }
    return r;
}

MPoly QuadSystem::p() const { return p_part(0) + p_part(1) + p_part(2); }
MPoly QuadSystem::q() const { return q_part(0) + q_part(1) + q_part(2); }

bool QuadSystem::well_formed() const {
    return !(a20.is_zero() && a11.is_zero() && a02.is_zero() && b20.is_zero() &&
             b11.is_zero() && b02.is_zero());
}

bool QuadSystem::is_degenerate() const {
    MPoly P = p(), Q = q();
    if (P.is_zero() || Q.is_zero()) return true;
    return mgcd(P, Q).total_degree() >= 1;
}

std::string QuadSystem::str() const {
    std::ostringstream os;
    os << "x' = " << p().str() << " ; y' = " << q().str();
    return os.str();
}

} // namespace qsl4
