#ifndef QSL4_COMITANTS_HPP
#define QSL4_COMITANTS_HPP

#include "qsl4/system.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qsl4 {

/// Exact sign of a binary form of even degree: Pos/Neg when the form is
/// semidefinite and nonzero, Zero when identically zero, Indefinite otherwise.
enum class FormSign { Zero, Pos, Neg, Indefinite };
FormSign form_sign(const MPoly& f, int vx = 0, int vy = 1);

/// Table-4 style metadata for one comitant.
struct ComitantMeta {
    int deg_a;        // degree in the 12 coefficients
    int deg_xy;       // degree in (x, y)
    int weight;
    const char* variety;  // algebraic subset on which it is a CT-comitant ("0" = everywhere)
};

/// All GL-/T-/CT-comitants the classification consumes, computed lazily and
/// cached per system. Scalars are reported through degree-0 MPoly values.
class ComitantBundle {
public:
    explicit ComitantBundle(const QuadSystem& s) : s_(s) {}

    const QuadSystem& system() const { return s_; }

    // degree-one generators
    const MPoly& C0() const;
    const MPoly& C1() const;
    const MPoly& C2() const;
    Rat D1() const;
    const MPoly& D2() const;

    // quadratic-form comitants
    const MPoly& M() const;       // 2 Hess(C2)
    const MPoly& K() const;       // Jacob(p2, q2)
    const MPoly& H() const;       // 4 det2x2 of Phi at (y, -x)
    const MPoly& N() const;       // K + H
    const MPoly& Dcom() const;    // 4 Delta at (y, -x), cubic
    Rat eta() const;
    Rat mu() const;
    Rat theta() const;

    // B-comitants (asserts the two B1 routes agree)
    Rat B1() const;
    const MPoly& B2() const;
    const MPoly& B3() const;

    // H- and N-comitants
    Rat H1() const;
    const MPoly& H2() const;
    const MPoly& H3() const;
    Rat H4() const;
    Rat H5() const;
    const MPoly& H6() const;
    Rat H7() const;
    Rat H8() const;
    Rat H9() const;
    Rat H10() const;
    const MPoly& H11() const;
    const MPoly& N1() const;
    const MPoly& N2() const;
    const MPoly& N3() const;
    const MPoly& N4() const;
    const MPoly& N5() const;
    const MPoly& N6() const;

    /// Uniform access by name ("eta", "B3", "H10", ...); scalars come back as
    /// constant MPoly values.
    MPoly value(const std::string& name) const;
    static const std::map<std::string, ComitantMeta>& metadata();
    static std::vector<std::string> names();

private:
    const QuadSystem s_;
    mutable std::map<std::string, MPoly> cache_;
    const MPoly& cached(const std::string& key, MPoly (ComitantBundle::*make)() const) const;

    MPoly make_C0() const;
    MPoly make_C1() const;
    MPoly make_C2() const;
    MPoly make_D2() const;
    MPoly make_M() const;
    MPoly make_K() const;
    MPoly make_H() const;
    MPoly make_N() const;
    MPoly make_D() const;
    MPoly make_B2() const;
    MPoly make_B3() const;
    MPoly make_B1() const;
    MPoly make_H1() const;
    MPoly make_H2() const;
    MPoly make_H3() const;
    MPoly make_H4() const;
    MPoly make_H5() const;
    MPoly make_H6() const;
    MPoly make_H7() const;
    MPoly make_H8() const;
    MPoly make_H9() const;
    MPoly make_H10() const;
    MPoly make_H11() const;
    MPoly make_N1() const;
    MPoly make_N2() const;
    MPoly make_N3() const;
    MPoly make_N4() const;
    MPoly make_N5() const;
    MPoly make_N6() const;
    MPoly make_eta() const;
    MPoly make_mu() const;
    MPoly make_theta() const;
};

} // namespace qsl4

#endif
