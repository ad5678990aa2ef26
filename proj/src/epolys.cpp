#include "qsl4/epolys.hpp"
#include "qsl4/errors.hpp"

namespace qsl4 {

namespace {

const std::vector<std::string> kVars4{"xp", "yp", "x0", "y0"};
const std::vector<std::string> kVarsXYZ{"X", "Y", "Z"};

// remap a polynomial living in (x0, y0) slots of kVars4 onto {x, y}
MPoly collapse_to_xy(const MPoly& g) {
    MPoly r(QuadSystem::xy_vars());
    for (auto& [m, c] : g.terms()) {
        if (m.e[0] != 0 || m.e[1] != 0)
            throw InternalInconsistency("gamma: residual x'/y' dependence");
        Mono n;
        n.e[0] = m.e[2];
        n.e[1] = m.e[3];
        r.add_term(n, c);
    }
    return r;
}

MPoly rename_to_XYZ(const MPoly& f) {
    // f over {x, y, Z}; rename to {X, Y, Z}
    MPoly r(kVarsXYZ);
    for (auto& [m, c] : f.terms()) r.add_term(m, c);
    return r;
}

} // namespace

int EPolys::z_exponent() const {
    if (Hgcd.is_zero()) return 0;
    int m = Hgcd.total_degree();
    for (auto& [mono, c] : Hgcd.terms()) m = std::min(m, mono.e[2]);
    return m;
}

MPoly EPolys::affine_part() const {
    // Hgcd = Z^m * G with Z not dividing G; G(x, y, 1) loses nothing of G.
    MPoly g(QuadSystem::xy_vars());
    for (auto& [mono, c] : Hgcd.terms()) {
        Mono n;
        n.e[0] = mono.e[0];
        n.e[1] = mono.e[1];
        g.add_term(n, c);
    }
    return g;
}

EPolys gamma_construction(const QuadSystem& s) {
    if (s.is_degenerate())
        throw DegenerateInput("gamma_construction: gcd(p,q) != 1");

    MPoly xp = MPoly::var(kVars4, 0), yp = MPoly::var(kVars4, 1);

    // translated system: coefficients become polynomials in (x0, y0)
    auto lift_at_base = [&](const MPoly& f) {
        // f(x, y) evaluated at (x0, y0), as an element of kVars4
        MPoly r(kVars4);
        for (auto& [m, c] : f.terms()) {
            Mono n;
            n.e[2] = m.e[0];
            n.e[3] = m.e[1];
            r.add_term(n, c);
        }
        return r;
    };
    auto lift_at_prime = [&](const MPoly& f) {
        // f(x, y) evaluated at (x', y')
        MPoly r(kVars4);
        for (auto& [m, c] : f.terms()) {
            Mono n;
            n.e[0] = m.e[0];
            n.e[1] = m.e[1];
            r.add_term(n, c);
        }
        return r;
    };

    MPoly p = s.p(), q = s.q();
    // homogeneous (x', y')-parts of p(x'+x0, y'+y0):
    //   part 0: p(x0, y0);  part 1: p_x(x0,y0) x' + p_y(x0,y0) y';  part 2: p2(x', y')
    MPoly P0 = lift_at_base(p);
    MPoly Q0 = lift_at_base(q);
    MPoly P1 = lift_at_base(p.derivative(0)) * xp + lift_at_base(p.derivative(1)) * yp;
    MPoly Q1 = lift_at_base(q.derivative(0)) * xp + lift_at_base(q.derivative(1)) * yp;
    MPoly P2 = lift_at_prime(s.p_part(2));
    MPoly Q2 = lift_at_prime(s.q_part(2));

    MPoly C0t = yp * P0 - xp * Q0;
    MPoly C1t = yp * P1 - xp * Q1;
    MPoly C2t = yp * P2 - xp * Q2;

    EPolys out;
    for (int i = 1; i <= 2; ++i) {
        const MPoly& Ci = (i == 1) ? C1t : C2t;
        MPoly res = sylvester_resultant(Ci, C0t, /*var=*/0, /*formal f*/ i + 1, /*formal g*/ 1);
        MPoly ypow = MPoly::var(kVars4, 1, i + 1);
        MPoly gamma(kVars4);
        if (!res.is_zero()) {
            auto qd = MPoly::divide_exact(res, ypow);
            if (!qd) throw InternalInconsistency("gamma: (y')^(i+1) division inexact");
            gamma = *qd;
        }
        MPoly tilde = collapse_to_xy(gamma);
        if (i == 1) {
            tilde *= Rat(2);  // normalization matching the source's E~1 (fixed once)
            out.E1_affine = tilde;
        } else {
            out.E2_affine = tilde;
        }
    }

    if (out.E1_affine.is_zero() || out.E2_affine.is_zero())
        throw InternalInconsistency("gamma: E-polynomial vanished on a nondegenerate system");

    out.E1 = rename_to_XYZ(out.E1_affine.homogenize("Z", 5));
    out.E2 = rename_to_XYZ(out.E2_affine.homogenize("Z", 6));

    // gcd via the homogeneous shortcut: strip common Z power, dehomogenize,
    // gcd the affine parts, rehomogenize.
    auto zexp = [](const MPoly& f) {
        int m = f.total_degree();
        for (auto& [mono, c] : f.terms()) m = std::min(m, mono.e[2]);
        return m;
    };
    auto drop_z = [](const MPoly& f) {
        MPoly g(QuadSystem::xy_vars());
        for (auto& [mono, c] : f.terms()) {
            Mono n;
            n.e[0] = mono.e[0];
            n.e[1] = mono.e[1];
            g.add_term(n, c);
        }
        return g;
    };
    int z1 = zexp(out.E1), z2 = zexp(out.E2);
    MPoly g1 = drop_z(out.E1), g2 = drop_z(out.E2);
    MPoly gaff = mgcd(g1, g2);
    int zc = std::min(z1, z2);
    MPoly H = rename_to_XYZ(gaff.homogenize("Z", gaff.total_degree()));
    if (zc > 0) H = H * MPoly::var(kVarsXYZ, 2, zc);
    out.Hgcd = H.normalized();
    return out;
}

bool line_divides_check(const EPolys& e, const AlgScalar& u, const AlgScalar& v,
                        const AlgScalar& w, int k) {
    if (k <= 0) return true;
    if (u.is_zero() && v.is_zero()) {
        if (w.is_zero()) throw std::invalid_argument("line_divides_check: zero line");
        return e.z_exponent() >= k;
    }
    // affine factor: test against the affine part (Z power removed)
    MPoly gpoly = e.affine_part();
    AlgPoly g = AlgPoly::from_mpoly(gpoly, 0, 1);
    for (int i = 0; i < k; ++i) {
        auto [quot, rem] = g.divide_linear(u, v, w);
        if (!rem.is_zero_within(1e-30)) return false;
        g = quot;
    }
    return true;
}

} // namespace qsl4
