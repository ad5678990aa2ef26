#include "qsl4/geometry.hpp"
#include "qsl4/comitants.hpp"
#include "qsl4/errors.hpp"

#include <algorithm>

namespace qsl4 {

namespace {

using AVec = std::vector<AlgScalar>;  // dense univariate over the tower

AlgScalar aeval(const AVec& p, const AlgScalar& t) {
    AlgScalar acc{Rat(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

AVec atrim(AVec p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

AVec from_upoly(const UPoly& p) {
    AVec r;
    for (auto& c : p) r.emplace_back(c);
    return r;
}

// synthetic division by (t - r); precondition: r is a root
AVec deflate(const AVec& p, const AlgScalar& r) {
    AVec q(p.size() - 1, AlgScalar(Rat(0)));
    AlgScalar carry{Rat(0)};
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = (i == static_cast<int>(p.size()) - 1) ? p[i] : p[i] + carry * r;
        q[i - 1] = carry;
        if (i < static_cast<int>(p.size()) - 1) continue;
    }
    // recompute properly (simple Horner deflation)
    AlgScalar b = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = b;
        b = p[i] + b * r;
    }
    return q;
}

int root_order(const UPoly& R, const AlgScalar& r) {
    AVec p = from_upoly(R);
    int ord = 0;
    while (p.size() > 1 && aeval(p, r).is_zero(1e-28)) {
        p = deflate(p, r);
        ++ord;
    }
    return ord;
}

UPoly mpoly_to_upoly_in(const MPoly& f, int var) {
    UPoly p(std::max(f.degree_in(var), 0) + 1, Rat(0));
    for (auto& [m, c] : f.terms()) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && m.e[i] != 0)
                throw std::invalid_argument("mpoly_to_upoly_in: not univariate");
        p[m.e[var]] = c;
    }
    return utrim(std::move(p));
}

// f(x, y) with y evaluated at an AlgScalar: dense AlgScalar polynomial in x
AVec eval_y(const MPoly& f, const AlgScalar& y0) {
    AVec out(std::max(f.degree_in(0), 0) + 1, AlgScalar(Rat(0)));
    for (auto& [m, c] : f.terms()) {
        AlgScalar t{c};
        for (int i = 0; i < m.e[1]; ++i) t = t * y0;
        out[m.e[0]] = out[m.e[0]] + t;
    }
    return atrim(std::move(out));
}

AVec eval_x(const MPoly& f, const AlgScalar& x0) {
    AVec out(std::max(f.degree_in(1), 0) + 1, AlgScalar(Rat(0)));
    for (auto& [m, c] : f.terms()) {
        AlgScalar t{c};
        for (int i = 0; i < m.e[0]; ++i) t = t * x0;
        out[m.e[1]] = out[m.e[1]] + t;
    }
    return atrim(std::move(out));
}

// roots of a degree <= 2 polynomial over the tower
std::vector<AlgScalar> small_roots(const AVec& p0) {
    AVec p = atrim(p0);
    std::vector<AlgScalar> out;
    if (p.size() == 2) {
        out.push_back(-(p[0] / p[1]));
    } else if (p.size() == 3) {
        AlgScalar disc = p[1] * p[1] - AlgScalar(Rat(4)) * p[2] * p[0];
        AlgScalar sq = alg_sqrt(disc);
        AlgScalar twoA = AlgScalar(Rat(2)) * p[2];
        out.push_back((-p[1] + sq) / twoA);
        out.push_back((-p[1] - sq) / twoA);
    }
    return out;
}

// monic gcd over the tower (Euclid); tolerance-aware zero tests
AVec agcd(AVec a, AVec b) {
    a = atrim(std::move(a));
    b = atrim(std::move(b));
    while (!b.empty()) {
        // remainder of a by b
        AVec r = a;
        while (r.size() >= b.size() && !r.empty()) {
            AlgScalar c = r.back() / b.back();
            size_t k = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[k + i] = r[k + i] - c * b[i];
            r.pop_back();
            r = atrim(std::move(r));
            if (r.size() < b.size()) break;
        }
        a = std::move(b);
        b = atrim(std::move(r));
    }
    if (!a.empty()) {
        AlgScalar lc = a.back();
        for (auto& c : a) c = c / lc;
    }
    return a;
}

std::array<AlgScalar, 3> norm_pt(AlgScalar X, AlgScalar Y, AlgScalar Z) {
    const AlgScalar* lead = nullptr;
    for (const AlgScalar* c : {&X, &Y, &Z})
        if (!c->is_zero()) { lead = c; break; }
    if (!lead) throw std::invalid_argument("norm_pt: zero triple");
    return {X / *lead, Y / *lead, Z / *lead};
}

bool same_pt(const std::array<AlgScalar, 3>& a, const std::array<AlgScalar, 3>& b) {
    return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

struct SupportPoint {
    AlgScalar x, y;
    bool inexact = false;
};

// support of the affine common zeros (no multiplicities yet)
std::vector<SupportPoint> finite_support(const QuadSystem& s, bool& inexact) {
    MPoly p = s.p(), q = s.q();
    std::vector<SupportPoint> pts;
    int dyp = p.degree_in(1), dyq = q.degree_in(1);
    auto add_point = [&](const AlgScalar& x0, const AlgScalar& y0) {
        // confirm and deduplicate
        if (!aeval(eval_x(p, x0), y0).is_zero(1e-28)) return;
        if (!aeval(eval_x(q, x0), y0).is_zero(1e-28)) return;
        for (auto& w : pts)
            if (w.x == x0 && w.y == y0) return;
        pts.push_back({x0, y0, x0.inexact() || y0.inexact()});
    };
    auto roots_for_x = [&](const AlgScalar& x0) {
        AVec py = eval_x(p, x0), qy = eval_x(q, x0);
        if (py.empty() && qy.empty()) return;  // common line: degenerate, excluded earlier
        AVec g = py.empty() ? qy : qy.empty() ? py : agcd(py, qy);
        for (auto& y0 : small_roots(g)) add_point(x0, y0);
        if (g.size() == 1) return;  // spurious eliminant root
    };
    if (dyp <= 0 && dyq <= 0) {
        return pts;  // gcd of pure-x polynomials nontrivial would be degenerate
    }
    if (dyp <= 0 || dyq <= 0) {
        const MPoly& pure = dyp <= 0 ? p : q;
        if (pure.is_constant()) return pts;  // nonzero constant: no common zeros
        TowerRoots xr = tower_roots(mpoly_to_upoly_in(pure, 0), true);
        inexact |= xr.used_numeric;
        for (auto& rm : xr.roots) roots_for_x(rm.root);
        return pts;
    }
    MPoly R = sylvester_resultant(p, q, 1);
    if (R.is_zero()) throw DegenerateInput("finite_singularities: common component");
    TowerRoots xr = tower_roots(mpoly_to_upoly_in(R, 0), true);
    inexact |= xr.used_numeric;
    for (auto& rm : xr.roots) roots_for_x(rm.root);
    return pts;
}

// multiplicities by sheared elimination: coordinates (x~, y) with x = x~ - t*y;
// the eliminant's root order at x~ = x0 + t*y0 equals I_w when the shear
// separates points and keeps both leading y-coefficients nonzero.
bool multiplicities_by_shear(const QuadSystem& s, std::vector<SupportPoint>& pts,
                             const Rat& t, std::vector<int>& out) {
    MPoly p = s.p(), q = s.q();
    // p2(-t, 1) and q2(-t, 1) must not vanish
    if (s.p_part(2).eval({-t, Rat(1)}).is_zero()) return false;
    if (s.q_part(2).eval({-t, Rat(1)}).is_zero()) return false;
    const auto& v = QuadSystem::xy_vars();
    MPoly xs = MPoly::var(v, 0) - MPoly::var(v, 1) * t;  // x = x~ - t y
    MPoly ps = p.substitute(0, xs), qs = q.substitute(0, xs);
    std::vector<AlgScalar> coords;
    for (auto& w : pts) coords.push_back(w.x + AlgScalar(t) * w.y);
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i] == coords[j]) return false;
    MPoly R = sylvester_resultant(ps, qs, 1);
    if (R.is_zero()) return false;
    UPoly Ru = mpoly_to_upoly_in(R, 0);
    out.clear();
    for (auto& c : coords) out.push_back(root_order(Ru, c));
    return true;
}

} // namespace

std::vector<SingPoint> finite_singularities(const QuadSystem& s) {
    if (s.is_degenerate()) throw DegenerateInput("finite_singularities: gcd(p,q) != 1");
    bool inexact = false;
    auto pts = finite_support(s, inexact);
    std::vector<SingPoint> out;
    if (pts.empty()) return out;

    static const Rat shears[] = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(2), Rat(-2),
                                 Rat(1, 3), Rat(3), Rat(-3), Rat(2, 3), Rat(5), Rat(-5),
                                 Rat(1, 5), Rat(7), Rat(-7), Rat(4, 3)};
    std::vector<int> mults, mults2;
    bool got = false, got2 = false;
    for (auto& t : shears) {
        if (!got) got = multiplicities_by_shear(s, pts, t, mults);
        else if (!got2) {
            got2 = multiplicities_by_shear(s, pts, t, mults2);
            if (got2 && mults2 != mults)
                throw InternalInconsistency("finite_singularities: elimination orders disagree");
        }
        if (got && got2) break;
    }
    if (!got) throw InternalInconsistency("finite_singularities: no valid shear found");

    for (size_t i = 0; i < pts.size(); ++i) {
        SingPoint sp;
        sp.pt = {pts[i].x, pts[i].y, AlgScalar(Rat(1))};
        sp.mult_pq = mults[i];
        sp.at_infinity = false;
        sp.inexact = pts[i].inexact;
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end(), [](const SingPoint& a, const SingPoint& b) {
        for (int i = 0; i < 3; ++i) {
            int c = AlgScalar::order_cmp(a.pt[i], b.pt[i]);
            if (c) return c < 0;
        }
        return false;
    });
    return out;
}

namespace {

// roots of a binary form F(X, Y) as projective points [X:Y:0] with multiplicities
std::vector<std::pair<std::array<AlgScalar, 3>, int>> binary_roots(const MPoly& F, bool& inexact) {
    std::vector<std::pair<std::array<AlgScalar, 3>, int>> out;
    int d = F.total_degree();
    UPoly ft(std::max(F.degree_in(0), 0) + 1, Rat(0));  // F(t, 1)
    for (auto& [m, c] : F.terms()) ft[m.e[0]] = c;
    ft = utrim(std::move(ft));
    int drop = d - udeg(ft);
    if (drop > 0)  // [1:0:0] with multiplicity = degree deficit
        out.push_back({{AlgScalar(Rat(1)), AlgScalar(Rat(0)), AlgScalar(Rat(0))}, drop});
    TowerRoots tr = tower_roots(ft, true);
    inexact |= tr.used_numeric;
    for (auto& rm : tr.roots)
        out.push_back({{rm.root, AlgScalar(Rat(1)), AlgScalar(Rat(0))}, rm.mult});
    return out;
}

MPoly homogenize_system_poly(const MPoly& f) {
    // f(x,y) of degree <= 2 -> F(X,Y,Z) homogeneous of degree exactly 2
    return f.homogenize("Z", 2).with_vars({"X", "Y", "Z"});
}

} // namespace

std::vector<SingPoint> infinite_singularities(const QuadSystem& s) {
    ComitantBundle cb(s);
    if (cb.C2().is_zero()) throw UnsupportedCase("infinite_singularities: C2 = 0");
    bool inexact = false;
    auto c2roots = binary_roots(cb.C2(), inexact);

    // I_w(P,Q) lives only on the common linear factors of p2, q2
    MPoly gp2 = s.p_part(2), gq2 = s.q_part(2);
    MPoly shared = (gp2.is_zero() || gq2.is_zero())
                       ? (gp2.is_zero() ? gq2 : gp2)
                       : mgcd(gp2, gq2);
    std::vector<std::pair<std::array<AlgScalar, 3>, int>> pqpts;
    if (!(gp2.is_zero() || gq2.is_zero()) && shared.total_degree() >= 1) {
        bool ix2 = false;
        pqpts = binary_roots(shared, ix2);
        inexact |= ix2;
    } else if (gp2.is_zero() || gq2.is_zero()) {
        // one quadratic part vanishes: P (or Q) contains the factor Z... it does
        // not; the common points on Z=0 are the roots of the surviving part
        // paired with the other polynomial's restriction. Lemma-based route:
        // common zeros of p2 and q2 as binary forms, where a zero form shares
        // every direction of the other.
        bool ix2 = false;
        pqpts = binary_roots(shared, ix2);
        inexact |= ix2;
        // restrict to directions where the vanished side's P|Z=0 also vanishes:
        // P restricted to Z=0 is p2, identically zero here, so keep all roots.
    }

    // I_w(P,Q) at each shared direction, by chart elimination with genericity
    // moves, validated by the Bezout total.
    std::vector<int> ipq(pqpts.size(), 0);
    if (!pqpts.empty()) {
        MPoly P = homogenize_system_poly(s.p());
        MPoly Q = homogenize_system_poly(s.q());
        int finite_total = 0;
        for (auto& f : finite_singularities(s)) finite_total += f.mult_pq;
        const std::vector<std::string> XYZ{"X", "Y", "Z"};
        bool done = false;
        static const Rat taus[] = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(1, 2), Rat(-2), Rat(3)};
        static const Rat dxs[] = {Rat(0), Rat(1), Rat(-1), Rat(2), Rat(1, 3), Rat(-2), Rat(5)};
        for (auto& tau : taus) {
            if (done) break;
            for (auto& dx : dxs) {
                if (done) break;
                for (auto& dy : dxs) {
                    // transform: Y -> Y + tau X (kills [1:0:0] directions), then
                    // affine translation by (dx, dy)
                    const auto& v = QuadSystem::xy_vars();
                    MPoly xn = MPoly::var(v, 0) + MPoly::constant(v, dx);
                    MPoly yn = MPoly::var(v, 1) * Rat(1) + MPoly::var(v, 0) * tau + MPoly::constant(v, dy);
                    MPoly pt_ = s.p().substitute(std::map<std::string, MPoly>{{"x", xn}, {"y", yn}});
                    MPoly qt_ = s.q().substitute(std::map<std::string, MPoly>{{"x", xn}, {"y", yn}});
                    // new quadratic system via chain rule: (x,y) = A^{-1}((xn,yn)-b)
                    // d/dt of new coords: xdot' = xdot; ydot' = ydot + tau*xdot? We
                    // transform the VARIETY pair (P,Q), not the vector field:
                    // intersection numbers only need the curves.
                    QuadSystem snew;  // not a system transform; we only reuse P,Q polys
                    (void)snew;
                    MPoly Pn = homogenize_system_poly(pt_);
                    MPoly Qn = homogenize_system_poly(qt_);
                    // chart Y = 1: coordinates (x, z)
                    const std::vector<std::string> xz{"x", "z"};
                    auto chart = [&](const MPoly& F) {
                        MPoly r(xz);
                        for (auto& [m, c] : F.terms()) {
                            Mono n;
                            n.e[0] = m.e[0];
                            n.e[1] = m.e[2];
                            r.add_term(n, c);
                        }
                        return r;
                    };
                    MPoly Pc = chart(Pn), Qc = chart(Qn);
                    // need z-degree 2 with constant leading coefficient
                    if (Pc.coeff_of(1, 2).is_zero() || Qc.coeff_of(1, 2).is_zero()) continue;
                    // transformed directions: [u:v:0] -> x-coordinate u/(v + tau u)
                    std::vector<AlgScalar> xcoords;
                    bool bad = false;
                    for (auto& [pt3, mcz] : pqpts) {
                        AlgScalar den = pt3[1] + AlgScalar(tau) * pt3[0];
                        if (den.is_zero()) { bad = true; break; }
                        xcoords.push_back(pt3[0] / den);
                    }
                    if (bad) continue;
                    for (size_t i = 0; i < xcoords.size() && !bad; ++i)
                        for (size_t j = i + 1; j < xcoords.size(); ++j)
                            if (xcoords[i] == xcoords[j]) { bad = true; break; }
                    if (bad) continue;
                    // finite singularities of the transformed pair must avoid those
                    // x-coordinates in this chart (their chart-x is X/Y)
                    // transformed finite sing: (x,y) -> x' = x - ? ... recompute directly:
                    // a finite point (a, b) of the original maps to preimage under
                    // (xn, yn): xn = a means new x = a - dx; solve: x = a', y = b'
                    // with a = a' + dx, b = b' + tau a' + dy  =>  a' = a - dx,
                    // b' = b - tau(a - dx) - dy. Chart-x of [a':b':1] is a'/b' when
                    // b' != 0; b' == 0 keeps the point off this chart fiber only if
                    // a' != xcoord... (it then sits at chart infinity, excluded).
                    MPoly Rz = sylvester_resultant(Pc, Qc, 1);
                    if (Rz.is_zero()) continue;
                    UPoly Ru = mpoly_to_upoly_in(Rz, 0);
                    std::vector<int> vals;
                    int tot = 0;
                    for (auto& xc : xcoords) {
                        int o = root_order(Ru, xc);
                        vals.push_back(o);
                        tot += o;
                    }
                    if (finite_total + tot != 4) continue;  // genericity failed; retry
                    ipq = vals;
                    done = true;
                    break;
                }
            }
        }
        if (!done) throw InternalInconsistency("infinite_singularities: no generic chart found");
    }

    std::vector<SingPoint> out;
    for (auto& [pt3, mcz] : c2roots) {
        SingPoint sp;
        sp.pt = pt3;
        sp.mult_cz = mcz;
        sp.at_infinity = true;
        sp.mult_pq = 0;
        for (size_t i = 0; i < pqpts.size(); ++i)
            if (same_pt(pqpts[i].first, pt3)) sp.mult_pq = ipq[i];
        sp.inexact = pt3[0].inexact() || pt3[1].inexact();
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end(), [](const SingPoint& a, const SingPoint& b) {
        for (int i = 0; i < 3; ++i) {
            int c = AlgScalar::order_cmp(a.pt[i], b.pt[i]);
            if (c) return c < 0;
        }
        return false;
    });
    return out;
}

DivisorSummary divisor_type(const QuadSystem& s) {
    ComitantBundle cb(s);
    DivisorSummary out;
    const MPoly& C2 = cb.C2();
    if (C2.is_zero()) {
        out.divisor_case = 5;
        return out;
    }
    Rat eta = cb.eta();
    bool Mzero = cb.M().is_zero();
    if (eta.sign() > 0) out.divisor_case = 1;
    else if (eta.sign() < 0) out.divisor_case = 2;
    else if (!Mzero) out.divisor_case = 3;
    else out.divisor_case = 4;

    bool inexact = false;
    out.dcz.entries = binary_roots(C2, inexact);
    for (auto& [pt, n] : out.dcz.entries) {
        bool real = pt[0].is_real() && pt[1].is_real();
        if (real) out.n_r_inf++;
    }
    auto inf = infinite_singularities(s);
    for (auto& sp : inf)
        if (sp.mult_pq > 0) out.dpqz.entries.push_back({sp.pt, sp.mult_pq});
    out.d_sigma_inf = out.dpqz.degree();
    return out;
}

} // namespace qsl4
