#include "qsl4/lines.hpp"
#include "qsl4/errors.hpp"

#include <algorithm>

namespace qsl4 {

std::array<AlgScalar, 3> normalize_line(const AlgScalar& u, const AlgScalar& v,
                                        const AlgScalar& w) {
    const AlgScalar* lead = nullptr;
    if (!u.is_zero()) lead = &u;
    else if (!v.is_zero()) lead = &v;
    else if (!w.is_zero()) lead = &w;
    else throw std::invalid_argument("normalize_line: zero triple");
    return {u / *lead, v / *lead, w / *lead};
}

bool line_order_less(const LineWithMult& a, const LineWithMult& b) {
    if (a.is_infinite != b.is_infinite) return b.is_infinite;  // infinity last
    auto rank = [](const LineWithMult& l) {
        auto kindmax = [](const AlgScalar& s) {
            switch (s.kind()) {
                case AlgScalar::Kind::Rational: return 0;
                case AlgScalar::Kind::Quadratic: return 1;
                case AlgScalar::Kind::Numeric: return 2;
            }
            return 2;
        };
        return std::max({kindmax(l.u), kindmax(l.v), kindmax(l.w)});
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    for (int i = 0; i < 3; ++i) {
        int c = AlgScalar::order_cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

AlgPoly verify_line(const QuadSystem& s, const AlgScalar& u, const AlgScalar& v,
                    const AlgScalar& w) {
    if (u.is_zero() && v.is_zero())
        throw std::invalid_argument("verify_line: affine line required");
    AlgPoly P = AlgPoly::from_mpoly(s.p(), 0, 1);
    AlgPoly Q = AlgPoly::from_mpoly(s.q(), 0, 1);
    AlgPoly Df = P.scaled(u) + Q.scaled(v);  // D~f for f = ux + vy + w
    auto [cof, rem] = Df.divide_linear(u, v, w);
    if (!rem.is_zero_within(1e-30))
        throw NotInvariantError("verify_line: cofactor division leaves a remainder");
    if (cof.total_degree() > 1)
        throw InternalInconsistency("verify_line: cofactor degree exceeds 1");
    return cof;
}

namespace {

// all roots of a rational univariate polynomial; wrapper tracking exactness
struct SliceRoots {
    std::vector<AlgScalar> roots;
    bool used_numeric = false;
    bool split_failed = false;
};

SliceRoots slice_roots(const UPoly& p, bool allow_numeric) {
    SliceRoots out;
    TowerRoots tr = tower_roots(p, allow_numeric);
    out.used_numeric = tr.used_numeric;
    out.split_failed = !tr.leftover.empty();
    for (auto& rm : tr.roots)
        for (int i = 0; i < rm.mult; ++i) out.roots.push_back(rm.root);
    return out;
}

UPoly mpoly_to_upoly(const MPoly& f, int var) {
    UPoly p(std::max(f.degree_in(var), 0) + 1, Rat(0));
    for (auto& [m, c] : f.terms()) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && m.e[i] != 0)
                throw std::invalid_argument("mpoly_to_upoly: not univariate");
        p[m.e[var]] = c;
    }
    return utrim(std::move(p));
}

// divide out every power of (u x + v y + w); returns multiplicity found
int peel_factor(AlgPoly& g, const AlgScalar& u, const AlgScalar& v, const AlgScalar& w,
                bool& inexact) {
    int mult = 0;
    while (g.total_degree() >= 1) {
        auto [quot, rem] = g.divide_linear(u, v, w);
        bool exact_zero = rem.is_zero();
        if (!exact_zero) {
            bool numeric_zero = rem.is_zero_within(1e-30) &&
                                (u.inexact() || v.inexact() || w.inexact());
            if (!numeric_zero) break;
            inexact = true;
        }
        g = quot;
        ++mult;
    }
    return mult;
}

} // namespace

LineSet extract_lines(const QuadSystem& s, const EPolys& e) {
    LineSet out;
    const MPoly& H = e.Hgcd;
    if (H.is_zero()) throw InternalInconsistency("extract_lines: zero Hgcd");

    // line at infinity: multiplicity = z-exponent + 1
    int zc = e.z_exponent();
    LineWithMult inf;
    inf.u = AlgScalar(Rat(0));
    inf.v = AlgScalar(Rat(0));
    inf.w = AlgScalar(Rat(1));
    inf.multiplicity = zc + 1;
    inf.is_infinite = true;
    out.lines.push_back(inf);

    MPoly gaffine = e.affine_part();  // rational, degree = deg H - zc
    if (gaffine.total_degree() >= 1) {
        // factors free of x: content w.r.t. x is a univariate polynomial in y
        MPoly contx(QuadSystem::xy_vars());
        for (int k = 0; k <= gaffine.degree_in(0); ++k) {
            MPoly c = gaffine.coeff_of(0, k);
            if (c.is_zero()) continue;
            contx = contx.is_zero() ? c : mgcd(contx, c);
        }
        MPoly pp = *MPoly::divide_exact(gaffine, contx);
        AlgPoly g = AlgPoly::from_mpoly(pp, 0, 1);

        std::vector<std::array<AlgScalar, 3>> candidates;
        if (contx.total_degree() >= 1) {
            auto cr = slice_roots(mpoly_to_upoly(contx, 1), true);
            out.inexact |= cr.used_numeric;
            for (auto& r : cr.roots) candidates.push_back({AlgScalar(Rat(0)), AlgScalar(Rat(1)), -r});
        }
        if (pp.total_degree() >= 1) {
            // factors x + v y + w: roots of the slices y=0 and y=1 pair up as
            // w = -r0, v = r0 - r1
            MPoly s0 = pp.substitute(1, MPoly::constant(QuadSystem::xy_vars(), Rat(0)));
            MPoly s1 = pp.substitute(1, MPoly::constant(QuadSystem::xy_vars(), Rat(1)));
            auto r0 = slice_roots(mpoly_to_upoly(s0, 0), true);
            auto r1 = slice_roots(mpoly_to_upoly(s1, 0), true);
            out.inexact |= r0.used_numeric || r1.used_numeric;
            for (auto& a : r0.roots)
                for (auto& b : r1.roots)
                    candidates.push_back({AlgScalar(Rat(1)), a - b, -a});
        }

        AlgPoly residual = AlgPoly::from_mpoly(contx, 0, 1) * g;
        for (auto& cand : candidates) {
            bool inex = false;
            int mult = peel_factor(residual, cand[0], cand[1], cand[2], inex);
            if (mult == 0) continue;
            out.inexact |= inex;
            LineWithMult lw;
            auto nrm = normalize_line(cand[0], cand[1], cand[2]);
            lw.u = nrm[0];
            lw.v = nrm[1];
            lw.w = nrm[2];
            lw.multiplicity = mult;
            lw.inexact = inex || cand[0].inexact() || cand[1].inexact() || cand[2].inexact();
            // drop duplicates (the same line can surface from both slices)
            bool dup = false;
            for (auto& prev : out.lines)
                if (!prev.is_infinite && prev.u == lw.u && prev.v == lw.v && prev.w == lw.w)
                    dup = true;
            if (dup) continue;
            lw.cofactor = verify_line(s, lw.u, lw.v, lw.w);
            out.lines.push_back(std::move(lw));
        }
        if (residual.total_degree() >= 1)
            throw NonSplitError("extract_lines: Hgcd has a factor outside the scalar tower");
        // factor product check: degrees must reconcile exactly
        int sum = 0;
        for (auto& l : out.lines)
            if (!l.is_infinite) sum += l.multiplicity;
        if (sum != gaffine.total_degree())
            throw InternalInconsistency("extract_lines: factor multiplicities do not add up");
    }

    std::sort(out.lines.begin(), out.lines.end(), line_order_less);
    out.total_multiplicity = 0;
    for (auto& l : out.lines) {
        out.total_multiplicity += l.multiplicity;
        out.inexact |= l.inexact;
    }
    return out;
}

std::vector<std::array<AlgScalar, 3>> line_search_oracle(const QuadSystem& s) {
    if (s.is_degenerate()) throw DegenerateInput("line_search_oracle: degenerate system");
    std::vector<std::array<AlgScalar, 3>> found;
    const std::vector<std::string> vars{"x", "y", "m", "b"};
    MPoly x = MPoly::var(vars, 0);
    MPoly m = MPoly::var(vars, 2), b = MPoly::var(vars, 3);
    MPoly p4 = s.p().with_vars(vars).substitute(1, m * x + b);
    MPoly q4 = s.q().with_vars(vars).substitute(1, m * x + b);
    MPoly E = q4 - m * p4;  // must vanish identically in x on an invariant line
    // coefficients in x: E2 depends on m only (it is -C2(1, m))
    MPoly E2 = E.coeff_of(0, 2), E1 = E.coeff_of(0, 1), E0 = E.coeff_of(0, 0);
    if (E2.degree_in(3) > 0) throw InternalInconsistency("oracle: x^2 coefficient depends on b");
    if (E2.is_zero()) throw UnsupportedCase("oracle: C2 = 0");

    auto eval_at_m = [&](const MPoly& f, const AlgScalar& m0) {
        // f(m, b) -> dense vector in b with AlgScalar coefficients
        std::vector<AlgScalar> out(std::max(f.degree_in(3), 0) + 1, AlgScalar(Rat(0)));
        for (auto& [mono, c] : f.terms()) {
            AlgScalar t = AlgScalar(c);
            for (int i = 0; i < mono.e[2]; ++i) t = t * m0;
            out[mono.e[3]] = out[mono.e[3]] + t;
        }
        while (out.size() > 1 && out.back().is_zero()) out.pop_back();
        return out;
    };

    TowerRoots slopes = tower_roots(mpoly_to_upoly(E2.with_vars({"m"}), 0), true);
    for (auto& rm : slopes.roots) {
        const AlgScalar& m0 = rm.root;
        auto e1 = eval_at_m(E1, m0);
        auto e0 = eval_at_m(E0, m0);
        auto push = [&](const AlgScalar& b0) {
            found.push_back(normalize_line(-m0, AlgScalar(Rat(1)), -b0));
        };
        bool e1zero = true;
        for (auto& c : e1) e1zero = e1zero && c.is_zero();
        if (!e1zero && e1.size() == 2) {
            AlgScalar b0 = -(e1[0] / e1[1]);
            // must also kill E0
            AlgScalar v = AlgScalar(Rat(0));
            for (auto it = e0.rbegin(); it != e0.rend(); ++it) v = v * b0 + *it;
            if (v.is_zero(1e-28)) push(b0);
        } else if (!e1zero) {
            continue;  // constant nonzero: no line in this direction
        } else {
            // E1 identically zero: roots of the quadratic E0(b)
            if (e0.size() == 3 && !e0[2].is_zero()) {
                AlgScalar disc = e0[1] * e0[1] - AlgScalar(Rat(4)) * e0[2] * e0[0];
                AlgScalar sq = alg_sqrt(disc);
                AlgScalar twoA = AlgScalar(Rat(2)) * e0[2];
                push((-e0[1] + sq) / twoA);
                push((-e0[1] - sq) / twoA);
            } else if (e0.size() == 2 && !e0[1].is_zero()) {
                push(-(e0[0] / e0[1]));
            } else if (e0.size() == 1 && e0[0].is_zero()) {
                throw InternalInconsistency("oracle: a full direction of invariant lines");
            }
        }
    }

    // vertical lines x = c: p(c, y) == 0 identically in y
    if (s.a02.is_zero()) {
        UPoly lin = utrim(UPoly{s.a01, Rat(2) * s.a11});          // coefficient of y
        UPoly quad = utrim(UPoly{s.a00, s.a10, s.a20});           // y-free part
        UPoly common;
        if (lin.empty() && quad.empty()) {
            common.clear();  // p == 0: degenerate, excluded above
        } else if (lin.empty()) {
            common = quad;
        } else if (quad.empty()) {
            common = lin;
        } else {
            common = ugcd(lin, quad);
        }
        if (udeg(common) >= 1) {
            TowerRoots cr = tower_roots(common, true);
            for (auto& rm : cr.roots)
                found.push_back(normalize_line(AlgScalar(Rat(1)), AlgScalar(Rat(0)), -rm.root));
        }
    }

    // deterministic order, deduplicated
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        for (int i = 0; i < 3; ++i) {
            int c = AlgScalar::order_cmp(a[i], b[i]);
            if (c) return c < 0;
        }
        return false;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const auto& a, const auto& b) {
                                return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
                            }),
                found.end());
    return found;
}

} // namespace qsl4
