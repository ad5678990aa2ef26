#include "qsl4/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsl4 {

void MPoly::check_arity() const {
    if (vars_.size() > kMaxVars)
        throw std::invalid_argument("MPoly: at most 4 variables supported");
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Mono{}] = c;
    return p;
}

MPoly MPoly::var(std::vector<std::string> vars, int i, int power) {
    MPoly p(std::move(vars));
    if (i < 0 || i >= p.arity()) throw std::out_of_range("MPoly::var index");
    Mono m;
    m.e[i] = power;
    p.terms_[m] = Rat(1);
    return p;
}

int MPoly::var_index(const std::string& name) const {
    for (int i = 0; i < arity(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("MPoly: not a constant");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.total();
}

int MPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total();
    for (auto& [m, c] : terms_)
        if (m.total() != d) return false;
    return true;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::set_coeff(const Mono& m, const Rat& c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<Mono, Rat> MPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("MPoly::leading of zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.vars_);
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            Mono m;
            for (int i = 0; i < kMaxVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(vars_, Rat(1));
    MPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(vars_);
    for (auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Mono d = m;
        d.e[var]--;
        r.add_term(d, c * Rat(m.e[var]));
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
    MPoly q(f.vars_), r = f;
    auto [gm, gc] = g.leading();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading();
        Mono d;
        for (int i = 0; i < kMaxVars; ++i) {
            d.e[i] = rm.e[i] - gm.e[i];
            if (d.e[i] < 0) return std::nullopt;
        }
        Rat qc = rc / gc;
        q.add_term(d, qc);
        MPoly t(f.vars_);
        t.terms_[d] = qc;
        r -= t * g;
    }
    return q;
}

MPoly MPoly::coeff_of(int var, int k) const {
    MPoly r(vars_);
    for (auto& [m, c] : terms_) {
        if (m.e[var] != k) continue;
        Mono n = m;
        n.e[var] = 0;
        r.terms_[n] = c;
    }
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    MPoly r(vars_);
    int d = degree_in(var);
    if (d <= 0 && !(d == 0)) return *this;
    // Horner in `var`.
    for (int k = std::max(d, 0); k >= 0; --k) {
        r = r * value + coeff_of(var, k);
    }
    return r;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& assignment) const {
    // Substitute sequentially; assignments are over the same variable list, and
    // no assigned variable may appear in any substituted value (checked).
    MPoly r = *this;
    for (auto& [name, val] : assignment) {
        int i = var_index(name);
        if (i < 0) throw std::invalid_argument("MPoly::substitute: unknown variable " + name);
        for (auto& [other, val2] : assignment) {
            int j = var_index(other);
            if (j >= 0 && val.degree_in(j) > 0)
                throw std::invalid_argument("MPoly::substitute: assigned variable appears in a value");
        }
        (void)val;
    }
    for (auto& [name, val] : assignment) {
        int i = r.var_index(name);
        r = r.substitute(i, val.with_vars(vars_));
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity())
        throw std::invalid_argument("MPoly::eval: wrong point arity");
    Rat acc(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < arity(); ++i)
            if (m.e[i]) t *= point[i].pow(m.e[i]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::with_vars(const std::vector<std::string>& vars) const {
    MPoly r(vars);
    std::array<int, kMaxVars> remap{};
    for (int i = 0; i < arity(); ++i) {
        remap[i] = r.var_index(vars_[i]);
        if (remap[i] < 0 && degree_in(i) > 0)
            throw std::invalid_argument("MPoly::with_vars: target lacks variable " + vars_[i]);
    }
    for (auto& [m, c] : terms_) {
        Mono n;
        for (int i = 0; i < arity(); ++i) {
            if (m.e[i] == 0) continue;
            n.e[remap[i]] = m.e[i];
        }
        r.add_term(n, c);
    }
    return r;
}

MPoly MPoly::homogenize(const std::string& zname, int deg) const {
    if (deg < total_degree())
        throw std::invalid_argument("MPoly::homogenize: degree below total degree");
    std::vector<std::string> nv = vars_;
    nv.push_back(zname);
    MPoly r(nv);
    int zi = static_cast<int>(vars_.size());
    for (auto& [m, c] : terms_) {
        Mono n = m;
        n.e[zi] = deg - m.total();
        r.terms_[n] = c;
    }
    return r;
}

Rat MPoly::content() const {
    Rat g(0);
    for (auto& [m, c] : terms_) g = Rat::gcd(g, c);
    return g;
}

MPoly MPoly::primitive_part() const {
    if (is_zero()) return *this;
    Rat c = content();
    MPoly r = *this;
    r *= c.inv();
    return r;
}

MPoly MPoly::normalized() const {
    if (is_zero()) return *this;
    MPoly r = primitive_part();
    if (r.leading().second.sign() < 0) r *= Rat(-1);
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        std::string cs = c.abs().str();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_var = it->first.total() > 0;
        if (!has_var || cs != "1") os << cs;
        bool star = !has_var ? false : (cs != "1");
        for (int i = 0; i < arity(); ++i) {
            int e = it->first.e[i];
            if (!e) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

// ---------- classical operations ----------

namespace {
Rat binom(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}
} // namespace

MPoly transvectant(const MPoly& f, const MPoly& g, unsigned k, int vx, int vy) {
    MPoly acc(f.vars());
    for (unsigned h = 0; h <= k; ++h) {
        MPoly df = f, dg = g;
        for (unsigned i = 0; i < k - h; ++i) df = df.derivative(vx);
        for (unsigned i = 0; i < h; ++i) df = df.derivative(vy);
        for (unsigned i = 0; i < h; ++i) dg = dg.derivative(vx);
        for (unsigned i = 0; i < k - h; ++i) dg = dg.derivative(vy);
        MPoly term = df * dg;
        term *= (h % 2 ? -binom(k, h) : binom(k, h));
        acc += term;
    }
    return acc;
}

MPoly mpoly_det(std::vector<std::vector<MPoly>> m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("mpoly_det: empty matrix");
    const auto& vars = m[0][0].vars();
    MPoly prev = MPoly::constant(vars, Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MPoly(vars);  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = MPoly::divide_exact(num, prev);
                if (!q) throw std::logic_error("mpoly_det: Bareiss division failed");
                m[i][j] = *q;
            }
            m[i][k] = MPoly(vars);
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var,
                          int formal_deg_f, int formal_deg_g) {
    int n = formal_deg_f >= 0 ? formal_deg_f : f.degree_in(var);
    int m = formal_deg_g >= 0 ? formal_deg_g : g.degree_in(var);
    if (n < f.degree_in(var) || m < g.degree_in(var))
        throw std::invalid_argument("sylvester_resultant: formal degree below actual");
    if (n <= 0 || m <= 0)
        throw std::domain_error("sylvester_resultant: degenerate input (degree 0 in variable)");
    const auto& vars = f.vars();
    std::vector<MPoly> fc(n + 1, MPoly(vars)), gc(m + 1, MPoly(vars));
    for (int i = 0; i <= n; ++i) fc[i] = f.coeff_of(var, n - i);
    for (int i = 0; i <= m; ++i) gc[i] = g.coeff_of(var, m - i);
    size_t sz = n + m;
    std::vector<std::vector<MPoly>> mat(sz, std::vector<MPoly>(sz, MPoly(vars)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat[i][i + j] = fc[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat[m + i][i + j] = gc[j];
    return mpoly_det(std::move(mat));
}

namespace {

// content of f w.r.t. main variable `var`: gcd of the coefficients (which are
// polynomials in the remaining variables).
MPoly content_wrt(const MPoly& f, int var) {
    MPoly acc(f.vars());
    for (int k = 0; k <= std::max(f.degree_in(var), 0); ++k) {
        MPoly c = f.coeff_of(var, k);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c : mgcd(acc, c);
    }
    return acc;
}

MPoly pseudo_rem(const MPoly& f, const MPoly& g, int var) {
    int df = f.degree_in(var), dg = g.degree_in(var);
    MPoly lg = g.coeff_of(var, dg);
    MPoly r = f;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        MPoly lr = r.coeff_of(var, dr);
        MPoly xshift = MPoly::var(f.vars(), var, dr - dg);
        r = r * lg - g * (lr * xshift);
        if (!r.is_zero() && r.degree_in(var) >= dr && dr >= dg) {
            // degree must strictly drop; guards against an ill-formed input
            throw std::logic_error("pseudo_rem: no degree drop");
        }
    }
    (void)df;
    return r;
}

} // namespace

MPoly mgcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("mgcd(0,0)");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    if (f.is_constant() || g.is_constant())
        return MPoly::constant(f.vars(), Rat(1));
    // main variable: first variable appearing in either
    int var = -1;
    for (int i = 0; i < f.arity(); ++i) {
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) { var = i; break; }
    }
    if (f.degree_in(var) == 0)
        return mgcd(g, f);
    if (g.degree_in(var) == 0) {
        // gcd lives in the coefficient ring: gcd(content_var(f), g)
        return mgcd(content_wrt(f, var), g).normalized();
    }
    MPoly cf = content_wrt(f, var), cg = content_wrt(g, var);
    MPoly cont = mgcd(cf, cg);
    MPoly a = *MPoly::divide_exact(f, cf);
    MPoly b = *MPoly::divide_exact(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (true) {
        MPoly r = pseudo_rem(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            b = MPoly::constant(f.vars(), Rat(1));
            break;
        }
        a = b;
        MPoly rc = content_wrt(r, var);
        b = *MPoly::divide_exact(r, rc);
    }
    MPoly result = cont * b.primitive_part();
    return result.normalized();
}

Rat binary_discriminant(const MPoly& f, int vx, int vy) {
    if (f.is_zero()) return Rat(0);
    if (!f.is_homogeneous())
        throw std::invalid_argument("binary_discriminant: input not homogeneous");
    for (int i = 0; i < f.arity(); ++i)
        if (i != vx && i != vy && f.degree_in(i) > 0)
            throw std::invalid_argument("binary_discriminant: input not binary in (vx,vy)");
    int d = f.total_degree();
    auto cf = [&](int i, int j) {
        Mono m;
        m.e[vx] = i;
        m.e[vy] = j;
        return f.coeff(m);
    };
    if (d == 2) {
        Rat A = cf(2, 0), B = cf(1, 1), C = cf(0, 2);
        return Rat(2) * (B * B - Rat(4) * A * C);
    }
    if (d == 3) {
        Rat a = cf(3, 0), b = cf(2, 1), c = cf(1, 2), dd = cf(0, 3);
        return Rat(18) * a * b * c * dd - Rat(4) * b.pow(3) * dd + b * b * c * c -
               Rat(4) * a * c.pow(3) - Rat(27) * a * a * dd * dd;
    }
    throw std::invalid_argument("binary_discriminant: degree must be 2 or 3");
}

MPoly jacobian(const MPoly& f, const MPoly& g, int vx, int vy) {
    return f.derivative(vx) * g.derivative(vy) - f.derivative(vy) * g.derivative(vx);
}

MPoly hessian(const MPoly& f, int vx, int vy) {
    return f.derivative(vx).derivative(vx) * f.derivative(vy).derivative(vy) -
           f.derivative(vx).derivative(vy).pow(2);
}

} // namespace qsl4
