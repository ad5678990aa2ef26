#include "qsl4/algebraic.hpp"
#include "qsl4/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsl4 {

// ---------------- NumC ----------------

double NumC::abs_upper() const {
    mpf_class m = re * re + im * im;
    double a = std::sqrt(m.get_d());
    return a + rad;
}

namespace {

NumC nc_add(const NumC& x, const NumC& y) { return {x.re + y.re, x.im + y.im, x.rad + y.rad + 1e-70}; }
NumC nc_sub(const NumC& x, const NumC& y) { return {x.re - y.re, x.im - y.im, x.rad + y.rad + 1e-70}; }
NumC nc_mul(const NumC& x, const NumC& y) {
    NumC r{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re, 0.0};
    double ax = x.abs_upper(), ay = y.abs_upper();
    r.rad = ax * y.rad + ay * x.rad + x.rad * y.rad + 1e-60 * (1.0 + ax * ay);
    return r;
}
NumC nc_div(const NumC& x, const NumC& y) {
    mpf_class den = y.re * y.re + y.im * y.im;
    if (den == 0) throw std::domain_error("numeric division by zero");
    NumC r{(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den, 0.0};
    double ay = y.abs_upper(), ax = x.abs_upper();
    double ylow = std::max(ay - 2 * y.rad, 1e-300);
    r.rad = (x.rad + ax * y.rad / ylow) / ylow + 1e-60 * (1.0 + ax / ylow);
    return r;
}
NumC nc_from_rat(const Rat& q) {
    NumC r;
    r.re = mpf_class(q.num().get_str(), kNumPrecBits);
    r.re /= mpf_class(q.den().get_str(), kNumPrecBits);
    r.im = 0;
    r.rad = 0.0;
    return r;
}

} // namespace

// ---------------- AlgScalar ----------------

AlgScalar AlgScalar::quadratic(const Rat& a, const Rat& b, const Int& d) {
    if (d == 0 || d == 1) throw std::invalid_argument("AlgScalar::quadratic: d must be squarefree != 0,1");
    AlgScalar s;
    s.kind_ = Kind::Quadratic;
    s.a_ = a;
    s.b_ = b;
    s.d_ = d;
    s.reduce();
    return s;
}

AlgScalar AlgScalar::numeric(NumC z) {
    AlgScalar s;
    s.kind_ = Kind::Numeric;
    s.num_ = std::move(z);
    return s;
}

void AlgScalar::reduce() {
    if (kind_ == Kind::Quadratic && b_.is_zero()) {
        kind_ = Kind::Rational;
        d_ = 0;
        b_ = Rat(0);
    }
}

bool AlgScalar::is_zero(double tol) const {
    switch (kind_) {
        case Kind::Rational: return a_.is_zero();
        case Kind::Quadratic: return false;  // b != 0 by reduction
        case Kind::Numeric: return num_.abs_upper() <= tol;
    }
    return false;
}

bool AlgScalar::is_real() const {
    switch (kind_) {
        case Kind::Rational: return true;
        case Kind::Quadratic: return d_ > 0;
        case Kind::Numeric: {
            mpf_class a = abs(num_.im);
            return a.get_d() <= num_.rad + 1e-40;
        }
    }
    return true;
}

NumC AlgScalar::to_numeric() const {
    switch (kind_) {
        case Kind::Rational: return nc_from_rat(a_);
        case Kind::Quadratic: {
            NumC r = nc_from_rat(a_);
            NumC b = nc_from_rat(b_);
            mpf_class dd(d_.get_str(), kNumPrecBits);
            mpf_class sq(0, kNumPrecBits);
            if (d_ > 0) {
                sq = sqrt(dd);
                r.re += b.re * sq;
            } else {
                sq = sqrt(-dd);
                r.im += b.re * sq;
            }
            r.rad = 1e-65 * (1.0 + r.abs_upper());
            return r;
        }
        case Kind::Numeric: return num_;
    }
    return {};
}

AlgScalar AlgScalar::operator-() const {
    switch (kind_) {
        case Kind::Rational: return AlgScalar(-a_);
        case Kind::Quadratic: return quadratic(-a_, -b_, d_);
        case Kind::Numeric: {
            NumC z = num_;
            z.re = -z.re;
            z.im = -z.im;
            return numeric(z);
        }
    }
    return {};
}

AlgScalar AlgScalar::conj() const {
    switch (kind_) {
        case Kind::Rational: return *this;
        case Kind::Quadratic:
            // conjugation flips the extension generator (complex conjugation when
            // d < 0, field conjugation when d > 0); an involution either way
            return quadratic(a_, -b_, d_);
        case Kind::Numeric: {
            NumC z = num_;
            z.im = -z.im;
            return numeric(z);
        }
    }
    return {};
}

namespace {
using K = AlgScalar::Kind;
}

AlgScalar operator+(const AlgScalar& x, const AlgScalar& y) {
    if (x.kind_ == K::Rational && y.kind_ == K::Rational) return AlgScalar(x.a_ + y.a_);
    if (x.kind_ == K::Numeric || y.kind_ == K::Numeric)
        return AlgScalar::numeric(nc_add(x.to_numeric(), y.to_numeric()));
    if (x.kind_ == K::Rational) return AlgScalar::quadratic(y.a_ + x.a_, y.b_, y.d_);
    if (y.kind_ == K::Rational) return AlgScalar::quadratic(x.a_ + y.a_, x.b_, x.d_);
    if (x.d_ == y.d_) return AlgScalar::quadratic(x.a_ + y.a_, x.b_ + y.b_, x.d_);
    return AlgScalar::numeric(nc_add(x.to_numeric(), y.to_numeric()));  // degrade
}

AlgScalar operator-(const AlgScalar& x, const AlgScalar& y) { return x + (-y); }

AlgScalar operator*(const AlgScalar& x, const AlgScalar& y) {
    if (x.kind_ == K::Rational && y.kind_ == K::Rational) return AlgScalar(x.a_ * y.a_);
    if (x.kind_ == K::Numeric || y.kind_ == K::Numeric)
        return AlgScalar::numeric(nc_mul(x.to_numeric(), y.to_numeric()));
    if (x.kind_ == K::Rational) return AlgScalar::quadratic(x.a_ * y.a_, x.a_ * y.b_, y.d_);
    if (y.kind_ == K::Rational) return AlgScalar::quadratic(x.a_ * y.a_, y.a_ * x.b_, x.d_);
    if (x.d_ == y.d_)
        return AlgScalar::quadratic(x.a_ * y.a_ + x.b_ * y.b_ * Rat(x.d_),
                                    x.a_ * y.b_ + x.b_ * y.a_, x.d_);
    return AlgScalar::numeric(nc_mul(x.to_numeric(), y.to_numeric()));  // degrade
}

AlgScalar operator/(const AlgScalar& x, const AlgScalar& y) {
    if (y.kind_ == K::Rational) {
        if (y.a_.is_zero()) throw std::domain_error("AlgScalar: division by zero");
        return x * AlgScalar(y.a_.inv());
    }
    if (y.kind_ == K::Quadratic) {
        // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
        Rat nrm = y.a_ * y.a_ - y.b_ * y.b_ * Rat(y.d_);
        if (nrm.is_zero()) throw std::domain_error("AlgScalar: division by zero norm");
        return x * AlgScalar::quadratic(y.a_ / nrm, -y.b_ / nrm, y.d_);
    }
    return AlgScalar::numeric(nc_div(x.to_numeric(), y.to_numeric()));
}

bool operator==(const AlgScalar& x, const AlgScalar& y) {
    if (x.kind_ != y.kind_) {
        if (x.kind_ == K::Numeric || y.kind_ == K::Numeric) {
            NumC d = nc_sub(x.to_numeric(), y.to_numeric());
            return d.abs_upper() <= 1e-25;
        }
        return false;  // rational vs quadratic: reduced forms differ
    }
    switch (x.kind_) {
        case K::Rational: return x.a_ == y.a_;
        case K::Quadratic: return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
        case K::Numeric: {
            NumC d = nc_sub(x.num_, y.num_);
            return d.abs_upper() <= 1e-25;
        }
    }
    return false;
}

int AlgScalar::order_cmp(const AlgScalar& x, const AlgScalar& y) {
    auto rank = [](Kind k) { return k == Kind::Rational ? 0 : k == Kind::Quadratic ? 1 : 2; };
    if (rank(x.kind_) != rank(y.kind_)) return rank(x.kind_) < rank(y.kind_) ? -1 : 1;
    auto cr = [](const Rat& a, const Rat& b) { return a < b ? -1 : (a == b ? 0 : 1); };
    switch (x.kind_) {
        case Kind::Rational: return cr(x.a_, y.a_);
        case Kind::Quadratic: {
            if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
            if (int c = cr(x.a_, y.a_)) return c;
            return cr(x.b_, y.b_);
        }
        case Kind::Numeric: {
            double xr = x.num_.re.get_d(), yr = y.num_.re.get_d();
            if (xr != yr) return xr < yr ? -1 : 1;
            double xi = x.num_.im.get_d(), yi = y.num_.im.get_d();
            if (xi != yi) return xi < yi ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

std::string AlgScalar::str() const {
    switch (kind_) {
        case Kind::Rational: return a_.str();
        case Kind::Quadratic: {
            std::ostringstream os;
            bool imag = (d_ == -1);
            std::string root = imag ? "i" : ("sqrt(" + d_.get_str() + ")");
            if (!a_.is_zero()) os << a_.str();
            if (b_ == Rat(1)) os << (a_.is_zero() ? "" : "+") << root;
            else if (b_ == Rat(-1)) os << "-" << root;
            else os << (b_.sign() > 0 && !a_.is_zero() ? "+" : "") << b_.str() << "*" << root;
            return os.str();
        }
        case Kind::Numeric: {
            std::ostringstream os;
            os << num_.re.get_d();
            double im = num_.im.get_d();
            if (im != 0.0) os << (im > 0 ? "+" : "") << im << "i";
            os << "~";  // inexact marker
            return os.str();
        }
    }
    return "?";
}

AlgScalar alg_sqrt(const AlgScalar& x) {
    if (x.kind() == K::Rational) {
        const Rat& q = x.rat_a();
        if (q.is_zero()) return AlgScalar(Rat(0));
        auto [s, d] = squarefree_decompose(q);
        if (d == 1) return AlgScalar(s);
        return AlgScalar::quadratic(Rat(0), s, d);
    }
    if (x.kind() == K::Quadratic) {
        // sqrt(a + b sqrt d) = p + q sqrt d when p^2 = (a +- sqrt(a^2 - b^2 d))/2
        // is a rational square; else leave the tower.
        Rat a = x.rat_a(), b = x.rat_b();
        Rat n = a * a - b * b * Rat(x.ext_d());
        if (n.sign() >= 0) {
            auto [s, dn] = n.is_zero() ? std::pair<Rat, Int>{Rat(0), Int(1)} : squarefree_decompose(n);
            if (dn == 1) {  // sqrt(n) = s rational
                for (Rat root : {(a + s) / Rat(2), (a - s) / Rat(2)}) {
                    if (root.sign() < 0) continue;
                    auto [ps, pd] = root.is_zero() ? std::pair<Rat, Int>{Rat(0), Int(1)}
                                                  : squarefree_decompose(root);
                    if (pd == 1) {
                        Rat p = ps;
                        if (p.is_zero()) continue;
                        Rat q = b / (Rat(2) * p);
                        // verify (p + q sqrt d)^2 == x
                        if (p * p + q * q * Rat(x.ext_d()) == a && Rat(2) * p * q == b)
                            return AlgScalar::quadratic(p, q, x.ext_d());
                    }
                }
            }
        }
    }
    // numeric fallback: principal square root
    NumC z = x.to_numeric();
    mpf_class r2 = z.re * z.re + z.im * z.im;
    mpf_class r = sqrt(sqrt(r2));  // |z|^(1/2)
    double theta = std::atan2(z.im.get_d(), z.re.get_d()) / 2.0;
    NumC out;
    out.re = r * mpf_class(std::cos(theta), kNumPrecBits);
    out.im = r * mpf_class(std::sin(theta), kNumPrecBits);
    out.rad = 2.0 * std::sqrt(z.rad + 1e-60) + 1e-30;
    // polish with Newton in high precision: w -> (w + z/w)/2
    for (int it = 0; it < 80; ++it) {
        mpf_class den = out.re * out.re + out.im * out.im;
        if (den == 0) break;
        mpf_class qre = (z.re * out.re + z.im * out.im) / den;
        mpf_class qim = (z.im * out.re - z.re * out.im) / den;
        out.re = (out.re + qre) / 2;
        out.im = (out.im + qim) / 2;
    }
    out.rad = z.rad + 1e-50;
    return AlgScalar::numeric(out);
}

// ---------------- AlgPoly ----------------

AlgPoly AlgPoly::from_mpoly(const MPoly& p, int vx, int vy) {
    AlgPoly r;
    for (auto& [m, c] : p.terms()) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != vx && i != vy && m.e[i] != 0)
                throw std::invalid_argument("AlgPoly::from_mpoly: extra variable present");
        r.add_term(m.e[vx], m.e[vy], AlgScalar(c));
    }
    return r;
}

AlgPoly AlgPoly::constant(const AlgScalar& c) {
    AlgPoly r;
    r.add_term(0, 0, c);
    return r;
}

AlgPoly AlgPoly::linear(const AlgScalar& u, const AlgScalar& v, const AlgScalar& w) {
    AlgPoly r;
    r.add_term(1, 0, u);
    r.add_term(0, 1, v);
    r.add_term(0, 0, w);
    return r;
}

double AlgPoly::residual_bound() const {
    double m = 0.0;
    for (auto& [k, c] : t_) m = std::max(m, c.to_numeric().abs_upper());
    return m;
}

bool AlgPoly::is_zero_within(double tol) const {
    for (auto& [k, c] : t_)
        if (!c.is_zero(tol)) return false;
    return true;
}

int AlgPoly::total_degree() const {
    int d = -1;
    for (auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

int AlgPoly::degree_x() const {
    int d = 0;
    for (auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int AlgPoly::degree_y() const {
    int d = 0;
    for (auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

AlgScalar AlgPoly::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? AlgScalar(Rat(0)) : it->second;
}

void AlgPoly::add_term(int i, int j, const AlgScalar& c) {
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        if (!(c.kind() == AlgScalar::Kind::Rational && c.rat_a().is_zero())) t_[{i, j}] = c;
        return;
    }
    AlgScalar s = it->second + c;
    if (s.kind() == AlgScalar::Kind::Rational && s.rat_a().is_zero())
        t_.erase(it);
    else
        it->second = s;
}

AlgPoly AlgPoly::operator-() const {
    AlgPoly r;
    for (auto& [k, c] : t_) r.t_[k] = -c;
    return r;
}

AlgPoly operator+(const AlgPoly& a, const AlgPoly& b) {
    AlgPoly r = a;
    for (auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
}

AlgPoly operator-(const AlgPoly& a, const AlgPoly& b) { return a + (-b); }

AlgPoly operator*(const AlgPoly& a, const AlgPoly& b) {
    AlgPoly r;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

AlgPoly AlgPoly::scaled(const AlgScalar& c) const {
    AlgPoly r;
    for (auto& [k, v] : t_) r.add_term(k.first, k.second, v * c);
    return r;
}

AlgPoly AlgPoly::conj() const {
    AlgPoly r;
    for (auto& [k, v] : t_) r.t_[k] = v.conj();
    return r;
}

AlgPoly AlgPoly::derivative_x() const {
    AlgPoly r;
    for (auto& [k, v] : t_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, v * AlgScalar(Rat(k.first)));
    return r;
}

AlgPoly AlgPoly::derivative_y() const {
    AlgPoly r;
    for (auto& [k, v] : t_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, v * AlgScalar(Rat(k.second)));
    return r;
}

AlgScalar AlgPoly::eval(const AlgScalar& x, const AlgScalar& y) const {
    AlgScalar acc(Rat(0));
    for (auto& [k, v] : t_) {
        AlgScalar t = v;
        for (int i = 0; i < k.first; ++i) t = t * x;
        for (int j = 0; j < k.second; ++j) t = t * y;
        acc = acc + t;
    }
    return acc;
}

std::pair<AlgPoly, AlgPoly> AlgPoly::divide_linear(const AlgScalar& u, const AlgScalar& v,
                                                   const AlgScalar& w) const {
    bool ux = !u.is_zero();
    if (!ux && v.is_zero()) throw std::invalid_argument("divide_linear: not a line");
    // synthetic division in the leading variable against x = -(v y + w)/u
    // (or y = -(u x + w)/v when u == 0)
    int n = ux ? degree_x() : degree_y();
    // A_k = coefficient of main^k, a polynomial in the other variable
    std::vector<AlgPoly> A(n + 1);
    for (auto& [k, c] : t_) {
        int main = ux ? k.first : k.second;
        int other = ux ? k.second : k.first;
        A[main].add_term(ux ? 0 : other, ux ? other : 0, c);
    }
    AlgScalar lead = ux ? u : v;
    AlgPoly rho;  // -(v y + w)/u  or  -(u x + w)/v, linear in the other variable
    if (ux) {
        rho.add_term(0, 1, -(v / u));
        rho.add_term(0, 0, -(w / u));
    } else {
        rho.add_term(1, 0, -(u / v));
        rho.add_term(0, 0, -(w / v));
    }
    std::vector<AlgPoly> B(std::max(n, 1));
    AlgPoly carry;
    for (int k = n; k >= 1; --k) {
        carry = (k == n) ? A[n] : A[k] + rho * carry;
        B[k - 1] = carry;
    }
    AlgPoly rem = n >= 1 ? A[0] + rho * carry : A[0];
    AlgPoly quot;
    for (int k = 0; k < n; ++k) {
        for (auto& [kk, c] : B[k].terms())
            quot.add_term(ux ? k : kk.first, ux ? kk.second : k, c / lead);
    }
    return {quot, rem};
}

std::string AlgPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        if (it->first.first) os << "*x^" << it->first.first;
        if (it->first.second) os << "*y^" << it->first.second;
    }
    return os.str();
}

// ---------------- root extraction over the tower ----------------

namespace {

struct MpC {
    mpf_class re, im;
    MpC() : re(0, kNumPrecBits), im(0, kNumPrecBits) {}
    MpC(double r, double i) : re(r, kNumPrecBits), im(i, kNumPrecBits) {}
};
MpC cadd(const MpC& a, const MpC& b) { MpC r; r.re = a.re + b.re; r.im = a.im + b.im; return r; }
MpC csub(const MpC& a, const MpC& b) { MpC r; r.re = a.re - b.re; r.im = a.im - b.im; return r; }
MpC cmul(const MpC& a, const MpC& b) {
    MpC r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}
MpC cdiv(const MpC& a, const MpC& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    MpC r;
    r.re = (a.re * b.re + a.im * b.im) / d;
    r.im = (a.im * b.re - a.re * b.im) / d;
    return r;
}
mpf_class cabs2(const MpC& a) { return a.re * a.re + a.im * a.im; }

} // namespace

std::vector<NumC> numeric_roots(const UPoly& p0) {
    UPoly p = umonic(utrim(p0));
    int n = udeg(p);
    std::vector<NumC> out;
    if (n < 1) return out;
    std::vector<MpC> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        mpf_class num(p[i].num().get_str(), kNumPrecBits);
        mpf_class den(p[i].den().get_str(), kNumPrecBits);
        c[i].re = num / den;
    }
    auto evalp = [&](const MpC& z) {
        MpC acc;
        for (int i = n; i >= 0; --i) acc = cadd(cmul(acc, z), c[i]);
        return acc;
    };
    // root bound
    double bound = 1.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 2.0 * std::pow(std::abs(p[i].to_double()), 1.0 / (n - i)));
    std::vector<MpC> z(n);
    double ang = 0.7;
    for (int i = 0; i < n; ++i) {
        z[i] = MpC(bound * std::cos(ang * (i + 1) + 0.3), bound * std::sin(ang * (i + 1) + 0.3));
    }
    for (int iter = 0; iter < 600; ++iter) {
        mpf_class worst(0, kNumPrecBits);
        for (int i = 0; i < n; ++i) {
            MpC num = evalp(z[i]);
            MpC den(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) den = cmul(den, csub(z[i], z[j]));
            MpC delta = cdiv(num, den);
            z[i] = csub(z[i], delta);
            mpf_class d2 = cabs2(delta);
            if (d2 > worst) worst = d2;
        }
        if (worst < mpf_class(1e-140, kNumPrecBits)) break;
    }
    // certify: rad_i ~= n * |p(z_i)| / |prod_{j!=i}(z_i - z_j)| (simple roots)
    for (int i = 0; i < n; ++i) {
        MpC val = evalp(z[i]);
        mpf_class den(1, kNumPrecBits);
        for (int j = 0; j < n; ++j)
            if (j != i) den = den * sqrt(cabs2(csub(z[i], z[j])));
        double rad = 1e-60;
        if (den != 0) {
            mpf_class rr = sqrt(cabs2(val)) / den;
            rad = std::max(rad, n * rr.get_d() * 4.0);
        }
        out.push_back(NumC{z[i].re, z[i].im, rad});
    }
    return out;
}

namespace {

// continued-fraction rational reconstruction of a high-precision real
std::optional<Rat> reconstruct_rat(const mpf_class& x, double tol = 1e-45) {
    mpq_class q(x);  // exact dyadic
    mpq_class approx = q;
    // continued fraction expansion
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpq_class rem = approx;
    for (int it = 0; it < 200; ++it) {
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), rem.get_num().get_mpz_t(), rem.get_den().get_mpz_t());
        mpz_class p2 = fl * p1 + p0, q2 = fl * q1 + q0;
        mpq_class cand(p2, q2);
        cand.canonicalize();
        mpq_class err = approx - cand;
        mpf_class errf(err, kNumPrecBits);
        if (abs(errf) < mpf_class(tol, kNumPrecBits)) {
            if (mpz_sizeinbase(q2.get_mpz_t(), 2) > 80) return std::nullopt;
            return Rat(cand);
        }
        mpq_class frac = rem - mpq_class(fl);
        if (frac == 0) {
            if (mpz_sizeinbase(q2.get_mpz_t(), 2) > 80) return std::nullopt;
            return Rat(cand);
        }
        rem = 1 / frac;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return std::nullopt;
}

// divide p by (t - r) exactly over Q; nullopt when r is not a root
std::optional<UPoly> deflate_rational(const UPoly& p, const Rat& r) {
    if (!ueval(p, r).is_zero()) return std::nullopt;
    UPoly q(udeg(p), Rat(0));
    Rat carry(0);
    for (int i = udeg(p); i >= 1; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return utrim(std::move(q));
}

} // namespace

TowerRoots tower_roots(const UPoly& p0, bool allow_numeric) {
    TowerRoots out;
    UPoly p = utrim(p0);
    if (udeg(p) < 1) return out;
    auto sf = squarefree_decomposition(p);
    for (size_t idx = 0; idx < sf.size(); ++idx) {
        int mult = static_cast<int>(idx) + 1;
        UPoly g = sf[idx];
        if (udeg(g) < 1) continue;
        // zero roots
        while (udeg(g) >= 1 && g[0].is_zero()) {
            out.roots.push_back({AlgScalar(Rat(0)), mult});
            g.erase(g.begin());
        }
        // peel rational and quadratic-pair factors via numeric roots + exact verification
        bool progress = true;
        while (udeg(g) >= 1 && progress) {
            progress = false;
            if (udeg(g) == 1) {
                out.roots.push_back({AlgScalar(-g[0] / g[1]), mult});
                g.clear();
                break;
            }
            if (udeg(g) == 2) {
                Rat A = g[2], B = g[1], C = g[0];
                Rat disc = B * B - Rat(4) * A * C;
                AlgScalar sq = alg_sqrt(AlgScalar(disc));
                AlgScalar twoA = AlgScalar(Rat(2) * A);
                out.roots.push_back({(AlgScalar(-B) + sq) / twoA, mult});
                out.roots.push_back({(AlgScalar(-B) - sq) / twoA, mult});
                g.clear();
                break;
            }
            auto nr = numeric_roots(g);
            // rational candidates
            for (auto& z : nr) {
                mpf_class a = abs(z.im);
                if (a.get_d() > 1e-40) continue;
                auto cand = reconstruct_rat(z.re);
                if (!cand) continue;
                if (auto q = deflate_rational(g, *cand)) {
                    out.roots.push_back({AlgScalar(*cand), mult});
                    g = *q;
                    progress = true;
                    break;
                }
            }
            if (progress) continue;
            // quadratic-pair candidates: t^2 - s t + p with s, p rational
            for (size_t i = 0; i < nr.size() && !progress; ++i) {
                for (size_t j = i + 1; j < nr.size() && !progress; ++j) {
                    mpf_class sre = nr[i].re + nr[j].re, sim = nr[i].im + nr[j].im;
                    mpf_class pre = nr[i].re * nr[j].re - nr[i].im * nr[j].im;
                    mpf_class pim = nr[i].re * nr[j].im + nr[i].im * nr[j].re;
                    if (abs(sim).get_d() > 1e-35 || abs(pim).get_d() > 1e-35) continue;
                    auto s = reconstruct_rat(sre);
                    auto pr = reconstruct_rat(pre);
                    if (!s || !pr) continue;
                    UPoly quad = {*pr, -*s, Rat(1)};
                    auto [q, r] = udivrem(g, quad);
                    if (!r.empty()) continue;
                    Rat disc = *s * *s - Rat(4) * *pr;
                    AlgScalar sq = alg_sqrt(AlgScalar(disc));
                    out.roots.push_back({(AlgScalar(*s) + sq) / AlgScalar(Rat(2)), mult});
                    out.roots.push_back({(AlgScalar(*s) - sq) / AlgScalar(Rat(2)), mult});
                    g = q;
                    progress = true;
                }
            }
        }
        if (udeg(g) >= 1) {
            // tower-irreducible residue
            if (allow_numeric) {
                for (auto& z : numeric_roots(g)) {
                    out.roots.push_back({AlgScalar::numeric(z), mult});
                    out.used_numeric = true;
                }
            } else {
                UPoly lift = {Rat(1)};
                for (int i = 0; i < mult; ++i) lift = umul(lift, g);
                out.leftover = out.leftover.empty() ? lift : umul(out.leftover, lift);
            }
        }
    }
    return out;
}

} // namespace qsl4
