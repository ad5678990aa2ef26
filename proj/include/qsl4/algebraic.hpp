#ifndef QSL4_ALGEBRAIC_HPP
#define QSL4_ALGEBRAIC_HPP

#include "qsl4/mpoly.hpp"
#include "qsl4/rat.hpp"
#include "qsl4/univariate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsl4 {

constexpr int kNumPrecBits = 256;

/// High-precision complex ball for the certified-numeric fallback leg.
struct NumC {
    NumC() : re(0, kNumPrecBits), im(0, kNumPrecBits), rad(0.0) {}
    NumC(mpf_class r, mpf_class i, double rd) : re(std::move(r)), im(std::move(i)), rad(rd) {}
    mpf_class re, im;
    double rad;
    double abs_upper() const;
};

/// Scalar tower: rational | quadratic extension a + b*sqrt(d) | certified numeric.
/// Arithmetic among rationals and same-d extension values is exact; mixing
/// incompatible extensions degrades to certified-numeric (inexact() == true).
class AlgScalar {
public:
    enum class Kind { Rational, Quadratic, Numeric };

    AlgScalar() : kind_(Kind::Rational), a_(0) {}
    AlgScalar(const Rat& r) : kind_(Kind::Rational), a_(r) {}
    AlgScalar(long n) : kind_(Kind::Rational), a_(n) {}
    static AlgScalar quadratic(const Rat& a, const Rat& b, const Int& d);
    static AlgScalar numeric(NumC z);
    /// i to represent pure imaginary values: quadratic(0, 1, -1)
    static AlgScalar imag_unit() { return quadratic(Rat(0), Rat(1), Int(-1)); }

    Kind kind() const { return kind_; }
    bool inexact() const { return kind_ == Kind::Numeric; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    const Rat& rat_a() const { return a_; }
    const Rat& rat_b() const { return b_; }
    const Int& ext_d() const { return d_; }
    const NumC& num() const { return num_; }

    /// Exact zero test for exact kinds; numeric values are zero when the
    /// ball is certified within `tol` of 0 and contains it.
    bool is_zero(double tol = 1e-30) const;
    bool is_real() const;

    AlgScalar operator-() const;
    AlgScalar conj() const;
    friend AlgScalar operator+(const AlgScalar& x, const AlgScalar& y);
    friend AlgScalar operator-(const AlgScalar& x, const AlgScalar& y);
    friend AlgScalar operator*(const AlgScalar& x, const AlgScalar& y);
    friend AlgScalar operator/(const AlgScalar& x, const AlgScalar& y);
    AlgScalar& operator+=(const AlgScalar& o) { return *this = *this + o; }
    AlgScalar& operator-=(const AlgScalar& o) { return *this = *this - o; }
    AlgScalar& operator*=(const AlgScalar& o) { return *this = *this * o; }
    AlgScalar& operator/=(const AlgScalar& o) { return *this = *this / o; }

    /// Structural equality of exact values (numeric values compare by ball overlap).
    friend bool operator==(const AlgScalar& x, const AlgScalar& y);
    friend bool operator!=(const AlgScalar& x, const AlgScalar& y) { return !(x == y); }

    /// Deterministic total order for report output (kind, then components).
    static int order_cmp(const AlgScalar& x, const AlgScalar& y);

    NumC to_numeric() const;
    std::string str() const;

private:
    void reduce();  // quadratic with b == 0 collapses to rational
    Kind kind_;
    Rat a_, b_;
    Int d_{0};
    NumC num_;
};

/// Exact square root when the value stays inside the tower, else certified numeric.
AlgScalar alg_sqrt(const AlgScalar& x);

/// Bivariate polynomial with AlgScalar coefficients (carrier for cofactors,
/// complex line factors, and slices of H).
class AlgPoly {
public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)

    AlgPoly() = default;
    static AlgPoly from_mpoly(const MPoly& p, int vx, int vy);
    static AlgPoly constant(const AlgScalar& c);
    static AlgPoly linear(const AlgScalar& u, const AlgScalar& v, const AlgScalar& w);

    const std::map<Key, AlgScalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    /// Largest coefficient magnitude (upper bound), for numeric residual tests.
    double residual_bound() const;
    bool is_zero_within(double tol) const;
    int total_degree() const;
    int degree_x() const;
    int degree_y() const;

    AlgScalar coeff(int i, int j) const;
    void add_term(int i, int j, const AlgScalar& c);

    AlgPoly operator-() const;
    friend AlgPoly operator+(const AlgPoly& a, const AlgPoly& b);
    friend AlgPoly operator-(const AlgPoly& a, const AlgPoly& b);
    friend AlgPoly operator*(const AlgPoly& a, const AlgPoly& b);
    AlgPoly scaled(const AlgScalar& c) const;
    AlgPoly conj() const;
    AlgPoly derivative_x() const;
    AlgPoly derivative_y() const;
    AlgScalar eval(const AlgScalar& x, const AlgScalar& y) const;

    /// Divide by u*x + v*y + w; returns {quotient, remainder}. The remainder is
    /// exactly zero iff the division is exact (test with is_zero()/is_zero_within).
    std::pair<AlgPoly, AlgPoly> divide_linear(const AlgScalar& u, const AlgScalar& v,
                                              const AlgScalar& w) const;

    std::string str() const;

private:
    std::map<Key, AlgScalar> t_;
};

/// Roots of a rational univariate polynomial over the tower.
struct TowerRoots {
    struct RootM {
        AlgScalar root;
        int mult;
    };
    std::vector<RootM> roots;
    UPoly leftover{};          // non-split part (tower-irreducible, numeric disallowed/failed)
    bool used_numeric = false;
};

/// Extract roots: rational and quadratic-extension roots exactly; for
/// tower-irreducible factors of degree >= 3, certified-numeric roots when
/// `allow_numeric`, else they stay in `leftover`.
TowerRoots tower_roots(const UPoly& p, bool allow_numeric);

/// Durand-Kerner: all complex roots of a squarefree rational polynomial at
/// high precision (simple roots assumed).
std::vector<NumC> numeric_roots(const UPoly& p);

} // namespace qsl4

#endif
