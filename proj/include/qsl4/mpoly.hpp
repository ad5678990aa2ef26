#ifndef QSL4_MPOLY_HPP
#define QSL4_MPOLY_HPP

#include "qsl4/rat.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsl4 {

constexpr int kMaxVars = 4;

/// Exponent vector for up to four variables; unused slots stay zero.
struct Mono {
    std::array<int, kMaxVars> e{0, 0, 0, 0};
    int total() const { return e[0] + e[1] + e[2] + e[3]; }
};

/// Graded-lexicographic order (total degree first, then lex with var 0 highest).
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

/// Sparse multivariate polynomial over Rat in at most four named variables.
/// Canonical: no zero coefficients stored; two polynomials over the same
/// variable list are equal iff their term maps are equal.
class MPoly {
public:
    using Terms = std::map<Mono, Rat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) { check_arity(); }

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly var(std::vector<std::string> vars, int i, int power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    int arity() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const;  // -1 if absent
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    int total_degree() const;                // -1 for zero polynomial
    int degree_in(int var) const;            // -1 for zero polynomial
    bool is_homogeneous() const;
    bool depends_on(int var) const { return degree_in(var) > 0; }

    Rat coeff(const Mono& m) const;
    void set_coeff(const Mono& m, const Rat& c);
    void add_term(const Mono& m, const Rat& c);

    /// Leading term under grlex.
    std::pair<Mono, Rat> leading() const;  // requires nonzero

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const;
    MPoly derivative(int var) const;

    /// Exact division; nullopt when the remainder is nonzero.
    static std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);

    /// Coefficient of var^k viewed as polynomial in `var` (result keeps arity,
    /// with the var exponent zeroed).
    MPoly coeff_of(int var, int k) const;

    /// Substitute every variable named in `assignment`; other variables stay.
    /// Substituted values must live over the same variable list as the result.
    MPoly substitute(const std::map<std::string, MPoly>& assignment) const;
    /// Substitute a single variable by a polynomial over the same variable list.
    MPoly substitute(int var, const MPoly& value) const;
    Rat eval(const std::vector<Rat>& point) const;

    /// Reinterpret over a different variable list (a bijective renaming or an
    /// embedding; every variable this polynomial depends on must be present).
    MPoly with_vars(const std::vector<std::string>& vars) const;

    /// Homogenize with a fresh variable `zname` appended, padding to `deg`
    /// (deg >= total_degree()).
    MPoly homogenize(const std::string& zname, int deg) const;

    /// Rational content (positive; 0 for the zero polynomial) and primitive part.
    Rat content() const;
    MPoly primitive_part() const;
    /// Primitive with positive leading coefficient.
    MPoly normalized() const;

    std::string str() const;

private:
    void check_arity() const;
    std::vector<std::string> vars_;
    Terms terms_;
};

// ---- classical operations (exactpoly) ----

/// Transvectant of index k with respect to variables (vx, vy): Eq-style
/// sum_h (-1)^h C(k,h) d^k f/dx^{k-h}dy^h * d^k g/dx^h dy^{k-h}.
MPoly transvectant(const MPoly& f, const MPoly& g, unsigned k, int vx = 0, int vy = 1);

/// Sylvester resultant w.r.t. `var`. Formal degrees may exceed the actual
/// ones (the generic-coefficient construction specialized at this input);
/// by default the actual degrees are used. Throws std::domain_error when an
/// actual degree is zero and no formal degree was supplied.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, int var,
                          int formal_deg_f = -1, int formal_deg_g = -1);

/// Primitive multivariate gcd (subresultant PRS over a recursive univariate
/// view), normalized to positive leading coefficient. gcd(0,0) is an error.
MPoly mgcd(const MPoly& f, const MPoly& g);

/// Discriminant of a homogeneous binary form of degree 2 or 3 in variables
/// (vx, vy). Degree 3: 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 (positive
/// iff three distinct real roots). Degree 2: 2*(B^2 - 4AC), the calibration
/// that reproduces mu = 32gh(g+h-1) on its anchor family.
Rat binary_discriminant(const MPoly& f, int vx = 0, int vy = 1);

/// Jacobian determinant w.r.t. (vx, vy).
MPoly jacobian(const MPoly& f, const MPoly& g, int vx = 0, int vy = 1);
/// Hessian determinant w.r.t. (vx, vy).
MPoly hessian(const MPoly& f, int vx = 0, int vy = 1);

/// Determinant of a square MPoly matrix by fraction-free (Bareiss) elimination.
MPoly mpoly_det(std::vector<std::vector<MPoly>> m);

} // namespace qsl4

#endif
