#ifndef QSL4_RAT_HPP
#define QSL4_RAT_HPP

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace qsl4 {

using Int = mpz_class;

/// Exact rational scalar. Always canonical: gcd(|num|,den)=1, den>0, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(const Int& n, const Int& d) : v_(mpq_class(n) / 1) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_ = mpq_class(n);
        v_ /= mpq_class(d);
    }
    explicit Rat(const Int& n) : v_(mpq_class(n)) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parse "n", "-n", or "n/d".
    static Rat parse(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        Rat r; r.v_ = 1 / v_; return r;
    }
    Rat pow(unsigned e) const {
        Rat r(1), base = *this;
        while (e) { if (e & 1) r *= base; base *= base; e >>= 1; }
        return r;
    }

    /// Positive rational g with a/g, b/g coprime integers (gcd over Q).
    static Rat gcd(const Rat& a, const Rat& b);

    double to_double() const { return v_.get_d(); }
    /// "n" or "n/d", canonical.
    std::string str() const;

private:
    mpq_class v_;
};

inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

} // namespace qsl4

#endif
