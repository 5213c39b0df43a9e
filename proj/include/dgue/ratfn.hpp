#pragma once

#include "dgue/poly.hpp"

#include <string>

namespace dgue {

/// Rational function num/den in canonical form: gcd(num, den) = 1 and den
/// monic, so equality is structural. Denominator is never zero.
class RatFn {
public:
    RatFn() : num_(), den_(Poly::one()) {}
    RatFn(const Rational& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RatFn(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFn(Poly num, Poly den);

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(Rational(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;  // throws on zero divisor

    RatFn derivative() const;

    /// Exact evaluation; throws std::domain_error naming the point when it
    /// hits a pole.
    Rational evaluate(const Rational& x) const;

    /// f(-t).
    RatFn reflected() const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str(const std::string& var = "t") const;

private:
    void normalize();

    Poly num_;
    Poly den_;
};

inline RatFn operator*(const Rational& c, const RatFn& f) { return RatFn(Rational(c)) * f; }

}  // namespace dgue
