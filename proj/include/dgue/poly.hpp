#pragma once

#include "dgue/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgue {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending order. The zero polynomial is the empty coefficient list and
/// its degree is reported as std::nullopt, never as an integer.
///
/// Immutable in spirit: every operation returns a new canonical value, so
/// instances can be shared freely across threads.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) : coeffs_{c} { normalize(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly variable() { return monomial(1); }
    static Poly monomial(std::size_t k, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of variable^i; zero beyond the degree.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned k) const;

    Poly derivative() const;
    Rational evaluate(const Rational& x) const;

    /// p(-t): flips the sign of odd-index coefficients.
    Poly reflected() const;

    /// True when every nonzero coefficient sits at an even (resp. odd) index.
    bool is_even() const { return parity_pure(0); }
    bool is_odd() const { return parity_pure(1); }

    /// Quotient and remainder, deg(rem) < deg(divisor). Throws on zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Division known to be exact; throws std::logic_error on nonzero remainder.
    Poly exact_div(const Poly& divisor) const;

    /// Monic gcd. gcd(p, 0) = monic(p); both arguments zero is an error.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Human-readable form for diagnostics, e.g. "1/2 - t + 3*t^2".
    std::string str(const std::string& var = "t") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    bool parity_pure(std::size_t residue) const;

    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

}  // namespace dgue
