#include "dgue/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dgue {

Poly Poly::monomial(std::size_t k, const Rational& c) {
    if (c == 0) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    Poly p;
    p.coeffs_ = std::move(v);
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Poly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result = Poly::one();
    Poly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = Rational(i) * coeffs_[i];
    return Poly(std::move(v));
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::reflected() const {
    Poly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

bool Poly::parity_pure(std::size_t residue) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0 && i % 2 != residue) return false;
    return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    if (coeffs_.size() < divisor.coeffs_.size()) return {Poly(), *this};

    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Rational(0));
    const auto& d = divisor.coeffs_;
    const Rational lead = d.back();
    for (std::size_t i = rem.size(); i-- >= d.size();) {
        if (rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        Rational q = rem[i] / lead;
        quot[i - (d.size() - 1)] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i - (d.size() - 1) + j] -= q * d[j];
        if (i == 0) break;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("Poly::exact_div: remainder is nonzero");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading());
}

namespace {

// Integer image of a rational polynomial: coefficients scaled by the lcm of
// denominators, then stripped of integer content.
std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    Integer lcm = 1;
    for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Integer> v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = numerator(p.coeffs()[i]) * (lcm / denominator(p.coeffs()[i]));
    Integer content = 0;
    for (const auto& c : v) content = boost::multiprecision::gcd(content, c);
    if (content > 1)
        for (auto& c : v) c /= content;
    return v;
}

void strip_zeros(std::vector<Integer>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Integer>& v) {
    Integer content = 0;
    for (const auto& c : v) content = boost::multiprecision::gcd(content, c);
    if (content > 1)
        for (auto& c : v) c /= content;
    if (!v.empty() && v.back() < 0)
        for (auto& c : v) c = -c;
}

// Zp Euclid on 31-bit primes: if the gcd is trivially 1 modulo a good prime,
// it is 1 over the rationals and the pseudo-remainder sequence can be skipped.
// A prime dividing a leading coefficient is skipped; if all candidates are
// bad we simply fall through to the exact path.
constexpr std::uint64_t kProbePrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL};

std::vector<std::uint64_t> mod_image(const std::vector<Integer>& v, std::uint64_t p) {
    std::vector<std::uint64_t> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Integer m = v[i] % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        r[i] = m.convert_to<std::uint64_t>();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool coprime_mod_p(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::uint64_t p : kProbePrimes) {
        std::vector<std::uint64_t> f = mod_image(a, p);
        std::vector<std::uint64_t> g = mod_image(b, p);
        if (f.size() != a.size() || g.size() != b.size()) continue;  // bad prime
        while (!g.empty()) {
            // f mod g over Zp
            while (f.size() >= g.size()) {
                std::uint64_t ginv = 1, base = g.back(), e = p - 2;
                while (e) {  // modular inverse by Fermat
                    if (e & 1) ginv = (__uint128_t)ginv * base % p;
                    base = (__uint128_t)base * base % p;
                    e >>= 1;
                }
                std::uint64_t q = (__uint128_t)f.back() * ginv % p;
                std::size_t off = f.size() - g.size();
                for (std::size_t j = 0; j < g.size(); ++j) {
                    std::uint64_t sub = (__uint128_t)q * g[j] % p;
                    f[off + j] = (f[off + j] + p - sub) % p;
                }
                while (!f.empty() && f.back() == 0) f.pop_back();
                if (f.empty()) break;
            }
            std::swap(f, g);
        }
        return f.size() == 1;  // gcd is a nonzero constant mod p
    }
    return false;
}

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, all over Z.
std::vector<Integer> pseudo_rem(std::vector<Integer> f, const std::vector<Integer>& g) {
    const Integer lead = g.back();
    while (f.size() >= g.size()) {
        Integer top = f.back();
        std::size_t off = f.size() - g.size();
        for (auto& c : f) c *= lead;
        for (std::size_t j = 0; j < g.size(); ++j) f[off + j] -= top * g[j];
        strip_zeros(f);
        if (f.empty()) break;
    }
    return f;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("Poly::gcd: both arguments are zero");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();

    std::vector<Integer> f = primitive_integer_coeffs(a);
    std::vector<Integer> g = primitive_integer_coeffs(b);
    if (f.size() < g.size()) std::swap(f, g);

    if (g.size() > 1 && coprime_mod_p(f, g)) return Poly::one();

    // primitive pseudo-remainder sequence
    while (true) {
        std::vector<Integer> r = pseudo_rem(f, g);
        if (r.empty()) break;
        make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<Rational> coeffs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) coeffs[i] = Rational(g[i], g.back());
    return Poly(std::move(coeffs));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) os << rational_to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace dgue
