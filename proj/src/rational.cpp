#include "dgue/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dgue {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("rational_from_string: sign without digits");

    auto bad = [&] { throw std::invalid_argument("rational_from_string: cannot parse '" + std::string(s) + "'"); };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad();
        Integer d{std::string(den)};
        if (d == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        value = Rational(Integer{std::string(num)}, d);
    } else {
        // decimal form: digits[.digits][e[+-]digits]
        std::string_view mantissa = s;
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = s.substr(0, e);
            std::string_view exp = s.substr(e + 1);
            bool eneg = false;
            if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
                eneg = exp.front() == '-';
                exp.remove_prefix(1);
            }
            if (!all_digits(exp) || exp.size() > 6) bad();
            exponent = std::stol(std::string(exp));
            if (eneg) exponent = -exponent;
        }
        std::string_view ipart = mantissa, fpart;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            ipart = mantissa.substr(0, dot);
            fpart = mantissa.substr(dot + 1);
        }
        if (ipart.empty() && fpart.empty()) bad();
        if (!ipart.empty() && !all_digits(ipart)) bad();
        if (!fpart.empty() && !all_digits(fpart)) bad();

        std::string digits = std::string(ipart) + std::string(fpart);
        if (digits.empty()) bad();
        Integer num{digits};
        long shift = exponent - static_cast<long>(fpart.size());
        Integer pow10 = 1;
        for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) pow10 *= 10;
        value = shift >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    }
    return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer double_factorial(long n) {
    Integer f = 1;
    for (long i = n; i > 1; i -= 2) f *= i;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

}  // namespace dgue
