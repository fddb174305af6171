#include "maxop/rational.hpp"

#include <cctype>

namespace maxop {

Int floor_rational(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);  // > 0 in canonical form
    Int q = num / den;               // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    auto fail = [&text]() -> Rational {
        throw std::invalid_argument("not a rational: '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return fail();
    const auto slash = s.find('/');
    const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto parse_int = [&fail](const std::string& part) {
        std::size_t i = 0;
        if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
        if (i == part.size()) fail();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
        return Int(part);
    };
    const Int num = parse_int(num_part);
    const Int den = parse_int(den_part);
    if (den == 0) fail();
    return Rational(num, den);
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (exp < 0) {
        if (base == 0) throw std::invalid_argument("pow_rational: 0 to a negative power");
        return pow_rational(Rational(denominator(base), numerator(base)), -exp);
    }
    Rational acc(1);
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1UL) acc *= b;
        b *= b;
        e >>= 1UL;
    }
    return acc;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

Int iroot_floor(const Int& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("iroot_floor: negative argument");
    if (k == 0) throw std::invalid_argument("iroot_floor: k = 0");
    if (k == 1 || n <= 1) return n;
    if (k == 2) return isqrt_floor(n);
    // Newton's iteration from an over-estimate; converges monotonically down.
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int x = Int(1) << (bits / k + 1);
    while (true) {
        Int xk1 = boost::multiprecision::pow(x, k - 1);
        Int next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, k) > n) --x;
    while (boost::multiprecision::pow(x + 1, k) <= n) ++x;
    return x;
}

bool exact_sqrt(const Rational& r, Rational* root) {
    if (r < 0) return false;
    const Int num = numerator(r);
    const Int den = denominator(r);
    const Int rn = isqrt_floor(num);
    if (rn * rn != num) return false;
    const Int rd = isqrt_floor(den);
    if (rd * rd != den) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

RationalInterval abs_interval(const RationalInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return {-a.hi, -a.lo};
    Rational m = -a.lo > a.hi ? -a.lo : a.hi;
    return {Rational(0), m};
}

RationalInterval div_positive(const RationalInterval& a, const Rational& d) {
    if (d <= 0) throw std::invalid_argument("div_positive: divisor must be > 0");
    return {a.lo / d, a.hi / d};
}

RationalInterval sqrt_interval(const Rational& s, unsigned bits) {
    if (s < 0) throw std::invalid_argument("sqrt_interval: negative radicand");
    if (s == 0) return {Rational(0), Rational(0)};
    // sqrt(n/d) = sqrt(n*d)/d; bracket sqrt(n*d) between consecutive
    // multiples of 2^-bits.
    const Int num = numerator(s);
    const Int den = denominator(s);
    const Int scale = Int(1) << bits;
    const Int t = isqrt_floor(num * den * scale * scale);
    return {Rational(t, scale * den), Rational(t + 1, scale * den)};
}

RationalInterval pow_interval(const Rational& base, const Rational& exp, unsigned bits) {
    if (base < 0) throw std::invalid_argument("pow_interval: negative base");
    if (exp < 0 || exp > 1) throw std::invalid_argument("pow_interval: exponent outside [0,1]");
    if (exp == 0) return {Rational(1), Rational(1)};
    if (base == 0) return {Rational(0), Rational(0)};
    if (exp == 1) return {base, base};
    const long p = numerator(exp).convert_to<long>();
    const unsigned q = denominator(exp).convert_to<unsigned>();
    const Rational a = pow_rational(base, p);  // a^(1/q) is the target
    const Int u = numerator(a);
    const Int v = denominator(a);
    const Int scale = Int(1) << bits;
    const Int scaled = u * boost::multiprecision::pow(scale, q) / v;  // floor
    const Int t = iroot_floor(scaled, q);
    Int h = t + 1;
    // Certify the upper end: (h/scale)^q >= u/v.
    while (boost::multiprecision::pow(h, q) * v < u * boost::multiprecision::pow(scale, q)) ++h;
    return {Rational(t, scale), Rational(h, scale)};
}

}  // namespace maxop
