#include "maxop/surd.hpp"

namespace maxop {

namespace {
int sgn(const Rational& r) { return r.sign(); }

int cmp(const Rational& a, const Rational& b) {
    return a < b ? -1 : (a == b ? 0 : 1);
}
}  // namespace

SurdValue::SurdValue(Rational p, Rational q, Rational s)
    : p_(std::move(p)), q_(std::move(q)), s_(std::move(s)) {
    if (s_ < 0) throw std::invalid_argument("SurdValue: negative radicand");
    if (q_ == 0 || s_ == 0) {
        q_ = 0;
        s_ = 0;
        return;
    }
    // Normalize to q in {-1, +1}: q*sqrt(s) = sign(q)*sqrt(q^2 s).
    s_ *= q_ * q_;
    q_ = sgn(q_);
    Rational root;
    if (exact_sqrt(s_, &root)) {
        p_ += q_ * root;
        q_ = 0;
        s_ = 0;
    }
}

const Rational& SurdValue::as_rational() const {
    if (!is_rational()) throw std::logic_error("SurdValue: not a rational value");
    return p_;
}

int SurdValue::sign() const { return radical_sign(p_, q_, s_); }

SurdValue SurdValue::negated() const { return SurdValue(-p_, -q_, s_); }

SurdValue SurdValue::scaled(const Rational& c) const { return SurdValue(c * p_, c * q_, s_); }

SurdValue SurdValue::shifted(const Rational& c) const { return SurdValue(p_ + c, q_, s_); }

RationalInterval SurdValue::enclosure(unsigned bits) const {
    if (q_ == 0) return {p_, p_};
    // |q| == 1 in canonical form, so the sqrt enclosure width carries over.
    const RationalInterval root = sqrt_interval(s_, bits);
    if (q_ > 0) return {p_ + root.lo, p_ + root.hi};
    return {p_ - root.hi, p_ - root.lo};
}

double SurdValue::to_double() const { return maxop::to_double(enclosure(80).mid()); }

int radical_sign(const Rational& a, const Rational& b, const Rational& u) {
    if (u < 0) throw std::invalid_argument("radical_sign: negative radicand");
    if (b == 0 || u == 0) return sgn(a);
    const int sb = sgn(b);
    if (a == 0) return sb;
    if (sgn(a) == sb) return sb;
    // Opposite signs: |a| vs |b|sqrt(u) decided by squaring.
    const int c = cmp(a * a, b * b * u);
    if (c == 0) return 0;
    return c > 0 ? sgn(a) : sb;
}

int radical_pair_sign(const Rational& a, const Rational& b, const Rational& u,
                      const Rational& c, const Rational& v) {
    if (b == 0 || u == 0) return radical_sign(a, c, v);
    if (c == 0 || v == 0) return radical_sign(a, b, u);
    if (u == v) return radical_sign(a, b + c, u);
    // x = b*sqrt(u) + c*sqrt(v); sign of x first.
    const int sb = sgn(b);
    const int sc = sgn(c);
    int sx;
    if (sb == sc) {
        sx = sb;
    } else {
        const int t = cmp(b * b * u, c * c * v);
        if (t == 0) return sgn(a);  // x == 0
        sx = t > 0 ? sb : sc;
    }
    if (a == 0) return sx;
    if (sgn(a) == sx) return sx;
    // a and x have opposite signs: sign(a + x) = sign(a) * sign(a^2 - x^2),
    // and a^2 - x^2 = (a^2 - b^2 u - c^2 v) - 2bc*sqrt(uv) is single-radical.
    const Rational d = a * a - b * b * u - c * c * v;
    const Rational e = -2 * b * c;
    return sgn(a) * radical_sign(d, e, u * v);
}

int compare(const SurdValue& a, const SurdValue& b) {
    if (a == b) return 0;
    return radical_pair_sign(a.p() - b.p(), a.q(), a.s(), -b.q(), b.s());
}

}  // namespace maxop
