#include "gl2/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace gl2 {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    // Content strip keeps the intermediate coefficients small.
    const Rational cn = num_.content();
    const Rational cd = den_.content();
    if (!cn.is_one()) num_ = num_ * GaussRational(cn.inverse());
    if (!cd.is_one()) den_ = den_ * GaussRational(cd.inverse());
    Rational scale = cn / cd;

    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly(1);
    } else if (auto r = den_.divide_exact(num_)) {
        den_ = std::move(*r);
        num_ = MultiPoly(1);
    }

    // Monic denominator.
    const GaussRational lead = den_.leading_term().second;
    if (!(lead == GaussRational(1))) {
        const GaussRational inv = GaussRational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    if (!scale.is_one()) num_ = num_ * GaussRational(scale);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatFunc: 0^negative");
        return (RatFunc(1) / *this).pow(-e);
    }
    RatFunc acc(1), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

RatFunc RatFunc::partial(const std::string& var) const {
    if (den_.is_constant())
        return RatFunc(num_.partial(var), den_);
    // (f/g)' = (f'g - fg')/g^2
    return RatFunc(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj()); }

GaussRational RatFunc::evaluate(const std::map<std::string, GaussRational, VarLess>& point) const {
    const GaussRational d = den_.evaluate(point);
    if (d.is_zero())
        throw std::domain_error("RatFunc: denominator (" + den_.str() + ") vanishes at the point");
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value() == GaussRational(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace gl2
