#include "carlitz/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace carlitz {

RatFunc RatFunc::of(Poly num) {
    RatFunc r;
    r.den_ = Poly::one(num.field());
    r.num_ = std::move(num);
    return r;
}

RatFunc RatFunc::make(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) return zero(num.field() ? num.field() : den.field());
    Poly g = gcd(num, den);
    num = num / g;
    den = den / g;
    const FieldElem lead_inv = num.field()->inv(den.leading());
    RatFunc r;
    r.num_ = num.scaled(lead_inv);
    r.den_ = den.scaled(lead_inv);
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return make(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return make(den_, num_);
}

RatFunc RatFunc::pow(long long n) const {
    RatFunc base = *this;
    if (n < 0) {
        base = base.inv();
        n = -n;
    }
    RatFunc r = one(base.field());
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

std::string RatFunc::to_string() const {
    auto wrap = [](const Poly& p) {
        std::string s = p.to_string();
        return (s.find('+') != std::string::npos) ? "(" + s + ")" : s;
    };
    if (is_poly()) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace carlitz
