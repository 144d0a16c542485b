#pragma once

#include "carlitz/poly.hpp"

#include <string>

namespace carlitz {

/**
 * Rational function in T over F_q, kept in canonical form: denominator
 * monic, gcd(num, den) = 1, and zero is 0/1.  Equality is structural.
 */
class RatFunc {
public:
    RatFunc() = default;

    static RatFunc zero(FieldPtr F) { return of(Poly::zero(F)); }
    static RatFunc one(FieldPtr F) { return of(Poly::one(F)); }
    static RatFunc of(Poly num);
    static RatFunc make(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(long long n) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// "num/den" with multi-term parts parenthesized; "num" when den is 1.
    std::string to_string() const;

private:
    Poly num_, den_;
};

} // namespace carlitz
