#pragma once

#include "carlitz/field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace carlitz {

/**
 * Dense polynomial in T over F_q.  Coefficients are stored constant-first
 * with no trailing zeros; the canonical zero has an empty coefficient
 * array and degree() == -1.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr F) : F_(std::move(F)) {}

    static Poly zero(FieldPtr F) { return Poly(std::move(F)); }
    static Poly one(FieldPtr F);
    static Poly t(FieldPtr F);
    static Poly monomial(FieldPtr F, int deg, FieldElem c);
    /// Coefficients constant-first, as integers fed through FieldCtx::from_int.
    static Poly from_ints(FieldPtr F, const std::vector<long long>& coeffs);
    static Poly from_coeffs(FieldPtr F, std::vector<FieldElem> coeffs);

    const FieldPtr& field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_monic() const;
    FieldElem leading() const;
    FieldElem coeff(int i) const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FieldElem c) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& den) const;
    Poly operator/(const Poly& den) const { return divmod(den).first; }
    Poly operator%(const Poly& den) const { return divmod(den).second; }

    Poly pow(long long n) const;
    Poly make_monic() const;
    FieldElem eval(FieldElem x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// "T^3+2*T+1" style rendering, highest degree first; zero is "0".
    std::string to_string() const;

    friend Poly gcd(Poly a, Poly b);

private:
    void normalize();

    FieldPtr F_;
    std::vector<FieldElem> c_;
};

/// Monic gcd of a and b (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// Number of monic polynomials of the given degree: q^d.  Capacity-checked.
std::uint64_t monic_count(const FieldPtr& F, int degree);

/**
 * The k-th monic polynomial of the given degree, 0 <= k < q^d, in
 * lexicographic order of the coefficient tuple (c_0, ..., c_{d-1}).
 * Degree 0 yields the constant 1.
 */
Poly monic_at(const FieldPtr& F, int degree, std::uint64_t k);

/// All monic polynomials of the given degree, in enumeration order.
std::vector<Poly> monic_polys(const FieldPtr& F, int degree);

} // namespace carlitz
