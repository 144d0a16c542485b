#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace carlitz {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/**
 * Element of a finite field F_q, q = p^e.  The value is an index in
 * [0, q): its base-p digits are the coefficients of the element written
 * on the power basis 1, x, ..., x^(e-1) of F_p[x]/(modulus), constant
 * digit first.  For prime fields this is just the residue in [0, p).
 * All arithmetic lives on FieldCtx; an element alone is inert data.
 */
struct FieldElem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
    constexpr bool is_zero() const { return v == 0; }
};

/**
 * Immutable description of F_q together with its arithmetic.
 *
 * q must be an odd prime power.  For e > 1 a monic irreducible modulus
 * over F_p of degree e must be supplied; irreducibility is checked at
 * construction (gcd(x^(p^i) - x, f) = 1 for i <= e/2 and x^(p^e) = x mod f).
 * Small fields (q <= table_limit) get dense multiplication/inverse tables.
 *
 * Contexts are shared through FieldPtr and safe to use from many threads.
 */
class FieldCtx {
public:
    /// Prime field F_p.  p must be an odd prime.
    static FieldPtr make_prime(std::uint32_t p);

    /// Extension field F_{p^e} with the given monic modulus (constant
    /// coefficient first, length e+1, leading coefficient 1).
    static FieldPtr make_extension(std::uint32_t p, std::uint32_t e,
                                   const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }

    /// Integer n mapped to n * 1 (reduction of n modulo p into the prime subfield).
    FieldElem from_int(long long n) const;

    /// Element with the given index; bounds-checked.
    FieldElem from_index(std::uint32_t idx) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, long long n) const;

    /// All q elements in index order (0, 1, ..., q-1).
    std::vector<FieldElem> elements() const;

    /// Render an element: digit for prime fields, index for extensions.
    std::string to_string(FieldElem a) const;

    bool same_as(const FieldCtx& other) const;

private:
    FieldCtx() = default;

    FieldElem add_direct(FieldElem a, FieldElem b) const;
    FieldElem mul_direct(FieldElem a, FieldElem b) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_; // empty for prime fields

    // dense op tables, built when q <= kTableLimit
    static constexpr std::uint32_t kTableLimit = 2048;
    bool tabled_ = false;
    std::vector<std::uint32_t> mul_table_; // q*q entries
    std::vector<std::uint32_t> inv_table_; // q entries, inv_table_[0] unused
};

} // namespace carlitz
