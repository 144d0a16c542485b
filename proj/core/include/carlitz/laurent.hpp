#pragma once

#include "carlitz/field.hpp"
#include "carlitz/ratfunc.hpp"

#include <climits>
#include <string>
#include <utility>
#include <vector>

namespace carlitz {

/**
 * Ultrametric valuation statement about a series: exactly v, at least v,
 * or infinite (the exact zero).  val(U^n) = -n, so large positive values
 * mean "small".
 */
struct Val {
    enum class Kind { Exact, AtLeast, Infinite };
    Kind kind = Kind::Infinite;
    int v = 0;

    static Val exact(int v) { return {Kind::Exact, v}; }
    static Val at_least(int v) { return {Kind::AtLeast, v}; }
    static Val infinite() { return {Kind::Infinite, 0}; }

    /// Smallest valuation consistent with this statement.
    int lower_bound() const { return kind == Kind::Infinite ? INT_MAX : v; }
    /// True when the statement guarantees valuation >= bound.
    bool at_least_bound(int bound) const { return lower_bound() >= bound; }
    bool is_exact() const { return kind == Kind::Exact; }
    bool is_infinite() const { return kind == Kind::Infinite; }

    std::string to_string() const;
};

/**
 * Truncated Laurent series in U^{-1} over F_q with explicit precision
 * tracking.  A series knows its coefficients on the exponent window
 * [floor, hi] and asserts nothing below the floor: the value is
 *
 *     sum_{e=floor..hi} c_e U^e  +  O(U^{floor-1}).
 *
 * Three canonical states:
 *   - known nonzero: nonempty window whose top coefficient is nonzero;
 *   - zero to precision: empty window, value O(U^{floor-1});
 *   - exact zero: the additive identity, zero at every depth.
 *
 * Floors propagate through arithmetic pessimistically:
 *   add: floor = max(floors);  mul: floor = max(fa + hi_b, fb + hi_a);
 *   inv: floor = floor - 2*hi (relative precision is preserved).
 *
 * F_q[T] embeds at even exponents via T = U^2; odd exponents live in the
 * ramified quadratic extension only.
 */
class Laurent {
public:
    Laurent() = default;

    static Laurent exact_zero(FieldPtr F);
    /// Zero to precision: O(U^(floor-1)).
    static Laurent zero_to(FieldPtr F, int floor);
    static Laurent one(FieldPtr F, int floor) { return constant(std::move(F), 1, floor); }
    static Laurent constant(FieldPtr F, long long n, int floor);
    /// c * U^k over the window [floor, k].
    static Laurent upow(FieldPtr F, int k, int floor, FieldElem c);
    static Laurent upow(FieldPtr F, int k, int floor);
    /// Arbitrary term list (exponent, coefficient); exponents below floor are dropped.
    static Laurent from_terms(FieldPtr F, int floor,
                              const std::vector<std::pair<int, FieldElem>>& terms);

    const FieldPtr& field() const { return F_; }
    bool is_exact_zero() const { return exact_; }
    bool known_nonzero() const { return !c_.empty(); }
    /// Precision floor; meaningless for the exact zero.
    int floor() const { return floor_; }
    /// Exponent of the leading (top) coefficient; requires known_nonzero().
    int top_exponent() const;
    FieldElem top_coeff() const;
    /// Coefficient at the given exponent.  Exponents above the window are
    /// known zeros; below the floor the digit is unknown -> PrecisionError.
    FieldElem coeff_at(int exponent) const;
    /// Number of known digits (hi - floor + 1); 0 when no digit is known.
    int known_digits() const { return static_cast<int>(c_.size()); }

    Val valuation() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(FieldElem c) const;
    /// Multiplication by U^k (exact exponent shift).
    Laurent shifted(int k) const;

    /**
     * Multiplicative inverse by Newton iteration on the reciprocal.
     * Requires a known-nonzero series with at least guard_digits digits
     * below the leading one (default 4); otherwise PrecisionError.
     */
    Laurent inv(int guard_digits = 4) const;
    Laurent pow(long long n, int guard_digits = 4) const;

    /// Raise the floor to new_floor (never lowers; drops known low digits).
    Laurent truncated(int new_floor) const;

    /// True when every known nonzero coefficient sits at an even exponent.
    bool even_exponents_only() const;

    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// "c_hi*U^hi + ... + c_lo*U^lo + O(U^(floor-1))"; exact zero is "0".
    std::string render() const;
    /// Term list (exponent, coefficient), highest exponent first.
    std::vector<std::pair<int, FieldElem>> terms() const;

private:
    void normalize();
    static void require_compatible(const Laurent& a, const Laurent& b);

    FieldPtr F_;
    int floor_ = 0;
    std::vector<FieldElem> c_; // c_[k] = coefficient of U^{floor_ + k}
    bool exact_ = false;       // exact zero marker (only with empty window)
};

/// Valuation of a - b: how deeply two series agree.
Val agreement_valuation(const Laurent& a, const Laurent& b);

/// Image of a polynomial under T = U^2, known down to the given floor.
Laurent embed_poly(const Poly& a, int floor);

/// Image of a rational function under T = U^2, known down to the given floor.
Laurent embed_ratfunc(const RatFunc& a, int floor);

} // namespace carlitz
