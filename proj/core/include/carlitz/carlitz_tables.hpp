#pragma once

#include "carlitz/laurent.hpp"
#include "carlitz/poly.hpp"
#include "carlitz/ratfunc.hpp"

#include <map>
#include <vector>

namespace carlitz {

/**
 * Precomputed Carlitz data over F_q[T]:
 *
 *   bracket(i) = [i]   = T^{q^i} - T,   built by [i+1] = [i]^q + [1];
 *   D(i)              = [i] * D(i-1)^q,  D(0) = 1  (deg D_i = i*q^i).
 *
 * Immutable after build; share freely across threads.
 */
class CarlitzTables {
public:
    static CarlitzTables build(FieldPtr F, int imax);

    const FieldPtr& field() const { return F_; }
    int imax() const { return imax_; }
    /// [i] for 1 <= i <= imax.
    const Poly& bracket(int i) const;
    /// D_i for 0 <= i <= imax.
    const Poly& D(int i) const;

    /// Largest i needed to hold every D_i with q^i - 1 <= mmax.
    static int series_imax(const FieldPtr& F, long long mmax);

private:
    FieldPtr F_;
    int imax_ = 0;
    std::vector<Poly> bracket_; // bracket_[i], index 0 unused
    std::vector<Poly> D_;
};

/**
 * Carlitz factorial Gamma_m = prod_i D_i^{m_i} over the base-q digits
 * m = sum m_i q^i.  Needs tables up to the top digit position.
 */
Poly gamma_factorial(const CarlitzTables& tables, long long m);

/**
 * Bernoulli-Carlitz numbers BC_0..BC_mmax as exact rational functions:
 * invert the unit power series e(z)/z = sum_i z^{q^i - 1}/D_i to order
 * mmax and multiply coefficientwise by Gamma_m.  BC_m = 0 whenever
 * q - 1 does not divide m (m > 0).
 */
std::map<long long, RatFunc> bc_numbers(const CarlitzTables& tables, long long mmax);

/**
 * U-degree of the i-th summand of ell at an argument with top exponent s:
 * deg_U( w^{(q^i-1)/(q-1)} z^{q^i} / D_i ) = 2q(q^i-1)/(q-1) + q^i s - 2i q^i.
 */
long long ell_term_degree(int q, int s, int i);

/**
 * Exact U-degree of ell(x) for x with odd top exponent s (such x cannot
 * collide with the lattice, so the leading term never cancels):
 * s + (q-1) * sum_{e >= 0, 2e < s} q^e (s - 2e); equals s for s < 0.
 */
long long ell_leading_degree(int q, int s);

/**
 * The normalized lattice function
 *
 *   ell(z) = sum_{i>=0} w^{(q^i-1)/(q-1)} z^{q^i} / D_i,
 *
 * w the fundamental period datum (top exponent 2q).  Summation stops once
 * every remaining term degree sits below the floor; D_i enter as truncated
 * series so only the digits that can reach the floor are ever computed.
 */
Laurent ell_eval(const Laurent& z, const Laurent& w, const CarlitzTables& tables, int floor);

/**
 * Reference product form ell(z) ~ z * prod_{A monic, deg A <= dmax} (1 - (z/A)^{q-1}).
 * Converges to ell as dmax grows; used to cross-check ell_eval.
 */
Laurent ell_product_ref(const Laurent& z, int dmax, int floor);

} // namespace carlitz
