#pragma once

#include "carlitz/carlitz_tables.hpp"
#include "carlitz/laurent.hpp"

#include <string>

namespace carlitz {

/**
 * The fundamental period datum w = pi^(q-1).  It lives in k_infinity
 * (even exponents only), has top exponent 2q, and -w is monic in U.
 * ell is built from w, and w is correct exactly when ell vanishes on
 * F_q[T]; validate_w checks that on 1, T, T+1.
 */
struct PeriodValue {
    Laurent w;
    std::string method;       // "product" or "kernel"
    int iterations = 0;       // fixed-point steps (kernel) or factors (product)
    bool sign_corrected = false;
};

/**
 * Product form w = -[1] * prod_{i>=1} [i+1]/[i]^q.  Factor i deviates from 1
 * at U-valuation 2(q^{i+1} - q), so only the first few factors reach the
 * floor.  The result is validated against the lattice; if validation fails
 * the negated candidate is tried once before giving up (the kernel method
 * is the arbiter of sign).
 */
PeriodValue period_w_product(const CarlitzTables& tables, int floor);

/**
 * Kernel characterization: w is the root of f(w) = sum_i w^{(q^i-1)/(q-1)}/D_i
 * near -D_1, computed by the contraction
 *
 *     w <- -D_1 * (1 + sum_{i>=2} w^{(q^i-1)/(q-1)} / D_i),
 *
 * seeded at w_0 = -D_1.  The update valuation must increase strictly every
 * step; convergence means the update fell below the floor.
 */
PeriodValue period_w_kernel(const CarlitzTables& tables, int floor);

/// Largest bracket index the product method touches at this floor.
int period_product_imax(const FieldPtr& F, int floor);
/// Largest bracket index the kernel method touches at this floor.
int period_kernel_imax(const FieldPtr& F, int floor);

/** Residual valuations of ell at 1, T, T+1 for a candidate w. */
struct WValidation {
    Val ell_one, ell_t, ell_t1;
    int min_valuation = 0;
    bool pass = false;
};

/**
 * Evaluate ell at 1, T, T+1 with the candidate w.  Passes when every
 * residual is zero to working precision with valuation bound at least
 * min_valuation.
 */
WValidation validate_w(const Laurent& w, const CarlitzTables& tables, int floor,
                       int min_valuation);

} // namespace carlitz
