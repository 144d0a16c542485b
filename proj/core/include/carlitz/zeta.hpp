#pragma once

#include "carlitz/carlitz_tables.hpp"
#include "carlitz/laurent.hpp"

#include <optional>

namespace carlitz {

/**
 * Lower bound on the U-valuation of the degree-d block sum_{A monic, deg d}
 * A^{-m}: writing A = T^d(1 + x) and expanding, a monomial in the non-leading
 * coefficients survives the sum over an affine block only when every
 * coefficient appears with exponent a positive multiple of q-1, which forces
 * total crossing depth at least (q-1)(1 + 2 + ... + d) on top of the leading
 * 2md.  Strictly increasing in d, so truncation at the first excluded degree
 * bounds the whole tail.
 */
long long zeta_block_bound(int q, long long m, int d);

struct ZetaValue {
    long long m = 0;
    Laurent value;
    int dmax_used = 0;
};

/**
 * Goss zeta value at a positive integer: zeta(m) = sum_d sum_{A monic, deg d}
 * A^{-m} in F_q((1/T)), embedded at even U-exponents.  Degrees are summed
 * while zeta_block_bound stays within reach of the floor (or up to the
 * explicit override).  Deterministic for every thread count.
 */
ZetaValue zeta_pos(const FieldPtr& F, long long m, int floor,
                   std::optional<int> dmax_override = std::nullopt, int threads = 1);

/** Outcome of checking zeta((q-1)i) = w^i * BC_{(q-1)i} / Gamma_{(q-1)i}. */
struct EulerCarlitzReport {
    int q = 0;
    long long i = 0;
    int prec = 0;
    Val residual, lhs_valuation, rhs_valuation;
    int dmax_used = 0;
    bool pass = false;
};

/**
 * Verify the Euler-Carlitz identity at index i (zeta weight (q-1)i) to N
 * digits.  Internally works guard digits below -N; passes when the residual
 * has no known nonzero digit and its valuation bound reaches N - slack.
 */
EulerCarlitzReport verify_euler_carlitz(const CarlitzTables& tables, const Laurent& w,
                                        long long i, int prec, int threads = 1,
                                        int slack = 6, int guard = 8);

} // namespace carlitz
