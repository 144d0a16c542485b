#pragma once

#include "carlitz/carlitz_tables.hpp"
#include "carlitz/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace carlitz {

/**
 * Exponent bookkeeping for the pi-cleared two-variable identity at weight j.
 * With alpha = U*pi, beta = U^{-1}*pi (so alpha*beta = pi^2*1, alpha/beta = T)
 * and w = pi^(q-1), clearing pi from the weight-j identity leaves, with
 * c = (q-1)/2, D = c(j-1) + q - 2, M = (q-1)j + q - 2:
 *
 *   u^{-D} T_u + u^{D} T_{1/u}
 *     = w^{j+1} * sum_{k=0}^{j+1} b_{j+1-k} b_k u^{c(2k-j-1)},
 *
 * where T_x = sum_{A monic} A^{-M} / ell(x*A) and b_k = BC_{(q-1)k}/Gamma_{(q-1)k}.
 * The audit identities (D+1) + c(j+1) = (q-1)(j+1) = M + 1 pin the scaling.
 */
struct IdentityShape {
    int q = 0;
    long long j = 0;
    long long c = 0, D = 0, M = 0;
    long long w_exponent = 0;              // j + 1
    std::vector<long long> u_exponents;    // c(2k - j - 1), k = 0..j+1
    bool audit_ok = false;
    std::string summary;
};

/// Compute and audit the exponent shape; throws std::logic_error if the
/// machine-checked identities fail (transcription damage, not data).
IdentityShape identity_shape(const FieldPtr& F, long long j);

/// Per-degree diagnostics of a lattice sum.
struct DegreeDiag {
    int d = 0;
    std::uint64_t terms = 0;
    long long predicted_bound = 0; // lower bound on the block valuation
    Val block_valuation;
};

/**
 * T_x = sum_{d} sum_{A monic, deg d} A^{-M} / ell(U^{scale} * A) for
 * scale = +1 (x = u) or -1 (x = 1/u).  Arguments have odd top exponent, so
 * ell's leading degree is exact and every division is safe; that degree is
 * asserted per term.  Degrees are summed while 2Md + ell_leading_degree
 * stays within the floor (or up to the override).
 */
Laurent lattice_sum(const CarlitzTables& tables, const Laurent& w, long long j, int scale,
                    int floor, std::optional<int> dmax_override, int threads,
                    int* dmax_used = nullptr, std::vector<DegreeDiag>* diag = nullptr);

/** Right-hand side pieces: the full value, the bare convolution sum, b_k. */
struct RhsParts {
    Laurent value;
    Laurent sum;
    std::vector<RatFunc> b;
    std::vector<std::string> notes;
};

RhsParts rhs_convolution(const CarlitzTables& tables, const Laurent& w, long long j, int floor);

struct RamanujanReport {
    int q = 0;
    long long j = 0;
    int prec = 0;
    Val residual, lhs_valuation, rhs_valuation;
    int lhs_digits = 0, rhs_digits = 0;
    int dmax_used = 0;
    bool odd_parity_ok = false;
    bool exponent_audit_ok = false;
    bool pass = false;
    std::vector<DegreeDiag> diag_u, diag_v;
    std::vector<std::string> notes;
};

/**
 * Verify the pi-cleared identity at weight j to N digits.  Internally works
 * guard digits below -N.  Pass requires: residual with no known nonzero
 * digit and valuation bound >= N - slack, and both sides distinguishable
 * from zero by at least 20 known digits.
 */
RamanujanReport verify_ramanujan(const CarlitzTables& tables, const Laurent& w, long long j,
                                 int prec, std::optional<int> dmax_override = std::nullopt,
                                 int threads = 1, int slack = 10, int guard = 8);

struct ReciprocalReport {
    int q = 0;
    int prec = 0;
    Val residual, lhs_valuation, rhs_valuation;
    int dmax_used = 0;
    bool pass = false;
};

/**
 * Verify the reciprocal expansion 1/ell(z) = 1/z - z^{q-2} * sum_{A monic}
 * 1/(z^{q-1} - A^{q-1}) at z (default U).  Each denominator is checked to be
 * distinguishable from zero (lattice proximity guard).  The A-sum cutoff
 * relies on the same affine cancellation as the zeta blocks; it is
 * calibrated for |z| <= |U|.
 */
ReciprocalReport verify_reciprocal(const CarlitzTables& tables, const Laurent& w, int prec,
                                   std::optional<Laurent> z = std::nullopt,
                                   std::optional<int> dmax_override = std::nullopt,
                                   int threads = 1, int slack = 6, int guard = 8);

/**
 * Floor at which the period datum w must be known before verify_ramanujan
 * at weight j can certify prec digits.  Deeper than the working floor
 * because w^{j+1} and the ell chains consume leading digits.
 */
int ramanujan_w_floor(const FieldPtr& F, long long j, int prec, int guard = 8);

struct TelescopingResult {
    int trials = 0;
    int failures = 0;
    bool pass = false;
};

/**
 * Exact rational-function check of the partial-fraction telescoping
 *
 *   1/(x^j (x-y)) = -sum_{k=1}^{j} x^{-(j-k+1)} y^{-k} + 1/(y^j (x-y))
 *
 * on random pairs x != y (both nonzero) for each 1 <= j <= jmax.
 */
TelescopingResult telescoping_check(const FieldPtr& F, long long jmax, int trials_per_j,
                                    std::uint64_t seed);

} // namespace carlitz
