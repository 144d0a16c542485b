#include "carlitz/carlitz_tables.hpp"
#include "carlitz/errors.hpp"

#include <stdexcept>

namespace carlitz {

long long ell_term_degree(int q, int s, int i) {
    long long qi = 1;
    for (int k = 0; k < i; ++k) qi *= q;
    const long long mi = (qi - 1) / (q - 1); // (q^i - 1)/(q - 1)
    return 2LL * q * mi + qi * s - 2LL * i * qi;
}

long long ell_leading_degree(int q, int s) {
    if (s < 0) return s;
    if (s % 2 == 0)
        throw std::invalid_argument("ell_leading_degree needs an odd top exponent");
    long long acc = s, qe = 1;
    for (int e = 0; 2 * e < s; ++e) {
        acc += (q - 1) * qe * (s - 2 * e);
        qe *= q;
    }
    return acc;
}

namespace {

// Largest i whose term can still reach the floor, along with the peak term
// degree.  Term degrees rise while 2i < s and then fall superexponentially.
struct TermPlan {
    int imax = -1;       // last i with term degree >= floor (-1: none)
    long long peak = 0;  // max term degree over i = 0..imax
};

TermPlan plan_terms(int q, int s, int floor) {
    TermPlan plan;
    for (int i = 0;; ++i) {
        const long long deg = ell_term_degree(q, s, i);
        if (deg >= floor) {
            plan.imax = i;
            plan.peak = std::max(plan.peak, deg);
        } else if (2 * i >= s) {
            break; // past the peak and below the floor: all later terms sink
        }
        if (i > 96) throw ConvergenceError("ell summation failed to terminate");
    }
    return plan;
}

} // namespace

Laurent ell_eval(const Laurent& z, const Laurent& w, const CarlitzTables& tables, int floor) {
    const FieldPtr& F = tables.field();
    if (z.is_exact_zero()) return Laurent::exact_zero(F);
    if (!z.known_nonzero())
        throw PrecisionError("ell_eval needs an argument with a known leading digit");
    if (!w.known_nonzero())
        throw PrecisionError("ell_eval needs period data with a known leading digit");
    const int q = static_cast<int>(F->q());
    const int s = z.top_exponent();

    const TermPlan plan = plan_terms(q, s, floor);
    if (plan.imax < 0) return Laurent::zero_to(F, floor);

    // Every term needs at most (peak - floor) digits below its own top, so
    // running factors can be truncated to that relative window.
    const long long rel = plan.peak - floor + 4;
    auto trim = [&](const Laurent& a) {
        if (!a.known_nonzero()) return a;
        const long long cut = static_cast<long long>(a.top_exponent()) - rel;
        if (cut > a.floor()) return a.truncated(static_cast<int>(cut));
        return a;
    };

    Laurent zq = trim(z);                                     // z^{q^i}
    Laurent wm = Laurent::one(F, static_cast<int>(-rel));     // w^{(q^i-1)/(q-1)}
    Laurent LD = wm;                                          // D_i as a series
    Laurent acc = Laurent::exact_zero(F);
    long long qi = 1;
    for (int i = 0; i <= plan.imax; ++i) {
        if (i > 0) {
            qi *= q;
            zq = trim(zq.pow(q));
            wm = trim(wm.pow(q) * w);
            // D_i = [i] * D_{i-1}^q with [i] = U^{2 q^i} - U^2 under T = U^2
            const Laurent bracket = Laurent::from_terms(
                F, static_cast<int>(2 * qi - rel),
                {{static_cast<int>(2 * qi), F->one()}, {2, F->from_int(-1)}});
            LD = trim(bracket * LD.pow(q));
        }
        if (ell_term_degree(q, s, i) >= floor) acc = acc + zq * wm * LD.inv();
    }
    return acc;
}

Laurent ell_product_ref(const Laurent& z, int dmax, int floor) {
    const FieldPtr& F = z.field();
    if (z.is_exact_zero()) return Laurent::exact_zero(F);
    if (!z.known_nonzero())
        throw PrecisionError("ell_product_ref needs an argument with a known leading digit");
    if (dmax < 0) throw std::invalid_argument("ell_product_ref needs dmax >= 0");
    const int q = static_cast<int>(F->q());

    Laurent prod = z;
    for (int d = 0; d <= dmax; ++d) {
        const std::uint64_t count = monic_count(F, d);
        for (std::uint64_t k = 0; k < count; ++k) {
            const Poly A = monic_at(F, d, k);
            const Laurent ratio = z * embed_poly(A, z.floor()).inv();
            prod = prod * (Laurent::one(F, ratio.floor() * (q - 1)) - ratio.pow(q - 1));
        }
    }
    return prod.truncated(floor);
}

} // namespace carlitz
