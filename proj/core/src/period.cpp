#include "carlitz/period.hpp"

#include "carlitz/errors.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

bool lattice_ok(const Laurent& w, const CarlitzTables& tables, int floor) {
    const FieldPtr& F = tables.field();
    const Poly probes[] = {Poly::one(F), Poly::t(F), Poly::t(F) + Poly::one(F)};
    for (const Poly& a : probes)
        if (ell_eval(embed_poly(a, floor), w, tables, floor).known_nonzero()) return false;
    return true;
}

} // namespace

int period_product_imax(const FieldPtr& F, int floor) {
    // factor i deviates from 1 at relative valuation 2(q^{i+1}-q); since the
    // product opens at U^{2q}, dropping it first moves the digit at exponent
    // 2q - 2(q^{i+1}-q), so a factor stays in while that digit is at or
    // above the floor
    const long long cutoff = -static_cast<long long>(floor) + 2LL * F->q();
    const int q = static_cast<int>(F->q());
    int i = 1;
    long long qpow = static_cast<long long>(q) * q;
    while (2 * (qpow - q) <= cutoff) {
        ++i;
        qpow *= q;
    }
    return i; // brackets up to i are touched: factors 1..i-1 plus [i] itself
}

int period_kernel_imax(const FieldPtr& F, int floor) {
    // correction term i tops out at 2q m_i - 2i q^i, and the -D_1 prefactor
    // lifts its effect on w by another 2q digits
    const int q = static_cast<int>(F->q());
    int imax = 1;
    long long qi = q;
    for (int i = 2; i <= 96; ++i) {
        qi *= q;
        const long long deg = 2LL * q * ((qi - 1) / (q - 1)) - 2LL * i * qi;
        if (deg + 2 * q < floor) break;
        imax = i;
    }
    return imax;
}

PeriodValue period_w_product(const CarlitzTables& tables, int floor) {
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());

    PeriodValue out;
    out.method = "product";
    Laurent w = -embed_poly(tables.bracket(1), floor - 2 * q - 2);
    for (int i = 1;; ++i) {
        long long qpow = q;
        for (int k = 0; k < i; ++k) qpow *= q;
        // factor i is 1 + [1]/[i]^q = [i+1]/[i]^q, deviating at relative
        // valuation 2(q^{i+1}-q); dropping it moves the digit at exponent
        // 2q - 2(q^{i+1}-q) first
        if (2 * (qpow - q) > -static_cast<long long>(floor) + 2 * q) break;
        const RatFunc factor = RatFunc::make(tables.bracket(i + 1), tables.bracket(i).pow(q));
        w = w * embed_ratfunc(factor, floor - 2 * q - 2);
        out.iterations = i;
    }
    w = w.truncated(floor);

    if (!lattice_ok(w, tables, floor)) {
        if (lattice_ok(-w, tables, floor)) {
            w = -w;
            out.sign_corrected = true;
        } else {
            throw ConvergenceError("period product failed lattice validation for both signs");
        }
    }
    out.w = w;
    return out;
}

PeriodValue period_w_kernel(const CarlitzTables& tables, int floor) {
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());

    const Laurent minus_d1 = -embed_poly(tables.D(1), floor - 2 * q - 2);
    PeriodValue out;
    out.method = "kernel";
    Laurent w = minus_d1;

    int prev_gain = 0;
    for (int iter = 1; iter <= 80; ++iter) {
        if (!w.known_nonzero() || w.top_exponent() != 2 * q)
            throw ConvergenceError("kernel iterate lost its leading exponent 2q");

        // correction sum over i >= 2; term degrees 2q m_i - 2i q^i decrease
        // strictly, and the -D_1 prefactor lifts each term's effect on w by
        // 2q digits, so the sum ends at the first term below floor - 2q
        Laurent corr = Laurent::exact_zero(F);
        Laurent wpow = w;                                               // w^{m_1}
        Laurent LD = embed_poly(tables.D(1), floor - 2 * q - 2);        // D_1
        long long qi = q;
        for (int i = 2; i <= 96; ++i) {
            qi *= q;
            const long long deg = 2LL * q * ((qi - 1) / (q - 1)) - 2LL * i * qi;
            if (deg + 2 * q < floor) break;
            wpow = wpow.pow(q) * w;                                     // w^{m_i}
            LD = embed_poly(tables.bracket(i), floor - 2 * q - 2) * LD.pow(q); // D_i
            corr = corr + wpow * LD.inv();
        }

        const Laurent w_new =
            corr.is_exact_zero() ? minus_d1
                                 : minus_d1 * (Laurent::one(F, corr.floor()) + corr);
        const Laurent delta = w_new - w;
        if (!delta.known_nonzero()) {
            out.w = w_new.truncated(floor);
            out.iterations = iter;
            return out;
        }
        const int gain = delta.valuation().lower_bound();
        if (iter > 1 && gain <= prev_gain)
            throw ConvergenceError("kernel iteration stopped contracting at update valuation " +
                                   std::to_string(gain));
        prev_gain = gain;
        w = w_new;
    }
    throw ConvergenceError("kernel iteration did not converge within 80 steps");
}

WValidation validate_w(const Laurent& w, const CarlitzTables& tables, int floor,
                       int min_valuation) {
    const FieldPtr& F = tables.field();
    WValidation v;
    v.min_valuation = min_valuation;
    const Laurent r1 = ell_eval(embed_poly(Poly::one(F), floor), w, tables, floor);
    const Laurent rt = ell_eval(embed_poly(Poly::t(F), floor), w, tables, floor);
    const Laurent rt1 = ell_eval(embed_poly(Poly::t(F) + Poly::one(F), floor), w, tables, floor);
    v.ell_one = r1.valuation();
    v.ell_t = rt.valuation();
    v.ell_t1 = rt1.valuation();
    v.pass = !r1.known_nonzero() && !rt.known_nonzero() && !rt1.known_nonzero() &&
             v.ell_one.at_least_bound(min_valuation) && v.ell_t.at_least_bound(min_valuation) &&
             v.ell_t1.at_least_bound(min_valuation);
    return v;
}

} // namespace carlitz
