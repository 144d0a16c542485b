#include "carlitz/zeta.hpp"

#include "carlitz/errors.hpp"
#include "carlitz/parallel.hpp"

#include <stdexcept>

namespace carlitz {

long long zeta_block_bound(int q, long long m, int d) {
    return 2LL * m * d + static_cast<long long>(q - 1) * d * (d + 1);
}

ZetaValue zeta_pos(const FieldPtr& F, long long m, int floor,
                   std::optional<int> dmax_override, int threads) {
    if (m < 1) throw std::invalid_argument("zeta_pos needs a positive exponent");
    const int q = static_cast<int>(F->q());
    const long long cutoff = -static_cast<long long>(floor);

    int dmax = 0;
    if (dmax_override) {
        dmax = *dmax_override;
        if (dmax < 0) throw std::invalid_argument("dmax override must be >= 0");
    } else {
        while (zeta_block_bound(q, m, dmax + 1) <= cutoff) ++dmax;
    }

    ZetaValue out;
    out.m = m;
    out.dmax_used = dmax;
    Laurent acc = Laurent::zero_to(F, floor);
    for (int d = 0; d <= dmax; ++d) {
        acc = acc + sum_over_monics(F, d, threads, [&](const Poly& A) {
                  return embed_poly(A.pow(m), floor).inv().truncated(floor);
              });
    }
    out.value = acc;
    return out;
}

EulerCarlitzReport verify_euler_carlitz(const CarlitzTables& tables, const Laurent& w,
                                        long long i, int prec, int threads, int slack,
                                        int guard) {
    if (i < 1) throw std::invalid_argument("euler-carlitz index i must be >= 1");
    if (prec < 20) throw std::invalid_argument("precision must be at least 20 digits");
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());
    const long long m = static_cast<long long>(q - 1) * i;
    const int floor = -(prec + guard);

    const ZetaValue lhs = zeta_pos(F, m, floor, std::nullopt, threads);

    const auto bc = bc_numbers(tables, m);
    const RatFunc& bcm = bc.at(m);
    if (bcm.is_zero())
        throw ConvergenceError("BC_" + std::to_string(m) + " vanished unexpectedly");
    const RatFunc ratio = bcm / RatFunc::of(gamma_factorial(tables, m));
    const Laurent rhs = w.pow(i) * embed_ratfunc(ratio, floor - 2 * q * static_cast<int>(i));

    const Laurent residual = lhs.value - rhs;

    EulerCarlitzReport rep;
    rep.q = q;
    rep.i = i;
    rep.prec = prec;
    rep.dmax_used = lhs.dmax_used;
    rep.residual = residual.valuation();
    rep.lhs_valuation = lhs.value.valuation();
    rep.rhs_valuation = rhs.valuation();
    rep.pass = !residual.known_nonzero() && rep.residual.at_least_bound(prec - slack) &&
               lhs.value.known_nonzero() && rhs.known_nonzero();
    return rep;
}

} // namespace carlitz
