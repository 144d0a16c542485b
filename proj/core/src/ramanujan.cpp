#include "carlitz/ramanujan.hpp"

#include "carlitz/errors.hpp"
#include "carlitz/parallel.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace carlitz {

IdentityShape identity_shape(const FieldPtr& F, long long j) {
    if (j < 1) throw std::invalid_argument("weight j must be a positive integer");
    const long long q = F->q();
    IdentityShape s;
    s.q = static_cast<int>(q);
    s.j = j;
    s.c = (q - 1) / 2;
    s.D = s.c * (j - 1) + q - 2;
    s.M = (q - 1) * j + q - 2;
    s.w_exponent = j + 1;
    for (long long k = 0; k <= j + 1; ++k) s.u_exponents.push_back(s.c * (2 * k - j - 1));

    const bool scale_ok = (s.D + 1) + s.c * (j + 1) == (q - 1) * (j + 1);
    const bool weight_ok = s.M + 1 == (q - 1) * (j + 1);
    const bool split_ok = s.M == s.D + s.c * (j + 1);
    // lattice terms carry odd exponents; the shift -D must land them on the
    // rhs parity c(j+1) mod 2, i.e. D + c(j+1) must be odd
    const bool parity_ok = ((s.D + s.c * (j + 1)) % 2 + 2) % 2 == 1;
    s.audit_ok = scale_ok && weight_ok && split_ok && parity_ok;

    std::ostringstream os;
    os << "q=" << q << " j=" << j << ": c=" << s.c << " D=" << s.D << " M=" << s.M
       << " w^" << s.w_exponent << "; audit (D+1)+c(j+1)=" << (s.D + 1) + s.c * (j + 1)
       << " == (q-1)(j+1)=" << (q - 1) * (j + 1) << " == M+1=" << s.M + 1;
    s.summary = os.str();

    if (!s.audit_ok)
        throw std::logic_error("identity exponent audit failed: " + s.summary);
    return s;
}

Laurent lattice_sum(const CarlitzTables& tables, const Laurent& w, long long j, int scale,
                    int floor, std::optional<int> dmax_override, int threads,
                    int* dmax_used, std::vector<DegreeDiag>* diag) {
    if (scale != 1 && scale != -1)
        throw std::invalid_argument("lattice_sum scale must be +1 or -1");
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());
    const IdentityShape shape = identity_shape(F, j);
    const long long M = shape.M;
    const long long cutoff = -static_cast<long long>(floor);

    auto block_bound = [&](int d) {
        return 2 * M * d + ell_leading_degree(q, 2 * d + scale);
    };

    int dmax = 0;
    if (dmax_override) {
        dmax = *dmax_override;
        if (dmax < 0) throw std::invalid_argument("dmax override must be >= 0");
    } else {
        while (block_bound(dmax + 1) <= cutoff) ++dmax;
    }
    if (dmax_used) *dmax_used = dmax;

    Laurent acc = Laurent::zero_to(F, floor);
    for (int d = 0; d <= dmax; ++d) {
        const int s = 2 * d + scale;
        const long long H = ell_leading_degree(q, s);
        const int ell_floor = floor + static_cast<int>(2 * M * d);
        const Laurent block = sum_over_monics(F, d, threads, [&](const Poly& A) {
            const Laurent z = embed_poly(A, floor - 2 - scale).shifted(scale);
            const Laurent lz = ell_eval(z, w, tables, ell_floor);
            if (!lz.known_nonzero())
                throw PrecisionError("ell vanished to precision on a lattice-sum argument");
            if (lz.top_exponent() != H)
                throw PrecisionError("ell leading degree drifted from the parity prediction at deg " +
                                     std::to_string(d));
            return (embed_poly(A.pow(M), floor) * lz).inv().truncated(floor);
        });
        if (diag) {
            DegreeDiag dd;
            dd.d = d;
            dd.terms = monic_count(F, d);
            dd.predicted_bound = 2 * M * d + H;
            dd.block_valuation = block.valuation();
            diag->push_back(dd);
        }
        acc = acc + block;
    }
    return acc;
}

RhsParts rhs_convolution(const CarlitzTables& tables, const Laurent& w, long long j, int floor) {
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());
    const IdentityShape shape = identity_shape(F, j);
    const long long mmax = static_cast<long long>(q - 1) * (j + 1);

    RhsParts out;
    const auto bc = bc_numbers(tables, mmax);
    for (long long k = 0; k <= j + 1; ++k) {
        const long long m = (q - 1) * k;
        const RatFunc& bcm = bc.at(m);
        out.b.push_back(bcm.is_zero() ? bcm
                                      : bcm / RatFunc::of(gamma_factorial(tables, m)));
        if (bcm.is_zero())
            out.notes.push_back("b_" + std::to_string(k) + " vanished; term dropped");
    }

    // Multiplying by w^{j+1} (top exponent 2q(j+1)) lifts floors by that
    // much, so the convolution itself is assembled 2q(j+1) digits deeper.
    const int deep = floor - 2 * q * static_cast<int>(j + 1) - 2;
    Laurent sum = Laurent::exact_zero(F);
    for (long long k = 0; k <= j + 1; ++k) {
        const RatFunc rat = out.b[static_cast<std::size_t>(j + 1 - k)] *
                            out.b[static_cast<std::size_t>(k)];
        if (rat.is_zero()) continue;
        const int shift = static_cast<int>(shape.u_exponents[static_cast<std::size_t>(k)]);
        sum = sum + embed_ratfunc(rat, deep - shift).shifted(shift);
    }
    out.sum = sum;
    out.value = w.pow(j + 1) * sum;
    return out;
}

int ramanujan_w_floor(const FieldPtr& F, long long j, int prec, int guard) {
    const IdentityShape shape = identity_shape(F, j);
    const int q = shape.q;
    const int work_floor = -(prec + guard) - static_cast<int>(shape.D) - 2;
    const long long extra = std::max<long long>(0, shape.D + 1 - 2 * q);
    return work_floor - static_cast<int>(extra) - 4;
}

RamanujanReport verify_ramanujan(const CarlitzTables& tables, const Laurent& w, long long j,
                                 int prec, std::optional<int> dmax_override, int threads,
                                 int slack, int guard) {
    if (prec < 20) throw std::invalid_argument("precision must be at least 20 digits");
    const FieldPtr& F = tables.field();
    const IdentityShape shape = identity_shape(F, j);
    // One lattice term (A = 1 against 1/u) loses D + 2 digits to floor
    // propagation, so the working floor sits that much below the target.
    const int floor = -(prec + guard) - static_cast<int>(shape.D) - 2;
    if (w.floor() > ramanujan_w_floor(F, j, prec, guard))
        throw PrecisionError("period datum too shallow for weight " + std::to_string(j) +
                             ": recompute w down to U^" +
                             std::to_string(ramanujan_w_floor(F, j, prec, guard)));

    RamanujanReport rep;
    rep.q = shape.q;
    rep.j = j;
    rep.prec = prec;
    rep.exponent_audit_ok = shape.audit_ok;

    int du = 0, dv = 0;
    const Laurent Tu = lattice_sum(tables, w, j, +1, floor, dmax_override, threads, &du, &rep.diag_u);
    const Laurent Tv = lattice_sum(tables, w, j, -1, floor, dmax_override, threads, &dv, &rep.diag_v);
    rep.odd_parity_ok = true; // per-term degree asserts did not fire
    rep.dmax_used = std::max(du, dv);

    const int D = static_cast<int>(shape.D);
    const Laurent lhs = Tu.shifted(-D) + Tv.shifted(D);
    RhsParts rhs = rhs_convolution(tables, w, j, floor);
    rep.notes = std::move(rhs.notes);

    const Laurent residual = lhs - rhs.value;
    rep.residual = residual.valuation();
    rep.lhs_valuation = lhs.valuation();
    rep.rhs_valuation = rhs.value.valuation();
    rep.lhs_digits = lhs.known_digits();
    rep.rhs_digits = rhs.value.known_digits();
    rep.pass = !residual.known_nonzero() && rep.residual.at_least_bound(prec - slack) &&
               lhs.known_nonzero() && rhs.value.known_nonzero() && rep.lhs_digits >= 20 &&
               rep.rhs_digits >= 20;
    return rep;
}

ReciprocalReport verify_reciprocal(const CarlitzTables& tables, const Laurent& w, int prec,
                                   std::optional<Laurent> z_opt, std::optional<int> dmax_override,
                                   int threads, int slack, int guard) {
    if (prec < 20) throw std::invalid_argument("precision must be at least 20 digits");
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());
    const int floor = -(prec + guard);
    const long long cutoff = -static_cast<long long>(floor);

    if (w.floor() > floor)
        throw PrecisionError("period datum too shallow: recompute w down to U^" +
                             std::to_string(floor));
    const Laurent z = z_opt ? *z_opt : Laurent::upow(F, 1, floor);
    if (!z.known_nonzero()) throw PrecisionError("reciprocal check needs a nonzero argument");

    const Laurent lz = ell_eval(z, w, tables, floor);
    if (!lz.known_nonzero()) throw PrecisionError("ell(z) vanished to precision");
    const Laurent lhs = lz.inv();

    // block d >= 1 of the A-sum cancels down to valuation (q-1)d(d+3) for
    // |z| = |U|; strictly increasing, so the tail truncates like zeta
    int dmax = 0;
    if (dmax_override) {
        dmax = *dmax_override;
        if (dmax < 0) throw std::invalid_argument("dmax override must be >= 0");
    } else {
        while (static_cast<long long>(q - 1) * (dmax + 1) * (dmax + 4) <= cutoff) ++dmax;
    }

    // The final multiply by z^{q-2} (top exponent q-2 for the default z)
    // lifts floors, so the A-sum runs q digits deeper than the target.
    const int inner = floor - q;
    const Laurent zq1 = z.pow(q - 1);
    Laurent asum = Laurent::zero_to(F, inner);
    for (int d = 0; d <= dmax; ++d) {
        asum = asum + sum_over_monics(F, d, threads, [&](const Poly& A) {
                   const Laurent den = zq1 - embed_poly(A.pow(q - 1), inner);
                   if (!den.known_nonzero())
                       throw PrecisionError("argument too close to the lattice: z^{q-1} = A^{q-1} "
                                            "to precision at A = " + A.to_string());
                   return den.inv().truncated(inner);
               });
    }
    const Laurent rhs = z.inv() - z.pow(q - 2) * asum;

    const Laurent residual = lhs - rhs;
    ReciprocalReport rep;
    rep.q = q;
    rep.prec = prec;
    rep.dmax_used = dmax;
    rep.residual = residual.valuation();
    rep.lhs_valuation = lhs.valuation();
    rep.rhs_valuation = rhs.valuation();
    rep.pass = !residual.known_nonzero() && rep.residual.at_least_bound(prec - slack) &&
               lhs.known_nonzero() && rhs.known_nonzero();
    return rep;
}

TelescopingResult telescoping_check(const FieldPtr& F, long long jmax, int trials_per_j,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto random_poly = [&](int maxdeg) {
        std::uniform_int_distribution<int> degd(0, maxdeg);
        std::uniform_int_distribution<std::uint32_t> coef(0, F->q() - 1);
        const int d = degd(rng);
        std::vector<FieldElem> c(static_cast<std::size_t>(d) + 1, F->zero());
        for (auto& x : c) x = F->from_index(coef(rng));
        return Poly::from_coeffs(F, std::move(c));
    };
    const auto random_ratfunc = [&]() {
        for (;;) {
            const Poly num = random_poly(3);
            const Poly den = random_poly(2);
            if (num.is_zero() || den.is_zero()) continue;
            return RatFunc::make(num, den);
        }
    };

    TelescopingResult res;
    for (long long j = 1; j <= jmax; ++j) {
        for (int t = 0; t < trials_per_j; ++t) {
            RatFunc x = random_ratfunc(), y = random_ratfunc();
            while (y == x) y = random_ratfunc();
            ++res.trials;
            const RatFunc diff = x - y;
            const RatFunc lhs = (x.pow(j) * diff).inv();
            RatFunc rhs = (y.pow(j) * diff).inv();
            for (long long k = 1; k <= j; ++k)
                rhs = rhs - x.pow(-(j - k + 1)) * y.pow(-k);
            if (lhs != rhs) ++res.failures;
        }
    }
    res.pass = res.failures == 0;
    return res;
}

} // namespace carlitz
