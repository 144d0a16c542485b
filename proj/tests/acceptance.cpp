// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Run through ctest (test name "acceptance") or directly from the build tree.

#include "carlitz/classical.hpp"
#include "carlitz/period.hpp"
#include "carlitz/ramanujan.hpp"
#include "carlitz/zeta.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace carlitz;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    if (!ok) ++g_failures;
    std::printf("criterion %2d: %s  %s%s\n", n, ok ? "PASS" : "FAIL", label.c_str(), note.c_str());
    std::fflush(stdout);
}

struct Ctx {
    FieldPtr F;
    CarlitzTables t;
    Laurent w;
};

Ctx make_ctx(std::uint32_t q, int imax, int wfloor) {
    auto F = FieldCtx::make_prime(q);
    auto t = CarlitzTables::build(F, imax);
    Laurent w = period_w_kernel(t, wfloor).w;
    return Ctx{F, std::move(t), std::move(w)};
}

bool val_equal(const Val& a, const Val& b) { return a.kind == b.kind && a.v == b.v; }

constexpr long double kPi = 3.141592653589793238462643383279502884L;

} // namespace

int main() {
    const Ctx c3 = make_ctx(3, 3, -80);
    const Ctx c5 = make_ctx(5, 2, -80);

    criterion(1, "two-variable identity, (q,j) in {(3,1..4),(5,1),(5,2)}, N=60", [&] {
        const std::vector<std::pair<const Ctx*, long long>> cases = {
            {&c3, 1}, {&c3, 2}, {&c3, 3}, {&c3, 4}, {&c5, 1}, {&c5, 2}};
        for (const auto& [ctx, j] : cases) {
            RamanujanReport rep = verify_ramanujan(ctx->t, ctx->w, j, 60);
            if (!(rep.pass && rep.residual.at_least_bound(50) && rep.lhs_digits >= 20 &&
                  rep.rhs_digits >= 20 && rep.exponent_audit_ok && rep.odd_parity_ok))
                return false;
        }
        return true;
    });

    criterion(2, "weight-1 convolution equals w^2 (T+1+1/T)/(T^3-T)^2 and matches the lattice side", [&] {
        const FieldPtr& F = c3.F;
        const Poly T = Poly::t(F);
        const Poly one = Poly::one(F);
        const Poly br = c3.t.bracket(1);
        const RatFunc oracle = RatFunc::make(T * T + T + one, T * br * br);

        RhsParts parts = rhs_convolution(c3.t, c3.w, 1, -70);
        Laurent expect_sum = embed_ratfunc(oracle, parts.sum.floor());
        if ((parts.sum - expect_sum).known_nonzero()) return false;
        if (agreement_valuation(parts.sum, expect_sum).lower_bound() < 60) return false;
        Laurent expect_value = c3.w.pow(2) * expect_sum;
        if ((parts.value - expect_value).known_nonzero()) return false;

        RamanujanReport rep = verify_ramanujan(c3.t, c3.w, 1, 60);
        return rep.pass;
    });

    criterion(3, "Euler-Carlitz at q=3 i=1..4 and q=5 i=1..2, N=60", [&] {
        for (long long i = 1; i <= 4; ++i) {
            EulerCarlitzReport rep = verify_euler_carlitz(c3.t, c3.w, i, 60);
            if (!rep.pass) return false;
        }
        for (long long i = 1; i <= 2; ++i) {
            EulerCarlitzReport rep = verify_euler_carlitz(c5.t, c5.w, i, 60);
            if (!rep.pass) return false;
        }
        return true;
    });

    criterion(4, "period datum: product vs kernel to >= 55 digits, lattice residuals zero", [&] {
        for (const Ctx* ctx : {&c3, &c5}) {
            PeriodValue prod = period_w_product(ctx->t, -60);
            PeriodValue kern = period_w_kernel(ctx->t, -60);
            if (agreement_valuation(prod.w, kern.w).lower_bound() < 55) return false;
            WValidation v = validate_w(kern.w, ctx->t, -50, 40);
            if (!v.pass) return false;
        }
        return true;
    });

    criterion(5, "ell series vs lattice product at z=U within 2(q-1)(dmax+1) digits", [&] {
        const auto check = [](const Ctx& ctx, int dmax) {
            const int q = static_cast<int>(ctx.F->q());
            const int window = 2 * (q - 1) * (dmax + 1);
            const int floor = -(window + 6);
            Laurent z = Laurent::upow(ctx.F, 1, floor - 10);
            Laurent series = ell_eval(z, ctx.w, ctx.t, floor);
            Laurent prod = ell_product_ref(z, dmax, floor);
            return agreement_valuation(series, prod).lower_bound() >= window;
        };
        return check(c3, 3) && check(c3, 4) && check(c5, 3);
    });

    criterion(6, "reciprocal expansion of 1/ell at z=U, N=60", [&] {
        for (const Ctx* ctx : {&c3, &c5}) {
            ReciprocalReport rep = verify_reciprocal(ctx->t, ctx->w, 60);
            if (!rep.pass) return false;
        }
        return true;
    });

    criterion(7, "BC support and exact generating-function inverse to order 4(q-1)", [&] {
        for (const Ctx* ctx : {&c3, &c5}) {
            const FieldPtr& F = ctx->F;
            const int q = static_cast<int>(F->q());
            const long long mmax = 4LL * (q - 1);
            auto bc = bc_numbers(ctx->t, mmax);
            if (!(bc.at(0) == RatFunc::one(F))) return false;
            for (long long m = 1; m <= mmax; ++m)
                if (m % (q - 1) != 0 && !bc.at(m).is_zero()) return false;

            // f = e(z)/z coefficients; g_m = BC_m/Gamma_m; f*g = 1 exactly
            std::vector<RatFunc> f(static_cast<std::size_t>(mmax) + 1, RatFunc::zero(F));
            f[0] = RatFunc::one(F);
            long long qi = 1;
            for (int i = 1;; ++i) {
                qi *= q;
                if (qi - 1 > mmax) break;
                f[static_cast<std::size_t>(qi - 1)] =
                    RatFunc::make(Poly::one(F), ctx->t.D(i));
            }
            std::vector<RatFunc> g;
            for (long long m = 0; m <= mmax; ++m) {
                const RatFunc& bcm = bc.at(m);
                g.push_back(bcm.is_zero()
                                ? bcm
                                : bcm / RatFunc::of(gamma_factorial(ctx->t, m)));
            }
            for (long long m = 0; m <= mmax; ++m) {
                RatFunc conv = RatFunc::zero(F);
                for (long long k = 0; k <= m; ++k)
                    conv = conv + f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(m - k)];
                const RatFunc want = m == 0 ? RatFunc::one(F) : RatFunc::zero(F);
                if (!(conv == want)) return false;
            }
        }
        return true;
    });

    criterion(8, "zeta tails: v_T(zeta(m)-1) >= m+1 for m=1..6, and dmax stability", [&] {
        for (const Ctx* ctx : {&c3, &c5}) {
            for (long long m = 1; m <= 6; ++m) {
                ZetaValue z = zeta_pos(ctx->F, m, -40);
                Laurent tail = z.value - Laurent::one(ctx->F, z.value.floor());
                if (!tail.valuation().at_least_bound(static_cast<int>(2 * (m + 1))))
                    return false;
            }
            ZetaValue a = zeta_pos(ctx->F, 2, -20);
            ZetaValue b = zeta_pos(ctx->F, 2, -20, a.dmax_used + 2);
            if (!(a.value == b.value)) return false;
        }
        return true;
    });

    criterion(9, "telescoping partial fractions exact for j <= 5 on 50 random pairs", [&] {
        TelescopingResult res = telescoping_check(c3.F, 5, 10, 0x5eedULL);
        return res.trials == 50 && res.failures == 0 && res.pass;
    });

    criterion(10, "classical Euler (m=1..5, <1e-11) and odd-zeta (m=1..5 at pi; (1,2pi), <1e-9)", [&] {
        for (int m = 1; m <= 5; ++m) {
            ClassicalEulerReport e = verify_classical_euler(m);
            if (!e.pass || std::abs(e.residual) >= 1e-11L) return false;
            ClassicalRamanujanReport r = verify_classical_ramanujan(m, kPi);
            if (!r.pass || std::abs(r.residual) >= 1e-9L) return false;
        }
        ClassicalRamanujanReport r2 = verify_classical_ramanujan(1, 2.0L * kPi);
        return r2.pass && std::abs(r2.residual) < 1e-9L;
    });

    criterion(11, "determinism: thread counts 1 and 8 give identical results", [&] {
        RamanujanReport r1 = verify_ramanujan(c3.t, c3.w, 1, 40, std::nullopt, 1);
        RamanujanReport r8 = verify_ramanujan(c3.t, c3.w, 1, 40, std::nullopt, 8);
        if (!(val_equal(r1.residual, r8.residual) && val_equal(r1.lhs_valuation, r8.lhs_valuation) &&
              val_equal(r1.rhs_valuation, r8.rhs_valuation) && r1.lhs_digits == r8.lhs_digits &&
              r1.rhs_digits == r8.rhs_digits && r1.dmax_used == r8.dmax_used &&
              r1.pass == r8.pass))
            return false;
        if (r1.diag_u.size() != r8.diag_u.size() || r1.diag_v.size() != r8.diag_v.size())
            return false;
        for (std::size_t k = 0; k < r1.diag_u.size(); ++k)
            if (!val_equal(r1.diag_u[k].block_valuation, r8.diag_u[k].block_valuation))
                return false;
        for (const Ctx* ctx : {&c3, &c5}) {
            ZetaValue z1 = zeta_pos(ctx->F, 6, -40, std::nullopt, 1);
            ZetaValue z8 = zeta_pos(ctx->F, 6, -40, std::nullopt, 8);
            if (!(z1.value == z8.value)) return false;
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
