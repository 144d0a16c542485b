#include "carlitz/selftest.hpp"

#include "carlitz/carlitz_tables.hpp"
#include "carlitz/classical.hpp"
#include "carlitz/period.hpp"
#include "carlitz/ramanujan.hpp"
#include "carlitz/zeta.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace carlitz {

namespace {

void run_case(SelfTestReport& rep, const std::string& name,
              const std::function<std::pair<bool, std::string>()>& body) {
    SelfTestCase c;
    c.name = name;
    try {
        const auto [ok, detail] = body();
        c.pass = ok;
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    rep.cases.push_back(std::move(c));
}

} // namespace

SelfTestReport run_selftest(const FieldPtr& F, int prec, int threads) {
    if (prec < 20) throw std::invalid_argument("precision must be at least 20 digits");
    const int q = static_cast<int>(F->q());

    SelfTestReport rep;
    rep.q = q;
    rep.prec = prec;

    const int wf = std::min(ramanujan_w_floor(F, 1, prec), -(prec + 8));
    const int imax = std::max({CarlitzTables::series_imax(F, 3LL * (q - 1)),
                               period_product_imax(F, wf), period_kernel_imax(F, wf), 3});
    const CarlitzTables tables = CarlitzTables::build(F, imax);

    run_case(rep, "field-axioms", [&]() -> std::pair<bool, std::string> {
        int bad = 0;
        for (const FieldElem a : F->elements())
            for (const FieldElem b : F->elements()) {
                if (F->mul(a, b) != F->mul(b, a)) ++bad;
                if (F->add(a, b) != F->add(b, a)) ++bad;
                const FieldElem c = F->add(a, F->one());
                if (F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c))) ++bad;
                if (!a.is_zero() && F->mul(a, F->inv(a)) != F->one()) ++bad;
            }
        for (const FieldElem a : F->elements())
            if (F->pow(a, q) != a) ++bad;
        return {bad == 0, bad == 0 ? "commutativity, distributivity, inverses, a^q = a"
                                   : std::to_string(bad) + " axiom violations"};
    });

    run_case(rep, "poly-division", [&]() -> std::pair<bool, std::string> {
        const Poly x = Poly::from_ints(F, {1, 2, 0, 1, 1});
        const Poly y = Poly::from_ints(F, {2, 1, 1});
        const auto [quo, rem] = x.divmod(y);
        const bool ok = quo * y + rem == x && rem.degree() < y.degree();
        return {ok, "divmod reconstructs and reduces"};
    });

    run_case(rep, "bc-support", [&]() -> std::pair<bool, std::string> {
        const long long mmax = 3LL * (q - 1);
        const auto bc = bc_numbers(tables, mmax);
        for (long long m = 1; m <= mmax; ++m) {
            const bool expect_zero = m % (q - 1) != 0;
            if (bc.at(m).is_zero() != expect_zero)
                return {false, "support broken at m = " + std::to_string(m)};
        }
        if (!(bc.at(0) == RatFunc::one(F))) return {false, "BC_0 != 1"};
        return {true, "BC_m = 0 exactly off multiples of q-1"};
    });

    run_case(rep, "period-methods-agree", [&]() -> std::pair<bool, std::string> {
        const PeriodValue a = period_w_product(tables, wf);
        const PeriodValue b = period_w_kernel(tables, wf);
        const Val v = agreement_valuation(a.w, b.w);
        const bool ok = !(a.w - b.w).known_nonzero() && v.at_least_bound(prec - 6);
        return {ok, "product vs kernel agreement valuation " + v.to_string()};
    });

    run_case(rep, "period-lattice-zeros", [&]() -> std::pair<bool, std::string> {
        const PeriodValue pv = period_w_kernel(tables, wf);
        const WValidation val = validate_w(pv.w, tables, wf, prec - 6);
        std::ostringstream os;
        os << "ell vanishes at 1, T, T+1: " << val.ell_one.to_string() << ", "
           << val.ell_t.to_string() << ", " << val.ell_t1.to_string();
        return {val.pass, os.str()};
    });

    const PeriodValue pv = period_w_kernel(tables, wf);

    run_case(rep, "euler-carlitz-weight-1", [&]() -> std::pair<bool, std::string> {
        const EulerCarlitzReport r = verify_euler_carlitz(tables, pv.w, 1, prec, threads);
        return {r.pass, "residual " + r.residual.to_string()};
    });

    run_case(rep, "main-identity-weight-1", [&]() -> std::pair<bool, std::string> {
        const RamanujanReport r = verify_ramanujan(tables, pv.w, 1, prec, std::nullopt, threads);
        return {r.pass, "residual " + r.residual.to_string()};
    });

    run_case(rep, "reciprocal-ell", [&]() -> std::pair<bool, std::string> {
        const ReciprocalReport r = verify_reciprocal(tables, pv.w, prec, std::nullopt,
                                                     std::nullopt, threads);
        return {r.pass, "residual " + r.residual.to_string()};
    });

    run_case(rep, "telescoping-exact", [&]() -> std::pair<bool, std::string> {
        const TelescopingResult r = telescoping_check(F, 3, 4, 0x5eedULL);
        return {r.pass, std::to_string(r.trials) + " exact trials"};
    });

    run_case(rep, "classical-even-zeta", [&]() -> std::pair<bool, std::string> {
        for (int m = 1; m <= 3; ++m)
            if (!verify_classical_euler(m).pass)
                return {false, "even zeta failed at m = " + std::to_string(m)};
        return {true, "zeta(2), zeta(4), zeta(6) match the closed forms"};
    });

    run_case(rep, "classical-odd-zeta", [&]() -> std::pair<bool, std::string> {
        const ClassicalRamanujanReport r = verify_classical_ramanujan(1, 3.14159265358979323846L);
        std::ostringstream os;
        os << "residual " << static_cast<double>(r.residual);
        return {r.pass, os.str()};
    });

    rep.pass = std::all_of(rep.cases.begin(), rep.cases.end(),
                           [](const SelfTestCase& c) { return c.pass; });
    return rep;
}

} // namespace carlitz
