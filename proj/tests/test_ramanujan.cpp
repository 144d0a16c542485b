#include "carlitz/errors.hpp"
#include "carlitz/period.hpp"
#include "carlitz/ramanujan.hpp"

#include "doctest.h"

using namespace carlitz;

TEST_SUITE("ramanujan") {

TEST_CASE("exponent shape and audits") {
    auto F = FieldCtx::make_prime(3);
    IdentityShape s = identity_shape(F, 1);
    CHECK(s.q == 3);
    CHECK(s.c == 1);
    CHECK(s.D == 1);
    CHECK(s.M == 3);
    CHECK(s.w_exponent == 2);
    CHECK(s.u_exponents == std::vector<long long>{-2, 0, 2});
    CHECK(s.audit_ok);
    CHECK_FALSE(s.summary.empty());

    auto F5 = FieldCtx::make_prime(5);
    IdentityShape s5 = identity_shape(F5, 2);
    CHECK(s5.c == 2);
    CHECK(s5.D == 5);
    CHECK(s5.M == 11);
    CHECK(s5.w_exponent == 3);
    CHECK(s5.u_exponents == std::vector<long long>{-6, -2, 2, 6});
    CHECK(s5.M % 2 == 1); // the A-power is always odd

    CHECK_THROWS_AS(identity_shape(F, 0), std::invalid_argument);
    CHECK_THROWS_AS(identity_shape(F, -3), std::invalid_argument);
}

TEST_CASE("partial-fraction telescoping is an exact rational identity") {
    auto F = FieldCtx::make_prime(3);
    TelescopingResult res = telescoping_check(F, 3, 10, 42);
    CHECK(res.trials == 30);
    CHECK(res.failures == 0);
    CHECK(res.pass);

    auto F9 = FieldCtx::make_extension(3, 2, {1, 0, 1});
    TelescopingResult res9 = telescoping_check(F9, 2, 5, 7);
    CHECK(res9.pass);
}

TEST_CASE("convolution side against the closed form at weight 1") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, -40).w;
    const int floor = -30;

    RhsParts parts = rhs_convolution(t, w, 1, floor);
    REQUIRE(parts.b.size() == 3);
    CHECK(parts.b[0] == RatFunc::one(F));
    CHECK(parts.b[1].to_string() == "2/(T^3+2*T)");
    CHECK(parts.b[2].to_string() == "1/(T^6+T^4+T^2)");
    CHECK(parts.notes.empty());

    // sum = (u^2 + 1 + u^-2)/[1]^2, value = w^2 * sum
    const Poly b1 = t.bracket(1);
    const int deep = parts.sum.floor();
    Laurent expect = embed_ratfunc(RatFunc::make(Poly::one(F), b1 * b1), deep - 2) *
                     Laurent::from_terms(F, deep - 2,
                                         {{2, F->one()}, {0, F->one()}, {-2, F->one()}});
    CHECK(parts.sum.top_exponent() == -10);
    CHECK_FALSE((parts.sum - expect).known_nonzero());
    CHECK(agreement_valuation(parts.sum, expect).lower_bound() > -floor);
    CHECK_FALSE((parts.value - w.pow(2) * expect).known_nonzero());
    CHECK(parts.value.top_exponent() == 2); // D + 1
}

TEST_CASE("two-variable identity verifies at weight 1 over F_3") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, ramanujan_w_floor(F, 1, 40)).w;

    RamanujanReport rep = verify_ramanujan(t, w, 1, 40);
    CHECK(rep.pass);
    CHECK(rep.exponent_audit_ok);
    CHECK(rep.odd_parity_ok);
    CHECK(rep.residual.at_least_bound(30));
    CHECK(rep.lhs_digits >= 20);
    CHECK(rep.rhs_digits >= 20);
    CHECK(rep.dmax_used == 2);
    CHECK(rep.lhs_valuation.is_exact());
    CHECK(rep.lhs_valuation.lower_bound() == -2); // both sides peak at U^{D+1}
    CHECK(rep.rhs_valuation.lower_bound() == -2);

    // degree-0 blocks attain the predicted valuation exactly
    REQUIRE(rep.diag_u.size() == 2);
    REQUIRE(rep.diag_v.size() == 3);
    CHECK(rep.diag_u[0].terms == 1);
    CHECK(rep.diag_u[0].predicted_bound == 3);
    CHECK(rep.diag_u[0].block_valuation.is_exact());
    CHECK(rep.diag_u[0].block_valuation.lower_bound() == 3);
    CHECK(rep.diag_v[0].predicted_bound == -1);
    CHECK(rep.diag_v[0].block_valuation.lower_bound() == -1);
    for (const auto& dd : rep.diag_u) {
        CAPTURE(dd.d);
        CHECK(dd.block_valuation.lower_bound() >= dd.predicted_bound);
    }
    for (const auto& dd : rep.diag_v) {
        CAPTURE(dd.d);
        CHECK(dd.block_valuation.lower_bound() >= dd.predicted_bound);
    }
}

TEST_CASE("two-variable identity verifies at weight 1 over F_5") {
    auto F = FieldCtx::make_prime(5);
    auto t = CarlitzTables::build(F, 2);
    Laurent w = period_w_kernel(t, ramanujan_w_floor(F, 1, 30)).w;

    RamanujanReport rep = verify_ramanujan(t, w, 1, 30);
    CHECK(rep.pass);
    CHECK(rep.residual.at_least_bound(20));
    CHECK(rep.dmax_used == 1);
}

TEST_CASE("corrupted period data breaks the identity") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, ramanujan_w_floor(F, 1, 40)).w;

    Laurent dented = w + Laurent::upow(F, -20, w.floor());
    RamanujanReport rep = verify_ramanujan(t, dented, 1, 40);
    CHECK_FALSE(rep.pass);
    CHECK(rep.residual.is_exact()); // the mismatch is visible, not just unproven
}

TEST_CASE("shallow period data is rejected up front") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, -40).w; // above ramanujan_w_floor(F, 1, 40)
    CHECK(ramanujan_w_floor(F, 1, 40) < -50);
    CHECK_THROWS_AS(verify_ramanujan(t, w, 1, 40), PrecisionError);
    CHECK_THROWS_AS(verify_ramanujan(t, w, 1, 19), std::invalid_argument);
}

TEST_CASE("reciprocal expansion of ell at z = U") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, -48).w;

    ReciprocalReport rep = verify_reciprocal(t, w, 40);
    CHECK(rep.pass);
    CHECK(rep.residual.at_least_bound(34));
    CHECK(rep.dmax_used == 3); // blocks stay while (q-1)(d+1)(d+4) fits in the window
    CHECK(rep.lhs_valuation.is_exact());
    CHECK(rep.lhs_valuation.lower_bound() == 3); // 1/ell(U) opens at U^-3
}

TEST_CASE("reciprocal check refuses lattice points and shallow data") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, -48).w;

    CHECK_THROWS_AS(verify_reciprocal(t, w, 40, embed_poly(Poly::t(F), -48)), PrecisionError);
    Laurent shallow = period_w_kernel(t, -30).w;
    CHECK_THROWS_AS(verify_reciprocal(t, shallow, 40), PrecisionError);
}

TEST_CASE("lattice sum rejects a bad scale") {
    auto F = FieldCtx::make_prime(3);
    auto t = CarlitzTables::build(F, 3);
    Laurent w = period_w_kernel(t, -55).w;
    CHECK_THROWS_AS(lattice_sum(t, w, 1, 0, -40, std::nullopt, 1), std::invalid_argument);
    CHECK_THROWS_AS(lattice_sum(t, w, 1, 2, -40, std::nullopt, 1), std::invalid_argument);
}

} // TEST_SUITE
