#include "carlitz/carlitz_tables.hpp"

#include "carlitz/errors.hpp"

#include <stdexcept>

namespace carlitz {

CarlitzTables CarlitzTables::build(FieldPtr F, int imax) {
    if (imax < 0) throw std::invalid_argument("tables need imax >= 0");
    long long qi = 1;
    for (int i = 0; i < imax; ++i) {
        qi *= F->q();
        if (qi > (1 << 20))
            throw CapacityError("bracket degree q^imax exceeds the supported cap");
    }
    CarlitzTables t;
    t.F_ = F;
    t.imax_ = imax;
    t.bracket_.resize(static_cast<std::size_t>(imax) + 1, Poly(F));
    t.D_.resize(static_cast<std::size_t>(imax) + 1, Poly(F));
    t.D_[0] = Poly::one(F);
    const Poly T = Poly::t(F);
    long long deg = 1;
    for (int i = 1; i <= imax; ++i) {
        deg *= F->q();
        // [i] = T^{q^i} - T
        t.bracket_[static_cast<std::size_t>(i)] =
            Poly::monomial(F, static_cast<int>(deg), F->one()) - T;
        t.D_[static_cast<std::size_t>(i)] =
            t.bracket_[static_cast<std::size_t>(i)] *
            t.D_[static_cast<std::size_t>(i - 1)].pow(F->q());
    }
    return t;
}

const Poly& CarlitzTables::bracket(int i) const {
    if (i < 1 || i > imax_)
        throw CapacityError("bracket index " + std::to_string(i) + " outside tables (imax " +
                            std::to_string(imax_) + ")");
    return bracket_[static_cast<std::size_t>(i)];
}

const Poly& CarlitzTables::D(int i) const {
    if (i < 0 || i > imax_)
        throw CapacityError("D index " + std::to_string(i) + " outside tables (imax " +
                            std::to_string(imax_) + ")");
    return D_[static_cast<std::size_t>(i)];
}

int CarlitzTables::series_imax(const FieldPtr& F, long long mmax) {
    int i = 0;
    long long qi = 1;
    while (qi * F->q() - 1 <= mmax) {
        qi *= F->q();
        ++i;
    }
    return i;
}

Poly gamma_factorial(const CarlitzTables& tables, long long m) {
    if (m < 0) throw std::invalid_argument("gamma_factorial needs m >= 0");
    Poly g = Poly::one(tables.field());
    const int q = static_cast<int>(tables.field()->q());
    int i = 0;
    while (m > 0) {
        const int digit = static_cast<int>(m % q);
        if (digit > 0) g = g * tables.D(i).pow(digit);
        m /= q;
        ++i;
    }
    return g;
}

std::map<long long, RatFunc> bc_numbers(const CarlitzTables& tables, long long mmax) {
    if (mmax < 0) throw std::invalid_argument("bc_numbers needs mmax >= 0");
    const FieldPtr& F = tables.field();
    const int q = static_cast<int>(F->q());

    // sparse coefficients of the unit series f = e(z)/z: f_{q^i - 1} = 1/D_i
    std::vector<std::pair<long long, RatFunc>> fterms;
    long long qi = 1;
    for (int i = 0;; ++i) {
        const long long k = qi - 1;
        if (k > mmax) break;
        if (i > tables.imax())
            throw CapacityError("bc_numbers to order " + std::to_string(mmax) +
                                " needs tables up to i = " + std::to_string(i));
        if (k > 0) fterms.emplace_back(k, RatFunc::make(Poly::one(F), tables.D(i)));
        qi *= q;
    }

    // series inverse g of f: g_0 = 1, g_n = -sum_{k>0} f_k g_{n-k}
    std::vector<RatFunc> g(static_cast<std::size_t>(mmax) + 1, RatFunc::zero(F));
    g[0] = RatFunc::one(F);
    for (long long n = 1; n <= mmax; ++n) {
        RatFunc acc = RatFunc::zero(F);
        for (const auto& [k, fk] : fterms) {
            if (k > n) break;
            const RatFunc& gprev = g[static_cast<std::size_t>(n - k)];
            if (!gprev.is_zero()) acc = acc + fk * gprev;
        }
        g[static_cast<std::size_t>(n)] = -acc;
    }

    std::map<long long, RatFunc> bc;
    for (long long m = 0; m <= mmax; ++m) {
        const RatFunc& gm = g[static_cast<std::size_t>(m)];
        bc[m] = gm.is_zero() ? gm : RatFunc::of(gamma_factorial(tables, m)) * gm;
    }
    return bc;
}

} // namespace carlitz
