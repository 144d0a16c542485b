#include "carlitz/classical.hpp"

#include "carlitz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace carlitz {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Reduced rational on 128-bit parts; wide enough for every intermediate of
// the Bernoulli recurrence through n = 30.
struct Rat128 {
    i128 num = 0;
    i128 den = 1;

    static Rat128 make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }
    Rat128 operator+(const Rat128& o) const {
        return make(num * o.den + o.num * den, den * o.den);
    }
    Rat128 operator*(const Rat128& o) const { return make(num * o.num, den * o.den); }
};

Rational64 narrow(const Rat128& r) {
    constexpr i128 lo = std::numeric_limits<long long>::min();
    constexpr i128 hi = std::numeric_limits<long long>::max();
    if (r.num < lo || r.num > hi || r.den > hi)
        throw CapacityError("rational overflows 64-bit storage");
    return {static_cast<long long>(r.num), static_cast<long long>(r.den)};
}

long double factorial_ld(int n) {
    long double f = 1.0L;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// sum_{n>=1} n^{-(2m+1)} / (e^{2xn} - 1), truncated once terms stop moving
// the total at long double resolution.
long double exp_weighted_sum(int m, long double x, bool* truncated_early) {
    long double acc = 0.0L;
    *truncated_early = false;
    for (int n = 1; n <= 5000; ++n) {
        const long double term =
            1.0L / (std::pow(static_cast<long double>(n), 2.0L * m + 1.0L) *
                    std::expm1(2.0L * x * n));
        acc += term;
        if (term < 1e-22L * (1.0L + acc)) return acc;
    }
    *truncated_early = true;
    return acc;
}

} // namespace

Rational64 Rational64::make(long long n, long long d) {
    return narrow(Rat128::make(n, d));
}

Rational64 Rational64::operator+(const Rational64& o) const {
    return narrow(Rat128::make(static_cast<i128>(num) * o.den + static_cast<i128>(o.num) * den,
                               static_cast<i128>(den) * o.den));
}

Rational64 Rational64::operator-(const Rational64& o) const { return *this + (-o); }

Rational64 Rational64::operator*(const Rational64& o) const {
    return narrow(Rat128::make(static_cast<i128>(num) * o.num, static_cast<i128>(den) * o.den));
}

Rational64 Rational64::operator/(const Rational64& o) const {
    if (o.num == 0) throw std::domain_error("division by zero rational");
    return narrow(Rat128::make(static_cast<i128>(num) * o.den, static_cast<i128>(den) * o.num));
}

std::string Rational64::to_string() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

std::vector<Rational64> bernoulli_numbers(int nmax) {
    if (nmax < 0) throw std::invalid_argument("bernoulli_numbers needs nmax >= 0");
    if (nmax > 30) throw CapacityError("Bernoulli numbers past B_30 overflow 64-bit rationals");

    std::vector<Rat128> b;
    b.push_back({1, 1});
    for (int n = 1; n <= nmax; ++n) {
        // binom tracks C(n+1, k) incrementally; stays far inside 64 bits
        long long binom = 1;
        Rat128 acc{0, 1};
        for (int k = 0; k < n; ++k) {
            acc = acc + Rat128::make(b[static_cast<std::size_t>(k)].num * binom,
                                     b[static_cast<std::size_t>(k)].den);
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b.push_back(acc * Rat128::make(-1, n + 1));
    }

    std::vector<Rational64> out;
    out.reserve(b.size());
    for (const auto& r : b) out.push_back(narrow(r));
    return out;
}

long double zeta_real(long double s, int cut) {
    if (s <= 1.0L) throw std::invalid_argument("zeta_real needs s > 1");
    if (cut < 2) throw std::invalid_argument("zeta_real needs cut >= 2");
    const long double K = cut;

    long double acc = 0.0L;
    for (int n = 1; n < cut; ++n) acc += std::pow(static_cast<long double>(n), -s);
    acc += 0.5L * std::pow(K, -s);
    acc += std::pow(K, 1.0L - s) / (s - 1.0L);

    // Euler-Maclaurin corrections B_{2k}/(2k)! * s(s+1)...(s+2k-2) * K^{1-s-2k}
    static const long double b_over_fact[] = {1.0L / 12.0L, -1.0L / 720.0L, 1.0L / 30240.0L,
                                              -1.0L / 1209600.0L};
    long double rising = s;            // s(s+1)...(s+2k-2)
    long double kpow = std::pow(K, -s - 1.0L);
    for (int k = 1; k <= 4; ++k) {
        acc += b_over_fact[k - 1] * rising * kpow;
        rising *= (s + 2.0L * k - 1.0L) * (s + 2.0L * k);
        kpow /= K * K;
    }
    return acc;
}

ClassicalEulerReport verify_classical_euler(int m, long double tol) {
    if (m < 1 || m > 15)
        throw std::invalid_argument("even-zeta check supports 1 <= m <= 15");
    const long double pi = std::numbers::pi_v<long double>;

    ClassicalEulerReport rep;
    rep.m = m;
    rep.lhs = zeta_real(2.0L * m);

    const auto bern = bernoulli_numbers(2 * m);
    const long double sign = (m % 2 == 0) ? -1.0L : 1.0L; // (-1)^{m+1}
    rep.rhs = sign * std::pow(2.0L * pi, 2.0L * m) *
              bern[static_cast<std::size_t>(2 * m)].value() / (2.0L * factorial_ld(2 * m));
    rep.residual = rep.lhs - rep.rhs;
    rep.pass = std::abs(rep.residual) <= tol * std::max(1.0L, std::abs(rep.lhs));

    std::ostringstream os;
    os << "zeta(" << 2 * m << ") vs (-1)^(m+1) (2pi)^(2m) B_2m / (2 (2m)!) with signed B_"
       << 2 * m << " = " << bern[static_cast<std::size_t>(2 * m)].to_string();
    rep.notes = os.str();
    return rep;
}

ClassicalRamanujanReport verify_classical_ramanujan(int m, long double alpha, long double tol) {
    if (m < 1 || m > 14)
        throw std::invalid_argument("odd-zeta check supports 1 <= m <= 14");
    if (!(alpha >= 0.05L))
        throw std::invalid_argument("alpha must be at least 0.05");
    const long double pi = std::numbers::pi_v<long double>;
    const long double beta = pi * pi / alpha;

    ClassicalRamanujanReport rep;
    rep.m = m;
    rep.alpha = alpha;
    rep.beta = beta;

    const long double half_zeta = 0.5L * zeta_real(2.0L * m + 1.0L);
    bool cut_a = false, cut_b = false;
    rep.lhs = std::pow(alpha, static_cast<long double>(-m)) *
              (half_zeta + exp_weighted_sum(m, alpha, &cut_a));

    const long double msign = (m % 2 == 0) ? 1.0L : -1.0L; // (-1)^m
    long double rhs = msign * std::pow(beta, static_cast<long double>(-m)) *
                      (half_zeta + exp_weighted_sum(m, beta, &cut_b));

    const auto bern = bernoulli_numbers(2 * m + 2);
    long double bsum = 0.0L;
    for (int k = 0; k <= m + 1; ++k) {
        const long double ksign = (k % 2 == 0) ? 1.0L : -1.0L;
        bsum += ksign * (bern[static_cast<std::size_t>(2 * k)].value() / factorial_ld(2 * k)) *
                (bern[static_cast<std::size_t>(2 * m + 2 - 2 * k)].value() /
                 factorial_ld(2 * m + 2 - 2 * k)) *
                std::pow(alpha, static_cast<long double>(m + 1 - k)) *
                std::pow(beta, static_cast<long double>(k));
    }
    rhs -= std::pow(2.0L, 2.0L * m) * bsum;
    rep.rhs = rhs;

    rep.residual = rep.lhs - rep.rhs;
    const long double scale = std::max({1.0L, std::abs(rep.lhs), std::abs(rep.rhs)});
    rep.pass = std::abs(rep.residual) <= tol * scale && !cut_a && !cut_b;

    std::ostringstream os;
    os << "alpha*beta = pi^2; exponential sums converge geometrically";
    if (cut_a || cut_b) os << "; term cap reached before the tail vanished";
    rep.notes = os.str();
    return rep;
}

} // namespace carlitz
