#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carlitz {

/**
 * Exact rational with 64-bit numerator and denominator (denominator > 0,
 * gcd 1).  Arithmetic runs through 128-bit intermediates and throws
 * CapacityError if a reduced result leaves the 64-bit range.
 */
struct Rational64 {
    long long num = 0;
    long long den = 1;

    static Rational64 make(long long n, long long d);
    static Rational64 integer(long long n) { return {n, 1}; }

    Rational64 operator+(const Rational64& o) const;
    Rational64 operator-(const Rational64& o) const;
    Rational64 operator*(const Rational64& o) const;
    Rational64 operator/(const Rational64& o) const;
    Rational64 operator-() const { return {-num, den}; }
    bool operator==(const Rational64& o) const { return num == o.num && den == o.den; }

    long double value() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }
    std::string to_string() const;
};

/**
 * Bernoulli numbers B_0..B_nmax (B_1 = -1/2) from the defining recurrence
 * sum_k C(n+1, k) B_k = 0.  Exact; nmax is capped at 30, past which the
 * numerators leave the 64-bit range.
 */
std::vector<Rational64> bernoulli_numbers(int nmax);

/**
 * Riemann zeta on the real axis, s > 1, by Euler-Maclaurin at cut K = 50
 * with correction terms through B_8.  Accurate to long double rounding for
 * s >= 2.
 */
long double zeta_real(long double s, int cut = 50);

struct ClassicalEulerReport {
    int m = 0;
    long double lhs = 0, rhs = 0, residual = 0;
    bool pass = false;
    std::string notes;
};

/**
 * Even-zeta evaluation against the closed form
 *
 *   zeta(2m) = (-1)^{m+1} (2 pi)^{2m} B_{2m} / (2 (2m)!),
 *
 * with the signed B_{2m}; 1 <= m <= 15.  Pass when the relative residual
 * is below tol.
 */
ClassicalEulerReport verify_classical_euler(int m, long double tol = 1e-12L);

struct ClassicalRamanujanReport {
    int m = 0;
    long double alpha = 0, beta = 0;
    long double lhs = 0, rhs = 0, residual = 0;
    bool pass = false;
    std::string notes;
};

/**
 * Odd-zeta two-variable identity: for alpha*beta = pi^2, alpha > 0,
 *
 *   alpha^{-m} { zeta(2m+1)/2 + sum_{n>=1} n^{-2m-1}/(e^{2 alpha n} - 1) }
 *   = (-beta)^{-m} { zeta(2m+1)/2 + sum_{n>=1} n^{-2m-1}/(e^{2 beta n} - 1) }
 *     - 2^{2m} sum_{k=0}^{m+1} (-1)^k [B_{2k}/(2k)!] [B_{2m+2-2k}/(2m+2-2k)!]
 *               alpha^{m+1-k} beta^k.
 *
 * The exponential sums converge geometrically; terms are added until they
 * fall below 1e-18 relative.  Requires 0.05 <= alpha and 1 <= m <= 14.
 */
ClassicalRamanujanReport verify_classical_ramanujan(int m, long double alpha,
                                                    long double tol = 1e-12L);

} // namespace carlitz
