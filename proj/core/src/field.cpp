#include "carlitz/field.hpp"

#include "carlitz/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace carlitz {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// --- tiny F_p[x] helpers used only for modulus validation -------------------
// Coefficient vectors are constant-first with no trailing zeros.

using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t pinv_int(std::uint32_t a, std::uint32_t p) {
    // Fermat inverse; p is a small prime and a != 0.
    std::uint64_t r = 1, b = a % p;
    std::uint32_t n = p - 2;
    while (n) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    ptrim(r);
    return r;
}

PVec pmod(PVec a, const PVec& f, std::uint32_t p) {
    ptrim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = pinv_int(f.back(), p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::uint64_t sub = c * f[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, std::uint32_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PVec ppowmod(PVec base, std::uint64_t n, const PVec& f, std::uint32_t p) {
    PVec r = {1};
    while (n) {
        if (n & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        n >>= 1;
    }
    return r;
}

PVec psub(PVec a, const PVec& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    ptrim(a);
    return a;
}

PVec pgcd(PVec a, PVec b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PVec r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint32_t li = pinv_int(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % p);
    }
    return a;
}

bool is_irreducible(const PVec& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    const PVec x = {0, 1};
    // frob_i = x^(p^i) mod f, advanced one Frobenius step at a time
    PVec frob = x;
    for (std::size_t i = 1; i <= e; ++i) {
        frob = ppowmod(frob, p, f, p);
        if (i <= e / 2) {
            PVec g = pgcd(psub(frob, x, p), f, p);
            if (!(g.size() == 1 && g[0] == 1)) return false;
        }
    }
    return frob == x;
}

} // namespace

FieldPtr FieldCtx::make_prime(std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("q must be odd");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = 1;
    ctx->q_ = p;
    ctx->build_tables();
    return ctx;
}

FieldPtr FieldCtx::make_extension(std::uint32_t p, std::uint32_t e,
                                  const std::vector<std::uint32_t>& modulus) {
    if (p == 2) throw std::invalid_argument("q must be odd");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (e == 0) throw std::invalid_argument("extension degree must be positive");
    if (e == 1) {
        if (!modulus.empty()) throw std::invalid_argument("prime field takes no modulus");
        return make_prime(p);
    }
    if (modulus.size() != e + 1)
        throw std::invalid_argument("modulus must have degree e (e+1 coefficients, constant first)");
    for (auto c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("modulus is not irreducible over F_p");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1u << 20))
            throw CapacityError("field size p^e exceeds the supported cap 2^20");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = static_cast<std::uint32_t>(q);
    ctx->modulus_ = modulus;
    ctx->build_tables();
    return ctx;
}

FieldElem FieldCtx::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElem FieldCtx::from_index(std::uint32_t idx) const {
    if (idx >= q_) throw std::invalid_argument("field element index out of range");
    return {idx};
}

FieldElem FieldCtx::add_direct(FieldElem a, FieldElem b) const {
    if (e_ == 1) return {(a.v + b.v) % p_};
    std::uint32_t out = 0, mult = 1, av = a.v, bv = b.v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += mult * ((av % p_ + bv % p_) % p_);
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElem FieldCtx::mul_direct(FieldElem a, FieldElem b) const {
    if (e_ == 1)
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    PVec pa, pb;
    for (std::uint32_t av = a.v; av; av /= p_) pa.push_back(av % p_);
    for (std::uint32_t bv = b.v; bv; bv /= p_) pb.push_back(bv % p_);
    PVec r = pmod(pmul(pa, pb, p_), modulus_, p_);
    std::uint32_t out = 0, mult = 1;
    for (auto c : r) {
        out += mult * c;
        mult *= p_;
    }
    return {out};
}

void FieldCtx::build_tables() {
    if (q_ > kTableLimit) return;
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b <= a; ++b) {
            std::uint32_t m = mul_direct({a}, {b}).v;
            mul_table_[static_cast<std::size_t>(a) * q_ + b] = m;
            mul_table_[static_cast<std::size_t>(b) * q_ + a] = m;
            if (m == 1) {
                inv_table_[a] = b;
                inv_table_[b] = a;
            }
        }
    tabled_ = true;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const { return add_direct(a, b); }

FieldElem FieldCtx::neg(FieldElem a) const {
    if (e_ == 1) return {a.v == 0 ? 0u : p_ - a.v};
    std::uint32_t out = 0, mult = 1, av = a.v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = av % p_;
        out += mult * (d == 0 ? 0u : p_ - d);
        av /= p_;
        mult *= p_;
    }
    return {out};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (tabled_) return {mul_table_[static_cast<std::size_t>(a.v) * q_ + b.v]};
    return mul_direct(a, b);
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("division by zero in F_q");
    if (tabled_) return {inv_table_[a.v]};
    return pow(a, static_cast<long long>(q_) - 2);
}

FieldElem FieldCtx::pow(FieldElem a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    if (a.is_zero()) return n == 0 ? one() : zero();
    // exponents reduce mod q-1 on the unit group
    std::uint64_t nn = static_cast<std::uint64_t>(n) % (q_ - 1);
    FieldElem r = one(), base = a;
    while (nn) {
        if (nn & 1) r = mul(r, base);
        base = mul(base, base);
        nn >>= 1;
    }
    return r;
}

std::vector<FieldElem> FieldCtx::elements() const {
    std::vector<FieldElem> out;
    out.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out.push_back({i});
    return out;
}

std::string FieldCtx::to_string(FieldElem a) const { return std::to_string(a.v); }

bool FieldCtx::same_as(const FieldCtx& other) const {
    return this == &other ||
           (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

} // namespace carlitz
