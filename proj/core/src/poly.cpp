#include "carlitz/poly.hpp"

#include "carlitz/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace carlitz {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!a.field() || !b.field() || !a.field()->same_as(*b.field()))
        throw std::invalid_argument("polynomials live over different fields");
}

} // namespace

Poly Poly::one(FieldPtr F) {
    Poly r(F);
    r.c_ = {F->one()};
    return r;
}

Poly Poly::t(FieldPtr F) {
    Poly r(F);
    r.c_ = {F->zero(), F->one()};
    return r;
}

Poly Poly::monomial(FieldPtr F, int deg, FieldElem c) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be >= 0");
    Poly r(F);
    if (!c.is_zero()) {
        r.c_.assign(static_cast<std::size_t>(deg) + 1, F->zero());
        r.c_.back() = c;
    }
    return r;
}

Poly Poly::from_ints(FieldPtr F, const std::vector<long long>& coeffs) {
    Poly r(F);
    r.c_.reserve(coeffs.size());
    for (auto n : coeffs) r.c_.push_back(F->from_int(n));
    r.normalize();
    return r;
}

Poly Poly::from_coeffs(FieldPtr F, std::vector<FieldElem> coeffs) {
    Poly r(std::move(F));
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == F_->one(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == F_->one(); }

FieldElem Poly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return F_ ? F_->zero() : FieldElem{0};
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*this, o);
    Poly r(F_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), F_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = F_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(F_);
    r.c_.reserve(c_.size());
    for (auto c : c_) r.c_.push_back(F_->neg(c));
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*this, o);
    Poly r(F_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, F_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(FieldElem c) const {
    Poly r(F_);
    if (c.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (auto a : c_) r.c_.push_back(F_->mul(a, c));
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& den) const {
    require_same_field(*this, den);
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(F_), r = *this;
    const int dd = den.degree();
    if (degree() < dd) return {q, r};
    q.c_.assign(static_cast<std::size_t>(degree() - dd) + 1, F_->zero());
    const FieldElem lead_inv = F_->inv(den.leading());
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        const FieldElem f = F_->mul(r.leading(), lead_inv);
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (int i = 0; i <= dd; ++i) {
            auto& rc = r.c_[static_cast<std::size_t>(shift + i)];
            rc = F_->sub(rc, F_->mul(f, den.c_[static_cast<std::size_t>(i)]));
        }
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::pow(long long n) const {
    if (n < 0) throw std::invalid_argument("polynomial pow needs n >= 0");
    Poly r = Poly::one(F_), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::make_monic() const {
    if (is_zero()) return *this;
    return scaled(F_->inv(leading()));
}

FieldElem Poly::eval(FieldElem x) const {
    FieldElem acc = F_ ? F_->zero() : FieldElem{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = F_->add(F_->mul(acc, x), *it);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElem c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        const bool unit = (c == F_->one());
        if (i == 0) {
            os << F_->to_string(c);
        } else {
            if (!unit) os << F_->to_string(c) << "*";
            os << "T";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    if (!a.field() && !b.field()) return a;
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

std::uint64_t monic_count(const FieldPtr& F, int degree) {
    if (degree < 0) throw std::invalid_argument("monic degree must be >= 0");
    std::uint64_t n = 1;
    for (int i = 0; i < degree; ++i) {
        n *= F->q();
        if (n > (1ull << 34))
            throw CapacityError("monic enumeration of degree " + std::to_string(degree) +
                                " over F_" + std::to_string(F->q()) + " is too large");
    }
    return n;
}

Poly monic_at(const FieldPtr& F, int degree, std::uint64_t k) {
    const std::uint64_t total = monic_count(F, degree);
    if (k >= total) throw std::invalid_argument("monic index out of range");
    std::vector<FieldElem> c(static_cast<std::size_t>(degree) + 1, F->zero());
    c.back() = F->one();
    // lexicographic order of (c_0, ..., c_{d-1}): c_0 is the most significant digit
    for (int j = degree - 1; j >= 0; --j) {
        c[static_cast<std::size_t>(j)] = F->from_index(static_cast<std::uint32_t>(k % F->q()));
        k /= F->q();
    }
    return Poly::from_coeffs(F, std::move(c));
}

std::vector<Poly> monic_polys(const FieldPtr& F, int degree) {
    const std::uint64_t n = monic_count(F, degree);
    if (n > (1ull << 22)) throw CapacityError("monic listing too large; enumerate by index");
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(monic_at(F, degree, k));
    return out;
}

} // namespace carlitz
