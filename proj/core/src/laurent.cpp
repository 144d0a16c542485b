#include "carlitz/laurent.hpp"

#include "carlitz/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace carlitz {

std::string Val::to_string() const {
    switch (kind) {
        case Kind::Exact: return std::to_string(v);
        case Kind::AtLeast: return ">=" + std::to_string(v);
        default: return "inf";
    }
}

Laurent Laurent::exact_zero(FieldPtr F) {
    Laurent r;
    r.F_ = std::move(F);
    r.exact_ = true;
    return r;
}

Laurent Laurent::zero_to(FieldPtr F, int floor) {
    Laurent r;
    r.F_ = std::move(F);
    r.floor_ = floor;
    return r;
}

Laurent Laurent::constant(FieldPtr F, long long n, int floor) {
    FieldElem c = F->from_int(n);
    return upow(std::move(F), 0, floor, c);
}

Laurent Laurent::upow(FieldPtr F, int k, int floor, FieldElem c) {
    if (c.is_zero()) return exact_zero(std::move(F));
    if (k < floor) return zero_to(std::move(F), floor);
    Laurent r;
    r.F_ = std::move(F);
    r.floor_ = floor;
    r.c_.assign(static_cast<std::size_t>(k - floor) + 1, r.F_->zero());
    r.c_.back() = c;
    return r;
}

Laurent Laurent::upow(FieldPtr F, int k, int floor) {
    FieldElem c = F->one();
    return upow(std::move(F), k, floor, c);
}

Laurent Laurent::from_terms(FieldPtr F, int floor,
                            const std::vector<std::pair<int, FieldElem>>& terms) {
    int hi = floor - 1;
    for (const auto& [e, c] : terms)
        if (!c.is_zero()) hi = std::max(hi, e);
    Laurent r;
    r.F_ = std::move(F);
    r.floor_ = floor;
    if (hi >= floor) {
        r.c_.assign(static_cast<std::size_t>(hi - floor) + 1, r.F_->zero());
        for (const auto& [e, c] : terms)
            if (e >= floor && e <= hi)
                r.c_[static_cast<std::size_t>(e - floor)] =
                    r.F_->add(r.c_[static_cast<std::size_t>(e - floor)], c);
        r.normalize();
    }
    return r;
}

void Laurent::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Laurent::require_compatible(const Laurent& a, const Laurent& b) {
    if (!a.F_ || !b.F_ || !a.F_->same_as(*b.F_))
        throw std::invalid_argument("laurent operands live over different fields");
}

int Laurent::top_exponent() const {
    if (c_.empty()) throw std::domain_error("series with no known nonzero digit has no top exponent");
    return floor_ + static_cast<int>(c_.size()) - 1;
}

FieldElem Laurent::top_coeff() const {
    if (c_.empty()) throw std::domain_error("series with no known nonzero digit has no top coefficient");
    return c_.back();
}

FieldElem Laurent::coeff_at(int exponent) const {
    if (exact_) return F_->zero();
    if (exponent < floor_)
        throw PrecisionError("coefficient of U^" + std::to_string(exponent) +
                             " lies below the precision floor " + std::to_string(floor_));
    const std::size_t k = static_cast<std::size_t>(exponent - floor_);
    if (k >= c_.size()) return F_->zero();
    return c_[k];
}

Val Laurent::valuation() const {
    if (exact_) return Val::infinite();
    if (c_.empty()) return Val::at_least(1 - floor_);
    return Val::exact(-top_exponent());
}

Laurent Laurent::operator+(const Laurent& o) const {
    require_compatible(*this, o);
    if (exact_) return o;
    if (o.exact_) return *this;
    const int f = std::max(floor_, o.floor_);
    const int top_a = c_.empty() ? floor_ - 1 : top_exponent();
    const int top_b = o.c_.empty() ? o.floor_ - 1 : o.top_exponent();
    const int hi = std::max(top_a, top_b);
    Laurent r;
    r.F_ = F_;
    r.floor_ = f;
    if (hi >= f) {
        r.c_.assign(static_cast<std::size_t>(hi - f) + 1, F_->zero());
        for (int e = f; e <= hi; ++e) {
            FieldElem s = F_->zero();
            if (e >= floor_) s = F_->add(s, coeff_at(e));
            if (e >= o.floor_) s = F_->add(s, o.coeff_at(e));
            r.c_[static_cast<std::size_t>(e - f)] = s;
        }
        r.normalize();
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = F_->neg(c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    require_compatible(*this, o);
    if (exact_ || o.exact_) return exact_zero(F_);
    const int top_a = c_.empty() ? floor_ - 1 : top_exponent();
    const int top_b = o.c_.empty() ? o.floor_ - 1 : o.top_exponent();
    const int f = std::max(floor_ + top_b, o.floor_ + top_a);
    if (c_.empty() || o.c_.empty()) return zero_to(F_, f);
    const int hi = top_a + top_b;
    Laurent r;
    r.F_ = F_;
    r.floor_ = f;
    if (hi >= f) {
        r.c_.assign(static_cast<std::size_t>(hi - f) + 1, F_->zero());
        const int na = static_cast<int>(c_.size());
        const int nb = static_cast<int>(o.c_.size());
        for (int i = 0; i < na; ++i) {
            if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
            const int ea = floor_ + i;
            // only products landing at or above the result floor matter
            int jmin = std::max(0, f - ea - o.floor_);
            for (int j = jmin; j < nb; ++j) {
                const FieldElem& cb = o.c_[static_cast<std::size_t>(j)];
                if (cb.is_zero()) continue;
                const int e = ea + o.floor_ + j;
                auto& slot = r.c_[static_cast<std::size_t>(e - f)];
                slot = F_->add(slot, F_->mul(c_[static_cast<std::size_t>(i)], cb));
            }
        }
        r.normalize();
    }
    return r;
}

Laurent Laurent::scaled(FieldElem c) const {
    if (exact_) return *this;
    if (c.is_zero()) return exact_zero(F_);
    Laurent r = *this;
    for (auto& a : r.c_) a = F_->mul(a, c);
    return r;
}

Laurent Laurent::shifted(int k) const {
    if (exact_) return *this;
    Laurent r = *this;
    r.floor_ += k;
    return r;
}

Laurent Laurent::inv(int guard_digits) const {
    if (exact_) throw std::domain_error("inverse of the exact zero series");
    if (c_.empty())
        throw PrecisionError("inverting a series that is zero to precision (valuation >= " +
                             std::to_string(1 - floor_) + ")");
    const int h = top_exponent();
    const int W = h - floor_; // digits known below the leading one
    if (W < guard_digits)
        throw PrecisionError("inverting near-zero data: valuation " + std::to_string(-h) +
                             " with only " + std::to_string(W + 1) + " known digits (guard " +
                             std::to_string(guard_digits) + ")");

    // normalize to r = 1 + x with val(x) >= 1, window [-W, 0]
    const FieldElem c_inv = F_->inv(top_coeff());
    const Laurent r = scaled(c_inv).shifted(-h);
    const Laurent one_rel = one(F_, -W);
    const Laurent two_rel = constant(F_, 2, -W);

    Laurent y = one_rel;
    int digits = 1;
    while (digits <= W) {
        y = (y * (two_rel - r * y)).truncated(-W);
        digits *= 2;
    }
    // e = 1 - r*y squares every pass, so by now it is below the window
    if ((one_rel - r * y).known_nonzero())
        throw ConvergenceError("reciprocal iteration failed to contract");
    return y.scaled(c_inv).shifted(-h);
}

Laurent Laurent::pow(long long n, int guard_digits) const {
    Laurent base = *this;
    if (n < 0) {
        base = base.inv(guard_digits);
        n = -n;
    }
    if (n == 0) {
        if (exact_) return one(F_, 0);
        const int top = c_.empty() ? floor_ - 1 : top_exponent();
        return one(F_, floor_ - top); // relative window of the operand
    }
    Laurent r;
    bool have = false;
    while (n) {
        if (n & 1) {
            r = have ? r * base : base;
            have = true;
        }
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Laurent Laurent::truncated(int new_floor) const {
    if (exact_) return *this;
    if (new_floor <= floor_) return *this;
    Laurent r;
    r.F_ = F_;
    r.floor_ = new_floor;
    const int drop = new_floor - floor_;
    if (static_cast<std::size_t>(drop) < c_.size())
        r.c_.assign(c_.begin() + drop, c_.end());
    r.normalize();
    return r;
}

bool Laurent::even_exponents_only() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero() && (floor_ + static_cast<int>(k)) % 2 != 0) return false;
    return true;
}

bool Laurent::operator==(const Laurent& o) const {
    if (!F_ || !o.F_) return F_ == o.F_ && exact_ == o.exact_ && floor_ == o.floor_ && c_ == o.c_;
    return F_->same_as(*o.F_) && exact_ == o.exact_ && floor_ == o.floor_ && c_ == o.c_;
}

std::string Laurent::render() const {
    if (exact_) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const FieldElem c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << F_->to_string(c) << "*U^" << (floor_ + k);
    }
    if (!first) os << " + ";
    os << "O(U^" << (floor_ - 1) << ")";
    return os.str();
}

std::vector<std::pair<int, FieldElem>> Laurent::terms() const {
    std::vector<std::pair<int, FieldElem>> out;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const FieldElem c = c_[static_cast<std::size_t>(k)];
        if (!c.is_zero()) out.emplace_back(floor_ + k, c);
    }
    return out;
}

Val agreement_valuation(const Laurent& a, const Laurent& b) { return (a - b).valuation(); }

Laurent embed_poly(const Poly& a, int floor) {
    if (a.is_zero()) return Laurent::exact_zero(a.field());
    std::vector<std::pair<int, FieldElem>> terms;
    terms.reserve(static_cast<std::size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i)
        if (!a.coeff(i).is_zero()) terms.emplace_back(2 * i, a.coeff(i));
    return Laurent::from_terms(a.field(), floor, terms);
}

Laurent embed_ratfunc(const RatFunc& a, int floor) {
    if (a.is_zero()) return Laurent::exact_zero(a.field());
    const int num_u = 2 * std::max(a.num().degree(), 0);
    const int den_u = 2 * std::max(a.den().degree(), 0);
    const int deep = floor - den_u - num_u - 2;
    Laurent n = embed_poly(a.num(), deep);
    Laurent d = embed_poly(a.den(), deep);
    return (n * d.inv()).truncated(floor);
}

} // namespace carlitz
