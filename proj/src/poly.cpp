#include "codim1/poly.hpp"

#include <algorithm>
#include <sstream>

#include "codim1/errors.hpp"

namespace codim1 {

namespace {

void require_ring_ptr(const RingPtr& r) {
    if (!r) throw error("polynomial has no ring");
}

} // namespace

void Polynomial::validate() const {
#ifdef CODIM1_VALIDATE_CANONICAL
    require_ring_ptr(ring_);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (t.mono.arity() != ring_->arity())
            throw error("canonical form violation: term arity mismatch");
        if (!(t.coeff.field() == ring_->field()))
            throw field_mismatch_error("canonical form violation: coefficient field mismatch");
        if (t.coeff.is_zero())
            throw error("canonical form violation: zero coefficient stored");
        if (i > 0 &&
            order_compare(ring_->order(), terms_[i - 1].mono, t.mono) !=
                std::strong_ordering::greater)
            throw error("canonical form violation: terms not strictly descending");
    }
#endif
}

void Polynomial::require_ring(const Polynomial& o) const {
    require_ring_ptr(ring_);
    require_ring_ptr(o.ring_);
    if (ring_ != o.ring_) ring_->require_same_structure(*o.ring_);
}

Polynomial Polynomial::zero(RingPtr ring) {
    require_ring_ptr(ring);
    return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    require_ring_ptr(ring);
    if (c.is_zero()) return zero(std::move(ring));
    Monomial one_mono(std::vector<std::uint32_t>(ring->arity(), 0));
    std::vector<Term> ts{Term{std::move(one_mono), std::move(c)}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::one(RingPtr ring) {
    require_ring_ptr(ring);
    Scalar c = Scalar::one(ring->field());
    return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, std::uint32_t power) {
    require_ring_ptr(ring);
    if (index >= ring->arity()) throw input_error("variable index out of range");
    Monomial m = Monomial::var(ring->arity(), index, power);
    Scalar c = Scalar::one(ring->field());
    return monomial(std::move(ring), std::move(m), std::move(c));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    require_ring_ptr(ring);
    if (c.is_zero()) return zero(std::move(ring));
    std::vector<Term> ts{Term{std::move(m), std::move(c)}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    require_ring_ptr(ring);
    const MonomialOrder& ord = ring->order();
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order_compare(ord, a.mono, b.mono) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() &&
            order_compare(ord, out.back().mono, t.mono) == std::strong_ordering::equal) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw error("leading term of the zero polynomial");
    return terms_.front();
}

std::int64_t Polynomial::deg() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mono.deg());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_ring(o);
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = order_compare(ord, terms_[i].mono, o.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_ring(o);
    Monomial unit(std::vector<std::uint32_t>(ring_->arity(), 0));
    return add_scaled(o, -Scalar::one(ring_->field()), unit);
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_ring(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    // accumulate into a merged result one row at a time; rows are presorted
    Polynomial acc = zero(ring_);
    for (const auto& t : o.terms_) acc = acc.add_scaled(*this, t.coeff, t.mono);
    return acc;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff *= c;
    return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_ring(o);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

Polynomial Polynomial::add_scaled(const Polynomial& g, const Scalar& c,
                                  const Monomial& m) const {
    require_ring(g);
    if (c.is_zero() || g.is_zero()) return *this;
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono * m;
        auto cpr = order_compare(ord, terms_[i].mono, gm);
        if (cpr == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (cpr == std::strong_ordering::less) {
            out.push_back(Term{std::move(gm), g.terms_[j].coeff * c});
            ++j;
        } else {
            Scalar s = terms_[i].coeff + g.terms_[j].coeff * c;
            if (!s.is_zero()) out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        out.push_back(Term{g.terms_[j].mono * m, g.terms_[j].coeff * c});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint32_t n) const {
    require_ring_ptr(ring_);
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (leading_coeff().is_one()) return *this;
    return *this * leading_coeff().inverse();
}

bool Polynomial::try_divide(const Polynomial& divisor, Polynomial& quotient) const {
    require_ring(divisor);
    if (divisor.is_zero()) return false;
    Polynomial rem = *this;
    std::vector<Term> q;
    const Monomial& dlm = divisor.leading_monomial();
    while (!rem.is_zero()) {
        const Monomial& rlm = rem.leading_monomial();
        if (!dlm.divides(rlm)) return false;
        Scalar c = rem.leading_coeff() / divisor.leading_coeff();
        Monomial m = rlm / dlm;
        rem = rem.add_scaled(divisor, -c, m);
        q.push_back(Term{std::move(m), std::move(c)});
    }
    quotient = from_terms(ring_, std::move(q));
    return true;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& vals) const {
    require_ring_ptr(ring_);
    if (vals.size() != ring_->arity())
        throw arity_mismatch_error("evaluate: wrong number of values");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& t : terms_) {
        Scalar prod = t.coeff;
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            for (std::uint32_t k = 0; k < t.mono[i]; ++k) prod *= vals[i];
        }
        acc += prod;
    }
    return acc;
}

Polynomial Polynomial::substitute(RingPtr target, const std::vector<Polynomial>& images) const {
    require_ring_ptr(ring_);
    require_ring_ptr(target);
    if (!(target->field() == ring_->field()))
        throw field_mismatch_error("substitute: coefficient fields differ");
    if (images.size() != ring_->arity())
        throw arity_mismatch_error("substitute: one image per source variable required");
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            if (t.mono[i] == 0) continue;
            prod = prod * images[i].pow(t.mono[i]);
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::in_ring(RingPtr target) const {
    require_ring_ptr(ring_);
    require_ring_ptr(target);
    if (!(target->field() == ring_->field()))
        throw field_mismatch_error("in_ring: coefficient fields differ");
    // old index -> new index, resolved by name; -1 when the variable is gone
    std::vector<std::ptrdiff_t> where(ring_->arity(), -1);
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (auto j = target->var_index(ring_->vars()[i])) where[i] = static_cast<std::ptrdiff_t>(*j);
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(target->arity(), 0);
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            if (t.mono[i] == 0) continue;
            if (where[i] < 0)
                throw ring_mismatch_error("in_ring: variable " + ring_->vars()[i] +
                                          " does not exist in " + target->str());
            e[static_cast<std::size_t>(where[i])] = t.mono[i];
        }
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
}

bool Polynomial::supported_on(const std::vector<bool>& allowed) const {
    require_ring_ptr(ring_);
    if (allowed.size() != ring_->arity())
        throw arity_mismatch_error("supported_on: mask size mismatch");
    for (const auto& t : terms_) {
        for (std::size_t i = 0; i < ring_->arity(); ++i)
            if (t.mono[i] != 0 && !allowed[i]) return false;
    }
    return true;
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    a.require_ring(b);
    const MonomialOrder& ord = a.ring_->order();
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = order_compare(ord, a.terms_[i].mono, b.terms_[i].mono);
        if (c == std::strong_ordering::greater) return 1;
        if (c == std::strong_ordering::less) return -1;
        int sc = Scalar::cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (sc != 0) return sc;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Polynomial::str() const {
    require_ring_ptr(ring_);
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool negative = false;
        if (ring_->field().is_rational() && c.sign() < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono_text;
        {
            std::ostringstream ms;
            bool mfirst = true;
            for (std::size_t i = 0; i < ring_->arity(); ++i) {
                if (t.mono[i] == 0) continue;
                if (!mfirst) ms << "*";
                mfirst = false;
                ms << ring_->vars()[i];
                if (t.mono[i] > 1) ms << "^" << t.mono[i];
            }
            mono_text = ms.str();
        }
        if (mono_text.empty()) {
            os << c.str();
        } else if (c.is_one()) {
            os << mono_text;
        } else {
            os << c.str() << "*" << mono_text;
        }
    }
    return os.str();
}

} // namespace codim1
