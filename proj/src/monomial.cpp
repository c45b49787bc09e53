#include "codim1/monomial.hpp"

#include <numeric>

namespace codim1 {

std::uint32_t Monomial::deg() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint32_t{0});
}

bool Monomial::is_one() const {
    for (auto x : e_)
        if (x != 0) return false;
    return true;
}

void Monomial::require_same_arity(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw arity_mismatch_error("monomial arities differ: " + std::to_string(e_.size()) +
                                   " vs " + std::to_string(o.e_.size()));
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_same_arity(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    require_same_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
    require_same_arity(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i]) throw error("monomial division is not exact");
        r[i] = e_[i] - o.e_[i];
    }
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
    require_same_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.require_same_arity(b);
    std::vector<std::uint32_t> r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    a.require_same_arity(b);
    std::vector<std::uint32_t> r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

Monomial Monomial::var(std::size_t arity, std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> r(arity, 0);
    r.at(index) = power;
    return Monomial(std::move(r));
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case Kind::lex: return "lex";
        case Kind::grevlex: return "grevlex";
        case Kind::block: return "block(" + std::to_string(split) + ")";
    }
    return "?";
}

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                               std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da <=> db;
    // equal degree: the monomial whose last differing exponent is smaller wins
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering order_compare(const MonomialOrder& o, const Monomial& m1,
                                   const Monomial& m2) {
    if (m1.arity() != m2.arity())
        throw arity_mismatch_error("order_compare on monomials of different arity");
    const std::size_t n = m1.arity();
    switch (o.kind) {
        case MonomialOrder::Kind::lex:
            return lex_range(m1, m2, 0, n);
        case MonomialOrder::Kind::grevlex:
            return grevlex_range(m1, m2, 0, n);
        case MonomialOrder::Kind::block: {
            const std::size_t s = std::min(o.split, n);
            auto first = lex_range(m1, m2, 0, s);
            if (first != std::strong_ordering::equal) return first;
            return grevlex_range(m1, m2, s, n);
        }
    }
    throw error("unreachable monomial order kind");
}

} // namespace codim1
