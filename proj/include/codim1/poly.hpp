#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "codim1/monomial.hpp"
#include "codim1/ring.hpp"
#include "codim1/scalar.hpp"

namespace codim1 {

struct Term {
    Monomial mono;
    Scalar coeff;
};

// A polynomial in a fixed ring, kept in canonical form: terms strictly
// descending in the ring's monomial order, no zero coefficients.  All
// arithmetic preserves canonical form and checks ring compatibility.
class Polynomial {
public:
    Polynomial() = default; // zero in no ring; only assignable

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial one(RingPtr ring);
    static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
    // Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coeff() const { return leading_term().coeff; }
    // Total degree; degree of the zero polynomial reported as -1.
    std::int64_t deg() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // this + c * m * g, the inner step of polynomial reduction.
    Polynomial add_scaled(const Polynomial& g, const Scalar& c, const Monomial& m) const;
    Polynomial mul_term(const Scalar& c, const Monomial& m) const;
    Polynomial pow(std::uint32_t n) const;
    Polynomial monic() const;

    // Exact division attempt; returns false (and leaves q untouched) when the
    // divisor does not divide this polynomial.
    bool try_divide(const Polynomial& divisor, Polynomial& quotient) const;

    // Value under x_i -> vals[i]; exact evaluation in the coefficient field.
    Scalar evaluate(const std::vector<Scalar>& vals) const;
    // Image under x_i -> images[i] in another ring (same coefficient field).
    Polynomial substitute(RingPtr target, const std::vector<Polynomial>& images) const;

    // Re-expresses the polynomial in another ring by matching variable names;
    // every variable appearing in the support must exist in the target.
    Polynomial in_ring(RingPtr target) const;
    // True when only variables with indices in `allowed` occur.
    bool supported_on(const std::vector<bool>& allowed) const;

    // Deterministic total order used for sorting polynomial sets.
    static int cmp(const Polynomial& a, const Polynomial& b);

    std::string str() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        validate();
    }
    void validate() const;
    void require_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_; // strictly descending in ring order
};

} // namespace codim1
