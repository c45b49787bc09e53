#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "codim1/errors.hpp"

namespace codim1 {

/// Coefficient field descriptor: the rationals, or F_p for a prime p < 2^31.
struct CoeffField {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static CoeffField rationals() { return CoeffField{Kind::rationals, 0}; }
    static CoeffField prime(std::uint32_t p);

    bool is_rational() const { return kind == Kind::rationals; }
    bool operator==(const CoeffField&) const = default;
    std::string str() const;
};

/// Exact field element.  Rational values are kept in lowest terms with a
/// positive denominator; prime-field values live in [0, p).  Arithmetic is
/// exact in both modes, there is no rounding anywhere.
class Scalar {
  public:
    Scalar() : field_(CoeffField::rationals()), rat_(0) {}

    static Scalar zero(const CoeffField& f);
    static Scalar one(const CoeffField& f);
    static Scalar from_int(const CoeffField& f, long n);
    /// Rational from a fraction; canonicalizes. Throws on zero denominator.
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    static Scalar rational(mpq_class q);
    static Scalar prime_elem(std::uint32_t p, std::uint64_t value);

    const CoeffField& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    /// -1, 0, +1 for rationals; 0 or +1 for prime-field elements.
    int sign() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Deterministic total order on a common field (-1, 0, +1).
    static int cmp(const Scalar& a, const Scalar& b);

    /// Rational value; only valid in rational mode.
    const mpq_class& rat() const;
    /// Prime-field value in [0, p); only valid in prime mode.
    std::uint64_t fp() const;

    std::string str() const;

  private:
    Scalar(CoeffField f, mpq_class q, std::uint64_t v)
        : field_(f), rat_(std::move(q)), fp_(v) {}

    void require_same_field(const Scalar& o) const;

    CoeffField field_;
    mpq_class rat_;        // rational mode only
    std::uint64_t fp_ = 0; // prime mode only
};

} // namespace codim1
