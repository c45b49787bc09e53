#include "codim1/scalar.hpp"

#include <sstream>

namespace codim1 {

namespace {

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// a^-1 mod p via the extended Euclidean algorithm; pre: 0 < a < p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw error("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

CoeffField CoeffField::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_small_prime(p))
        throw input_error("prime field modulus must be a prime below 2^31, got " +
                          std::to_string(p));
    return CoeffField{Kind::prime, p};
}

std::string CoeffField::str() const {
    if (kind == Kind::rationals) return "Q";
    return "Fp(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const CoeffField& f) {
    return f.is_rational() ? Scalar(f, mpq_class(0), 0) : Scalar(f, mpq_class(0), 0);
}

Scalar Scalar::one(const CoeffField& f) {
    return f.is_rational() ? Scalar(f, mpq_class(1), 0) : Scalar(f, mpq_class(0), 1 % f.p);
}

Scalar Scalar::from_int(const CoeffField& f, long n) {
    if (f.is_rational()) return Scalar(f, mpq_class(n), 0);
    std::int64_t r = n % static_cast<std::int64_t>(f.p);
    if (r < 0) r += f.p;
    return Scalar(f, mpq_class(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("zero denominator in rational literal");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(CoeffField::rationals(), std::move(q), 0);
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    return Scalar(CoeffField::rationals(), std::move(q), 0);
}

Scalar Scalar::prime_elem(std::uint32_t p, std::uint64_t value) {
    CoeffField f = CoeffField::prime(p);
    return Scalar(f, mpq_class(0), value % p);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : fp_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : fp_ == 1;
}

int Scalar::sign() const {
    if (field_.is_rational()) return sgn(rat_);
    return fp_ == 0 ? 0 : 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw field_mismatch_error("scalar fields differ: " + field_.str() + " vs " +
                                   o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ + o.rat_, 0);
    return Scalar(field_, mpq_class(0), (fp_ + o.fp_) % field_.p);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ - o.rat_, 0);
    return Scalar(field_, mpq_class(0), (fp_ + field_.p - o.fp_) % field_.p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, rat_ * o.rat_, 0);
    return Scalar(field_, mpq_class(0), (fp_ * o.fp_) % field_.p);
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, -rat_, 0);
    return Scalar(field_, mpq_class(0), fp_ == 0 ? 0 : field_.p - fp_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero scalar");
    if (field_.is_rational()) return Scalar(field_, 1 / rat_, 0);
    return Scalar(field_, mpq_class(0), mod_inverse(fp_, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.is_rational() ? rat_ == o.rat_ : fp_ == o.fp_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (a.field_.is_rational()) {
        int c = ::cmp(a.rat_, b.rat_);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    return a.fp_ < b.fp_ ? -1 : (a.fp_ > b.fp_ ? 1 : 0);
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw unsupported_field_error("rational value of a prime-field scalar");
    return rat_;
}

std::uint64_t Scalar::fp() const {
    if (field_.is_rational()) throw unsupported_field_error("prime value of a rational scalar");
    return fp_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) {
        std::ostringstream os;
        os << rat_;
        return os.str();
    }
    return std::to_string(fp_);
}

} // namespace codim1
