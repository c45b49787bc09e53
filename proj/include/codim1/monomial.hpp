#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "codim1/errors.hpp"

namespace codim1 {

/// Exponent vector of fixed arity.  The arity always equals the variable
/// count of the ambient ring.
class Monomial {
  public:
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    /// Total degree.
    std::uint32_t deg() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// this / o; pre: o divides this.
    Monomial operator/(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial var(std::size_t arity, std::size_t index, std::uint32_t power = 1);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  private:
    void require_same_arity(const Monomial& o) const;
    std::vector<std::uint32_t> e_;
};

/// Total multiplicative well-order on monomials: lexicographic, graded
/// reverse lexicographic, or a two-block elimination split where the first
/// block is compared lexicographically and dominates, ties falling through
/// to graded reverse lex on the second block.
struct MonomialOrder {
    enum class Kind { lex, grevlex, block };

    Kind kind = Kind::grevlex;
    std::size_t split = 0; // block orders: variables [0, split) form the first block

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder block(std::size_t split) { return {Kind::block, split}; }

    bool operator==(const MonomialOrder&) const = default;
    std::string str() const;
};

/// Three-way comparison of m1 against m2 in the given order.
std::strong_ordering order_compare(const MonomialOrder& o, const Monomial& m1,
                                   const Monomial& m2);

} // namespace codim1
