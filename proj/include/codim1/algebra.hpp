#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "codim1/ideal_ops.hpp"

namespace codim1 {

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

// Laurent-polynomial shape of a presentation: disjoint variable pairs
// (v_i, w_i) with defining relations v_i·w_i = 1; every other variable is an
// ordinary polynomial variable.
struct LaurentStructure {
    std::vector<std::pair<std::size_t, std::size_t>> unit_pairs; // (v, w) indices
    std::vector<std::size_t> poly_vars;                          // the remaining indices
};

// A finitely presented algebra A = K[x…]/I with the user assertions the
// height criteria rely on.  Assertions are trusted, not proven: is_domain
// gates the height formula, is_factorial_ambient gates the big-height test
// (and is only accepted for I = 0 or a Laurent presentation, which is checked
// structurally).
class PresentedAlgebra : public std::enable_shared_from_this<PresentedAlgebra> {
public:
    struct Flags {
        bool is_domain = false;
        bool is_factorial_ambient = false;
    };

    static AlgebraPtr make(RingPtr ring, std::vector<Polynomial> defining, Flags flags);
    // B = K[V1..Vs, W1..Ws, T1..Tk]/(V_iW_i − 1), flagged domain + factorial.
    static AlgebraPtr make_laurent(std::size_t s, std::size_t k, CoeffField field);

    const RingPtr& ring() const { return ring_; }
    const IdealGens& defining() const { return defining_; }
    bool is_domain() const { return flags_.is_domain; }
    bool is_factorial_ambient() const { return flags_.is_factorial_ambient; }
    const std::optional<LaurentStructure>& laurent() const { return laurent_; }

    // Reduced grevlex basis of the defining ideal (computed once).
    const GroebnerBasis& gb(const GroebnerOptions& opts = {}) const;
    Polynomial normal_form(const Polynomial& f, const GroebnerOptions& opts = {}) const;
    bool is_zero_ring(const GroebnerOptions& opts = {}) const;
    // Krull dimension; −1 for the zero ring.
    std::int64_t dimension(const GroebnerOptions& opts = {}) const;

private:
    PresentedAlgebra(RingPtr ring, IdealGens defining, Flags flags,
                     std::optional<LaurentStructure> laurent)
        : ring_(std::move(ring)), defining_(std::move(defining)), flags_(flags),
          laurent_(std::move(laurent)) {}

    RingPtr ring_;
    IdealGens defining_;
    Flags flags_;
    std::optional<LaurentStructure> laurent_;
    // write-once caches; any interleaving writes identical values
    mutable std::optional<GroebnerBasis> gb_cache_;
    mutable std::optional<std::int64_t> dim_cache_;
};

// Detects the v·w = 1 pairing shape of `gens`; nullopt when some generator
// is not of that form or a variable is reused across pairs.
std::optional<LaurentStructure> detect_laurent(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens);

// An ideal a ⊆ A, stored by ambient representatives in normal form modulo
// the defining ideal (zero representatives are dropped).
class IdealInAlgebra {
public:
    static IdealInAlgebra make(AlgebraPtr algebra, std::vector<Polynomial> reps,
                               const GroebnerOptions& opts = {});

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Polynomial>& reps() const { return reps_; }
    // The generators exactly as declared (unreduced); certificates align
    // their sections with this list, one section per entry.
    const std::vector<Polynomial>& given() const { return given_; }
    bool is_zero() const { return reps_.empty(); }

    // Generators of I + a in the ambient ring.
    IdealGens combined() const;
    // a + I is the whole ambient ring (a is the unit ideal of A).
    bool is_unit(const GroebnerOptions& opts = {}) const;

private:
    IdealInAlgebra(AlgebraPtr algebra, std::vector<Polynomial> given,
                   std::vector<Polynomial> reps)
        : algebra_(std::move(algebra)), given_(std::move(given)), reps_(std::move(reps)) {}

    AlgebraPtr algebra_;
    std::vector<Polynomial> given_;
    std::vector<Polynomial> reps_;
};

// A homomorphism A → A′ given by an image polynomial (in the target's
// ambient ring) for every source variable.
class AlgebraMap {
public:
    AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    // Image of an ambient source polynomial in the target's ambient ring.
    Polynomial apply(const Polynomial& f) const;

    static AlgebraMap identity(const AlgebraPtr& a);
    // psi ∘ phi (apply phi first).
    static AlgebraMap compose(const AlgebraMap& psi, const AlgebraMap& phi);

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Polynomial> images_;
};

// Well-definedness: every defining relation of the source maps into the
// target's defining ideal.
bool check_map(const AlgebraMap& phi, const GroebnerOptions& opts = {});

// aA′: the images of a's representatives, normal-formed in the target.
IdealInAlgebra extend_ideal(const AlgebraMap& phi, const IdealInAlgebra& a,
                            const GroebnerOptions& opts = {});

std::int64_t algebra_dimension(const AlgebraPtr& A, const GroebnerOptions& opts = {});

// ht(a) = dim A − dim A/a, valid for the asserted-domain case.  The unit
// ideal of a nonzero algebra has height 1 by convention; the zero ring 0.
std::int64_t ideal_height(const IdealInAlgebra& a, const GroebnerOptions& opts = {});

// bight(a) ≤ 1 in a factorial coordinate ring: true iff a = (0), a = (1), or
// the gcd g of the generators lies in rad(a).  Laurent presentations are
// contracted to the polynomial subring K[V, T] first (the contraction is
// automatically saturated with respect to the unit monomials) and monomial
// unit factors are stripped from g.
bool bight_leq_one(const IdealInAlgebra& a, const GroebnerOptions& opts = {});

} // namespace codim1
