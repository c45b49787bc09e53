#include "codim1/algebra.hpp"

#include <algorithm>
#include <set>

#include "codim1/errors.hpp"
#include "codim1/gcd.hpp"

namespace codim1 {

std::optional<LaurentStructure> detect_laurent(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens) {
    if (gens.empty()) return std::nullopt;
    LaurentStructure st;
    std::set<std::size_t> paired;
    for (const auto& g : gens) {
        if (g.term_count() != 2) return std::nullopt;
        // expect c·v·w − c for a scalar c and distinct variables v, w
        const Term& hi = g.terms()[0];
        const Term& lo = g.terms()[1];
        if (!lo.mono.is_one()) return std::nullopt;
        if (!(hi.coeff + lo.coeff).is_zero()) return std::nullopt;
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < ring->arity(); ++i) {
            if (hi.mono[i] == 1) support.push_back(i);
            else if (hi.mono[i] != 0) return std::nullopt;
        }
        if (support.size() != 2) return std::nullopt;
        if (paired.count(support[0]) || paired.count(support[1])) return std::nullopt;
        paired.insert(support[0]);
        paired.insert(support[1]);
        st.unit_pairs.emplace_back(support[0], support[1]);
    }
    for (std::size_t i = 0; i < ring->arity(); ++i)
        if (!paired.count(i)) st.poly_vars.push_back(i);
    return st;
}

AlgebraPtr PresentedAlgebra::make(RingPtr ring, std::vector<Polynomial> defining,
                                  Flags flags) {
    IdealGens I = IdealGens::make(ring, std::move(defining));
    std::optional<LaurentStructure> st = detect_laurent(ring, I.gens);
    if (flags.is_factorial_ambient && !I.gens.empty() && !st)
        throw input_error(
            "factorial assertion accepted only for a polynomial ring (no relations) "
            "or a Laurent presentation (v·w = 1 pairs)");
    return AlgebraPtr(
        new PresentedAlgebra(std::move(ring), std::move(I), flags, std::move(st)));
}

AlgebraPtr PresentedAlgebra::make_laurent(std::size_t s, std::size_t k, CoeffField field) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= s; ++i) vars.push_back("V" + std::to_string(i));
    for (std::size_t i = 1; i <= s; ++i) vars.push_back("W" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i) vars.push_back("T" + std::to_string(i));
    RingPtr ring = PolyRing::make(std::move(vars), field);
    std::vector<Polynomial> rels;
    for (std::size_t i = 0; i < s; ++i) {
        rels.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, s + i) -
                       Polynomial::one(ring));
    }
    Flags flags;
    flags.is_domain = true;
    flags.is_factorial_ambient = true;
    return make(std::move(ring), std::move(rels), flags);
}

const GroebnerBasis& PresentedAlgebra::gb(const GroebnerOptions& opts) const {
    if (!gb_cache_) {
        RingPtr work = ring_->order() == MonomialOrder::grevlex()
                           ? ring_
                           : ring_->with_order(MonomialOrder::grevlex());
        gb_cache_ = groebner_basis(work, defining_.gens, opts);
    }
    return *gb_cache_;
}

Polynomial PresentedAlgebra::normal_form(const Polynomial& f,
                                         const GroebnerOptions& opts) const {
    return codim1::normal_form(f, gb(opts)).in_ring(ring_);
}

bool PresentedAlgebra::is_zero_ring(const GroebnerOptions& opts) const {
    return gb(opts).contains_one();
}

std::int64_t PresentedAlgebra::dimension(const GroebnerOptions& opts) const {
    if (!dim_cache_) dim_cache_ = ideal_dimension(defining_, opts);
    return *dim_cache_;
}

IdealInAlgebra IdealInAlgebra::make(AlgebraPtr algebra, std::vector<Polynomial> reps,
                                    const GroebnerOptions& opts) {
    if (!algebra) throw error("IdealInAlgebra: null algebra");
    std::vector<Polynomial> given;
    std::vector<Polynomial> nf;
    given.reserve(reps.size());
    nf.reserve(reps.size());
    for (const auto& f : reps) {
        f.ring()->require_same_structure(*algebra->ring());
        given.push_back(f.ring() == algebra->ring() ? f : f.in_ring(algebra->ring()));
        Polynomial r = algebra->normal_form(f, opts);
        if (!r.is_zero()) nf.push_back(std::move(r));
    }
    return IdealInAlgebra(std::move(algebra), std::move(given), std::move(nf));
}

IdealGens IdealInAlgebra::combined() const {
    std::vector<Polynomial> gens = algebra_->defining().gens;
    gens.insert(gens.end(), reps_.begin(), reps_.end());
    return IdealGens::make(algebra_->ring(), std::move(gens));
}

bool IdealInAlgebra::is_unit(const GroebnerOptions& opts) const {
    RingPtr work = algebra_->ring()->order() == MonomialOrder::grevlex()
                       ? algebra_->ring()
                       : algebra_->ring()->with_order(MonomialOrder::grevlex());
    return groebner_basis(work, combined().gens, opts).contains_one();
}

AlgebraMap::AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw error("AlgebraMap: null algebra");
    if (images_.size() != source_->ring()->arity())
        throw arity_mismatch_error("AlgebraMap: need one image per source variable, got " +
                                   std::to_string(images_.size()));
    for (auto& f : images_) {
        f.ring()->require_same_structure(*target_->ring());
        if (f.ring() != target_->ring()) f = f.in_ring(target_->ring());
    }
}

Polynomial AlgebraMap::apply(const Polynomial& f) const {
    f.ring()->require_same_structure(*source_->ring());
    return f.substitute(target_->ring(), images_);
}

AlgebraMap AlgebraMap::identity(const AlgebraPtr& a) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < a->ring()->arity(); ++i)
        images.push_back(Polynomial::variable(a->ring(), i));
    return AlgebraMap(a, a, std::move(images));
}

AlgebraMap AlgebraMap::compose(const AlgebraMap& psi, const AlgebraMap& phi) {
    if (phi.target() != psi.source() &&
        !phi.target()->ring()->same_structure(*psi.source()->ring()))
        throw ring_mismatch_error("compose: inner target does not match outer source");
    std::vector<Polynomial> images;
    images.reserve(phi.images().size());
    for (const auto& f : phi.images()) images.push_back(psi.apply(f));
    return AlgebraMap(phi.source(), psi.target(), std::move(images));
}

bool check_map(const AlgebraMap& phi, const GroebnerOptions& opts) {
    for (const auto& rel : phi.source()->defining().gens) {
        if (!phi.target()->normal_form(phi.apply(rel), opts).is_zero()) return false;
    }
    return true;
}

IdealInAlgebra extend_ideal(const AlgebraMap& phi, const IdealInAlgebra& a,
                            const GroebnerOptions& opts) {
    if (a.algebra() != phi.source() &&
        !a.algebra()->ring()->same_structure(*phi.source()->ring()))
        throw ring_mismatch_error("extend_ideal: ideal does not live in the map's source");
    std::vector<Polynomial> images;
    images.reserve(a.reps().size());
    for (const auto& f : a.reps()) images.push_back(phi.apply(f));
    return IdealInAlgebra::make(phi.target(), std::move(images), opts);
}

std::int64_t algebra_dimension(const AlgebraPtr& A, const GroebnerOptions& opts) {
    return A->dimension(opts);
}

std::int64_t ideal_height(const IdealInAlgebra& a, const GroebnerOptions& opts) {
    const AlgebraPtr& A = a.algebra();
    if (!A->is_domain())
        throw missing_assertion_error(
            "ideal_height requires the domain assertion on the algebra (the formula "
            "ht a = dim A - dim A/a is used)");
    if (A->is_zero_ring(opts)) return 0;
    if (a.is_unit(opts)) return 1; // height of the unit ideal, by convention
    std::int64_t total = A->dimension(opts);
    std::int64_t quotient = ideal_dimension(a.combined(), opts);
    return total - quotient;
}

namespace {

// Strips every factor that is a unit monomial in the Laurent ring: divides
// by the monomial content in the inverted variables.
Polynomial strip_unit_monomials(const Polynomial& g, const std::vector<bool>& unit_var) {
    if (g.is_zero()) return g;
    std::vector<std::uint32_t> strip(g.ring()->arity(), 0);
    bool any = false;
    for (std::size_t i = 0; i < g.ring()->arity(); ++i) {
        if (!unit_var[i]) continue;
        std::uint32_t m = UINT32_MAX;
        for (const auto& t : g.terms()) m = std::min(m, t.mono[i]);
        if (m > 0 && m != UINT32_MAX) {
            strip[i] = m;
            any = true;
        }
    }
    if (!any) return g;
    std::vector<Term> out;
    out.reserve(g.term_count());
    for (const auto& t : g.terms()) {
        std::vector<std::uint32_t> e = t.mono.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= strip[i];
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(g.ring(), std::move(out));
}

} // namespace

bool bight_leq_one(const IdealInAlgebra& a, const GroebnerOptions& opts) {
    const AlgebraPtr& A = a.algebra();
    if (!A->is_factorial_ambient())
        throw missing_assertion_error(
            "bight_leq_one requires the factorial assertion on the coordinate ring");
    if (a.is_zero()) return true;
    if (a.is_unit(opts)) return true;

    if (const auto& st = A->laurent(); st && !st->unit_pairs.empty()) {
        // contract (a, v·w−1) to the polynomial subring K[v's, poly vars];
        // minimal primes and their heights match those in the Laurent ring
        const RingPtr& r = A->ring();
        std::vector<std::string> keep;
        std::vector<bool> unit_var; // in the subring: the inverted v's
        for (const auto& [v, w] : st->unit_pairs) {
            (void)w;
            keep.push_back(r->vars()[v]);
        }
        for (std::size_t t : st->poly_vars) keep.push_back(r->vars()[t]);
        IdealGens J = elim_to_subring(a.combined(), keep, opts);
        if (J.is_zero()) return true;
        RingPtr sub = J.ring;
        if (groebner_basis(sub, J.gens, opts).contains_one()) return true;
        unit_var.assign(sub->arity(), false);
        for (std::size_t i = 0; i < st->unit_pairs.size(); ++i) unit_var[i] = true;
        Polynomial g = strip_unit_monomials(poly_gcd(J.gens), unit_var);
        if (g.is_constant()) return false; // gcd a unit: some component has codim >= 2
        return radical_member(g, J, opts);
    }

    // plain polynomial ambient (no defining relations)
    IdealGens gens = IdealGens::make(A->ring(), a.reps());
    Polynomial g = poly_gcd(gens.gens);
    if (g.is_constant()) return false;
    return radical_member(g, gens, opts);
}

} // namespace codim1
