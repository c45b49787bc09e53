#include "codim1/ideal_ops.hpp"

#include <algorithm>

#include "codim1/errors.hpp"

namespace codim1 {

IdealGens IdealGens::make(RingPtr ring, std::vector<Polynomial> gens) {
    if (!ring) throw error("IdealGens: null ring");
    std::vector<Polynomial> kept;
    kept.reserve(gens.size());
    for (auto& f : gens) {
        if (!f.ring()) throw error("IdealGens: generator without a ring");
        f.ring()->require_same_structure(*ring);
        if (f.is_zero()) continue;
        kept.push_back(f.ring() == ring ? std::move(f) : f.in_ring(ring));
    }
    return IdealGens{std::move(ring), std::move(kept)};
}

namespace {

RingPtr grevlex_ring(const RingPtr& r) {
    if (r->order() == MonomialOrder::grevlex()) return r;
    return r->with_order(MonomialOrder::grevlex());
}

} // namespace

bool ideal_member(const Polynomial& f, const IdealGens& g, const GroebnerOptions& opts,
                  GroebnerStats* stats) {
    RingPtr work = grevlex_ring(g.ring);
    GroebnerBasis gb = groebner_basis(work, g.gens, opts, stats);
    return normal_form(f, gb).is_zero();
}

bool radical_member(const Polynomial& f, const IdealGens& g, const GroebnerOptions& opts,
                    GroebnerStats* stats) {
    f.ring()->require_same_structure(*g.ring);
    RingPtr base = grevlex_ring(g.ring);
    RingPtr ext = base->extended({base->fresh_var_name("rad")});
    const std::size_t y = ext->arity() - 1;
    std::vector<Polynomial> gens;
    gens.reserve(g.gens.size() + 1);
    for (const auto& h : g.gens) gens.push_back(h.in_ring(ext));
    gens.push_back(Polynomial::one(ext) -
                   Polynomial::variable(ext, y) * f.in_ring(ext));
    GroebnerBasis gb = groebner_basis(ext, gens, opts, stats);
    return gb.contains_one();
}

namespace {

// Shared elimination core: Gröbner basis in a block order with the
// complement of `keep` in the leading block, then the elements supported on
// `keep` generate the intersection ideal.
std::vector<Polynomial> elim_core(const IdealGens& g, const std::vector<std::string>& keep,
                                  const GroebnerOptions& opts, GroebnerStats* stats) {
    const RingPtr& r = g.ring;
    std::vector<bool> keep_mask(r->arity(), false);
    for (const auto& name : keep) {
        auto idx = r->var_index(name);
        if (!idx) throw input_error("elim_ideal: variable " + name + " is not in " + r->str());
        keep_mask[*idx] = true;
    }
    // eliminated variables first, each group in original order
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < r->arity(); ++i)
        if (!keep_mask[i]) perm.push_back(i);
    const std::size_t split = perm.size();
    for (std::size_t i = 0; i < r->arity(); ++i)
        if (keep_mask[i]) perm.push_back(i);
    RingPtr work = r->permuted(perm, MonomialOrder::block(split));
    std::vector<Polynomial> moved;
    moved.reserve(g.gens.size());
    for (const auto& f : g.gens) moved.push_back(f.in_ring(work));
    GroebnerBasis gb = groebner_basis(work, moved, opts, stats);
    std::vector<bool> allowed(work->arity(), false);
    for (std::size_t i = split; i < work->arity(); ++i) allowed[i] = true;
    std::vector<Polynomial> out;
    for (const auto& e : gb.elements())
        if (e.supported_on(allowed)) out.push_back(e);
    return out;
}

} // namespace

IdealGens elim_ideal(const IdealGens& g, const std::vector<std::string>& keep,
                     const GroebnerOptions& opts, GroebnerStats* stats) {
    std::vector<Polynomial> picked = elim_core(g, keep, opts, stats);
    std::vector<Polynomial> back;
    back.reserve(picked.size());
    for (const auto& f : picked) back.push_back(f.in_ring(g.ring));
    return IdealGens::make(g.ring, std::move(back));
}

IdealGens elim_to_subring(const IdealGens& g, const std::vector<std::string>& keep,
                          const GroebnerOptions& opts, GroebnerStats* stats) {
    std::vector<Polynomial> picked = elim_core(g, keep, opts, stats);
    RingPtr sub = g.ring->restricted(keep, MonomialOrder::grevlex());
    std::vector<Polynomial> back;
    back.reserve(picked.size());
    for (const auto& f : picked) back.push_back(f.in_ring(sub));
    return IdealGens::make(sub, std::move(back));
}

IdealGens saturate(const IdealGens& g, const Polynomial& f, const GroebnerOptions& opts,
                   GroebnerStats* stats) {
    if (f.is_zero()) throw input_error("saturate: the saturating element must be nonzero");
    f.ring()->require_same_structure(*g.ring);
    const RingPtr& r = g.ring;
    std::string fresh = r->fresh_var_name("sat");
    RingPtr ext = r->extended({fresh});
    const std::size_t y = ext->arity() - 1;
    std::vector<Polynomial> gens;
    gens.reserve(g.gens.size() + 1);
    for (const auto& h : g.gens) gens.push_back(h.in_ring(ext));
    gens.push_back(Polynomial::one(ext) - Polynomial::variable(ext, y) * f.in_ring(ext));
    IdealGens extended = IdealGens::make(ext, std::move(gens));
    IdealGens cut = elim_ideal(extended, r->vars(), opts, stats);
    std::vector<Polynomial> back;
    back.reserve(cut.gens.size());
    for (const auto& h : cut.gens) back.push_back(h.in_ring(r));
    return IdealGens::make(r, std::move(back));
}

std::int64_t ideal_dimension(const IdealGens& g, const GroebnerOptions& opts,
                             GroebnerStats* stats) {
    RingPtr work = grevlex_ring(g.ring);
    GroebnerBasis gb = groebner_basis(work, g.gens, opts, stats);
    const std::size_t n = work->arity();
    if (n > 24)
        throw resource_cap_error("computation too large: dimension search over " +
                                 std::to_string(n) + " variables");
    std::vector<std::uint32_t> supports;
    supports.reserve(gb.size());
    for (const auto& lm : gb.leading_monomials()) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i] != 0) mask |= (1u << i);
        supports.push_back(mask);
    }
    // largest variable subset S touching no leading-term support entirely;
    // the unit ideal admits none at all (even S = ∅ fails), giving −1
    std::int64_t best = -1;
    const std::uint32_t limit = n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
    for (std::uint32_t s = 0;; ++s) {
        bool independent = true;
        for (std::uint32_t m : supports) {
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max<std::int64_t>(best, __builtin_popcount(s));
        if (s == limit) break;
    }
    return best;
}

} // namespace codim1
