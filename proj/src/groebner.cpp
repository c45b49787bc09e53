#include "codim1/groebner.hpp"

#include <algorithm>
#include <optional>

#include "codim1/errors.hpp"

namespace codim1 {

namespace {

// Full division: every term of the result is irreducible modulo the leading
// monomials of `reducers`.  The first reducer (in vector order) whose leading
// monomial divides wins, which makes the walk deterministic.  When `sugar`
// is supplied it is propagated through the reduction steps.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& reducers,
                       const std::vector<Monomial>& lms,
                       const std::vector<std::int64_t>* sugars = nullptr,
                       std::int64_t* sugar = nullptr) {
    if (reducers.empty()) return f;
    const RingPtr& ring = f.ring();
    std::vector<Term> done; // irreducible prefix, already in descending order
    while (!f.is_zero()) {
        const Monomial& lm = f.leading_monomial();
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < reducers.size(); ++k) {
            if (lms[k].divides(lm)) {
                hit = k;
                break;
            }
        }
        if (!hit) {
            done.push_back(f.leading_term());
            // drop the leading term and keep reducing the tail
            std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
            f = Polynomial::from_terms(ring, std::move(rest));
            continue;
        }
        const Polynomial& g = reducers[*hit];
        Monomial m = lm / lms[*hit];
        Scalar c = -(f.leading_coeff() / g.leading_coeff());
        if (sugar && sugars)
            *sugar = std::max(*sugar, (*sugars)[*hit] + static_cast<std::int64_t>(m.deg()));
        f = f.add_scaled(g, c, m);
    }
    // `done` was collected in strictly descending order already
    return Polynomial::from_terms(ring, std::move(done));
}

struct SPair {
    std::size_t i, j; // i < j, indices into the working basis
    Monomial lcm;
    std::int64_t sugar;
};

// Selection order: sugar degree, then lcm in the ring order, then indices.
bool pair_before(const MonomialOrder& ord, const SPair& a, const SPair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    auto c = order_compare(ord, a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

class Engine {
public:
    Engine(RingPtr ring, const GroebnerOptions& opts, GroebnerStats* stats)
        : ring_(std::move(ring)), opts_(opts), stats_(stats) {}

    void add_input(const Polynomial& f) {
        if (done_unit_) return;
        std::int64_t sugar = std::max<std::int64_t>(f.deg(), 0);
        absorb(reduce_full(f, basis_, lms_, &sugars_, &sugar), sugar);
    }

    void run() {
        while (!pairs_.empty() && !done_unit_) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                         [&](const SPair& a, const SPair& b) {
                                             return pair_before(ring_->order(), a, b);
                                         });
            SPair p = *best;
            pairs_.erase(best);
            bump_reduction_count();
            // both basis elements are monic, so the S-polynomial is a plain
            // difference of the two matched multiples
            Monomial mi = p.lcm / lms_[p.i];
            Monomial mj = p.lcm / lms_[p.j];
            Polynomial s = basis_[p.i].mul_term(Scalar::one(ring_->field()), mi);
            s = s.add_scaled(basis_[p.j], -Scalar::one(ring_->field()), mj);
            std::int64_t sugar = p.sugar;
            Polynomial h = reduce_full(std::move(s), basis_, lms_, &sugars_, &sugar);
            if (h.is_zero()) {
                if (stats_) stats_->zero_reductions++;
                continue;
            }
            absorb(std::move(h), sugar);
        }
    }

    GroebnerBasis finish() {
        if (stats_) stats_->basis_size_before_reduce = basis_.size();
        if (done_unit_)
            return GroebnerBasis(ring_, {Polynomial::one(ring_)});
        return GroebnerBasis(ring_, reduce_basis());
    }

private:
    void bump_reduction_count() {
        ++reductions_;
        if (stats_) stats_->spair_reductions++;
        if (reductions_ > opts_.max_spair_reductions)
            throw resource_cap_error("computation too large: S-pair reduction cap of " +
                                     std::to_string(opts_.max_spair_reductions) +
                                     " exceeded");
    }

    // Installs a fully reduced nonzero polynomial (or ignores zero) and
    // refreshes the pair queue via the Gebauer-Möller filters.
    void absorb(Polynomial h, std::int64_t sugar) {
        if (h.is_zero()) return;
        if (h.is_constant()) {
            done_unit_ = true;
            pairs_.clear();
            return;
        }
        h = h.monic();
        const std::size_t t = basis_.size();
        const Monomial lmt = h.leading_monomial();

        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
            bool alive = true;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            cands.push_back(Cand{i, Monomial::lcm(lms_[i], lmt), lms_[i].coprime(lmt)});
        }
        // M: drop candidates whose lcm is a proper multiple of another's
        for (auto& a : cands) {
            for (const auto& b : cands) {
                if (&a == &b) continue;
                if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                    a.alive = false;
                    break;
                }
            }
        }
        // F: one representative per lcm value (smallest index survives)
        for (std::size_t x = 0; x < cands.size(); ++x) {
            if (!cands[x].alive) continue;
            for (std::size_t y = x + 1; y < cands.size(); ++y) {
                if (cands[y].alive && cands[y].lcm == cands[x].lcm) cands[y].alive = false;
            }
        }
        // B: coprime leading monomials reduce to zero; drop after M/F so the
        // pair still helped eliminating others
        for (auto& a : cands)
            if (a.coprime) a.alive = false;

        // prune superseded old pairs
        std::vector<SPair> kept;
        kept.reserve(pairs_.size());
        for (auto& p : pairs_) {
            bool drop = lmt.divides(p.lcm) && Monomial::lcm(lms_[p.i], lmt) != p.lcm &&
                        Monomial::lcm(lms_[p.j], lmt) != p.lcm;
            if (!drop) kept.push_back(std::move(p));
        }
        pairs_ = std::move(kept);

        for (const auto& a : cands) {
            if (!a.alive) continue;
            std::int64_t s = std::max(
                sugars_[a.i] + static_cast<std::int64_t>((a.lcm / lms_[a.i]).deg()),
                sugar + static_cast<std::int64_t>((a.lcm / lmt).deg()));
            pairs_.push_back(SPair{a.i, t, a.lcm, s});
            if (stats_) stats_->pairs_enqueued++;
        }
        basis_.push_back(std::move(h));
        lms_.push_back(lmt);
        sugars_.push_back(sugar);
    }

    // Minimalize and tail-reduce into the canonical reduced basis.
    std::vector<Polynomial> reduce_basis() {
        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            auto c = order_compare(ring_->order(), lms_[a], lms_[b]);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return a < b;
        });
        std::vector<Polynomial> minimal;
        std::vector<Monomial> min_lms;
        for (std::size_t k : idx) {
            bool redundant = false;
            for (const auto& m : min_lms) {
                if (m.divides(lms_[k])) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                minimal.push_back(basis_[k]);
                min_lms.push_back(lms_[k]);
            }
        }
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Polynomial> others;
            std::vector<Monomial> other_lms;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j == k) continue;
                others.push_back(minimal[j]);
                other_lms.push_back(min_lms[j]);
            }
            out.push_back(reduce_full(minimal[k], others, other_lms).monic());
        }
        return out;
    }

    RingPtr ring_;
    GroebnerOptions opts_;
    GroebnerStats* stats_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> lms_;
    std::vector<std::int64_t> sugars_;
    std::vector<SPair> pairs_;
    std::uint64_t reductions_ = 0;
    bool done_unit_ = false;
};

} // namespace

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements)
    : ring_(std::move(ring)), els_(std::move(reduced_elements)) {
    lms_.reserve(els_.size());
    for (const auto& g : els_) {
        g.ring()->require_same_structure(*ring_);
        lms_.push_back(g.leading_monomial());
    }
}

bool GroebnerBasis::contains_one() const {
    return els_.size() == 1 && els_[0].is_constant() && !els_[0].is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    if (els_.size() != o.els_.size()) return false;
    for (std::size_t i = 0; i < els_.size(); ++i)
        if (els_[i] != o.els_[i]) return false;
    return true;
}

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& opts, GroebnerStats* stats) {
    if (!ring) throw error("groebner_basis: null ring");
    Engine engine(ring, opts, stats);
    for (const auto& f : gens) {
        f.ring()->require_same_structure(*ring);
        Polynomial g = f.ring() == ring ? f : f.in_ring(ring);
        engine.add_input(g);
    }
    engine.run();
    return engine.finish();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    f.ring()->require_same_structure(*gb.ring());
    Polynomial g = f.ring() == gb.ring() ? f : f.in_ring(gb.ring());
    return reduce_full(std::move(g), gb.elements(), gb.leading_monomials());
}

std::vector<Polynomial> normal_form_batch(const std::vector<Polynomial>& fs,
                                          const GroebnerBasis& gb, ExecMode mode) {
    std::vector<Polynomial> out(fs.size());
    if (mode == ExecMode::parallel) {
#ifdef CODIM1_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fs.size()); ++i)
            out[static_cast<std::size_t>(i)] = normal_form(fs[static_cast<std::size_t>(i)], gb);
        return out;
#endif
    }
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = normal_form(fs[i], gb);
    return out;
}

} // namespace codim1
