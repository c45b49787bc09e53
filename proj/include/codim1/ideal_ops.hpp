#pragma once

#include <string>
#include <vector>

#include "codim1/groebner.hpp"

namespace codim1 {

// Finite generating set of an ideal; an empty list is the zero ideal.
struct IdealGens {
    RingPtr ring;
    std::vector<Polynomial> gens; // all nonzero, all in `ring`

    // Ring-checks the generators and drops zeros.
    static IdealGens make(RingPtr ring, std::vector<Polynomial> gens);
    bool is_zero() const { return gens.empty(); }
};

// f ∈ (g)?  Decided by normal form against a grevlex basis.
bool ideal_member(const Polynomial& f, const IdealGens& g, const GroebnerOptions& opts = {},
                  GroebnerStats* stats = nullptr);

// f ∈ rad(g)?  Adjoins a fresh variable y and tests 1 ∈ (g, 1 − y·f).
bool radical_member(const Polynomial& f, const IdealGens& g, const GroebnerOptions& opts = {},
                    GroebnerStats* stats = nullptr);

// Generators of (g) ∩ K[keep], expressed back in the original ring.  Computed
// with a block order that eliminates the complement of `keep`.
IdealGens elim_ideal(const IdealGens& g, const std::vector<std::string>& keep,
                     const GroebnerOptions& opts = {}, GroebnerStats* stats = nullptr);

// Same elimination, but the result lives in the subring K[keep].
IdealGens elim_to_subring(const IdealGens& g, const std::vector<std::string>& keep,
                          const GroebnerOptions& opts = {}, GroebnerStats* stats = nullptr);

// (g) : f^∞ via (g, 1 − y·f) ∩ K[original variables].
IdealGens saturate(const IdealGens& g, const Polynomial& f, const GroebnerOptions& opts = {},
                   GroebnerStats* stats = nullptr);

// Krull dimension of K[x₁..xₙ]/(g); −1 for the unit ideal.  Maximum size of
// an independent variable set modulo the leading-term ideal.
std::int64_t ideal_dimension(const IdealGens& g, const GroebnerOptions& opts = {},
                             GroebnerStats* stats = nullptr);

} // namespace codim1
