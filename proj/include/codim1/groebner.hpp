#pragma once

#include <cstdint>
#include <vector>

#include "codim1/poly.hpp"

namespace codim1 {

struct GroebnerOptions {
    // Cap on S-pair reductions before giving up with resource_cap_error.
    std::uint64_t max_spair_reductions = 1'000'000;
};

struct GroebnerStats {
    std::uint64_t spair_reductions = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_enqueued = 0;
    std::uint64_t basis_size_before_reduce = 0;

    GroebnerStats& operator+=(const GroebnerStats& o) {
        spair_reductions += o.spair_reductions;
        zero_reductions += o.zero_reductions;
        pairs_enqueued += o.pairs_enqueued;
        basis_size_before_reduce += o.basis_size_before_reduce;
        return *this;
    }
};

// The reduced Gröbner basis of an ideal: monic elements, fully interreduced,
// sorted ascending by leading monomial.  This form is unique for a given
// ideal and monomial order, so equality of ideals is equality of bases.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return els_; }
    const std::vector<Monomial>& leading_monomials() const { return lms_; }
    std::size_t size() const { return els_.size(); }
    bool is_zero_ideal() const { return els_.empty(); }
    bool contains_one() const;

    bool operator==(const GroebnerBasis& o) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> els_;
    std::vector<Monomial> lms_;
};

// Buchberger's algorithm with the Gebauer-Möller pair filters and
// sugar-degree selection.  Ties are broken by input index order, so the run
// is deterministic; the returned basis is reduced and hence canonical.
GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& opts = {},
                             GroebnerStats* stats = nullptr);

// Full normal form: no term of the result is divisible by any basis leading
// monomial.  Reduction is deterministic (first matching reducer in basis
// order).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

enum class ExecMode { serial, parallel };

// Normal forms of a family.  Results are identical in both modes and ordered
// like the input; parallel mode distributes items across OpenMP threads.
std::vector<Polynomial> normal_form_batch(const std::vector<Polynomial>& fs,
                                          const GroebnerBasis& gb,
                                          ExecMode mode = ExecMode::serial);

} // namespace codim1
