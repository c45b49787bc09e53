#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codim1/certify.hpp"

namespace codim1 {

// A finitely generated submonoid of Z^d, by generators.  `positive` (only
// unit is 0) and `normal` are user assertions the affineness criterion
// relies on; only the cheap structural facts are validated here.
struct AffineMonoid {
    std::size_t rank = 0;                              // ambient lattice rank d
    std::vector<std::vector<std::int64_t>> generators; // each of length d, nonzero
    bool positive = false;
    bool normal = false;

    static AffineMonoid make(std::size_t rank,
                             std::vector<std::vector<std::int64_t>> generators,
                             bool positive, bool normal);
};

// An embedding M ↪ Z^s × N^k sending each monoid generator to an integer
// vector whose last k coordinates are non-negative.  That M equals the
// intersection of its group with Z^s × N^k is a user assertion; the
// mechanical part (see verify_embedding) is checked.
struct IntersectionEmbedding {
    std::size_t s = 0; // free coordinates
    std::size_t k = 0; // non-negative coordinates
    std::vector<std::vector<std::int64_t>> images; // one per generator, length s+k
    bool intersection_asserted = false;
};

// Mechanical validation: one image of length s+k per generator, trailing k
// coordinates ≥ 0, and the images satisfy exactly the rational linear
// relations of the generators (rank(G) = rank(E) = rank of the stacked
// matrix), so the induced group homomorphism is well defined and injective.
// Throws input_error on shape problems, evidence_error on failed checks.
void verify_embedding(const AffineMonoid& m, const IntersectionEmbedding& e);

// K[M] presented as K[x1..xn]/(kernel of x_i ↦ t^{g_i}), one variable per
// monoid generator.
struct ToricPresentation {
    AlgebraPtr algebra;
};

// Kernel of the monomial map by elimination; negative lattice coordinates
// run through inverse variables t_j·u_j = 1.  The result is a prime binomial
// ideal, so the algebra carries the domain flag structurally.
ToricPresentation toric_presentation(const AffineMonoid& m, CoeffField field,
                                     const GroebnerOptions& opts = {});

// The finite-type extension K[M] → B = K[V1..Vs,W1..Ws,T1..Tk]/(V_iW_i − 1)
// induced by the embedding: x_i ↦ the Laurent/ordinary monomial of the
// generator's image.  Verifies the embedding, then confirms well-definedness
// with check_map.  The target is factorial, so big-height tests apply.
AlgebraMap build_extension(const AffineMonoid& m, const IntersectionEmbedding& e,
                           const ToricPresentation& p, const GroebnerOptions& opts = {});

// The big-height decision for D(a) ⊆ Spec K[M]: extend a along
// build_extension and test bight ≤ 1 in the factorial target.  bight ≤ 1
// means affine, bight ≥ 2 means not affine; the result is ledger-ready
// evidence under `evidence_name`.
VerifiedEvidence monoid_affine(const AffineMonoid& m, const IntersectionEmbedding& e,
                               const ToricPresentation& p, const IdealInAlgebra& a,
                               const std::string& evidence_name,
                               const GroebnerOptions& opts = {});

} // namespace codim1
