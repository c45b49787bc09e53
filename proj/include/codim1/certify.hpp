#pragma once

#include <string>
#include <vector>

#include "codim1/algebra.hpp"

namespace codim1 {

enum class Verdict { affine, not_affine, unknown };
std::string verdict_str(Verdict v);

// A homomorphism claimed to push the ideal up to a given height.  Verification
// recomputes the height and rejects mismatches rather than repairing them.
struct HeightWitness {
    std::string name;
    AlgebraMap phi;
    std::int64_t claimed_height = 0;
};

// One section q of O(U), presented chart by chart as fractions num/den whose
// denominators jointly cover U.
struct SectionChart {
    std::vector<std::pair<Polynomial, Polynomial>> charts;
};

// One section per generator of a, establishing 1 = Σ qᵢ·fᵢ on U.
struct AffinenessCertificate {
    std::string name;
    std::vector<SectionChart> sections;
};

// One verified piece of evidence, normalized for the ledger fold.
struct VerifiedEvidence {
    enum class Kind { witness, certificate, purity, monoid_bight };
    Kind kind;
    std::string name;
    std::int64_t height = 0;            // witness: verified height of the extension
    bool unit_extension = false;        // witness: extension was the unit ideal
    Verdict verdict = Verdict::unknown; // purity / monoid
};

// Checks well-definedness, extends a, recomputes the height, compares with
// the claim.  Throws evidence_error on an ill-defined map or a height
// mismatch; the returned evidence drives verdict not-affine when height ≥ 2.
VerifiedEvidence verify_witness(const IdealInAlgebra& a, const HeightWitness& w,
                                const GroebnerOptions& opts = {});

struct CertificateOutcome {
    bool ok = false;
    std::string failure; // empty on success; names the stage and chart indices
};

// The three-stage check: (i) cover — every generator of a lies in the radical
// of the defining ideal plus the section's denominators; (ii) compatibility —
// chart fractions of one section agree after saturation by the denominator
// product; (iii) unity — for every chart combination, Σ nᵢ·fᵢ·Π_{k≠i} d_k
// equals Π d_k modulo the defining ideal after clearing with a power of the
// product (combinations with empty domain pass through that same power).
CertificateOutcome verify_affine_certificate(const IdealInAlgebra& a,
                                             const AffinenessCertificate& c,
                                             const GroebnerOptions& opts = {});

// Same as verify_affine_certificate but throws evidence_error on failure and
// returns ledger-ready evidence on success.
VerifiedEvidence require_affine_certificate(const IdealInAlgebra& a,
                                            const AffinenessCertificate& c,
                                            const GroebnerOptions& opts = {});

struct PurityResult {
    Verdict verdict = Verdict::unknown;
    bool extension_zero = false;
    bool bight_leq_one = false;
};

// Two-dimensional route: extend a along the user-supplied normalization map
// and decide by the big-height bound in the factorial target.
PurityResult affine_via_purity(const AlgebraMap& normalization, const IdealInAlgebra& a,
                               const GroebnerOptions& opts = {});

// The assembled interval [lower, upper] for the superheight together with the
// affineness verdict; every bound and the verdict carry a citation tag naming
// the rule that produced them.
struct SuperheightLedger {
    std::int64_t lower = 0;
    std::string lower_tag;
    std::int64_t upper = 0;
    std::string upper_tag;
    Verdict verdict = Verdict::unknown;
    std::string verdict_tag;
    std::vector<std::string> notes;
};

// Folds verified evidence into the ledger.  Lower bounds: the ideal's own
// height, witness heights, and 2 for any verified non-affineness.  Upper
// bounds: generator count, dim A + 1, and 1 for any verified affineness.
// Contradictory evidence aborts with inconsistency_error naming both pieces.
SuperheightLedger ledger_combine(const IdealInAlgebra& a,
                                 const std::vector<VerifiedEvidence>& evidence,
                                 bool sections_finitely_generated = false,
                                 const GroebnerOptions& opts = {});

} // namespace codim1
