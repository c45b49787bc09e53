#include "codim1/certify.hpp"

#include <algorithm>
#include <sstream>

#include "codim1/errors.hpp"

namespace codim1 {

namespace {

// Exponent tried before falling back to exact saturation; the bundled
// certificate charts all succeed at 0.
constexpr int kSaturationTrialBound = 10;

} // namespace

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::affine: return "affine";
        case Verdict::not_affine: return "not-affine";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

VerifiedEvidence verify_witness(const IdealInAlgebra& a, const HeightWitness& w,
                                const GroebnerOptions& opts) {
    if (w.phi.source() != a.algebra() &&
        !w.phi.source()->ring()->same_structure(*a.algebra()->ring()))
        throw evidence_error("witness " + w.name + ": map source is not the ideal's algebra");
    if (!check_map(w.phi, opts))
        throw evidence_error("witness " + w.name +
                             ": the map is ill-defined (a defining relation does not map "
                             "into the target's defining ideal)");
    IdealInAlgebra ext = extend_ideal(w.phi, a, opts);
    std::int64_t h = ideal_height(ext, opts);
    if (h != w.claimed_height) {
        std::ostringstream os;
        os << "witness " << w.name << ": claimed height " << w.claimed_height
           << " but verification computes " << h << " (witness rejected)";
        throw evidence_error(os.str());
    }
    VerifiedEvidence ev;
    ev.kind = VerifiedEvidence::Kind::witness;
    ev.name = w.name;
    ev.height = h;
    ev.unit_extension = ext.is_unit(opts);
    ev.verdict = h >= 2 ? Verdict::not_affine : Verdict::unknown;
    return ev;
}

namespace {

// t·f^N ∈ I for some N ≤ the trial bound, or exactly via saturation.
bool dies_after_saturation(const Polynomial& t, const Polynomial& f,
                           const AlgebraPtr& A, const GroebnerOptions& opts) {
    Polynomial r = A->normal_form(t, opts);
    for (int n = 0; n <= kSaturationTrialBound; ++n) {
        if (r.is_zero()) return true;
        r = A->normal_form(r * f, opts);
    }
    if (r.is_zero()) return true;
    IdealGens sat = saturate(A->defining(), f, opts);
    return ideal_member(t, sat, opts);
}

} // namespace

CertificateOutcome verify_affine_certificate(const IdealInAlgebra& a,
                                             const AffinenessCertificate& c,
                                             const GroebnerOptions& opts) {
    const AlgebraPtr& A = a.algebra();
    const std::vector<Polynomial>& gens = a.given();
    if (c.sections.size() != gens.size())
        throw input_error("certificate " + c.name + ": " + std::to_string(c.sections.size()) +
                          " sections for " + std::to_string(gens.size()) +
                          " ideal generators");
    CertificateOutcome out;

    // denominators exist and are nonzero in A
    for (std::size_t i = 0; i < c.sections.size(); ++i) {
        if (c.sections[i].charts.empty()) {
            out.failure = "cover failure: section " + std::to_string(i + 1) + " has no charts";
            return out;
        }
        for (std::size_t j = 0; j < c.sections[i].charts.size(); ++j) {
            if (A->normal_form(c.sections[i].charts[j].second, opts).is_zero()) {
                out.failure = "cover failure: section " + std::to_string(i + 1) + " chart " +
                              std::to_string(j + 1) + " has denominator 0 in the algebra";
                return out;
            }
        }
    }

    // (i) cover: every generator of a is in rad(I + denominators of the section)
    for (std::size_t i = 0; i < c.sections.size(); ++i) {
        std::vector<Polynomial> with_dens = A->defining().gens;
        for (const auto& [num, den] : c.sections[i].charts) {
            (void)num;
            with_dens.push_back(den);
        }
        IdealGens covered = IdealGens::make(A->ring(), std::move(with_dens));
        for (std::size_t g = 0; g < a.reps().size(); ++g) {
            if (!radical_member(a.reps()[g], covered, opts)) {
                out.failure = "cover failure: section " + std::to_string(i + 1) +
                              " denominators do not cover D(a) (generator " +
                              std::to_string(g + 1) + " escapes the radical)";
                return out;
            }
        }
    }

    // (ii) compatibility: fractions of one section agree on chart overlaps
    for (std::size_t i = 0; i < c.sections.size(); ++i) {
        const auto& charts = c.sections[i].charts;
        for (std::size_t p = 0; p < charts.size(); ++p) {
            for (std::size_t q = p + 1; q < charts.size(); ++q) {
                Polynomial t = charts[p].first * charts[q].second -
                               charts[q].first * charts[p].second;
                Polynomial dd = charts[p].second * charts[q].second;
                if (!dies_after_saturation(t, dd, A, opts)) {
                    out.failure = "compatibility failure: section " + std::to_string(i + 1) +
                                  " charts " + std::to_string(p + 1) + " and " +
                                  std::to_string(q + 1) + " disagree on their overlap";
                    return out;
                }
            }
        }
    }

    // (iii) unity: Σ qᵢ·fᵢ = 1 on every chart combination
    std::vector<std::size_t> combo(c.sections.size(), 0);
    while (true) {
        Polynomial D = Polynomial::one(A->ring());
        for (std::size_t i = 0; i < combo.size(); ++i)
            D = D * c.sections[i].charts[combo[i]].second;
        Polynomial S = Polynomial::zero(A->ring());
        for (std::size_t i = 0; i < combo.size(); ++i) {
            Polynomial term = c.sections[i].charts[combo[i]].first * gens[i];
            for (std::size_t k = 0; k < combo.size(); ++k) {
                if (k == i) continue;
                term = term * c.sections[k].charts[combo[k]].second;
            }
            S = S + term;
        }
        if (!dies_after_saturation(S - D, D, A, opts)) {
            std::ostringstream os;
            os << "unity failure: chart combination (";
            for (std::size_t i = 0; i < combo.size(); ++i)
                os << (i ? "," : "") << combo[i] + 1;
            os << ") does not sum to 1 on its domain";
            out.failure = os.str();
            return out;
        }
        std::size_t k = 0;
        while (k < combo.size()) {
            if (++combo[k] < c.sections[k].charts.size()) break;
            combo[k] = 0;
            ++k;
        }
        if (k == combo.size()) break;
    }

    out.ok = true;
    return out;
}

VerifiedEvidence require_affine_certificate(const IdealInAlgebra& a,
                                            const AffinenessCertificate& c,
                                            const GroebnerOptions& opts) {
    CertificateOutcome out = verify_affine_certificate(a, c, opts);
    if (!out.ok) throw evidence_error("certificate " + c.name + ": " + out.failure);
    VerifiedEvidence ev;
    ev.kind = VerifiedEvidence::Kind::certificate;
    ev.name = c.name;
    ev.verdict = Verdict::affine;
    return ev;
}

PurityResult affine_via_purity(const AlgebraMap& normalization, const IdealInAlgebra& a,
                               const GroebnerOptions& opts) {
    if (normalization.source() != a.algebra() &&
        !normalization.source()->ring()->same_structure(*a.algebra()->ring()))
        throw evidence_error("purity route: map source is not the ideal's algebra");
    std::int64_t d = algebra_dimension(a.algebra(), opts);
    if (d != 2)
        throw evidence_error("purity route applies to two-dimensional algebras, got dimension " +
                             std::to_string(d));
    if (!check_map(normalization, opts))
        throw evidence_error("purity route: the normalization map is ill-defined");
    IdealInAlgebra ext = extend_ideal(normalization, a, opts);
    PurityResult res;
    res.extension_zero = ext.is_zero();
    res.bight_leq_one = bight_leq_one(ext, opts);
    if (!res.bight_leq_one)
        res.verdict = Verdict::not_affine;
    else if (!res.extension_zero)
        res.verdict = Verdict::affine;
    else
        res.verdict = Verdict::unknown;
    return res;
}

SuperheightLedger ledger_combine(const IdealInAlgebra& a,
                                 const std::vector<VerifiedEvidence>& evidence,
                                 bool sections_finitely_generated,
                                 const GroebnerOptions& opts) {
    const AlgebraPtr& A = a.algebra();
    SuperheightLedger led;

    if (a.is_zero()) {
        led.lower = 0;
        led.lower_tag = "ideal-height";
        led.upper = 0;
        led.upper_tag = "ara-generator-count";
        led.verdict = Verdict::affine;
        led.verdict_tag = "empty-set";
        led.notes.push_back("a = (0): D(a) is empty, and the empty scheme is affine");
        return led;
    }
    if (a.is_unit(opts)) {
        led.lower = 1;
        led.lower_tag = "ideal-height";
        led.upper = 1;
        led.upper_tag = "whole-space";
        led.verdict = Verdict::affine;
        led.verdict_tag = "whole-space";
        led.notes.push_back(
            "a is the unit ideal: D(a) is the whole spectrum; the unit ideal has height 1 "
            "by convention, and so does every extension");
        return led;
    }

    led.lower = ideal_height(a, opts);
    led.lower_tag = "ideal-height";

    std::string affine_name, affine_kind_tag;
    std::string notaffine_name;
    bool notaffine_from_witness = false;
    for (const auto& ev : evidence) {
        switch (ev.kind) {
            case VerifiedEvidence::Kind::witness:
                if (ev.height > led.lower) {
                    led.lower = ev.height;
                    led.lower_tag = "witness:" + ev.name;
                }
                if (ev.unit_extension)
                    led.notes.push_back("witness " + ev.name +
                                        ": the extended ideal is the unit ideal (height 1 "
                                        "by convention; flagged, not an obstruction)");
                if (ev.height >= 2 && notaffine_name.empty()) {
                    notaffine_name = ev.name + " (height-" + std::to_string(ev.height) +
                                     " witness)";
                    notaffine_from_witness = true;
                }
                break;
            case VerifiedEvidence::Kind::certificate:
                if (affine_name.empty()) {
                    affine_name = ev.name + " (unity partition)";
                    affine_kind_tag = "unity-partition";
                }
                break;
            case VerifiedEvidence::Kind::purity:
                if (ev.verdict == Verdict::affine && affine_name.empty()) {
                    affine_name = ev.name + " (pure codimension-one preimage)";
                    affine_kind_tag = "pure-codimension-one-preimage";
                } else if (ev.verdict == Verdict::not_affine) {
                    if (led.lower < 2) {
                        led.lower = 2;
                        led.lower_tag = "codimension-obstruction";
                    }
                    if (notaffine_name.empty())
                        notaffine_name = ev.name + " (codimension-two component upstairs)";
                }
                break;
            case VerifiedEvidence::Kind::monoid_bight:
                if (ev.verdict == Verdict::affine && affine_name.empty()) {
                    affine_name = ev.name + " (factorial big-height bound)";
                    affine_kind_tag = "factorial-bight-rule";
                } else if (ev.verdict == Verdict::not_affine) {
                    if (led.lower < 2) {
                        led.lower = 2;
                        led.lower_tag = "codimension-obstruction";
                    }
                    if (notaffine_name.empty())
                        notaffine_name = ev.name + " (codimension-two component upstairs)";
                }
                break;
        }
    }

    if (!affine_name.empty() && !notaffine_name.empty())
        throw inconsistency_error("inconsistent evidence: " + affine_name +
                                  " certifies D(a) affine while " + notaffine_name +
                                  " certifies it not affine");

    // upper bound candidates in citation order; strict improvement wins
    led.upper = static_cast<std::int64_t>(a.reps().size());
    led.upper_tag = "ara-generator-count";
    std::int64_t dim_bound = algebra_dimension(A, opts) + 1;
    if (dim_bound < led.upper) {
        led.upper = dim_bound;
        led.upper_tag = "dim-plus-one";
    }
    if (!affine_name.empty() && led.upper > 1) {
        led.upper = 1;
        led.upper_tag = "affine-implies-superheight-one";
    }

    if (led.lower > led.upper)
        throw inconsistency_error(
            "inconsistent evidence: lower bound " + std::to_string(led.lower) + " (" +
            led.lower_tag + ") exceeds upper bound " + std::to_string(led.upper) + " (" +
            led.upper_tag + ")" +
            (affine_name.empty() ? "" : "; affine evidence: " + affine_name) +
            (notaffine_name.empty() ? "" : "; non-affine evidence: " + notaffine_name));

    if (!affine_name.empty()) {
        led.verdict = Verdict::affine;
        led.verdict_tag = affine_kind_tag;
    } else if (!notaffine_name.empty() || led.lower >= 2) {
        led.verdict = Verdict::not_affine;
        led.verdict_tag = (notaffine_name.empty() || notaffine_from_witness)
                              ? "superheight-above-one"
                              : "codimension-obstruction";
        led.notes.push_back(
            "superheight >= 2 rules out affineness (an affine D(a) forces every "
            "finite-type extension of a to have height <= 1; preimages of affine opens "
            "are affine, and localizing at a deep prime preserves the obstruction)");
    } else if (algebra_dimension(A, opts) == 2 && led.upper <= 1) {
        led.verdict = Verdict::affine;
        led.verdict_tag = "dimension-two-rule";
    } else if (sections_finitely_generated && led.upper <= 1) {
        led.verdict = Verdict::affine;
        led.verdict_tag = "finitely-generated-sections-rule";
    } else {
        led.verdict = Verdict::unknown;
        led.verdict_tag = "insufficient-evidence";
    }

    led.notes.push_back(
        "base is a field: superheight and finite superheight agree (finite-type collapse)");
    return led;
}

} // namespace codim1
