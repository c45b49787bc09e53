#include <doctest.h>

#include <random>

#include "codim1/certify.hpp"

using namespace codim1;

namespace {

Polynomial var(const RingPtr& r, const char* name, std::uint32_t pow = 1) {
    auto i = r->var_index(name);
    REQUIRE(i);
    return Polynomial::variable(r, *i, pow);
}

// The quadric cone K[R,S,T,Z]/(RS−TZ) with the ideal (R,T) and its
// height-two reduction onto the plane K[R,T].
struct ConeSetup {
    AlgebraPtr A;
    AlgebraPtr plane;
    IdealInAlgebra a;
    HeightWitness witness;
};

ConeSetup cone_setup() {
    auto rr = PolyRing::make({"R", "S", "T", "Z"}, CoeffField::rationals());
    PresentedAlgebra::Flags dom;
    dom.is_domain = true;
    auto A = PresentedAlgebra::make(
        rr, {var(rr, "R") * var(rr, "S") - var(rr, "T") * var(rr, "Z")}, dom);
    PresentedAlgebra::Flags dom_fact = dom;
    dom_fact.is_factorial_ambient = true;
    auto plane = PresentedAlgebra::make(
        PolyRing::make({"R", "T"}, CoeffField::rationals()), {}, dom_fact);
    auto rt = plane->ring();
    AlgebraMap phi(A, plane,
                   {var(rt, "R"), Polynomial::zero(rt), var(rt, "T"), Polynomial::zero(rt)});
    auto a = IdealInAlgebra::make(A, {var(rr, "R"), var(rr, "T")});
    return ConeSetup{A, plane, a, HeightWitness{"reduce-to-plane", phi, 2}};
}

// The k = 1 member of the two-chart family: A = K[X1,X2,Y1,Y2]/(X1X2 +
// Y1X1² + Y2X2²), a = (X1, X2), sections W = X1-partner, Z = X2-partner with
// X1·W + X2·Z = 1 on D(a).
struct FamilySetup {
    AlgebraPtr A;
    IdealInAlgebra a;
    AffinenessCertificate cert;
};

FamilySetup family_setup(CoeffField field = CoeffField::rationals()) {
    auto r = PolyRing::make({"X1", "X2", "Y1", "Y2"}, field);
    auto X1 = var(r, "X1"), X2 = var(r, "X2"), Y1 = var(r, "Y1"), Y2 = var(r, "Y2");
    PresentedAlgebra::Flags dom;
    dom.is_domain = true;
    auto A = PresentedAlgebra::make(
        r, {X1 * X2 + Y1 * X1.pow(2) + Y2 * X2.pow(2)}, dom);
    auto a = IdealInAlgebra::make(A, {X1, X2});
    SectionChart W{{{-Y1, X2}, {X1 + Y2 * X2, X1.pow(2)}}};
    SectionChart Z{{{-Y2, X1}, {X2 + Y1 * X1, X2.pow(2)}}};
    return FamilySetup{A, a, AffinenessCertificate{"two-chart-unity", {W, Z}}};
}

} // namespace

TEST_SUITE("certify") {

TEST_CASE("height witness verifies and certifies non-affineness") {
    auto s = cone_setup();
    auto ev = verify_witness(s.a, s.witness);
    CHECK(ev.height == 2);
    CHECK(ev.verdict == Verdict::not_affine);
    CHECK_FALSE(ev.unit_extension);
}

TEST_CASE("identity witness gives the plain height, no verdict") {
    auto s = cone_setup();
    HeightWitness idw{"identity", AlgebraMap::identity(s.A), 1};
    auto ev = verify_witness(s.a, idw);
    CHECK(ev.height == 1);
    CHECK(ev.verdict == Verdict::unknown);
}

TEST_CASE("tampered witnesses are rejected, not repaired") {
    auto s = cone_setup();
    // wrong claimed height
    HeightWitness lied{"lied", s.witness.phi, 3};
    CHECK_THROWS_AS(verify_witness(s.a, lied), evidence_error);
    // ill-defined map: S -> R instead of 0 breaks the relation
    auto rt = s.plane->ring();
    AlgebraMap bad(s.A, s.plane,
                   {var(rt, "R"), var(rt, "R"), var(rt, "T"), Polynomial::zero(rt)});
    CHECK_THROWS_AS(verify_witness(s.a, HeightWitness{"bad-map", bad, 2}), evidence_error);
}

TEST_CASE("golden unity certificate verifies") {
    auto s = family_setup();
    auto out = verify_affine_certificate(s.a, s.cert);
    CHECK(out.ok);
    CHECK(out.failure.empty());
    auto ev = require_affine_certificate(s.a, s.cert);
    CHECK(ev.verdict == Verdict::affine);
}

TEST_CASE("constant section certifies the whole space") {
    auto r = PolyRing::make({"x"}, CoeffField::rationals());
    auto A = PresentedAlgebra::make(r, {}, {});
    auto a = IdealInAlgebra::make(A, {Polynomial::one(r)});
    AffinenessCertificate c{"constant", {SectionChart{{{Polynomial::one(r), Polynomial::one(r)}}}}};
    CHECK(verify_affine_certificate(a, c).ok);
}

TEST_CASE("mutated certificates fail with the right stage") {
    auto s = family_setup();

    // +1 on one numerator: charts of the section stop agreeing
    auto broken = s.cert;
    broken.sections[0].charts[0].first =
        broken.sections[0].charts[0].first + Polynomial::one(s.A->ring());
    auto out1 = verify_affine_certificate(s.a, broken);
    CHECK_FALSE(out1.ok);
    CHECK(out1.failure.find("compatibility failure") != std::string::npos);

    // doubling both numerators of one section keeps it self-compatible but
    // breaks the partition of unity
    auto doubled = s.cert;
    for (auto& ch : doubled.sections[0].charts)
        ch.first = ch.first * Scalar::from_int(s.A->ring()->field(), 2);
    auto out2 = verify_affine_certificate(s.a, doubled);
    CHECK_FALSE(out2.ok);
    CHECK(out2.failure.find("unity failure") != std::string::npos);

    // a denominator set that misses one generator of a
    auto uncovered = s.cert;
    uncovered.sections[0].charts.pop_back(); // leaves only denominator X2
    auto out3 = verify_affine_certificate(s.a, uncovered);
    CHECK_FALSE(out3.ok);
    CHECK(out3.failure.find("cover failure") != std::string::npos);

    // zero denominator is caught up front
    auto zeroden = s.cert;
    zeroden.sections[1].charts[0].second = Polynomial::zero(s.A->ring());
    auto out4 = verify_affine_certificate(s.a, zeroden);
    CHECK_FALSE(out4.ok);
    CHECK(out4.failure.find("denominator 0") != std::string::npos);

    // arity mismatch is an input error, not a failure verdict
    auto missing = s.cert;
    missing.sections.pop_back();
    CHECK_THROWS_AS(verify_affine_certificate(s.a, missing), input_error);
}

TEST_CASE("certificate semantics check out numerically over a prime field") {
    auto p = 101u;
    auto s = family_setup(CoeffField::prime(p));
    const auto& r = s.A->ring();
    auto field = r->field();
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pickv(1, static_cast<int>(p) - 1);

    int tested = 0;
    while (tested < 25) {
        // sample a point of V(X1X2 + Y1X1² + Y2X2²) with X1, X2 ≠ 0 by
        // solving for Y2
        Scalar x1 = Scalar::from_int(field, pickv(rng));
        Scalar x2 = Scalar::from_int(field, pickv(rng));
        Scalar y1 = Scalar::from_int(field, pickv(rng));
        Scalar y2 = -(x1 * x2 + y1 * x1 * x1) / (x2 * x2);
        std::vector<Scalar> pt = {x1, x2, y1, y2};
        REQUIRE(s.A->defining().gens[0].evaluate(pt).is_zero());

        // evaluate 1 = Σ qᵢ fᵢ on the first chart of each section
        Scalar sum = Scalar::zero(field);
        const std::vector<Polynomial>& gens = s.a.given();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& [num, den] = s.cert.sections[i].charts[0];
            Scalar dv = den.evaluate(pt);
            REQUIRE(!dv.is_zero());
            sum += num.evaluate(pt) / dv * gens[i].evaluate(pt);
        }
        CHECK(sum.is_one());
        ++tested;
    }
}

TEST_CASE("purity route on the plane") {
    PresentedAlgebra::Flags fl;
    fl.is_domain = true;
    fl.is_factorial_ambient = true;
    auto P = PresentedAlgebra::make(PolyRing::make({"x", "y"}, CoeffField::rationals()), {}, fl);
    auto r = P->ring();
    auto idm = AlgebraMap::identity(P);

    auto principal = IdealInAlgebra::make(P, {var(r, "x")});
    auto res1 = affine_via_purity(idm, principal);
    CHECK(res1.verdict == Verdict::affine);
    CHECK(res1.bight_leq_one);

    auto origin = IdealInAlgebra::make(P, {var(r, "x"), var(r, "y")});
    auto res2 = affine_via_purity(idm, origin);
    CHECK(res2.verdict == Verdict::not_affine);

    // wrong dimension refuses
    auto P3 = PresentedAlgebra::make(
        PolyRing::make({"x", "y", "z"}, CoeffField::rationals()), {}, fl);
    auto id3 = AlgebraMap::identity(P3);
    auto b = IdealInAlgebra::make(P3, {var(P3->ring(), "x")});
    CHECK_THROWS_AS(affine_via_purity(id3, b), evidence_error);
}

TEST_CASE("ledger: witness route gives [2,2] not-affine") {
    auto s = cone_setup();
    auto ev = verify_witness(s.a, s.witness);
    auto led = ledger_combine(s.a, {ev});
    CHECK(led.lower == 2);
    CHECK(led.lower_tag == "witness:reduce-to-plane");
    CHECK(led.upper == 2);
    CHECK(led.upper_tag == "ara-generator-count");
    CHECK(led.verdict == Verdict::not_affine);
    CHECK(led.verdict_tag == "superheight-above-one");
}

TEST_CASE("ledger: certificate route gives [1,1] affine") {
    auto s = family_setup();
    auto ev = require_affine_certificate(s.a, s.cert);
    auto led = ledger_combine(s.a, {ev});
    CHECK(led.lower == 1);
    CHECK(led.lower_tag == "ideal-height");
    CHECK(led.upper == 1);
    CHECK(led.upper_tag == "affine-implies-superheight-one");
    CHECK(led.verdict == Verdict::affine);
    CHECK(led.verdict_tag == "unity-partition");
}

TEST_CASE("ledger: punctured plane needs no explicit witness") {
    PresentedAlgebra::Flags fl;
    fl.is_domain = true;
    fl.is_factorial_ambient = true;
    auto P = PresentedAlgebra::make(PolyRing::make({"x", "y"}, CoeffField::rationals()), {}, fl);
    auto r = P->ring();
    auto a = IdealInAlgebra::make(P, {var(r, "x"), var(r, "y")});
    auto led = ledger_combine(a, {});
    CHECK(led.lower == 2);
    CHECK(led.upper == 2);
    CHECK(led.verdict == Verdict::not_affine);
}

TEST_CASE("ledger: zero and unit ideals") {
    PresentedAlgebra::Flags fl;
    fl.is_domain = true;
    auto P = PresentedAlgebra::make(PolyRing::make({"x"}, CoeffField::rationals()), {}, fl);
    auto r = P->ring();

    auto led0 = ledger_combine(IdealInAlgebra::make(P, {}), {});
    CHECK(led0.verdict == Verdict::affine);
    CHECK(led0.verdict_tag == "empty-set");
    CHECK(led0.lower == 0);
    CHECK(led0.upper == 0);

    auto led1 = ledger_combine(IdealInAlgebra::make(P, {Polynomial::one(r)}), {});
    CHECK(led1.verdict == Verdict::affine);
    CHECK(led1.verdict_tag == "whole-space");
    CHECK(led1.lower == 1);
    CHECK(led1.upper == 1);
}

TEST_CASE("ledger: contradictory evidence aborts naming both pieces") {
    auto s = family_setup();
    auto cert_ev = require_affine_certificate(s.a, s.cert);
    VerifiedEvidence fake;
    fake.kind = VerifiedEvidence::Kind::witness;
    fake.name = "fabricated";
    fake.height = 2;
    fake.verdict = Verdict::not_affine;
    try {
        ledger_combine(s.a, {cert_ev, fake});
        FAIL("expected inconsistency_error");
    } catch (const inconsistency_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("two-chart-unity") != std::string::npos);
        CHECK(msg.find("fabricated") != std::string::npos);
    }
}

TEST_CASE("ledger: adding evidence never widens the interval") {
    auto s = cone_setup();
    auto base = ledger_combine(s.a, {});
    auto ev = verify_witness(s.a, s.witness);
    auto more = ledger_combine(s.a, {ev});
    CHECK(more.lower >= base.lower);
    CHECK(more.upper <= base.upper);

    auto f = family_setup();
    auto base2 = ledger_combine(f.a, {});
    auto more2 = ledger_combine(f.a, {require_affine_certificate(f.a, f.cert)});
    CHECK(more2.lower >= base2.lower);
    CHECK(more2.upper <= base2.upper);
}

TEST_CASE("height chain: ht <= witness height <= generator count") {
    auto s = cone_setup();
    auto ev = verify_witness(s.a, s.witness);
    std::int64_t ht = ideal_height(s.a);
    CHECK(ht <= ev.height);
    CHECK(ev.height <= static_cast<std::int64_t>(s.a.reps().size()));

    auto f = family_setup();
    HeightWitness idw{"identity", AlgebraMap::identity(f.A), 1};
    auto ev2 = verify_witness(f.a, idw);
    CHECK(ideal_height(f.a) <= ev2.height);
    CHECK(ev2.height <= static_cast<std::int64_t>(f.a.reps().size()));
}

} // TEST_SUITE
