#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codim1/certify.hpp"
#include "codim1/monoid.hpp"
#include "codim1/surface.hpp"

namespace codim1 {

// Parses an infix polynomial expression ("X1^2*Y - 3/2*Z + 1") in the given
// ring.  Exposed for tests and fuzzing; throws input_error with a
// line/column diagnostic on malformed input.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// A parsed session: named declarations (in file order) plus task directives.
// All cross-references are resolved at parse time — declarations precede use
// and names are unique across kinds.
struct Session {
    struct RingDecl {
        std::string name;
        RingPtr ring;
    };
    struct AlgebraDecl {
        std::string name;
        std::string ring_name;
        AlgebraPtr algebra;
    };
    struct IdealDecl {
        std::string name;
        std::string algebra_name;
        IdealInAlgebra ideal;
    };
    struct MapDecl {
        std::string name;
        std::string source_name;
        std::string target_name;
        AlgebraMap map;
    };
    struct WitnessDecl {
        std::string name;
        std::string map_name;
        std::int64_t claimed_height = 0;
    };
    struct CertificateDecl {
        std::string name;
        std::string ideal_name;
        AffinenessCertificate certificate;
    };
    struct MonoidDecl {
        std::string name;
        AffineMonoid monoid;
        ToricPresentation presentation; // registered as an algebra under `name`
    };
    struct EmbeddingDecl {
        std::string name;
        std::string monoid_name;
        IntersectionEmbedding embedding;
    };
    struct LatticeDecl {
        std::string name;
        LatticePtr lattice;
        bool is_blowup = false;
        std::size_t blowup_points = 0;
    };
    struct ClassDecl {
        std::string name;
        std::string lattice_name;
        DivClass divclass;
        bool effective = false;
    };
    struct ConfigDecl {
        std::string name;
        std::string lattice_name;
        std::vector<std::pair<std::string, std::int64_t>> components; // class name, coeff
        std::vector<std::string> tests;
        std::vector<std::string> assumptions;
        CurveConfig config;
    };

    enum class TaskKind { ledger, monoid_affine, surface, purity };
    struct Task {
        TaskKind kind = TaskKind::ledger;
        std::string subject;               // ideal or config name
        std::vector<std::string> evidence; // ledger: witness/certificate names
        std::string via;                   // embedding or map name
        bool sections_finitely_generated = false;
        int line = 0;
    };

    std::vector<RingDecl> rings;
    std::vector<AlgebraDecl> algebras;
    std::vector<IdealDecl> ideals;
    std::vector<MapDecl> maps;
    std::vector<WitnessDecl> witnesses;
    std::vector<CertificateDecl> certificates;
    std::vector<MonoidDecl> monoids;
    std::vector<EmbeddingDecl> embeddings;
    std::vector<LatticeDecl> lattices;
    std::vector<ClassDecl> classes;
    std::vector<ConfigDecl> configs;
    std::vector<Task> tasks;

    // file order of the declarations, for canonical rendering
    enum class DeclKind {
        ring,
        algebra,
        ideal,
        map_,
        witness,
        certificate,
        monoid,
        embedding,
        lattice,
        divclass,
        config
    };
    std::vector<std::pair<DeclKind, std::size_t>> order;

    const RingDecl* find_ring(const std::string& n) const;
    const AlgebraDecl* find_algebra(const std::string& n) const;
    const IdealDecl* find_ideal(const std::string& n) const;
    const MapDecl* find_map(const std::string& n) const;
    const WitnessDecl* find_witness(const std::string& n) const;
    const CertificateDecl* find_certificate(const std::string& n) const;
    const MonoidDecl* find_monoid(const std::string& n) const;
    const EmbeddingDecl* find_embedding(const std::string& n) const;
    const LatticeDecl* find_lattice(const std::string& n) const;
    const ClassDecl* find_class(const std::string& n) const;
    const ConfigDecl* find_config(const std::string& n) const;

    // algebra declarations and toric presentations of monoids both resolve
    AlgebraPtr algebra_handle(const std::string& n) const;
};

// Parses a session; throws input_error with "line L, column C" diagnostics.
Session parse_session(const std::string& text);

// Canonical text for a parsed session; parse_session(render_session(s)) is
// semantically identical to s, and rendering is a fixpoint after one round.
std::string render_session(const Session& s);

} // namespace codim1
