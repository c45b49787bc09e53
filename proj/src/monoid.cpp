#include "codim1/monoid.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "codim1/errors.hpp"

namespace codim1 {

namespace {

// Rank over Q by fraction-free-ish Gaussian elimination on exact rationals.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            mpq_class factor = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Columns are the n vectors; rows are the d coordinates.
std::vector<std::vector<mpq_class>> column_matrix(
    const std::vector<std::vector<std::int64_t>>& vecs, std::size_t dim) {
    std::size_t n = vecs.size();
    std::vector<std::vector<mpq_class>> m(dim, std::vector<mpq_class>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < dim; ++i)
            m[i][j] = static_cast<long>(vecs[j][i]);
    return m;
}

} // namespace

AffineMonoid AffineMonoid::make(std::size_t rank,
                                std::vector<std::vector<std::int64_t>> generators,
                                bool positive, bool normal) {
    if (rank == 0) throw input_error("monoid: ambient lattice rank must be positive");
    if (generators.empty()) throw input_error("monoid: at least one generator is required");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != rank)
            throw input_error("monoid: generator " + std::to_string(i + 1) + " has " +
                              std::to_string(generators[i].size()) + " coordinates, expected " +
                              std::to_string(rank));
        bool all_zero = std::all_of(generators[i].begin(), generators[i].end(),
                                    [](std::int64_t c) { return c == 0; });
        if (all_zero)
            throw input_error("monoid: generator " + std::to_string(i + 1) + " is zero");
    }
    return AffineMonoid{rank, std::move(generators), positive, normal};
}

void verify_embedding(const AffineMonoid& m, const IntersectionEmbedding& e) {
    if (e.s + e.k == 0)
        throw input_error("embedding: target Z^s x N^k must have positive rank");
    if (e.images.size() != m.generators.size())
        throw input_error("embedding: " + std::to_string(e.images.size()) +
                          " images for " + std::to_string(m.generators.size()) +
                          " monoid generators");
    for (std::size_t i = 0; i < e.images.size(); ++i) {
        if (e.images[i].size() != e.s + e.k)
            throw input_error("embedding: image " + std::to_string(i + 1) + " has " +
                              std::to_string(e.images[i].size()) + " coordinates, expected " +
                              std::to_string(e.s + e.k));
        for (std::size_t j = e.s; j < e.s + e.k; ++j)
            if (e.images[i][j] < 0)
                throw evidence_error(
                    "embedding: image " + std::to_string(i + 1) +
                    " has a negative coordinate in the non-negative block");
    }

    // The images must satisfy exactly the linear relations of the
    // generators: rank(G) = rank(E) = rank of G stacked on E.
    auto g = column_matrix(m.generators, m.rank);
    auto im = column_matrix(e.images, e.s + e.k);
    auto stacked = g;
    stacked.insert(stacked.end(), im.begin(), im.end());
    std::size_t rg = rational_rank(std::move(g));
    std::size_t re = rational_rank(std::move(im));
    std::size_t rs = rational_rank(std::move(stacked));
    if (rs != rg)
        throw evidence_error(
            "embedding: images break a linear relation among the monoid generators "
            "(the induced group map is not well defined)");
    if (re != rg)
        throw evidence_error(
            "embedding: images satisfy an extra linear relation "
            "(the induced group map is not injective)");
}

ToricPresentation toric_presentation(const AffineMonoid& m, CoeffField field,
                                     const GroebnerOptions& opts) {
    std::size_t n = m.generators.size();
    std::size_t d = m.rank;

    std::vector<std::string> names;
    names.reserve(n + 2 * d);
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < d; ++j) names.push_back("~t" + std::to_string(j + 1));
    for (std::size_t j = 0; j < d; ++j) names.push_back("~u" + std::to_string(j + 1));
    auto big = PolyRing::make(names, field);

    std::vector<Polynomial> rels;
    rels.reserve(n + d);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> exps(big->arity(), 0);
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t c = m.generators[i][j];
            if (c >= 0)
                exps[n + j] = static_cast<std::uint32_t>(c);
            else
                exps[n + d + j] = static_cast<std::uint32_t>(-c);
        }
        rels.push_back(Polynomial::variable(big, i) -
                       Polynomial::monomial(big, Monomial(std::move(exps)), Scalar::one(field)));
    }
    for (std::size_t j = 0; j < d; ++j)
        rels.push_back(Polynomial::variable(big, n + j) * Polynomial::variable(big, n + d + j) -
                       Polynomial::one(big));

    std::vector<std::string> keep(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n));
    IdealGens kernel = elim_to_subring(IdealGens::make(big, rels), keep, opts);

    PresentedAlgebra::Flags flags;
    flags.is_domain = true; // kernels of monomial maps are prime
    return ToricPresentation{PresentedAlgebra::make(kernel.ring, kernel.gens, flags)};
}

AlgebraMap build_extension(const AffineMonoid& m, const IntersectionEmbedding& e,
                           const ToricPresentation& p, const GroebnerOptions& opts) {
    verify_embedding(m, e);
    if (p.algebra->ring()->arity() != m.generators.size())
        throw input_error("extension: presentation has " +
                          std::to_string(p.algebra->ring()->arity()) +
                          " variables for " + std::to_string(m.generators.size()) +
                          " monoid generators");

    auto field = p.algebra->ring()->field();
    auto target = PresentedAlgebra::make_laurent(e.s, e.k, field);
    const auto& tr = target->ring();

    std::vector<Polynomial> images;
    images.reserve(e.images.size());
    for (const auto& img : e.images) {
        std::vector<std::uint32_t> exps(tr->arity(), 0);
        for (std::size_t j = 0; j < e.s; ++j) {
            std::int64_t c = img[j];
            if (c >= 0)
                exps[j] = static_cast<std::uint32_t>(c); // V_j
            else
                exps[e.s + j] = static_cast<std::uint32_t>(-c); // W_j
        }
        for (std::size_t j = 0; j < e.k; ++j)
            exps[2 * e.s + j] = static_cast<std::uint32_t>(img[e.s + j]); // T_j
        images.push_back(Polynomial::monomial(tr, Monomial(std::move(exps)), Scalar::one(field)));
    }

    AlgebraMap phi(p.algebra, target, images);
    if (!check_map(phi, opts))
        throw evidence_error("extension: embedding images do not respect the monoid relations");
    return phi;
}

VerifiedEvidence monoid_affine(const AffineMonoid& m, const IntersectionEmbedding& e,
                               const ToricPresentation& p, const IdealInAlgebra& a,
                               const std::string& evidence_name, const GroebnerOptions& opts) {
    if (a.algebra() != p.algebra)
        throw input_error("monoid decision: the ideal does not live in the given presentation");
    auto phi = build_extension(m, e, p, opts);
    auto ext = extend_ideal(phi, a, opts);

    VerifiedEvidence ev;
    ev.kind = VerifiedEvidence::Kind::monoid_bight;
    ev.name = evidence_name;
    bool small = bight_leq_one(ext, opts);
    if (!small) {
        ev.verdict = Verdict::not_affine;
        ev.height = 2;
    } else if (!ext.is_zero() || a.is_zero()) {
        ev.verdict = Verdict::affine;
        ev.height = 1;
    } else {
        ev.verdict = Verdict::unknown;
    }
    return ev;
}

} // namespace codim1
