#include "codim1/groebner.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace codim1;

// A deterministic batch of dense-ish polynomials to reduce against a fixed
// Groebner basis: the serial and parallel paths must produce identical
// results, this target compares their throughput.
struct Fixture {
    RingPtr ring;
    GroebnerBasis gb;
    std::vector<Polynomial> batch;

    static const Fixture& instance() {
        static Fixture f = build();
        return f;
    }

    static Fixture build() {
        CoeffField q = CoeffField::rationals();
        RingPtr ring = PolyRing::make({"x", "y", "z", "w"}, q);
        auto v = [&](std::size_t i, std::uint32_t p = 1) {
            return Polynomial::variable(ring, i, p);
        };
        std::vector<Polynomial> gens = {
            v(0, 2) + v(1) * v(2) - Polynomial::one(ring),
            v(1, 2) - v(2) * v(3),
            v(2, 3) - v(0) * v(3),
        };
        GroebnerBasis gb = groebner_basis(ring, gens);

        std::mt19937_64 rng(20240817);
        std::uniform_int_distribution<std::uint32_t> deg(0, 3);
        std::uniform_int_distribution<long> coeff(-9, 9);
        std::vector<Polynomial> batch;
        for (int n = 0; n < 64; ++n) {
            Polynomial f = Polynomial::zero(ring);
            for (int t = 0; t < 24; ++t) {
                std::vector<std::uint32_t> e = {deg(rng), deg(rng), deg(rng), deg(rng)};
                long c = coeff(rng);
                if (c == 0) c = 1;
                f = f + Polynomial::monomial(ring, Monomial(std::move(e)),
                                             Scalar::from_int(q, c));
            }
            batch.push_back(std::move(f));
        }
        return Fixture{std::move(ring), std::move(gb), std::move(batch)};
    }
};

void BM_NormalFormBatchSerial(benchmark::State& state) {
    const Fixture& f = Fixture::instance();
    for (auto _ : state) {
        auto out = normal_form_batch(f.batch, f.gb, ExecMode::serial);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_NormalFormBatchSerial);

void BM_NormalFormBatchParallel(benchmark::State& state) {
    const Fixture& f = Fixture::instance();
    for (auto _ : state) {
        auto out = normal_form_batch(f.batch, f.gb, ExecMode::parallel);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_NormalFormBatchParallel);

void BM_GroebnerCyclic4(benchmark::State& state) {
    CoeffField q = CoeffField::rationals();
    RingPtr ring = PolyRing::make({"a", "b", "c", "d"}, q);
    auto v = [&](std::size_t i) { return Polynomial::variable(ring, i); };
    std::vector<Polynomial> gens = {
        v(0) + v(1) + v(2) + v(3),
        v(0) * v(1) + v(1) * v(2) + v(2) * v(3) + v(3) * v(0),
        v(0) * v(1) * v(2) + v(1) * v(2) * v(3) + v(2) * v(3) * v(0) + v(3) * v(0) * v(1),
        v(0) * v(1) * v(2) * v(3) - Polynomial::one(ring),
    };
    for (auto _ : state) {
        auto gb = groebner_basis(ring, gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_GroebnerCyclic4);

} // namespace

BENCHMARK_MAIN();
