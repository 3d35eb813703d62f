// OpenMP kernels against their serial references on the same inputs. The
// OpenMP variants run at one thread and at every available core, so the
// integer fast paths and the parallel speedup show up separately.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "toricsmith/kernels.hpp"
#include "toricsmith/random.hpp"

using namespace toricsmith;

namespace {

constexpr unsigned kScanBound = 8;

// Serial references ignore the argument; OpenMP kernels use it as the thread count.
void use_threads(const benchmark::State& state) { omp_set_num_threads(static_cast<int>(state.range(0))); }

void thread_counts(benchmark::internal::Benchmark* b) {
    b->ArgName("threads")->Arg(1);
    if (omp_get_num_procs() > 1) b->Arg(omp_get_num_procs());
}

LabeledPolytope workload() {
    RandomOptions opts;
    opts.min_dim = 4;
    opts.max_dim = 4;
    opts.max_constraints = 16;
    return random_polytope(7, opts);
}

struct Normals {
    std::vector<IntVector> w;
    RatVector l;
};

Normals normals(const LabeledPolytope& p) {
    Normals out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.w.push_back(p.primitive_normal(i));
        out.l.push_back(p[i].offset / Rational(p.label(i)));
    }
    return out;
}

template <VertexSet (*Fn)(const LabeledPolytope&)>
void vertices(benchmark::State& state) {
    use_threads(state);
    const auto p = workload();
    for (auto _ : state) benchmark::DoNotOptimize(Fn(p));
}

template <std::vector<IntVector> (*Fn)(const LabeledPolytope&, const IntVector&, const IntVector&)>
void lattice(benchmark::State& state) {
    use_threads(state);
    const auto p = workload();
    const IntVector lo(p.dim(), Integer(-6)), hi(p.dim(), Integer(6));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(p, lo, hi));
}

template <std::vector<char> (*Fn)(const std::vector<kernels::RedundancyQuery>&)>
void redundancy(benchmark::State& state) {
    use_threads(state);
    const auto p = workload();
    std::vector<kernels::RedundancyQuery> queries;
    for (std::size_t i = 0; i < p.size(); ++i) queries.push_back({&p, i});
    for (auto _ : state) benchmark::DoNotOptimize(Fn(queries));
}

template <std::vector<kernels::Relation> (*Fn)(const std::vector<IntVector>&, const RatVector&)>
void circuits(benchmark::State& state) {
    use_threads(state);
    const auto n = normals(workload());
    for (auto _ : state) benchmark::DoNotOptimize(Fn(n.w, n.l));
}

template <std::optional<kernels::Relation> (*Fn)(const std::vector<IntVector>&, const RatVector&, unsigned)>
void relation_scan(benchmark::State& state) {
    use_threads(state);
    const auto n = normals(workload());
    for (auto _ : state) benchmark::DoNotOptimize(Fn(n.w, n.l, kScanBound));
}

}  // namespace

#define SERIAL(fn, name) BENCHMARK(fn)->Name(name "/serial")->Arg(1)->Unit(benchmark::kMillisecond)
#define PARALLEL(fn, name) BENCHMARK(fn)->Name(name "/omp")->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime()

SERIAL(vertices<kernels::serial::basic_vertices>, "vertices");
PARALLEL(vertices<kernels::omp::basic_vertices>, "vertices");
SERIAL(lattice<kernels::serial::lattice_points>, "lattice_points");
PARALLEL(lattice<kernels::omp::lattice_points>, "lattice_points");
SERIAL(redundancy<kernels::serial::redundancy>, "redundancy");
PARALLEL(redundancy<kernels::omp::redundancy>, "redundancy");
SERIAL(circuits<kernels::serial::circuits>, "circuits");
PARALLEL(circuits<kernels::omp::circuits>, "circuits");
SERIAL(relation_scan<kernels::serial::relation_scan>, "relation_scan");
PARALLEL(relation_scan<kernels::omp::relation_scan>, "relation_scan");

BENCHMARK_MAIN();
