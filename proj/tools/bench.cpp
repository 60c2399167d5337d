// Compares the serial reference path against the OpenMP path on a fixed
// workload: per-object analysis, the sequence suite, and fibration
// verification over a small generated corpus. Results must agree; the
// table reports wall time per stage.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lhom/fibcat.hpp"
#include "lhom/reports.hpp"

using namespace lhom;

namespace {

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t instances = 24;
    if (argc > 1) instances = static_cast<std::size_t>(std::stoul(argv[1]));

    std::vector<DoubleComplex> corpus;
    const auto configs = standard_corpus();
    for (std::size_t i = 0; i < configs.size() && corpus.size() < instances; ++i)
        corpus.push_back(generate(configs[i]));

#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in\n");
#endif
    std::printf("corpus: %zu instance(s)\n\n", corpus.size());

    struct Stage {
        const char* name;
        double serial = 0, parallel = 0;
    };
    Stage stages[3] = {{"analyze"}, {"suite"}, {"fibration"}};

    std::string digest_serial, digest_parallel;
    for (int pass = 0; pass < 2; ++pass) {
        const ExecMode mode = pass == 0 ? ExecMode::Serial : ExecMode::Parallel;
        double& a = pass == 0 ? stages[0].serial : stages[0].parallel;
        double& s = pass == 0 ? stages[1].serial : stages[1].parallel;
        double& f = pass == 0 ? stages[2].serial : stages[2].parallel;
        std::string digest;
        for (const DoubleComplex& dc : corpus) {
            a += timed([&] {
                const auto objects = analyze_all(dc, mode);
                for (const auto& o : objects)
                    digest += std::to_string(o.homs.at(LKind::Astar).dim());
            });
            s += timed([&] {
                const SuiteReport r = run_suite(dc, mode);
                digest += report_suite(r).dump();
            });
            f += timed([&] {
                const FibBuild b = build_fibration(dc, mode);
                const FibReport r = verify_fibration(b, mode);
                digest += report_fibration(r).dump();
            });
        }
        (pass == 0 ? digest_serial : digest_parallel) = std::move(digest);
    }

    std::printf("%-12s %10s %10s %8s\n", "stage", "serial(s)", "openmp(s)", "speedup");
    for (const Stage& st : stages)
        std::printf("%-12s %10.3f %10.3f %7.2fx\n", st.name, st.serial, st.parallel,
                    st.parallel > 0 ? st.serial / st.parallel : 0.0);
    std::printf("\nresults identical: %s\n", digest_serial == digest_parallel ? "yes" : "NO");
    return digest_serial == digest_parallel ? 0 : 1;
}
