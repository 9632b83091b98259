// Serial reference vs OpenMP kernel timings.
//
//   primetree_bench [sieve_limit] [window_prime]

#include "primetree/forest.hpp"
#include "primetree/generator.hpp"
#include "primetree/primes.hpp"
#include "primetree/sieve.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace primetree;

namespace {

double seconds(const std::function<std::size_t()>& body, std::size_t& result) {
    auto t0 = std::chrono::steady_clock::now();
    result = body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, const std::function<std::size_t()>& serial, const std::function<std::size_t()>& parallel) {
    std::size_t rs = 0, rp = 0;
    double ts = seconds(serial, rs);
    double tp = seconds(parallel, rp);
    std::printf("%-28s %10.4f %10.4f %8.2fx %s\n", name, ts, tp, ts / tp, rs == rp ? "ok" : "MISMATCH");
}

Tree shifted(const Tree& t, std::uint32_t offset) {
    std::vector<Branch> out;
    for (const auto& b : t.branches()) out.push_back(Branch{Label{b.label.prime_index + offset, false}, shifted(b.subtree, offset)});
    return Tree::from_branches(std::move(out));
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t limit = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20'000'000;
    const std::uint64_t q = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20011;
    if (!is_prime(q)) {
        std::fprintf(stderr, "window_prime must be prime\n");
        return 2;
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

    row("eratosthenes", [&] { return eratosthenes(limit).size(); }, [&] { return eratosthenes_parallel(limit).size(); });

    const auto f = g_forest(3, 2);
    std::vector<Tree> g_trees;
    for (const auto& t : g_forest(2, 2)) g_trees.push_back(shifted(t, 3));
    const Forest g(std::move(g_trees));
    row("graft_forests 729x25", [&] { return graft_forests_serial(f, g).size(); }, [&] { return graft_forests(f, g).size(); });

    row("composites_in_window", [&] { return composites_in_window_serial(q).size(); }, [&] { return composites_in_window(q).size(); });
    return 0;
}
