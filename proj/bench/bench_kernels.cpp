// Timing comparison of the serial reference engines against the OpenMP
// kernels, run on catalog codes so the workloads are the real ones.

#include "sdc/catalog.hpp"
#include "sdc/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <string>

namespace {

template <typename F> double time_ms(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms)
{
    std::printf("%-26s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Serial vs parallel engine timings"};
    std::string id = "C82.1";
    uint32_t wmax = 16;
    int threads = 0;
    app.add_option("--id", id, "Catalog entry to measure on");
    app.add_option("--wmax", wmax, "Census depth");
    app.add_option("--threads", threads, "Thread count for the parallel engines");
    CLI11_PARSE(app, argc, argv);

    const auto& cat = sdc::Catalog::embedded();
    sdc::BinaryCode code = cat.build(id);
    std::printf("code %s: length %zu, k %zu\n", id.c_str(), code.length(), code.dim());
    std::printf("%-26s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    uint32_t ds = 0, dp = 0;
    double s = time_ms([&] { ds = sdc::serial::min_distance_bz(code); });
    double p = time_ms([&] { dp = sdc::min_distance_bz(code, threads); });
    row("min_distance_bz", s, p);
    if (ds != dp) {
        std::fprintf(stderr, "engine mismatch: serial d=%u parallel d=%u\n", ds, dp);
        return 1;
    }

    sdc::WeightProfile cs, cp;
    s = time_ms([&] { cs = sdc::serial::low_weight_census(code, wmax); });
    p = time_ms([&] { cp = sdc::low_weight_census(code, wmax, threads); });
    row(("census to " + std::to_string(wmax)).c_str(), s, p);
    if (cs.census != cp.census) {
        std::fprintf(stderr, "engine mismatch: census differs\n");
        return 1;
    }

    if (code.dim() <= 30) {
        sdc::WeightProfile es, ep;
        s = time_ms([&] { es = sdc::serial::weight_distribution_exhaustive(code); });
        p = time_ms([&] { ep = sdc::weight_distribution_exhaustive(code, threads); });
        row("exhaustive distribution", s, p);
        if (es.census != ep.census) {
            std::fprintf(stderr, "engine mismatch: distribution differs\n");
            return 1;
        }
    }
    return 0;
}
