#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "kgwave/acceptance.hpp"

int main(int argc, char** argv)
{
    kgwave::acceptance::Options opt;
    opt.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    for (int i = 1; i < argc; ++i) {
        opt.only.push_back(std::atoi(argv[i]));
    }
    int failed = 0;
    kgwave::acceptance::run(opt, [&](const kgwave::acceptance::CriterionResult& r) {
        if (!r.pass) ++failed;
        std::printf("criterion %2d %-34s %s  measured=%.6g tolerance=%.3g time=%.1fs\n    %s\n", r.id,
                    r.name.c_str(), r.pass ? "PASS" : "FAIL", r.measured, r.tolerance, r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
