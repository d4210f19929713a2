#include "rq/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

int main(int argc, char** argv)
{
    rq::VerifyOptions opts;
    opts.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* seed = std::getenv("RQ_SEED")) opts.seed = std::strtoull(seed, nullptr, 10);
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
    auto results = rq::run_acceptance(opts, [](const rq::CriterionResult& r) {
        std::printf("%s\n", rq::format_result(r).c_str());
        std::fflush(stdout);
    });
    bool ok = rq::acceptance_ok(results);
    std::printf("%s\n", ok ? "acceptance: OK" : "acceptance: FAILED");
    return ok ? 0 : 1;
}
