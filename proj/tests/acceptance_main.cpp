// Acceptance suite driver: runs every criterion at its stated tolerance and
// prints one PASS/FAIL/SKIP line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>

#include "adl/acceptance.hpp"

int main() {
    adl::acceptance::RunConfig cfg;
    if (const char* env = std::getenv("ADL_CACHE_DIR")) cfg.cache_dir = env;
    if (const char* env = std::getenv("ADL_SIEVE_CEILING"))
        cfg.sieve_ceiling = std::strtoull(env, nullptr, 10);
    auto rep = adl::acceptance::run_full(cfg);
    std::fputs(rep.text.c_str(), stdout);
    return rep.all_passed() ? 0 : 1;
}
