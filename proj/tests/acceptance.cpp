// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include "neil/verify.hpp"

#include <cstdio>
#include <cstdlib>

int main() {
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("NEIL_SEED")) seed = std::strtoull(env, nullptr, 10);

    const auto result = neil::verify::run_suite("all", seed);
    int failures = 0;
    for (const auto& c : result.criteria) {
        std::printf("%s criterion %2d: %s [%s]\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(result.criteria.size()) - failures,
                result.criteria.size());
    return failures == 0 ? 0 : 1;
}
