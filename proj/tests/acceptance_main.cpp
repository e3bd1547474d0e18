#include <cstdio>

#include "bergman/verification.hpp"

int main() {
    auto results = bergman::verification::run_verification_suite();
    for (const auto& r : results) {
        std::printf("%s  criterion %2d: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
    }
    return bergman::verification::all_pass(results) ? 0 : 1;
}
