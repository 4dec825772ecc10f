#include <cstdio>

#include "twistkit/acceptance.hpp"

int main() {
    const auto results = twistkit::run_acceptance_cases();
    if (results.empty()) {
        std::printf("[FAIL] no verification cases registered\n");
        return 1;
    }
    int failures = 0;
    for (const auto& result : results) {
        if (result.status == "pass") {
            std::printf("[PASS] %s\n", result.name.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] %s: %s\n", result.name.c_str(), result.details.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
