// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "meander/verify.hpp"

#include <chrono>
#include <iostream>

int main() {
    using namespace meander;
    const VerifyOptions options; // enumeration N<=9, index N<=8, oracle N<=6, symmetry and theorem N<=7, 3 seeds
    bool all = true;
    using Check = CriterionResult (*)(const VerifyOptions &);
    for (Check check : {&check_enumeration, &check_index_laws, &check_oracle, &check_symmetries, &check_theorem,
                        &check_fixtures, &check_serialization}) {
        auto start = std::chrono::steady_clock::now();
        auto r = check(options);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (r.ok() ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.shapes
                  << " shapes, " << r.instances << " instances, " << r.failures << " failures, " << secs << " s";
        if (!r.ok())
            std::cout << "; first failure: " << r.first_failure;
        std::cout << "\n";
        all = all && r.ok();
    }
    return all ? 0 : 1;
}
