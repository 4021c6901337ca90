#pragma once

// Named verification suites, one per library module, each exercising that
// module's algebraic invariants at a given dimension. Shared by the CLI
// `verify` subcommand and the test binaries.

#include <cstdint>
#include <string>
#include <vector>

namespace qps::suites {

struct Check {
    std::string name;
    double max_residual;
    double tol;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    int dim;
    bool skipped = false;
    std::string skip_reason;
    std::vector<Check> checks;
    bool pass() const {
        if (skipped) return true;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// deterministic seeded generator used by every randomized check
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    int64_t below(int64_t n) { return static_cast<int64_t>(next() % static_cast<uint64_t>(n)); }
};

const std::vector<std::string>& suite_names();

// Throws std::domain_error when `dim` is outside the suite's domain
// (e.g. metaplectic needs an odd prime).
SuiteReport run_suite(const std::string& name, int dim, uint64_t seed,
                      double tol_scale = 1.0, int kappa = 1);

// every suite; out-of-domain ones come back marked skipped
std::vector<SuiteReport> run_all(int dim, uint64_t seed, double tol_scale = 1.0,
                                 int kappa = 1);

}  // namespace qps::suites
