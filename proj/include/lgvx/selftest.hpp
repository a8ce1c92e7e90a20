#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lgvx/drawing.hpp"

namespace lgvx {

// Deterministic splitmix64 stream; identical seeds give identical instances
// on every platform (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    // Inclusive bounds.
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool percent(int p) { return below(100) < static_cast<std::uint64_t>(p); }

private:
    std::uint64_t state_;
};

struct RandomInstance {
    Drawing drawing;
    MarkedConfig config;
    std::string description;
};

// A random grid (up to 5x5) or rhombus (up to N = 4) with a random subgraph
// mask preserving U -> V reachability and 1 <= n <= 3 marked pairs.
RandomInstance random_small_instance(Rng& rng);

// Copy of d with in_subgraph recomputed from `keep` (indexed by edge id).
Drawing apply_subgraph_mask(const Drawing& d, const std::vector<char>& keep);

struct SuiteResult {
    std::string name;
    int instances = 0;
    int checks = 0;
    int failures = 0;
    std::string first_failure;
};

SuiteResult run_determinant_suite(Rng& rng, int instances, bool inject_sign_fault);
SuiteResult run_lgv_suite(Rng& rng, int instances);
SuiteResult run_involution_suite(Rng& rng, int instances);
SuiteResult run_lemma_suite(Rng& rng, int instances);
SuiteResult run_bijection_suite(Rng& rng, int instances);
SuiteResult run_translation_suite(Rng& rng, int instances);

struct SelftestOptions {
    std::uint64_t seed = 1;
    int instances = 24;
    bool inject_sign_fault = false; // test-only hook: perturbs one matrix entry
};

struct SelftestReport {
    std::vector<SuiteResult> suites;
    bool passed = true;
};

SelftestReport run_selftest(const SelftestOptions& options, std::ostream& out);

} // namespace lgvx
