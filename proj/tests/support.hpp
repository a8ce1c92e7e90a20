#pragma once

// Shared oracles for the test suites. Everything here recomputes expected
// values from first principles, independent of the library code paths under
// test.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgvx/lattices.hpp"
#include "lgvx/poly.hpp"
#include "lgvx/selftest.hpp"

namespace testsupport {

using lgvx::Integer;
using lgvx::WeightPoly;

inline std::map<std::string, Integer> ones_xyz() {
    return {{"x", 1}, {"y", 1}, {"z", 1}};
}

inline std::map<std::string, Integer> ones_xy() {
    return {{"x", 1}, {"y", 1}};
}

// Total weight of (1,0)/(0,1)/(1,1)-step paths from (0,0) to (n,k), by
// explicit path enumeration over {x,y,z}.
inline WeightPoly delannoy_brute(int n, int k) {
    const auto& vars = lgvx::tri_vars();
    WeightPoly total(vars);
    // exponents: (#x-steps, #y-steps, #z-steps)
    std::function<void(int, int, int, int, int)> walk = [&](int p, int q, int ex, int ey, int ez) {
        if (p == n && q == k) {
            total += WeightPoly::monomial(vars, 1,
                                          {static_cast<std::uint32_t>(ex),
                                           static_cast<std::uint32_t>(ey),
                                           static_cast<std::uint32_t>(ez)});
            return;
        }
        if (p < n) walk(p + 1, q, ex + 1, ey, ez);
        if (q < k) walk(p, q + 1, ex, ey + 1, ez);
        if (p < n && q < k) walk(p + 1, q + 1, ex, ey, ez + 1);
    };
    walk(0, 0, 0, 0, 0);
    return total;
}

// Total weight of the length-n paths (0,0) -> (n,n) with steps (1,0), (0,1),
// (1,1) that never pass below the diagonal q = p.
inline WeightPoly schroder_brute(int n) {
    const auto& vars = lgvx::tri_vars();
    WeightPoly total(vars);
    std::function<void(int, int, int, int, int)> walk = [&](int p, int q, int ex, int ey, int ez) {
        if (q < p) return;
        if (p == n && q == n) {
            total += WeightPoly::monomial(vars, 1,
                                          {static_cast<std::uint32_t>(ex),
                                           static_cast<std::uint32_t>(ey),
                                           static_cast<std::uint32_t>(ez)});
            return;
        }
        if (p < n) walk(p + 1, q, ex + 1, ey, ez);
        if (q < n) walk(p, q + 1, ex, ey + 1, ez);
        if (p < n && q < n) walk(p + 1, q + 1, ex, ey, ez + 1);
    };
    walk(0, 0, 0, 0, 0);
    return total;
}

// Dyck-path total weight over {x,y}: (1,0)/(0,1) steps staying weakly above
// the diagonal.
inline WeightPoly catalan_brute(int n) {
    const auto& vars = lgvx::grid_vars();
    WeightPoly total(vars);
    std::function<void(int, int)> walk = [&](int p, int q) {
        if (q < p) return;
        if (p == n && q == n) {
            total += WeightPoly::monomial(vars, 1,
                                          {static_cast<std::uint32_t>(n),
                                           static_cast<std::uint32_t>(n)});
            return;
        }
        if (p < n) walk(p + 1, q);
        if (q < n) walk(p, q + 1);
    };
    walk(0, 0);
    return total;
}

// Exact value of the triple product formula for boxed plane partitions.
inline Integer macmahon_box(int a, int b, int c) {
    Integer numer = 1, denom = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) {
                numer *= i + j + k - 1;
                denom *= i + j + k - 2;
            }
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw std::runtime_error("box product is not an integer");
    return q;
}

// Random polynomial over the given variables, for property tests.
inline WeightPoly random_poly(lgvx::Rng& rng, const std::vector<std::string>& vars,
                              int max_terms = 4, int max_exp = 3, int max_coef = 9) {
    WeightPoly p(vars);
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        lgvx::Exponents e;
        for (std::size_t k = 0; k < vars.size(); ++k)
            e.push_back(static_cast<std::uint32_t>(rng.range(0, max_exp)));
        int coef = rng.range(-max_coef, max_coef);
        p += WeightPoly::monomial(vars, coef, std::move(e));
    }
    return p;
}

} // namespace testsupport
