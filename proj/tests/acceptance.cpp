// Acceptance suite: end-to-end checks with frozen expected values and
// independent oracles. Prints one pass/fail line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "lgvx/aztec.hpp"
#include "lgvx/graph_io.hpp"
#include "lgvx/involution.hpp"
#include "lgvx/lattices.hpp"
#include "lgvx/pathcount.hpp"
#include "lgvx/selftest.hpp"

#include "support.hpp"

using namespace lgvx;
using testsupport::ones_xy;
using testsupport::ones_xyz;

namespace {

struct Criterion {
    std::string name;
    std::function<void()> run; // throws on failure
};

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

WeightPoly PXY(const std::string& text) { return WeightPoly::parse(grid_vars(), text); }

int grid_id(const Drawing& d, long long x, long long y) {
    return *d.find_vertex(grid_vertex_name(x, y));
}

// 1. The 6x6 two-pair worked example, reproduced end-to-end.
void criterion_worked_example() {
    Drawing d = build_grid(6, 6, WeightPoly::variable(grid_vars(), "x"),
                           WeightPoly::variable(grid_vars(), "y"));
    require(validate_drawing(d).empty(), "6x6 grid must validate");
    MarkedConfig m;
    m.starts = {grid_id(d, 2, 0), grid_id(d, 0, 2)};
    m.ends = {grid_id(d, 3, 3), grid_id(d, 4, 4)};

    // Marked-point reconstruction check: entry path counts 4, 15, 4, 15.
    require(enumerate_paths(d, m.starts[0], m.ends[0]).size() == 4, "|P(u1,v1)| = 4");
    require(enumerate_paths(d, m.starts[1], m.ends[1]).size() == 15, "|P(u2,v2)| = 15");
    require(enumerate_paths(d, m.starts[1], m.ends[0]).size() == 4, "|P(u2,v1)| = 4");
    require(enumerate_paths(d, m.starts[0], m.ends[1]).size() == 15, "|P(u1,v2)| = 15");

    // Per-entry sign splits: 6/9 on u2->v2 and 14/1 on u1->v2.
    SignEvaluator eval(d, m);
    int pos = 0, neg = 0;
    for (const Path& p : enumerate_paths(d, m.starts[1], m.ends[1]))
        (eval.sign(p) > 0 ? pos : neg) += 1;
    require(pos == 6 && neg == 9, "u2->v2 sign split must be 6/9");
    pos = neg = 0;
    for (const Path& p : enumerate_paths(d, m.starts[0], m.ends[1]))
        (eval.sign(p) > 0 ? pos : neg) += 1;
    require(pos == 14 && neg == 1, "u1->v2 sign split must be 14/1");

    SignedMatrixResult res = matrix_M(d, m);
    require(res.M.at(0, 0) == PXY("-4*x*y^3"), "(1,1)-entry");
    require(res.M.at(0, 1) == PXY("13*x^2*y^4"), "(1,2)-entry");
    require(res.M.at(1, 0) == PXY("4*x^3*y"), "(2,1)-entry");
    require(res.M.at(1, 1) == PXY("-3*x^4*y^2"), "(2,2)-entry");
    require(res.normalized_count == PXY("40*x^5*y^5"), "normalized count");
    require(brute_force_nonintersecting(d, m) == PXY("40*x^5*y^5"), "brute-force agreement");
}

// 2. Randomized determinant-vs-oracle suite, 100 instances.
void criterion_determinant_oracle() {
    Rng rng(20240901);
    SuiteResult r = run_determinant_suite(rng, 100, false);
    require(r.instances == 100, "must run 100 instances");
    require(r.failures == 0, "determinant suite: " + r.first_failure);
}

// 3. The signed identity and its compatible-case collapse on the same
// instance distribution.
void criterion_lgv() {
    Rng rng(20240902);
    SuiteResult r = run_lgv_suite(rng, 100);
    require(r.failures == 0, "lgv suite: " + r.first_failure);
}

// 4. Involution properties over all path families of 3x3-grid instances.
void criterion_involution() {
    Rng rng(20240903);
    SuiteResult r = run_involution_suite(rng, 60);
    require(r.failures == 0, "involution suite: " + r.first_failure);
    require(r.checks >= 1000, "involution suite must cover many families");
}

// 5. Intersection-number lemmas on all eligible families.
void criterion_intersection_lemmas() {
    Rng rng(20240904);
    SuiteResult r = run_lemma_suite(rng, 60);
    require(r.failures == 0, "intersection lemmas: " + r.first_failure);
    require(r.checks >= 500, "lemma suite must cover many families");
}

// 6. Closed forms.
void criterion_closed_forms() {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k)
            require(weighted_delannoy(n, k) == weighted_delannoy_recurrence(n, k),
                    "closed form vs recurrence at (" + std::to_string(n) + "," +
                        std::to_string(k) + ")");
    std::vector<long> central{1, 3, 13, 63, 321};
    for (std::size_t n = 0; n < central.size(); ++n)
        require(weighted_delannoy_recurrence(static_cast<int>(n), static_cast<int>(n))
                        .eval(ones_xyz()) == central[n],
                "central specialization " + std::to_string(n));
    std::vector<long> schroder_values{1, 2, 6, 22, 90};
    for (std::size_t n = 0; n < schroder_values.size(); ++n) {
        WeightPoly oracle = testsupport::schroder_brute(static_cast<int>(n));
        require(oracle.eval(ones_xyz()) == schroder_values[n],
                "above-diagonal specialization " + std::to_string(n));
        require(weighted_schroder(static_cast<int>(n)) == oracle,
                "above-diagonal closed form " + std::to_string(n));
    }
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c) {
                FourPointParams params{a, b, c};
                Drawing d = build_tri_rhombus(a + b + c, WeightPoly::variable(tri_vars(), "x"),
                                              WeightPoly::variable(tri_vars(), "y"),
                                              WeightPoly::variable(tri_vars(), "z"));
                MarkedConfig m = four_point_marked_config(d, params);
                WeightPoly formula = four_point_formula_tri(params);
                std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")";
                require(matrix_M(d, m).normalized_count == formula,
                        "engine count vs closed form at " + tag);
                require(brute_force_nonintersecting(d, m) == formula,
                        "brute force vs closed form at " + tag);
            }
    for (int a = 1; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                require(four_point_formula_tri({a, b, c}).substitute_zero("z").drop_variable(
                            "z") == four_point_formula_square({a, b, c}),
                        "square form must equal the triangular form at z = 0");
}

// 7. Domino tilings.
void criterion_tilings() {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            AztecRegion r = AztecRegion::mixed(m, n);
            require(count_tilings_brute(r) == 1,
                    "hole-free mixed rectangle must have one tiling");
            require(count_tilings_via_paths(r) == 1,
                    "path engine must count the unique tiling");
        }
    std::vector<long> diamond{2, 8, 64};
    for (int n = 1; n <= 3; ++n)
        require(count_tilings_brute(AztecRegion::rectangle(n, n)) == diamond[n - 1],
                "diamond count at order " + std::to_string(n));

    for (int a = 1; a <= 2; ++a)
        for (int b = 0; b <= 1; ++b)
            for (int c = 1; c <= 2; ++c) {
                Integer formula = aztec_four_hole_formula(a, b, c);
                std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")";
                for (const AztecRegion& region : four_hole_placements(a, b, c, 3)) {
                    Integer brute = count_tilings_brute(region);
                    Integer via = count_tilings_via_paths(region);
                    require(brute == formula, "four-hole brute count at " + tag + ": got " +
                                                  brute.get_str() + ", formula " +
                                                  formula.get_str());
                    require(via == formula, "four-hole path count at " + tag);
                }
            }

    Rng rng(20240905);
    SuiteResult r = run_translation_suite(rng, 24);
    require(r.failures == 0, "translation invariance: " + r.first_failure);
    require(r.checks >= 20, "translation suite must cover 20 hole sets");
}

// 8. Boxed plane partitions via the compatible-case determinant.
void criterion_boxes() {
    const int a = 2, b = 2, c = 2;
    Integer expected = testsupport::macmahon_box(a, b, c);
    require(expected == 20, "triple product formula at (2,2,2)");
    Drawing d = build_grid(a + b - 1, a + c - 1, WeightPoly::one(grid_vars()),
                           WeightPoly::one(grid_vars()));
    MarkedConfig m;
    for (int i = 1; i <= a; ++i) m.starts.push_back(grid_id(d, a - i, i - 1));
    for (int j = 1; j <= a; ++j) m.ends.push_back(grid_id(d, a + b - j, c + j - 1));
    require(check_compatibility(d, m), "staircase endpoints must be compatible");
    WeightPoly det_h = lgv_signed(d, m);
    require(det_h.eval(ones_xy()) == expected, "binomial determinant");
    require(matrix_M(d, m).normalized_count.eval(ones_xy()) == expected,
            "signed-matrix count");
    require(brute_force_nonintersecting(d, m).eval(ones_xy()) == expected, "brute force");
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"6x6 two-pair worked example", criterion_worked_example},
        {"randomized determinant oracle (100 instances)", criterion_determinant_oracle},
        {"signed-identity suite (100 instances)", criterion_lgv},
        {"involution properties", criterion_involution},
        {"intersection-number lemmas", criterion_intersection_lemmas},
        {"closed forms", criterion_closed_forms},
        {"domino tilings", criterion_tilings},
        {"boxed plane partitions (hexagon 2,2,2)", criterion_boxes},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            criteria[k].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "[" << k + 1 << "] " << criteria[k].name << ": "
                  << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
        if (!ok) std::cout << " - " << detail;
        std::cout << "\n";
        failures += ok ? 0 : 1;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
