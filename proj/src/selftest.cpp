#include "lgvx/selftest.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include "lgvx/aztec.hpp"
#include "lgvx/involution.hpp"
#include "lgvx/lattices.hpp"
#include "lgvx/pathcount.hpp"

namespace lgvx {

Drawing apply_subgraph_mask(const Drawing& d, const std::vector<char>& keep) {
    if (keep.size() != static_cast<std::size_t>(d.edge_count()))
        throw input_error("mask length does not match the edge count");
    Drawing out(d.variables());
    for (int v = 0; v < d.vertex_count(); ++v) {
        const Vertex& vx = d.vertex(v);
        out.add_vertex(vx.name, vx.x, vx.y);
    }
    for (int e = 0; e < d.edge_count(); ++e) {
        const EdgeRec& ed = d.edge(e);
        out.add_edge(ed.src, ed.dst, ed.weight,
                     ed.in_subgraph && keep[static_cast<std::size_t>(e)]);
    }
    out.set_source(d.source());
    out.set_sink(d.sink());
    return out;
}

namespace {

std::vector<char> subgraph_reach_from(const Drawing& d, int start) {
    std::vector<char> reach(static_cast<std::size_t>(d.vertex_count()), 0);
    std::queue<int> q;
    q.push(start);
    reach[static_cast<std::size_t>(start)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : d.out_edges(v)) {
            if (!d.edge(e).in_subgraph) continue;
            int w = d.edge(e).dst;
            if (!reach[static_cast<std::size_t>(w)]) {
                reach[static_cast<std::size_t>(w)] = 1;
                q.push(w);
            }
        }
    }
    return reach;
}

// Every start reaches some end and every end is reached by some start.
bool usable_config(const Drawing& d, const MarkedConfig& m) {
    std::vector<char> end_hit(m.ends.size(), 0);
    for (int u : m.starts) {
        auto reach = subgraph_reach_from(d, u);
        bool any = false;
        for (std::size_t j = 0; j < m.ends.size(); ++j)
            if (reach[static_cast<std::size_t>(m.ends[j])]) {
                any = true;
                end_hit[j] = 1;
            }
        if (!any) return false;
    }
    return std::all_of(end_hit.begin(), end_hit.end(), [](char c) { return c != 0; });
}

} // namespace

namespace {

// 2n distinct vertices split into starts and ends. Ends are usually drawn
// from the upper half of the drawing so that paths exist; occasionally the
// split is fully random to also exercise vacuous instances.
MarkedConfig sample_marked(Rng& rng, const Drawing& d, int n) {
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < 2 * n)
        chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(d.vertex_count()))));
    std::vector<int> picks(chosen.begin(), chosen.end());
    if (rng.percent(80)) {
        std::sort(picks.begin(), picks.end(), [&](int a, int b) {
            const Vertex& va = d.vertex(a);
            const Vertex& vb = d.vertex(b);
            return std::tie(va.y, va.x) < std::tie(vb.y, vb.x);
        });
    } else {
        for (std::size_t i = picks.size(); i > 1; --i)
            std::swap(picks[i - 1], picks[rng.below(i)]);
    }
    MarkedConfig m;
    m.starts.assign(picks.begin(), picks.begin() + n);
    m.ends.assign(picks.begin() + n, picks.end());
    return m;
}

} // namespace

RandomInstance random_small_instance(Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        bool grid = rng.percent(60);
        Drawing base = grid
                           ? build_grid(rng.range(1, 5), rng.range(1, 5),
                                        WeightPoly::variable(grid_vars(), "x"),
                                        WeightPoly::variable(grid_vars(), "y"))
                           : build_tri_rhombus(rng.range(1, 4),
                                               WeightPoly::variable(tri_vars(), "x"),
                                               WeightPoly::variable(tri_vars(), "y"),
                                               WeightPoly::variable(tri_vars(), "z"));
        // Random subgraph mask, biased toward keeping most edges.
        std::vector<char> keep(static_cast<std::size_t>(base.edge_count()), 1);
        if (!rng.percent(30))
            for (auto& k : keep) k = rng.percent(85) ? 1 : 0;
        Drawing d = apply_subgraph_mask(base, keep);

        int n = rng.range(1, 3);
        if (2 * n > d.vertex_count()) continue;
        MarkedConfig m = sample_marked(rng, d, n);
        if (!usable_config(d, m)) continue;

        std::ostringstream desc;
        desc << (grid ? "grid" : "rhombus") << " V=" << d.vertex_count() << " n=" << n;
        return {std::move(d), std::move(m), desc.str()};
    }
    throw internal_error("failed to sample a usable random instance");
}

namespace {

struct Failure {
    int count = 0;
    std::string first;
    void record(const std::string& msg) {
        if (count == 0) first = msg;
        ++count;
    }
};

std::string family_sign_key(const PathFamily& f) {
    std::ostringstream os;
    for (const Path& p : f.paths) {
        for (int v : p) os << v << ",";
        os << ";";
    }
    return os.str();
}

} // namespace

SuiteResult run_determinant_suite(Rng& rng, int instances, bool inject_sign_fault) {
    SuiteResult result{"determinant-vs-brute", instances, 0, 0, ""};
    Failure fail;
    for (int k = 0; k < instances; ++k) {
        RandomInstance inst = random_small_instance(rng);
        try {
            SignedMatrixResult res = matrix_M(inst.drawing, inst.config);
            WeightPoly normalized = res.normalized_count;
            if (inject_sign_fault) {
                PolyMatrix faulty = res.M;
                faulty.set(0, 0, faulty.at(0, 0) + WeightPoly::one(inst.drawing.variables()));
                WeightPoly dd = det(faulty);
                normalized = dd.has_nonnegative_coefficients() ? dd : -dd;
            }
            WeightPoly brute = brute_force_nonintersecting(inst.drawing, inst.config);
            ++result.checks;
            if (normalized != brute)
                fail.record(inst.description + ": |det M| = " + normalized.str() +
                            " but brute force = " + brute.str());
            // The generating function h must agree with plain enumeration.
            for (int i = 0; i < inst.config.n(); ++i)
                for (int j = 0; j < inst.config.n(); ++j) {
                    ++result.checks;
                    if (h(inst.drawing, inst.config.starts[static_cast<std::size_t>(i)],
                          inst.config.ends[static_cast<std::size_t>(j)]) !=
                        h_enumerate(inst.drawing, inst.config.starts[static_cast<std::size_t>(i)],
                                    inst.config.ends[static_cast<std::size_t>(j)]))
                        fail.record(inst.description + ": dynamic-programming h disagrees with "
                                                       "enumeration");
                }
        } catch (const error& e) {
            fail.record(inst.description + ": " + e.what());
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

SuiteResult run_lgv_suite(Rng& rng, int instances) {
    SuiteResult result{"lgv-identity", instances, 0, 0, ""};
    Failure fail;
    for (int k = 0; k < instances; ++k) {
        RandomInstance inst = random_small_instance(rng);
        try {
            LgvCheck check = lgv_check(inst.drawing, inst.config);
            ++result.checks;
            if (!check.agree)
                fail.record(inst.description + ": det(h) = " + check.det_h.str() +
                            " but signed sum = " + check.signed_sum.str());
            if (check_compatibility(inst.drawing, inst.config)) {
                WeightPoly straight = brute_force_nonintersecting(inst.drawing, inst.config);
                SignedMatrixResult res = matrix_M(inst.drawing, inst.config);
                ++result.checks;
                if (check.det_h != straight || res.normalized_count != straight)
                    fail.record(inst.description +
                                ": compatible endpoints but det(h) != straight count");
            }
            // The signed family term sgn(pi) sgn(P) is constant over all
            // vertex-disjoint families.
            int constant_sign = 0;
            std::vector<PathFamily> disjoint =
                enumerate_families(inst.drawing, inst.config, true);
            for (const PathFamily& f : disjoint) {
                int s = permutation_sign(f.connection) * family_sign(inst.drawing, f, inst.config);
                ++result.checks;
                if (constant_sign == 0)
                    constant_sign = s;
                else if (s != constant_sign)
                    fail.record(inst.description + ": sgn(pi) sgn(P) not constant");
            }
        } catch (const resource_limit_error&) {
            // Oversized random instances are skipped, not failed.
        } catch (const error& e) {
            fail.record(inst.description + ": " + e.what());
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

namespace {

// Deterministic 3x3-grid configurations with large family counts, always
// included so the involution and lemma suites cover hundreds of families
// regardless of the random draw.
std::vector<RandomInstance> fixed_rich_instances() {
    std::vector<RandomInstance> out;
    Drawing d = build_grid(3, 3, WeightPoly::variable(grid_vars(), "x"),
                           WeightPoly::variable(grid_vars(), "y"));
    auto id = [&](int x, int y) { return *d.find_vertex(grid_vertex_name(x, y)); };
    {
        MarkedConfig m;
        m.starts = {id(1, 0), id(0, 1)};
        m.ends = {id(2, 3), id(3, 2)};
        out.push_back({d, m, "grid3x3 crossing pairs"});
    }
    {
        MarkedConfig m;
        m.starts = {id(0, 0), id(1, 0), id(0, 1)};
        m.ends = {id(3, 2), id(2, 3), id(3, 3)};
        out.push_back({d, m, "grid3x3 triple"});
    }
    return out;
}

RandomInstance random_involution_instance(Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Drawing base = build_grid(3, 3, WeightPoly::variable(grid_vars(), "x"),
                                  WeightPoly::variable(grid_vars(), "y"));
        std::vector<char> keep(static_cast<std::size_t>(base.edge_count()), 1);
        if (rng.percent(40))
            for (auto& k : keep) k = rng.percent(88) ? 1 : 0;
        Drawing d = apply_subgraph_mask(base, keep);
        int n = rng.range(2, 3);
        MarkedConfig m = sample_marked(rng, d, n);
        if (!usable_config(d, m)) continue;
        std::ostringstream desc;
        desc << "grid3x3 n=" << n;
        return {std::move(d), std::move(m), desc.str()};
    }
    throw internal_error("failed to sample an involution instance");
}

bool families_equal(const PathFamily& a, const PathFamily& b) {
    return a.paths == b.paths && a.connection == b.connection;
}

} // namespace

SuiteResult run_involution_suite(Rng& rng, int instances) {
    SuiteResult result{"involution", instances, 0, 0, ""};
    Failure fail;
    std::vector<RandomInstance> fixed = instances > 0 ? fixed_rich_instances()
                                                      : std::vector<RandomInstance>{};
    for (int k = 0; k < instances; ++k) {
        RandomInstance inst = k < static_cast<int>(fixed.size())
                                  ? fixed[static_cast<std::size_t>(k)]
                                  : random_involution_instance(rng);
        try {
            VertexOrder ord = default_vertex_order(inst.drawing);
            std::vector<PathFamily> families =
                enumerate_families(inst.drawing, inst.config, false);
            SignEvaluator eval(inst.drawing, inst.config);
            std::map<Path, int> sign_cache;
            auto cached_family_sign = [&](const PathFamily& f) {
                int s = 1;
                for (const Path& p : f.paths) {
                    auto it = sign_cache.find(p);
                    if (it == sign_cache.end()) it = sign_cache.emplace(p, eval.sign(p)).first;
                    s *= it->second;
                }
                return s;
            };
            for (const PathFamily& f : families) {
                PathFamily g = phi(f, ord);
                ++result.checks;
                if (!families_equal(phi(g, ord), f))
                    fail.record(inst.description + ": phi is not an involution");
                if (family_weight(inst.drawing, g) != family_weight(inst.drawing, f))
                    fail.record(inst.description + ": phi changed the family weight");
                if (cached_family_sign(g) != cached_family_sign(f))
                    fail.record(inst.description + ": phi changed the family sign");
                if (family_disjoint(f)) {
                    if (!families_equal(g, f))
                        fail.record(inst.description + ": phi moved a disjoint family");
                } else {
                    if (permutation_sign(g.connection) != -permutation_sign(f.connection))
                        fail.record(inst.description +
                                    ": phi did not flip the permutation sign");
                }
            }
        } catch (const resource_limit_error&) {
        } catch (const error& e) {
            fail.record(inst.description + ": " + e.what());
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

namespace {

RandomInstance random_lemma_instance(Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int shape = rng.range(0, 2);
        Drawing base = shape == 2
                           ? build_tri_rhombus(2, WeightPoly::variable(tri_vars(), "x"),
                                               WeightPoly::variable(tri_vars(), "y"),
                                               WeightPoly::variable(tri_vars(), "z"))
                           : build_grid(shape + 2, shape + 2,
                                        WeightPoly::variable(grid_vars(), "x"),
                                        WeightPoly::variable(grid_vars(), "y"));
        int n = 2;
        MarkedConfig m = sample_marked(rng, base, n);
        if (!usable_config(base, m)) continue;
        std::ostringstream desc;
        desc << (shape == 2 ? "rhombus2" : (shape == 0 ? "grid2x2" : "grid3x3")) << " n=" << n;
        return {std::move(base), std::move(m), desc.str()};
    }
    throw internal_error("failed to sample a lemma instance");
}

} // namespace

SuiteResult run_lemma_suite(Rng& rng, int instances) {
    SuiteResult result{"intersection-lemmas", instances, 0, 0, ""};
    Failure fail;
    std::vector<RandomInstance> fixed = instances > 0 ? fixed_rich_instances()
                                                      : std::vector<RandomInstance>{};
    for (int k = 0; k < instances; ++k) {
        RandomInstance inst = k < static_cast<int>(fixed.size())
                                  ? fixed[static_cast<std::size_t>(k)]
                                  : random_lemma_instance(rng);
        const Drawing& d = inst.drawing;
        const MarkedConfig& m = inst.config;
        try {
            SignEvaluator eval(d, m);
            std::set<int> marked(m.starts.begin(), m.starts.end());
            marked.insert(m.ends.begin(), m.ends.end());
            auto eligible_path = [&](const Path& p) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i)
                    if (marked.count(p[i])) return false;
                return true;
            };
            auto eligible = [&](const PathFamily& f) {
                return std::all_of(f.paths.begin(), f.paths.end(), eligible_path);
            };
            std::map<Path, int> count_cache;
            auto left_count = [&](const Path& p) {
                auto it = count_cache.find(p);
                if (it == count_cache.end())
                    it = count_cache.emplace(p, static_cast<int>(eval.left_points(p).size())).first;
                return it->second;
            };
            auto fam_sign = [&](const PathFamily& f) {
                int s = 1;
                for (const Path& p : f.paths) s *= left_count(p) % 2 == 0 ? 1 : -1;
                return s;
            };

            std::vector<PathFamily> families = enumerate_families(d, m, false);

            // Single-path substitution parity.
            std::map<std::pair<int, int>, std::vector<Path>> alternatives;
            for (const PathFamily& f : families) {
                if (!eligible(f)) continue;
                int base_number = intersection_number(d, f);
                for (std::size_t i = 0; i < f.paths.size(); ++i) {
                    auto key = std::make_pair(static_cast<int>(i), f.connection[i]);
                    auto it = alternatives.find(key);
                    if (it == alternatives.end())
                        it = alternatives
                                 .emplace(key, enumerate_paths(
                                                   d, m.starts[i],
                                                   m.ends[static_cast<std::size_t>(
                                                       f.connection[i])]))
                                 .first;
                    for (const Path& alt : it->second) {
                        if (alt == f.paths[i] || !eligible_path(alt)) continue;
                        PathFamily g = f;
                        g.paths[i] = alt;
                        int delta = left_count(f.paths[i]) - left_count(alt);
                        ++result.checks;
                        if (((intersection_number(d, g) - base_number - delta) % 2 + 2) % 2 != 0)
                            fail.record(inst.description + ": substitution parity violated");
                    }
                }
            }

            // Sign against a disjoint representative of the same type.
            std::map<std::vector<int>, const PathFamily*> representative;
            for (const PathFamily& f : families)
                if (family_disjoint(f) && eligible(f) && !representative.count(f.connection))
                    representative.emplace(f.connection, &f);
            for (const PathFamily& f : families) {
                if (!eligible(f)) continue;
                auto rep = representative.find(f.connection);
                if (rep == representative.end()) continue;
                int expected =
                    fam_sign(*rep->second) * (intersection_number(d, f) % 2 == 0 ? 1 : -1);
                ++result.checks;
                if (fam_sign(f) != expected)
                    fail.record(inst.description + ": intersection-parity sign relation violated");
            }

            // Disjoint families whose types differ by a transposition have
            // opposite signs.
            std::vector<const PathFamily*> disjoint;
            for (const PathFamily& f : families)
                if (family_disjoint(f)) disjoint.push_back(&f);
            for (const PathFamily* p1 : disjoint)
                for (const PathFamily* p2 : disjoint) {
                    int mismatches = 0;
                    for (std::size_t i = 0; i < p1->connection.size(); ++i)
                        if (p1->connection[i] != p2->connection[i]) ++mismatches;
                    if (mismatches != 2) continue;
                    ++result.checks;
                    if (fam_sign(*p1) != -fam_sign(*p2))
                        fail.record(inst.description +
                                    ": transposition-related disjoint families share a sign");
                }
        } catch (const resource_limit_error&) {
        } catch (const error& e) {
            fail.record(inst.description + ": " + e.what());
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

SuiteResult run_bijection_suite(Rng& rng, int instances) {
    SuiteResult result{"tiling-bijection", instances, 0, 0, ""};
    Failure fail;
    for (int k = 0; k < instances; ++k) {
        int m = rng.range(1, 3);
        int n = rng.range(1, 3);
        AztecRegion base = AztecRegion::mixed(m, n);
        std::vector<Cell> whites, blacks;
        for (const Cell& c : base.cells()) (cell_black(c) ? blacks : whites).push_back(c);
        std::set<Cell> holes;
        if (rng.percent(75)) {
            // Balanced colors: the interesting regime for the correspondence.
            int pairs = rng.range(1, std::min<int>(2, static_cast<int>(
                                                          std::min(whites.size(), blacks.size()))));
            while (static_cast<int>(holes.size()) < 2 * pairs) {
                holes.insert(whites[rng.below(whites.size())]);
                holes.insert(blacks[rng.below(blacks.size())]);
            }
        } else {
            int hole_count = static_cast<int>(rng.below(4));
            hole_count = std::min<int>(hole_count, static_cast<int>(base.cells().size()));
            while (static_cast<int>(holes.size()) < hole_count)
                holes.insert(base.cells()[rng.below(base.cells().size())]);
        }
        AztecRegion region = base.with_holes(std::vector<Cell>(holes.begin(), holes.end()));
        std::ostringstream desc;
        desc << "MR(" << m << "," << n << ") holes=" << holes.size();
        try {
            Integer brute = count_tilings_brute(region);
            Integer via = count_tilings_via_paths(region);
            ++result.checks;
            if (brute != via)
                fail.record(desc.str() + ": brute " + brute.get_str() + " vs paths " +
                            via.get_str());

            // Structural check: tilings map to exactly the vertex-disjoint
            // families of the induced instance.
            PathInstance pi = region_to_paths(region);
            if (!pi.no_tilings && pi.config.n() >= 1 && brute <= 80) {
                std::set<std::string> mapped;
                for (const Tiling& t : enumerate_tilings(region)) {
                    PathFamily f = tiling_to_family(region, t, pi);
                    ++result.checks;
                    if (!family_disjoint(f))
                        fail.record(desc.str() + ": a tiling mapped to an intersecting family");
                    mapped.insert(family_sign_key(f));
                }
                std::set<std::string> enumerated;
                for (const PathFamily& f : enumerate_families(pi.drawing, pi.config, true))
                    enumerated.insert(family_sign_key(f));
                ++result.checks;
                if (mapped != enumerated)
                    fail.record(desc.str() + ": tilings and path families do not correspond");
            }
        } catch (const resource_limit_error&) {
        } catch (const error& e) {
            fail.record(desc.str() + std::string(": ") + e.what());
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

SuiteResult run_translation_suite(Rng& rng, int instances) {
    SuiteResult result{"translation-invariance", instances, 0, 0, ""};
    Failure fail;
    for (int k = 0; k < instances; ++k) {
        int m = rng.range(2, 4);
        int n = rng.range(2, 4);
        AztecRegion base = AztecRegion::mixed(m, n);
        bool placed = false;
        for (int attempt = 0; attempt < 80 && !placed; ++attempt) {
            int hole_count = rng.range(1, 4);
            std::set<Cell> holes;
            while (static_cast<int>(holes.size()) < hole_count)
                holes.insert(base.cells()[rng.below(base.cells().size())]);
            long long di = rng.range(-3, 3);
            long long dj = rng.range(-3, 3);
            if (((di + dj) % 2 + 2) % 2 != 0) continue; // color-preserving only
            if (di == 0 && dj == 0) continue;
            std::vector<Cell> shifted;
            bool inside = true;
            for (const Cell& h : holes) {
                Cell s{h.i + di, h.j + dj};
                if (!base.contains(s)) inside = false;
                shifted.push_back(s);
            }
            if (!inside) continue;
            placed = true;
            std::ostringstream desc;
            desc << "MR(" << m << "," << n << ") holes=" << hole_count << " shift=(" << di << ","
                 << dj << ")";
            try {
                Integer before =
                    count_tilings_brute(base.with_holes({holes.begin(), holes.end()}));
                Integer after = count_tilings_brute(base.with_holes(shifted));
                ++result.checks;
                if (before != after)
                    fail.record(desc.str() + ": " + before.get_str() + " vs " + after.get_str());
            } catch (const resource_limit_error&) {
            } catch (const error& e) {
                fail.record(desc.str() + std::string(": ") + e.what());
            }
        }
    }
    result.failures = fail.count;
    result.first_failure = fail.first;
    return result;
}

SelftestReport run_selftest(const SelftestOptions& options, std::ostream& out) {
    SelftestReport report;
    Rng rng(options.seed);
    if (options.instances == 0)
        out << "warning: 0 instances requested; every suite passes vacuously\n";
    auto push = [&](SuiteResult r) {
        out << "suite " << r.name << ": " << r.instances << " instances, " << r.checks
            << " checks, " << r.failures << " failures\n";
        if (r.failures > 0) {
            out << "  first failure: " << r.first_failure << "\n";
            report.passed = false;
        }
        report.suites.push_back(std::move(r));
    };
    push(run_determinant_suite(rng, options.instances, options.inject_sign_fault));
    push(run_lgv_suite(rng, options.instances));
    push(run_involution_suite(rng, std::max(1, options.instances / 2) * (options.instances ? 1 : 0)));
    push(run_lemma_suite(rng, std::max(1, options.instances / 3) * (options.instances ? 1 : 0)));
    push(run_bijection_suite(rng, options.instances));
    push(run_translation_suite(rng, options.instances));
    out << "selftest: " << (report.passed ? "PASS" : "FAIL") << " (seed " << options.seed << ", "
        << report.suites.size() << " suites)\n";
    return report;
}

} // namespace lgvx
