// lgvx: exact counts of non-intersecting path families on upward planar
// drawings, with lattice closed forms and domino-tiling counters on top.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgvx/aztec.hpp"
#include "lgvx/graph_io.hpp"
#include "lgvx/involution.hpp"
#include "lgvx/lattices.hpp"
#include "lgvx/pathcount.hpp"
#include "lgvx/selftest.hpp"

using namespace lgvx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, Integer> parse_assignment(const std::vector<std::string>& pairs) {
    std::map<std::string, Integer> out;
    for (const std::string& item : pairs) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw input_error("bad --eval entry (expected var=integer): " + item);
        try {
            out[item.substr(0, eq)] = Integer(item.substr(eq + 1));
        } catch (const std::invalid_argument&) {
            throw input_error("bad --eval value in: " + item);
        }
    }
    return out;
}

std::string assignment_str(const std::map<std::string, Integer>& a) {
    std::string s;
    for (const auto& [k, v] : a) {
        if (!s.empty()) s += ",";
        s += k + "=" + v.get_str();
    }
    return s;
}

void print_matrix(std::ostream& os, const PolyMatrix& m) {
    for (int i = 0; i < m.n(); ++i) {
        os << "  [";
        for (int j = 0; j < m.n(); ++j) {
            if (j) os << " | ";
            os << m.at(i, j).str();
        }
        os << "]\n";
    }
}

std::string perm_str(const std::vector<int>& perm) {
    std::string s = "(";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(perm[i] + 1);
    }
    return s + ")";
}

int cmd_validate(const std::string& path) {
    ParsedGraph parsed = parse_graph_file(read_file(path)); // throws on violations
    std::cout << "ok: " << parsed.drawing.vertex_count() << " vertices, "
              << parsed.drawing.edge_count() << " edges";
    if (parsed.config) std::cout << ", n=" << parsed.config->n();
    std::cout << "\n";
    return kExitOk;
}

int cmd_count(const std::string& path, bool with_brute, bool with_lgv,
              const std::vector<std::string>& eval_pairs) {
    auto t0 = std::chrono::steady_clock::now();
    ParsedGraph parsed = parse_graph_file(read_file(path));
    if (!parsed.config)
        throw input_error("the graph file has no starts/ends lines; nothing to count");
    const Drawing& d = parsed.drawing;
    const MarkedConfig& m = *parsed.config;

    std::cout << "instance: " << path << "\n";
    std::cout << "n: " << m.n() << "\n";
    SignedMatrixResult res = matrix_M(d, m);
    std::cout << "matrix M:\n";
    print_matrix(std::cout, res.M);
    std::cout << "det M: " << res.determinant.str() << "\n";
    std::cout << "normalized count: " << res.normalized_count.str() << "\n";

    bool agree = true;
    if (with_brute) {
        WeightPoly oracle = brute_force_nonintersecting(d, m);
        agree = oracle == res.normalized_count;
        std::cout << "brute force: " << oracle.str() << "\n";
        std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
    }
    if (with_lgv) {
        LgvCheck check = lgv_check(d, m);
        std::cout << "det h: " << check.det_h.str() << "\n";
        for (const auto& [perm, gf] : check.by_type)
            std::cout << "  type " << perm_str(perm) << " sign "
                      << (permutation_sign(perm) > 0 ? "+1" : "-1") << ": " << gf.str() << "\n";
        std::cout << "lgv agreement: " << (check.agree ? "true" : "false") << "\n";
        agree = agree && check.agree;
    }
    if (!eval_pairs.empty()) {
        auto assignment = parse_assignment(eval_pairs);
        std::cout << "eval " << assignment_str(assignment) << ": "
                  << res.normalized_count.eval(assignment).get_str() << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << "time_ms: " << ms << "\n";
    return agree ? kExitOk : kExitDisagree;
}

int print_poly_or_eval(const WeightPoly& p, const std::vector<std::string>& eval_pairs) {
    if (eval_pairs.empty()) {
        std::cout << p.str() << "\n";
    } else {
        std::cout << p.eval(parse_assignment(eval_pairs)).get_str() << "\n";
    }
    return kExitOk;
}

int cmd_tile(const std::string& path, bool brute_only, bool paths_only) {
    AztecRegion region = parse_region_file(read_file(path));
    std::optional<Integer> brute, via;
    if (!paths_only) brute = count_tilings_brute(region);
    if (!brute_only) via = count_tilings_via_paths(region);
    if (brute) std::cout << "brute: " << brute->get_str() << "\n";
    if (via) std::cout << "paths: " << via->get_str() << "\n";
    if (brute && via) {
        bool agree = *brute == *via;
        std::cout << "agreement: " << (agree ? "true" : "false") << "\n";
        return agree ? kExitOk : kExitDisagree;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-intersecting path counts on upward planar drawings"};
    app.require_subcommand(1);

    std::string file;
    bool with_brute = false, with_lgv = false;
    std::vector<std::string> eval_pairs;

    auto* validate = app.add_subcommand("validate", "check a graph file");
    validate->add_option("file", file)->required();

    auto* count = app.add_subcommand("count", "signed-determinant count of a graph file");
    count->add_option("file", file)->required();
    count->add_flag("--brute", with_brute, "cross-check against brute-force enumeration");
    count->add_flag("--lgv", with_lgv, "also report det h and the per-type decomposition");
    count->add_option("--eval", eval_pairs, "var=int specialization");

    int dn = 0, dk = 0;
    auto* delannoy = app.add_subcommand("delannoy", "weighted diagonal-step path count");
    delannoy->add_option("n", dn)->required();
    delannoy->add_option("k", dk)->required();
    delannoy->add_option("--eval", eval_pairs);

    int sn = 0;
    auto* schroder = app.add_subcommand("schroder", "weighted above-diagonal path count");
    schroder->add_option("n", sn)->required();
    schroder->add_option("--eval", eval_pairs);

    int fa = 1, fb = 0, fc = 1;
    auto* thm51 = app.add_subcommand("thm51", "four-point closed form, triangular lattice");
    thm51->add_option("a", fa)->required();
    thm51->add_option("b", fb)->required();
    thm51->add_option("c", fc)->required();
    thm51->add_option("--eval", eval_pairs);

    auto* cor52 = app.add_subcommand("cor52", "four-point closed form, square lattice");
    cor52->add_option("a", fa)->required();
    cor52->add_option("b", fb)->required();
    cor52->add_option("c", fc)->required();
    cor52->add_option("--eval", eval_pairs);

    auto* aztec = app.add_subcommand("aztec", "four-hole tiling count");
    aztec->add_option("a", fa)->required();
    aztec->add_option("b", fb)->required();
    aztec->add_option("c", fc)->required();

    bool tile_brute = false, tile_paths = false, tile_both = false;
    auto* tile = app.add_subcommand("tile", "count domino tilings of a region file");
    tile->add_option("file", file)->required();
    tile->add_flag("--brute", tile_brute);
    tile->add_flag("--paths", tile_paths);
    tile->add_flag("--both", tile_both);

    auto* emit = app.add_subcommand("emit", "emit canonical graph/region files");
    emit->require_subcommand(1);
    int gw = 1, gh = 1, rn = 1, am = 1, an = 1;
    std::vector<long long> hole_coords;
    auto* emit_grid = emit->add_subcommand("grid");
    emit_grid->add_option("w", gw)->required();
    emit_grid->add_option("hgt", gh)->required();
    auto* emit_rhombus = emit->add_subcommand("rhombus");
    emit_rhombus->add_option("N", rn)->required();
    auto* emit_thm51 = emit->add_subcommand("thm51");
    emit_thm51->add_option("a", fa)->required();
    emit_thm51->add_option("b", fb)->required();
    emit_thm51->add_option("c", fc)->required();
    auto* emit_aztec = emit->add_subcommand("aztec");
    emit_aztec->add_option("m", am)->required();
    emit_aztec->add_option("n", an)->required();
    emit_aztec->add_option("holes", hole_coords, "hole cells as i j pairs");
    auto* emit_rect = emit->add_subcommand("rectangle");
    emit_rect->add_option("m", am)->required();
    emit_rect->add_option("n", an)->required();
    emit_rect->add_option("holes", hole_coords, "hole cells as i j pairs");

    std::uint64_t seed = 1;
    int instances = 24;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "randomized property suites");
    selftest->add_option("--seed", seed);
    selftest->add_option("--instances", instances);
    selftest->add_flag("--inject-fault", inject_fault)->group(""); // test-only hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*count) return cmd_count(file, with_brute, with_lgv, eval_pairs);
        if (*delannoy) {
            if (dn < 0 || dk < 0) throw input_error("indices must be non-negative");
            return print_poly_or_eval(weighted_delannoy(dn, dk), eval_pairs);
        }
        if (*schroder) {
            if (sn < 0) throw input_error("length must be non-negative");
            return print_poly_or_eval(weighted_schroder(sn), eval_pairs);
        }
        if (*thm51) return print_poly_or_eval(four_point_formula_tri({fa, fb, fc}), eval_pairs);
        if (*cor52) return print_poly_or_eval(four_point_formula_square({fa, fb, fc}), eval_pairs);
        if (*aztec) {
            std::cout << aztec_four_hole_formula(fa, fb, fc).get_str() << "\n";
            return kExitOk;
        }
        if (*tile) {
            if (tile_brute + tile_paths + tile_both > 1)
                throw input_error("choose one of --brute, --paths, --both");
            return cmd_tile(file, tile_brute, tile_paths);
        }
        if (*emit) {
            if (*emit_grid) {
                Drawing d = build_grid(gw, gh, WeightPoly::variable(grid_vars(), "x"),
                                       WeightPoly::variable(grid_vars(), "y"));
                std::cout << emit_graph_file(d, nullptr);
                return kExitOk;
            }
            if (*emit_rhombus) {
                Drawing d = build_tri_rhombus(rn, WeightPoly::variable(tri_vars(), "x"),
                                              WeightPoly::variable(tri_vars(), "y"),
                                              WeightPoly::variable(tri_vars(), "z"));
                std::cout << emit_graph_file(d, nullptr);
                return kExitOk;
            }
            if (*emit_thm51) {
                Drawing d = build_tri_rhombus(fa + fb + fc,
                                              WeightPoly::variable(tri_vars(), "x"),
                                              WeightPoly::variable(tri_vars(), "y"),
                                              WeightPoly::variable(tri_vars(), "z"));
                MarkedConfig m = four_point_marked_config(d, {fa, fb, fc});
                std::cout << emit_graph_file(d, &m);
                return kExitOk;
            }
            if (*emit_aztec || *emit_rect) {
                if (hole_coords.size() % 2 != 0)
                    throw input_error("hole coordinates come in i j pairs");
                std::vector<Cell> holes;
                for (std::size_t k = 0; k + 1 < hole_coords.size(); k += 2)
                    holes.push_back({hole_coords[k], hole_coords[k + 1]});
                AztecRegion region = (*emit_rect ? AztecRegion::rectangle(am, an)
                                                 : AztecRegion::mixed(am, an))
                                         .with_holes(std::move(holes));
                std::cout << emit_region_file(region);
                return kExitOk;
            }
        }
        if (*selftest) {
            SelftestOptions options{seed, instances, inject_fault};
            SelftestReport report = run_selftest(options, std::cout);
            return report.passed ? kExitOk : kExitDisagree;
        }
    } catch (const mixed_sign_error& e) {
        std::cerr << e.what() << "\n";
        return kExitDisagree;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitInput;
}
