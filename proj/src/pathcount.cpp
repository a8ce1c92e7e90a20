#include "lgvx/pathcount.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>

namespace lgvx {

namespace {

// Fixed-size bitset over vertex ids.
struct VertexMask {
    std::vector<std::uint64_t> bits;
    explicit VertexMask(int n) : bits((static_cast<std::size_t>(n) + 63) / 64, 0) {}
    void add(int v) { bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t(1) << (v % 64); }
    bool intersects(const VertexMask& o) const {
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (bits[k] & o.bits[k]) return true;
        return false;
    }
    void merge(const VertexMask& o) {
        for (std::size_t k = 0; k < bits.size(); ++k) bits[k] |= o.bits[k];
    }
};

VertexMask path_mask(int vertex_count, const Path& p) {
    VertexMask m(vertex_count);
    for (int v : p) m.add(v);
    return m;
}

// Subgraph out-neighbours in angular order, for deterministic enumeration.
std::vector<std::vector<int>> ordered_subgraph_out(const Drawing& d) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d.vertex_count()));
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int e : angular_order(d, v)) {
            const EdgeRec& ed = d.edge(e);
            if (ed.in_subgraph && ed.src == v) out[static_cast<std::size_t>(v)].push_back(e);
        }
    return out;
}

std::vector<char> reaches_in_subgraph(const Drawing& d, int target) {
    std::vector<char> reach(static_cast<std::size_t>(d.vertex_count()), 0);
    std::queue<int> q;
    q.push(target);
    reach[static_cast<std::size_t>(target)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : d.in_edges(v)) {
            if (!d.edge(e).in_subgraph) continue;
            int w = d.edge(e).src;
            if (!reach[static_cast<std::size_t>(w)]) {
                reach[static_cast<std::size_t>(w)] = 1;
                q.push(w);
            }
        }
    }
    return reach;
}

} // namespace

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Path> enumerate_paths(const Drawing& d, int u, int v) {
    if (u < 0 || u >= d.vertex_count() || v < 0 || v >= d.vertex_count())
        throw input_error("unknown vertex");
    std::vector<Path> paths;
    if (u == v) {
        paths.push_back({u});
        return paths;
    }
    auto reach = reaches_in_subgraph(d, v);
    if (!reach[static_cast<std::size_t>(u)]) return paths;
    auto out = ordered_subgraph_out(d);
    const std::size_t limit = enumeration_limit();
    std::size_t steps = 0;
    Path cur{u};
    std::function<void(int)> walk = [&](int x) {
        if (++steps > limit)
            throw resource_limit_error("path enumeration exceeded the configured ceiling");
        if (x == v) {
            paths.push_back(cur);
            return;
        }
        for (int e : out[static_cast<std::size_t>(x)]) {
            int y = d.edge(e).dst;
            if (!reach[static_cast<std::size_t>(y)]) continue;
            cur.push_back(y);
            walk(y);
            cur.pop_back();
        }
    };
    walk(u);
    return paths;
}

WeightPoly path_weight(const Drawing& d, const Path& p) {
    WeightPoly w = WeightPoly::one(d.variables());
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        auto e = d.find_subgraph_edge(p[i], p[i + 1]);
        if (!e) throw input_error("path step is not a subgraph edge");
        w *= d.edge(*e).weight;
    }
    return w;
}

WeightPoly family_weight(const Drawing& d, const PathFamily& f) {
    WeightPoly w = WeightPoly::one(d.variables());
    for (const Path& p : f.paths) w *= path_weight(d, p);
    return w;
}

bool family_disjoint(const PathFamily& f) {
    std::set<int> used;
    for (const Path& p : f.paths)
        for (int v : p)
            if (!used.insert(v).second) return false;
    return true;
}

int family_sign(const Drawing& d, const PathFamily& f, const MarkedConfig& m) {
    return family_sign(d, std::span<const Path>(f.paths), m);
}

WeightPoly h(const Drawing& d, int u, int v) {
    if (u < 0 || u >= d.vertex_count() || v < 0 || v >= d.vertex_count())
        throw input_error("unknown vertex");
    std::vector<std::optional<WeightPoly>> memo(static_cast<std::size_t>(d.vertex_count()));
    std::function<const WeightPoly&(int)> paths_to_v = [&](int x) -> const WeightPoly& {
        auto& slot = memo[static_cast<std::size_t>(x)];
        if (!slot) {
            WeightPoly total = x == v ? WeightPoly::one(d.variables())
                                      : WeightPoly::zero(d.variables());
            if (x != v)
                for (int e : d.out_edges(x))
                    if (d.edge(e).in_subgraph) total += d.edge(e).weight * paths_to_v(d.edge(e).dst);
            slot = std::move(total);
        }
        return *slot;
    };
    return paths_to_v(u);
}

WeightPoly h_enumerate(const Drawing& d, int u, int v) {
    WeightPoly total(d.variables());
    for (const Path& p : enumerate_paths(d, u, v)) total += path_weight(d, p);
    return total;
}

WeightPoly signed_entry(const Drawing& d, const MarkedConfig& m, int i, int j) {
    validate_marked_config(d, m);
    SignEvaluator eval(d, m);
    WeightPoly total(d.variables());
    for (const Path& p : enumerate_paths(d, m.starts.at(static_cast<std::size_t>(i)),
                                         m.ends.at(static_cast<std::size_t>(j)))) {
        WeightPoly w = path_weight(d, p);
        total += eval.sign(p) > 0 ? w : -w;
    }
    return total;
}

SignedMatrixResult matrix_M(const Drawing& d, const MarkedConfig& m) {
    validate_marked_config(d, m);
    const int n = m.n();
    SignEvaluator eval(d, m);
    PolyMatrix M(d.variables(), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            WeightPoly total(d.variables());
            for (const Path& p :
                 enumerate_paths(d, m.starts[static_cast<std::size_t>(i)],
                                 m.ends[static_cast<std::size_t>(j)])) {
                WeightPoly w = path_weight(d, p);
                total += eval.sign(p) > 0 ? w : -w;
            }
            M.set(i, j, std::move(total));
        }
    }
    WeightPoly determinant = det(M);
    WeightPoly normalized;
    if (determinant.has_nonnegative_coefficients())
        normalized = determinant;
    else if (determinant.has_nonpositive_coefficients())
        normalized = -determinant;
    else
        throw mixed_sign_error("det M = " + determinant.str());
    return {std::move(M), std::move(determinant), std::move(normalized)};
}

namespace {

struct PathTable {
    // paths[i][j]: all subgraph paths u_i -> v_j, with weights and masks.
    std::vector<std::vector<std::vector<Path>>> paths;
    std::vector<std::vector<std::vector<WeightPoly>>> weights;
    std::vector<std::vector<std::vector<VertexMask>>> masks;
};

PathTable build_path_table(const Drawing& d, const MarkedConfig& m) {
    const int n = m.n();
    PathTable t;
    t.paths.resize(static_cast<std::size_t>(n));
    t.weights.resize(static_cast<std::size_t>(n));
    t.masks.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t.paths[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        t.weights[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        t.masks[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            auto list = enumerate_paths(d, m.starts[static_cast<std::size_t>(i)],
                                        m.ends[static_cast<std::size_t>(j)]);
            auto& w = t.weights[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            auto& mk = t.masks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (const Path& p : list) {
                w.push_back(path_weight(d, p));
                mk.push_back(path_mask(d.vertex_count(), p));
            }
            t.paths[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(list);
        }
    }
    return t;
}

} // namespace

std::map<std::vector<int>, WeightPoly> brute_force_by_connection(const Drawing& d,
                                                                 const MarkedConfig& m) {
    validate_marked_config(d, m);
    const int n = m.n();
    PathTable table = build_path_table(d, m);
    const std::size_t limit = enumeration_limit();
    std::size_t steps = 0;
    std::map<std::vector<int>, WeightPoly> result;
    for (const auto& perm : all_permutations(n)) {
        WeightPoly acc(d.variables());
        VertexMask used(d.vertex_count());
        std::function<void(int, const WeightPoly&)> place = [&](int i, const WeightPoly& w) {
            if (++steps > limit)
                throw resource_limit_error("tuple enumeration exceeded the configured ceiling");
            if (i == n) {
                acc += w;
                return;
            }
            const auto j = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
            const auto& masks = table.masks[static_cast<std::size_t>(i)][j];
            const auto& weights = table.weights[static_cast<std::size_t>(i)][j];
            for (std::size_t k = 0; k < masks.size(); ++k) {
                if (used.intersects(masks[k])) continue;
                VertexMask saved = used;
                used.merge(masks[k]);
                place(i + 1, w * weights[k]);
                used = std::move(saved);
            }
        };
        place(0, WeightPoly::one(d.variables()));
        result.emplace(perm, std::move(acc));
    }
    return result;
}

WeightPoly brute_force_nonintersecting(const Drawing& d, const MarkedConfig& m) {
    WeightPoly total(d.variables());
    for (const auto& [perm, gf] : brute_force_by_connection(d, m)) total += gf;
    return total;
}

WeightPoly lgv_signed(const Drawing& d, const MarkedConfig& m) {
    validate_marked_config(d, m);
    const int n = m.n();
    PolyMatrix H(d.variables(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H.set(i, j, h(d, m.starts[static_cast<std::size_t>(i)],
                          m.ends[static_cast<std::size_t>(j)]));
    return det(H);
}

LgvCheck lgv_check(const Drawing& d, const MarkedConfig& m) {
    LgvCheck out;
    out.det_h = lgv_signed(d, m);
    out.by_type = brute_force_by_connection(d, m);
    out.signed_sum = WeightPoly::zero(d.variables());
    for (const auto& [perm, gf] : out.by_type)
        out.signed_sum += permutation_sign(perm) > 0 ? gf : -gf;
    out.agree = out.det_h == out.signed_sum;
    return out;
}

bool check_compatibility(const Drawing& d, const MarkedConfig& m) {
    validate_marked_config(d, m);
    const int n = m.n();
    if (n == 1) return true;
    PathTable table = build_path_table(d, m);
    const std::size_t limit = enumeration_limit();
    std::size_t steps = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (k <= l) continue;
                    const auto& mi = table.masks[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                    const auto& mj = table.masks[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
                    for (const auto& a : mi)
                        for (const auto& b : mj) {
                            if (++steps > limit)
                                throw resource_limit_error(
                                    "compatibility check exceeded the configured ceiling");
                            if (!a.intersects(b)) return false;
                        }
                }
    return true;
}

std::vector<PathFamily> enumerate_families(const Drawing& d, const MarkedConfig& m,
                                           bool only_nonintersecting) {
    validate_marked_config(d, m);
    const int n = m.n();
    PathTable table = build_path_table(d, m);
    const std::size_t limit = enumeration_limit();
    std::size_t steps = 0;
    std::vector<PathFamily> out;
    for (const auto& perm : all_permutations(n)) {
        PathFamily family;
        family.connection = perm;
        family.paths.resize(static_cast<std::size_t>(n));
        VertexMask used(d.vertex_count());
        std::function<void(int)> place = [&](int i) {
            if (++steps > limit)
                throw resource_limit_error("family enumeration exceeded the configured ceiling");
            if (i == n) {
                out.push_back(family);
                return;
            }
            const auto j = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
            const auto& paths = table.paths[static_cast<std::size_t>(i)][j];
            const auto& masks = table.masks[static_cast<std::size_t>(i)][j];
            for (std::size_t k = 0; k < paths.size(); ++k) {
                if (only_nonintersecting && used.intersects(masks[k])) continue;
                family.paths[static_cast<std::size_t>(i)] = paths[k];
                if (only_nonintersecting) {
                    VertexMask saved = used;
                    used.merge(masks[k]);
                    place(i + 1);
                    used = std::move(saved);
                } else {
                    place(i + 1);
                }
            }
        };
        place(0);
    }
    return out;
}

} // namespace lgvx
