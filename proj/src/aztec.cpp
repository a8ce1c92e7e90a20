#include "lgvx/aztec.hpp"

#include <algorithm>
#include <functional>

#include "lgvx/lattices.hpp"

namespace lgvx {

namespace {

// Row bounds of the Aztec rectangle AR_{m,n}: rows j = 0 .. m+n-1 hold the
// cells i in [row_left, row_right].
long long row_left(int m, long long j) { return j < m ? -1 - j : j - 2 * m; }
long long row_right(int n, long long j) { return j < n ? j : 2 * n - 1 - j; }

} // namespace

AztecRegion AztecRegion::mixed(int m, int n) {
    if (m < 1 || n < 1) throw input_error("mixed Aztec rectangle requires m, n >= 1");
    AztecRegion r;
    r.kind_ = Kind::Mixed;
    r.m_ = m;
    r.n_ = n;
    for (long long j = 0; j < m + n; ++j) {
        for (long long i = row_left(m, j); i <= row_right(n, j); ++i) {
            bool sw = j < m && i == -1 - j; // removed southwest staircase
            bool se = j < n && i == j;      // removed southeast staircase
            if (sw || se) continue;
            r.cells_.push_back({i, j});
        }
    }
    r.cell_set_.insert(r.cells_.begin(), r.cells_.end());
    return r;
}

AztecRegion AztecRegion::rectangle(int m, int n) {
    if (m < 1 || n < 1) throw input_error("Aztec rectangle requires m, n >= 1");
    AztecRegion r;
    r.kind_ = Kind::Rectangle;
    r.m_ = m;
    r.n_ = n;
    for (long long j = 0; j < m + n; ++j)
        for (long long i = row_left(m, j); i <= row_right(n, j); ++i) r.cells_.push_back({i, j});
    r.cell_set_.insert(r.cells_.begin(), r.cells_.end());
    return r;
}

AztecRegion AztecRegion::with_holes(std::vector<Cell> holes) const {
    AztecRegion r = *this;
    r.holes_.clear();
    r.hole_set_.clear();
    for (const Cell& h : holes) {
        if (!r.cell_set_.count(h))
            throw input_error("hole (" + std::to_string(h.i) + ", " + std::to_string(h.j) +
                              ") lies outside the region");
        if (!r.hole_set_.insert(h).second)
            throw input_error("duplicate hole (" + std::to_string(h.i) + ", " +
                              std::to_string(h.j) + ")");
        r.holes_.push_back(h);
    }
    return r;
}

std::vector<Cell> AztecRegion::active_cells() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_)
        if (!hole_set_.count(c)) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    return out;
}

namespace {

struct MatchSearch {
    std::vector<Cell> cells;
    std::map<Cell, int> index;
    std::vector<char> covered;
    std::size_t steps = 0;
    std::size_t limit = enumeration_limit();

    explicit MatchSearch(const AztecRegion& r) : cells(r.active_cells()) {
        if (cells.size() > 256)
            throw resource_limit_error("region too large for exhaustive tiling enumeration");
        for (std::size_t k = 0; k < cells.size(); ++k) index.emplace(cells[k], static_cast<int>(k));
        covered.assign(cells.size(), 0);
    }

    // Visits every perfect matching; `emit` is called with the domino stack.
    void run(std::vector<Domino>& stack, const std::function<void()>& emit) {
        if (++steps > limit)
            throw resource_limit_error("tiling enumeration exceeded the configured ceiling");
        std::size_t first = 0;
        while (first < covered.size() && covered[first]) ++first;
        if (first == covered.size()) {
            emit();
            return;
        }
        const Cell c = cells[first];
        covered[first] = 1;
        for (const Cell next : {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}}) {
            auto it = index.find(next);
            if (it == index.end() || covered[static_cast<std::size_t>(it->second)]) continue;
            covered[static_cast<std::size_t>(it->second)] = 1;
            stack.push_back({c, next});
            run(stack, emit);
            stack.pop_back();
            covered[static_cast<std::size_t>(it->second)] = 0;
        }
        covered[first] = 0;
    }
};

bool balanced_colors(const AztecRegion& r) {
    long long black = 0, white = 0;
    for (const Cell& c : r.active_cells()) (cell_black(c) ? black : white) += 1;
    return black == white;
}

} // namespace

Integer count_tilings_brute(const AztecRegion& r) {
    if (!balanced_colors(r)) return 0;
    MatchSearch search(r);
    Integer count = 0;
    std::vector<Domino> stack;
    search.run(stack, [&] { count += 1; });
    return count;
}

std::vector<Tiling> enumerate_tilings(const AztecRegion& r) {
    std::vector<Tiling> out;
    if (!balanced_colors(r)) return out;
    MatchSearch search(r);
    std::vector<Domino> stack;
    search.run(stack, [&] { out.push_back({stack}); });
    return out;
}

std::pair<long long, long long> black_cell_point(const Cell& c) {
    if (!cell_black(c)) throw internal_error("left-edge midpoints attach to black cells only");
    return {(c.i - c.j + 1) / 2, (c.i + c.j + 1) / 2};
}

PathInstance region_to_paths(const AztecRegion& r, int margin) {
    if (margin < 1) throw input_error("margin must be at least 1");
    PathInstance inst;

    std::vector<Cell> white_holes, black_holes;
    for (const Cell& h : r.holes()) (cell_black(h) ? black_holes : white_holes).push_back(h);
    if (white_holes.size() != black_holes.size()) {
        inst.no_tilings = true;
        return inst;
    }

    // Lattice points: one per black cell of the region, plus the start point
    // to the right of each white hole.
    std::set<std::pair<long long, long long>> points;
    std::vector<std::pair<long long, long long>> start_pts, end_pts;
    for (const Cell& c : r.cells())
        if (cell_black(c)) points.insert(black_cell_point(c));
    for (const Cell& h : white_holes) {
        auto pt = black_cell_point({h.i + 1, h.j});
        points.insert(pt);
        start_pts.push_back(pt);
    }
    for (const Cell& h : black_holes) end_pts.push_back(black_cell_point(h));
    std::sort(start_pts.begin(), start_pts.end());
    std::sort(end_pts.begin(), end_pts.end());
    // A white hole immediately left of a black hole makes a start point
    // coincide with an end point. In a vertex-disjoint family that point can
    // only carry the length-0 path, so the pair is dropped and the vertex is
    // blocked for every remaining path.
    std::set<std::pair<long long, long long>> blocked;
    for (const auto& u : start_pts)
        if (std::binary_search(end_pts.begin(), end_pts.end(), u)) blocked.insert(u);
    if (!blocked.empty()) {
        auto drop = [&](std::vector<std::pair<long long, long long>>& pts) {
            std::erase_if(pts, [&](const auto& pt) { return blocked.count(pt) > 0; });
        };
        drop(start_pts);
        drop(end_pts);
    }

    // Host rhombus bounds with margin.
    long long p_lo = 0, p_hi = 0, q_lo = 0, q_hi = 0;
    bool first = true;
    auto extend = [&](const std::pair<long long, long long>& pt) {
        if (first) {
            p_lo = p_hi = pt.first;
            q_lo = q_hi = pt.second;
            first = false;
        } else {
            p_lo = std::min(p_lo, pt.first);
            p_hi = std::max(p_hi, pt.first);
            q_lo = std::min(q_lo, pt.second);
            q_hi = std::max(q_hi, pt.second);
        }
    };
    for (const auto& pt : points) extend(pt);
    if (first) extend({0, 0}); // hole-free region: a minimal host still exists
    p_lo -= margin;
    p_hi += margin;
    q_lo -= margin;
    q_hi += margin;

    const auto& vars = tri_vars();
    WeightPoly wx = WeightPoly::variable(vars, "x");
    WeightPoly wy = WeightPoly::variable(vars, "y");
    WeightPoly wz = WeightPoly::variable(vars, "z");
    Drawing d(vars);
    for (long long q = q_lo; q <= q_hi; ++q)
        for (long long p = p_lo; p <= p_hi; ++p) {
            int v = d.add_vertex(tri_vertex_name(p - p_lo, q - q_lo), q - p, p + q);
            inst.vertex_at.emplace(std::make_pair(p, q), v);
        }
    auto vertex = [&](long long p, long long q) { return inst.vertex_at.at({p, q}); };

    // A subgraph step is legal when its domino fits in the holey region and
    // its target is an existing lattice point of the instance.
    auto placeable = [&](const Cell& c) { return r.contains(c) && !r.is_hole(c); };
    std::set<std::pair<long long, long long>> start_set(start_pts.begin(), start_pts.end());
    auto is_point = [&](long long p, long long q) {
        if (blocked.count({p, q})) return false;
        return points.count({p, q}) || start_set.count({p, q});
    };
    std::set<std::pair<int, int>> subgraph_pairs;
    for (const Cell& c : r.cells()) {
        if (!cell_black(c) || r.is_hole(c)) continue;
        auto [p, q] = black_cell_point(c);
        struct Step {
            Cell other;   // the white cell completing the domino
            long long dp; // lattice displacement
            long long dq;
        };
        const Step steps[] = {
            {{c.i, c.j - 1}, 1, 0}, // vertical domino, black on top
            {{c.i, c.j + 1}, 0, 1}, // vertical domino, black on bottom
            {{c.i + 1, c.j}, 1, 1}, // horizontal domino, black on the left
        };
        for (const Step& s : steps) {
            if (!placeable(s.other)) continue;
            if (!is_point(p + s.dp, q + s.dq)) continue;
            subgraph_pairs.emplace(vertex(p, q), vertex(p + s.dp, q + s.dq));
        }
    }
    for (long long q = q_lo; q <= q_hi; ++q)
        for (long long p = p_lo; p <= p_hi; ++p) {
            auto add = [&](long long dp, long long dq, const WeightPoly& w) {
                if (p + dp > p_hi || q + dq > q_hi) return;
                int a = vertex(p, q);
                int b = vertex(p + dp, q + dq);
                d.add_edge(a, b, w, subgraph_pairs.count({a, b}) > 0);
            };
            add(1, 0, wx);
            add(0, 1, wy);
            add(1, 1, wz);
        }
    d.set_source(vertex(p_lo, q_lo));
    d.set_sink(vertex(p_hi, q_hi));

    for (const auto& pt : start_pts) inst.config.starts.push_back(vertex(pt.first, pt.second));
    for (const auto& pt : end_pts) inst.config.ends.push_back(vertex(pt.first, pt.second));
    for (const Cell& c : r.cells())
        if (cell_black(c)) {
            auto [p, q] = black_cell_point(c);
            inst.vertex_of_black.emplace(c, vertex(p, q));
        }
    inst.drawing = std::move(d);
    return inst;
}

Integer count_tilings_via_paths(const AztecRegion& r, int margin) {
    PathInstance inst = region_to_paths(r, margin);
    if (inst.no_tilings) return 0;
    if (inst.config.n() == 0) return 1; // the unique all-horizontal tiling
    SignedMatrixResult res = matrix_M(inst.drawing, inst.config);
    std::map<std::string, Integer> ones{{"x", 1}, {"y", 1}, {"z", 1}};
    return res.normalized_count.eval(ones);
}

Integer aztec_four_hole_formula(int a, int b, int c) {
    if (a < 1 || c < 1 || b < 0) throw input_error("parameters require a >= 1, c >= 1, b >= 0");
    std::map<std::string, Integer> ones{{"x", 1}, {"y", 1}, {"z", 1}};
    auto delannoy = [&](int k) { return weighted_delannoy(k, k).eval(ones); };
    auto schroder = [&](int k) { return weighted_schroder(k).eval(ones); };
    Integer inner = 0;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= c; ++j)
            inner += schroder(b + i + j - 1) * delannoy(a - i) * delannoy(c - j);
    return 2 * delannoy(b) * inner;
}

std::optional<AztecRegion> collinear_four_hole_region(int a, int b, int c, int m, int n,
                                                      long long i1, long long j) {
    if (a < 1 || c < 1 || b < 0) throw input_error("parameters require a >= 1, c >= 1, b >= 0");
    // Colors along the row alternate; the leftmost hole must be white.
    if (((i1 + j) % 2 + 2) % 2 != 0) return std::nullopt;
    std::vector<Cell> holes = {
        {i1, j},
        {i1 + 2 * a, j},
        {i1 + 2 * a + 2 * b + 1, j},
        {i1 + 2 * a + 2 * b + 1 + 2 * c, j},
    };
    AztecRegion base = AztecRegion::mixed(m, n);
    for (const Cell& h : holes)
        if (!base.contains(h)) return std::nullopt;
    return base.with_holes(holes);
}

std::vector<AztecRegion> four_hole_placements(int a, int b, int c, int count) {
    // Diversify across enclosing rectangles and hole positions: at most two
    // placements per (m, n), searched small-to-large.
    std::vector<AztecRegion> out;
    for (int size = 2; size <= 60 && static_cast<int>(out.size()) < count; ++size) {
        for (int m = 1; m < size && static_cast<int>(out.size()) < count; ++m) {
            int n = size - m;
            int found_here = 0;
            for (long long j = 0; j < m + n && found_here < 2; ++j) {
                for (long long i1 = row_left(m, j); i1 <= row_right(n, j) && found_here < 2;
                     ++i1) {
                    auto region = collinear_four_hole_region(a, b, c, m, n, i1, j);
                    if (!region) continue;
                    out.push_back(std::move(*region));
                    ++found_here;
                    if (static_cast<int>(out.size()) >= count) break;
                }
            }
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw input_error("could not place the requested number of hole configurations");
    return out;
}

PathFamily tiling_to_family(const AztecRegion& r, const Tiling& t, const PathInstance& inst) {
    std::map<int, int> next; // step anchored at a black cell's vertex
    for (const Domino& dom : t.dominoes) {
        const Cell& black = cell_black(dom.first) ? dom.first : dom.second;
        const Cell& white = cell_black(dom.first) ? dom.second : dom.first;
        long long dp = 0, dq = 0;
        if (black.i == white.i) {
            if (black.j > white.j) {
                dp = 1; // black on top
            } else {
                dq = 1; // black on bottom
            }
        } else if (black.i < white.i) {
            dp = 1; // black on the left
            dq = 1;
        } else {
            continue; // black on the right: no step
        }
        auto [p, q] = black_cell_point(black);
        int from = inst.vertex_of_black.at(black);
        int to = inst.vertex_at.at({p + dp, q + dq});
        if (!next.emplace(from, to).second)
            throw internal_error("two steps anchored at one black cell");
    }
    std::set<int> ends(inst.config.ends.begin(), inst.config.ends.end());
    PathFamily family;
    std::size_t used_steps = 0;
    for (int u : inst.config.starts) {
        Path path{u};
        int cur = u;
        while (!ends.count(cur)) {
            auto it = next.find(cur);
            if (it == next.end()) throw internal_error("tiling path ended away from a hole");
            cur = it->second;
            path.push_back(cur);
            ++used_steps;
            if (path.size() > next.size() + 2)
                throw internal_error("tiling path does not terminate");
        }
        family.paths.push_back(std::move(path));
        auto pos = std::find(inst.config.ends.begin(), inst.config.ends.end(), cur);
        family.connection.push_back(static_cast<int>(pos - inst.config.ends.begin()));
    }
    // Every step of the tiling must lie on one of the traced paths.
    if (used_steps != next.size())
        throw internal_error("tiling contains steps outside the traced paths");
    return family;
}

} // namespace lgvx
