#include "lgvx/drawing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace lgvx {

bool segments_conflict(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int d1 = orient(c, d, a);
    int d2 = orient(c, d, b);
    int d3 = orient(a, b, c);
    int d4 = orient(a, b, d);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true; // proper crossing
    // An endpoint lying on the other segment is a conflict unless it is also
    // an endpoint of that segment.
    if (on_segment(c, d, a) && !(a == c || a == d)) return true;
    if (on_segment(c, d, b) && !(b == c || b == d)) return true;
    if (on_segment(a, b, c) && !(c == a || c == b)) return true;
    if (on_segment(a, b, d) && !(d == a || d == b)) return true;
    // Collinear overlap of positive length (covers coincident segments).
    if (d1 == 0 && d2 == 0 && d3 == 0) {
        auto key = [&](const Pt& p) {
            return a.x != b.x ? p.x : p.y;
        };
        long long lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        long long lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        if (std::max(lo1, lo2) < std::min(hi1, hi2)) return true;
    }
    return false;
}

bool region_contains(const std::vector<Pt>& boundary, const Pt& q) {
    const std::size_t n = boundary.size();
    if (n == 0) return false;
    if (n == 1) return boundary[0] == q;
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& p1 = boundary[i];
        const Pt& p2 = boundary[(i + 1) % n];
        if (p1 == p2) {
            if (p1 == q) return true;
            continue;
        }
        if (on_segment(p1, p2, q)) return true;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Pt& p1 = boundary[i];
        const Pt& p2 = boundary[(i + 1) % n];
        if ((p1.y > q.y) == (p2.y > q.y)) continue; // skip non-straddling and horizontal
        Wide dy = p2.y - p1.y;
        // (intersection x - q.x) has the sign of num / dy.
        Wide num = Wide(p1.x - q.x) * dy + Wide(q.y - p1.y) * Wide(p2.x - p1.x);
        if (dy > 0 ? num > 0 : num < 0) inside = !inside;
    }
    return inside;
}

int Drawing::add_vertex(std::string name, long long x, long long y) {
    if (index_.count(name)) throw input_error("duplicate vertex name: " + name);
    int id = static_cast<int>(vertices_.size());
    index_.emplace(name, id);
    vertices_.push_back({std::move(name), x, y});
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Drawing::add_edge(int src, int dst, WeightPoly weight, bool in_subgraph) {
    if (src < 0 || dst < 0 || src >= vertex_count() || dst >= vertex_count())
        throw input_error("edge endpoint out of range");
    if (weight.variables() != vars_)
        throw input_error("edge weight variable list does not match drawing");
    int id = static_cast<int>(edges_.size());
    edges_.push_back({src, dst, std::move(weight), in_subgraph});
    out_[static_cast<std::size_t>(src)].push_back(id);
    in_[static_cast<std::size_t>(dst)].push_back(id);
    return id;
}

const std::vector<int>& Drawing::out_edges(int v) const {
    return out_.at(static_cast<std::size_t>(v));
}

const std::vector<int>& Drawing::in_edges(int v) const {
    return in_.at(static_cast<std::size_t>(v));
}

std::optional<int> Drawing::find_vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Drawing::find_subgraph_edge(int src, int dst) const {
    for (int e : out_edges(src))
        if (edge(e).dst == dst && edge(e).in_subgraph) return e;
    return std::nullopt;
}

bool Drawing::operator==(const Drawing& rhs) const {
    if (vars_ != rhs.vars_ || source_ != rhs.source_ || sink_ != rhs.sink_) return false;
    if (vertices_.size() != rhs.vertices_.size() || edges_.size() != rhs.edges_.size())
        return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex& a = vertices_[i];
        const Vertex& b = rhs.vertices_[i];
        if (a.name != b.name || a.x != b.x || a.y != b.y) return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeRec& a = edges_[i];
        const EdgeRec& b = rhs.edges_[i];
        if (a.src != b.src || a.dst != b.dst || a.in_subgraph != b.in_subgraph ||
            a.weight != b.weight)
            return false;
    }
    return true;
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Coordinates: return "coordinates";
        case ViolationKind::Upwardness: return "upwardness";
        case ViolationKind::Planarity: return "planarity";
        case ViolationKind::Simplicity: return "simplicity";
        case ViolationKind::Acyclicity: return "acyclicity";
        case ViolationKind::Connectivity: return "connectivity";
        case ViolationKind::SourceSink: return "source-sink";
        case ViolationKind::OuterFace: return "outer-face";
    }
    return "unknown";
}

namespace {

// Darts: 2*e = forward (src -> dst), 2*e + 1 = backward.
int dart_tail(const Drawing& d, int dart) {
    const EdgeRec& e = d.edge(dart / 2);
    return dart % 2 == 0 ? e.src : e.dst;
}

int dart_head(const Drawing& d, int dart) {
    const EdgeRec& e = d.edge(dart / 2);
    return dart % 2 == 0 ? e.dst : e.src;
}

Pt dart_dir(const Drawing& d, int dart) {
    return d.position(dart_head(d, dart)) - d.position(dart_tail(d, dart));
}

// Rotation system: per vertex, darts leaving it in CCW angular order.
std::vector<std::vector<int>> rotations(const Drawing& d) {
    std::vector<std::vector<int>> rot(static_cast<std::size_t>(d.vertex_count()));
    for (int e = 0; e < d.edge_count(); ++e) {
        rot[static_cast<std::size_t>(d.edge(e).src)].push_back(2 * e);
        rot[static_cast<std::size_t>(d.edge(e).dst)].push_back(2 * e + 1);
    }
    for (auto& darts : rot)
        std::sort(darts.begin(), darts.end(), [&](int a, int b) {
            return angle_less(dart_dir(d, a), dart_dir(d, b));
        });
    return rot;
}

struct FaceDecomposition {
    std::vector<std::vector<int>> faces; // dart lists
    int outer = -1;
};

FaceDecomposition trace_faces(const Drawing& d) {
    auto rot = rotations(d);
    std::vector<int> pos(static_cast<std::size_t>(2 * d.edge_count()), -1);
    for (const auto& darts : rot)
        for (std::size_t i = 0; i < darts.size(); ++i)
            pos[static_cast<std::size_t>(darts[i])] = static_cast<int>(i);
    FaceDecomposition out;
    std::vector<char> seen(static_cast<std::size_t>(2 * d.edge_count()), 0);
    Wide best_area = 0;
    for (int start = 0; start < 2 * d.edge_count(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> walk;
        Wide area2 = 0;
        int dart = start;
        do {
            seen[static_cast<std::size_t>(dart)] = 1;
            walk.push_back(dart);
            area2 += cross(d.position(dart_tail(d, dart)), d.position(dart_head(d, dart)));
            // Next dart of the face on the left: the predecessor of the
            // reversed dart in the CCW rotation at the head.
            int rev = dart ^ 1;
            const auto& ring = rot[static_cast<std::size_t>(dart_head(d, dart))];
            int i = pos[static_cast<std::size_t>(rev)];
            dart = ring[(static_cast<std::size_t>(i) + ring.size() - 1) % ring.size()];
        } while (dart != start);
        out.faces.push_back(std::move(walk));
        if (out.outer < 0 || area2 < best_area) {
            best_area = area2;
            out.outer = static_cast<int>(out.faces.size()) - 1;
        }
    }
    return out;
}

} // namespace

std::vector<Violation> validate_drawing(const Drawing& d) {
    std::vector<Violation> out;
    const int V = d.vertex_count();
    const int E = d.edge_count();

    // Distinct coordinates.
    {
        std::map<std::pair<long long, long long>, int> seen;
        for (int v = 0; v < V; ++v) {
            auto key = std::make_pair(d.vertex(v).x, d.vertex(v).y);
            auto [it, inserted] = seen.emplace(key, v);
            if (!inserted)
                out.push_back({ViolationKind::Coordinates,
                               "vertices " + d.vertex(it->second).name + " and " +
                                   d.vertex(v).name + " share a position"});
        }
    }

    // Upwardness and simplicity.
    {
        std::set<std::pair<int, int>> pairs;
        for (int e = 0; e < E; ++e) {
            const EdgeRec& ed = d.edge(e);
            if (ed.src == ed.dst) {
                out.push_back({ViolationKind::Simplicity,
                               "self-loop at " + d.vertex(ed.src).name});
                continue;
            }
            if (!pairs.emplace(ed.src, ed.dst).second)
                out.push_back({ViolationKind::Simplicity,
                               "parallel edge " + d.vertex(ed.src).name + " -> " +
                                   d.vertex(ed.dst).name});
            if (d.vertex(ed.dst).y < d.vertex(ed.src).y)
                out.push_back({ViolationKind::Upwardness,
                               "edge " + d.vertex(ed.src).name + " -> " +
                                   d.vertex(ed.dst).name + " points downward"});
        }
    }

    // Planarity: pairwise segment conflicts and vertices inside edges.
    bool planar = true;
    for (int e1 = 0; e1 < E && out.size() < 64; ++e1) {
        const EdgeRec& a = d.edge(e1);
        Pt a1 = d.position(a.src), a2 = d.position(a.dst);
        for (int e2 = e1 + 1; e2 < E; ++e2) {
            const EdgeRec& b = d.edge(e2);
            if (segments_conflict(a1, a2, d.position(b.src), d.position(b.dst))) {
                planar = false;
                out.push_back({ViolationKind::Planarity,
                               "edges " + d.vertex(a.src).name + "->" + d.vertex(a.dst).name +
                                   " and " + d.vertex(b.src).name + "->" +
                                   d.vertex(b.dst).name + " intersect"});
                if (out.size() >= 64) break;
            }
        }
    }
    for (int v = 0; v < V && planar; ++v) {
        for (int e = 0; e < E; ++e) {
            const EdgeRec& ed = d.edge(e);
            if (ed.src == v || ed.dst == v) continue;
            if (on_segment(d.position(ed.src), d.position(ed.dst), d.position(v))) {
                planar = false;
                out.push_back({ViolationKind::Planarity,
                               "edge " + d.vertex(ed.src).name + "->" + d.vertex(ed.dst).name +
                                   " passes through vertex " + d.vertex(v).name});
                break;
            }
        }
    }

    // Acyclicity via Kahn's algorithm on the full edge set.
    {
        std::vector<int> indeg(static_cast<std::size_t>(V), 0);
        for (int e = 0; e < E; ++e) ++indeg[static_cast<std::size_t>(d.edge(e).dst)];
        std::queue<int> q;
        for (int v = 0; v < V; ++v)
            if (indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
        int processed = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++processed;
            for (int e : d.out_edges(v))
                if (--indeg[static_cast<std::size_t>(d.edge(e).dst)] == 0) q.push(d.edge(e).dst);
        }
        if (processed != V)
            out.push_back({ViolationKind::Acyclicity, "the edge set contains a directed cycle"});
    }

    // Connectivity of the underlying undirected graph.
    bool connected = true;
    if (V > 0) {
        std::vector<char> vis(static_cast<std::size_t>(V), 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            auto visit = [&](int w) {
                if (!vis[static_cast<std::size_t>(w)]) {
                    vis[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    q.push(w);
                }
            };
            for (int e : d.out_edges(v)) visit(d.edge(e).dst);
            for (int e : d.in_edges(v)) visit(d.edge(e).src);
        }
        if (count != V) {
            connected = false;
            out.push_back({ViolationKind::Connectivity, "the supergraph is not connected"});
        }
    }

    // Unique source s (no incoming edges) and unique sink t (no outgoing).
    if (d.source() < 0 || d.source() >= V || d.sink() < 0 || d.sink() >= V) {
        out.push_back({ViolationKind::SourceSink, "source or sink is not set"});
    } else {
        for (int v = 0; v < V; ++v) {
            bool no_in = d.in_edges(v).empty();
            bool no_out = d.out_edges(v).empty();
            if (no_in && v != d.source())
                out.push_back({ViolationKind::SourceSink,
                               "vertex " + d.vertex(v).name + " is a second source"});
            if (no_out && v != d.sink())
                out.push_back({ViolationKind::SourceSink,
                               "vertex " + d.vertex(v).name + " is a second sink"});
        }
        if (!d.in_edges(d.source()).empty())
            out.push_back({ViolationKind::SourceSink, "the source has incoming edges"});
        if (!d.out_edges(d.sink()).empty())
            out.push_back({ViolationKind::SourceSink, "the sink has outgoing edges"});
    }

    // Outer-face membership of s and t, via face tracing on the embedding.
    if (planar && connected && E > 0 && d.source() >= 0 && d.sink() >= 0 &&
        d.source() < V && d.sink() < V) {
        FaceDecomposition faces = trace_faces(d);
        int F = static_cast<int>(faces.faces.size());
        if (V - E + F != 2) {
            out.push_back({ViolationKind::OuterFace,
                           "face count is inconsistent with a planar embedding"});
        } else {
            std::set<int> on_outer;
            for (int dart : faces.faces[static_cast<std::size_t>(faces.outer)])
                on_outer.insert(dart_tail(d, dart));
            if (!on_outer.count(d.source()))
                out.push_back({ViolationKind::OuterFace, "the source is not on the outer face"});
            if (!on_outer.count(d.sink()))
                out.push_back({ViolationKind::OuterFace, "the sink is not on the outer face"});
        }
    }

    return out;
}

void validate_marked_config(const Drawing& d, const MarkedConfig& m) {
    if (m.starts.empty() || m.starts.size() != m.ends.size())
        throw input_error("marked config requires equally many starts and ends (n >= 1)");
    std::set<int> u(m.starts.begin(), m.starts.end());
    std::set<int> v(m.ends.begin(), m.ends.end());
    if (u.size() != m.starts.size()) throw input_error("duplicate starting point");
    if (v.size() != m.ends.size()) throw input_error("duplicate ending point");
    for (int id : m.starts)
        if (id < 0 || id >= d.vertex_count()) throw input_error("starting point out of range");
    for (int id : m.ends)
        if (id < 0 || id >= d.vertex_count()) throw input_error("ending point out of range");
    std::vector<int> both;
    std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(both));
    if (!both.empty())
        throw input_error("marked point " + d.vertex(both.front()).name +
                          " is both a start and an end");
}

std::vector<int> angular_order(const Drawing& d, int v) {
    if (v < 0 || v >= d.vertex_count()) throw input_error("unknown vertex");
    std::vector<int> darts;
    for (int e : d.out_edges(v)) darts.push_back(2 * e);
    for (int e : d.in_edges(v)) darts.push_back(2 * e + 1);
    std::sort(darts.begin(), darts.end(), [&](int a, int b) {
        return angle_less(dart_dir(d, a), dart_dir(d, b));
    });
    std::vector<int> edges;
    edges.reserve(darts.size());
    for (int dart : darts) edges.push_back(dart / 2);
    return edges;
}

Path leftmost_path(const Drawing& d, int from, int to) {
    if (from < 0 || from >= d.vertex_count() || to < 0 || to >= d.vertex_count())
        throw input_error("unknown vertex");
    // Vertices that still reach `to` in the supergraph.
    std::vector<char> reach(static_cast<std::size_t>(d.vertex_count()), 0);
    {
        std::queue<int> q;
        q.push(to);
        reach[static_cast<std::size_t>(to)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : d.in_edges(v)) {
                int w = d.edge(e).src;
                if (!reach[static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
    }
    if (!reach[static_cast<std::size_t>(from)])
        throw input_error("vertex " + d.vertex(to).name + " is not reachable from " +
                          d.vertex(from).name);
    Path path{from};
    int cur = from;
    int steps = 0;
    while (cur != to) {
        int best = -1;
        Pt best_dir{};
        for (int e : d.out_edges(cur)) {
            int head = d.edge(e).dst;
            if (!reach[static_cast<std::size_t>(head)]) continue;
            Pt dir = d.position(head) - d.position(cur);
            if (best < 0 || angle_less(best_dir, dir)) {
                best = head;
                best_dir = dir;
            }
        }
        if (best < 0) throw internal_error("leftmost walk has no feasible step");
        path.push_back(best);
        cur = best;
        if (++steps > d.vertex_count()) throw internal_error("leftmost walk did not terminate");
    }
    return path;
}

namespace {

void append_points(const Drawing& d, std::vector<Pt>& out, const Path& p, bool reversed) {
    auto push = [&](int v) {
        Pt pt = d.position(v);
        if (out.empty() || !(out.back() == pt)) out.push_back(pt);
    };
    if (reversed) {
        for (auto it = p.rbegin(); it != p.rend(); ++it) push(*it);
    } else {
        for (int v : p) push(v);
    }
}

} // namespace

LeftSideRegion assemble_left_region(const Drawing& d, const Path& s_to_u, const Path& p,
                                    const Path& v_to_t, const Path& s_to_t) {
    if (p.empty()) throw input_error("empty path");
    LeftSideRegion region;
    append_points(d, region.boundary, s_to_u, false);
    append_points(d, region.boundary, p, false);
    append_points(d, region.boundary, v_to_t, false);
    append_points(d, region.boundary, s_to_t, true);
    // The walk ends back at s; drop the duplicated closing point.
    if (region.boundary.size() > 1 && region.boundary.front() == region.boundary.back())
        region.boundary.pop_back();
    return region;
}

LeftSideRegion left_side_region(const Drawing& d, const Path& p) {
    if (p.empty()) throw input_error("empty path");
    Path s_to_u = leftmost_path(d, d.source(), p.front());
    Path v_to_t = leftmost_path(d, p.back(), d.sink());
    Path s_to_t = leftmost_path(d, d.source(), d.sink());
    return assemble_left_region(d, s_to_u, p, v_to_t, s_to_t);
}

std::set<int> left_marked_points_in_region(const Drawing& d, const LeftSideRegion& region,
                                           const MarkedConfig& m) {
    std::set<int> result;
    auto consider = [&](int v) {
        if (region_contains(region.boundary, d.position(v))) result.insert(v);
    };
    for (int v : m.starts) consider(v);
    for (int v : m.ends) consider(v);
    return result;
}

std::set<int> left_marked_points(const Drawing& d, const Path& p, const MarkedConfig& m) {
    return left_marked_points_in_region(d, left_side_region(d, p), m);
}

int path_sign(const Drawing& d, const Path& p, const MarkedConfig& m) {
    return left_marked_points(d, p, m).size() % 2 == 0 ? 1 : -1;
}

int family_sign(const Drawing& d, std::span<const Path> paths, const MarkedConfig& m) {
    SignEvaluator eval(d, m);
    int sign = 1;
    for (const Path& p : paths) sign *= eval.sign(p);
    return sign;
}

SignEvaluator::SignEvaluator(const Drawing& d, const MarkedConfig& m) : d_(d), m_(m) {
    s_to_t_ = leftmost_path(d_, d_.source(), d_.sink());
}

std::set<int> SignEvaluator::left_points(const Path& p) const {
    if (p.empty()) throw input_error("empty path");
    auto su = from_source_.find(p.front());
    if (su == from_source_.end())
        su = from_source_.emplace(p.front(), leftmost_path(d_, d_.source(), p.front())).first;
    auto vt = to_sink_.find(p.back());
    if (vt == to_sink_.end())
        vt = to_sink_.emplace(p.back(), leftmost_path(d_, p.back(), d_.sink())).first;
    LeftSideRegion region = assemble_left_region(d_, su->second, p, vt->second, s_to_t_);
    return left_marked_points_in_region(d_, region, m_);
}

int SignEvaluator::sign(const Path& p) const {
    return left_points(p).size() % 2 == 0 ? 1 : -1;
}

} // namespace lgvx
