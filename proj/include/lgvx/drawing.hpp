#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgvx/geometry.hpp"
#include "lgvx/poly.hpp"

namespace lgvx {

struct Vertex {
    std::string name;
    long long x = 0;
    long long y = 0;
};

struct EdgeRec {
    int src = -1;
    int dst = -1;
    WeightPoly weight;
    bool in_subgraph = true;
};

// Directed path as a vertex-index sequence; a single vertex is the length-0
// path.
using Path = std::vector<int>;

// Ordered marked points: starts U and ends V, as vertex indices.
struct MarkedConfig {
    std::vector<int> starts;
    std::vector<int> ends;
    int n() const { return static_cast<int>(starts.size()); }
};

// An st-planar supergraph with a subgraph flag per edge, drawn with exact
// integer coordinates. Immutable once built; all operations on it are pure.
class Drawing {
public:
    explicit Drawing(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    int add_vertex(std::string name, long long x, long long y);
    int add_edge(int src, int dst, WeightPoly weight, bool in_subgraph = true);
    void set_source(int v) { source_ = v; }
    void set_sink(int v) { sink_ = v; }

    const std::vector<std::string>& variables() const { return vars_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
    const EdgeRec& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<int>& out_edges(int v) const;
    const std::vector<int>& in_edges(int v) const;
    int source() const { return source_; }
    int sink() const { return sink_; }
    Pt position(int v) const {
        const Vertex& vx = vertex(v);
        return {vx.x, vx.y};
    }
    std::optional<int> find_vertex(const std::string& name) const;
    // Subgraph edge src -> dst, if present.
    std::optional<int> find_subgraph_edge(int src, int dst) const;

    bool operator==(const Drawing& rhs) const;

private:
    std::vector<std::string> vars_;
    std::vector<Vertex> vertices_;
    std::vector<EdgeRec> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::unordered_map<std::string, int> index_;
    int source_ = -1;
    int sink_ = -1;
};

enum class ViolationKind {
    Coordinates, // duplicate vertex positions or names
    Upwardness,
    Planarity,
    Simplicity, // self-loop or parallel edge
    Acyclicity,
    Connectivity,
    SourceSink,
    OuterFace,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

std::string violation_kind_name(ViolationKind k);

// Returns every violated drawing invariant; empty means the drawing is a
// valid upward planar drawing of an st-planar supergraph.
std::vector<Violation> validate_drawing(const Drawing& d);

// Throws input_error when the config breaks a MarkedConfig invariant
// (|U| = |V| >= 1, all distinct, U and V disjoint, ids in range).
void validate_marked_config(const Drawing& d, const MarkedConfig& m);

// Incident edge ids sorted counterclockwise by the angle of the segment
// direction leaving v (reversed direction for incoming edges), measured from
// the positive x-axis in [0, 360) degrees.
std::vector<int> angular_order(const Drawing& d, int v);

// The path from `from` to `to` in the supergraph that takes, at each vertex,
// the feasible out-edge with the largest leaving angle. Throws input_error
// when `to` is unreachable.
Path leftmost_path(const Drawing& d, int from, int to);

// Closed boundary of the left side of p: leftmost(s -> u), p itself,
// leftmost(v -> t), and the reversed left boundary of the supergraph.
struct LeftSideRegion {
    std::vector<Pt> boundary;
};

LeftSideRegion left_side_region(const Drawing& d, const Path& p);
// Same, with the three leftmost pieces precomputed by the caller.
LeftSideRegion assemble_left_region(const Drawing& d, const Path& s_to_u, const Path& p,
                                    const Path& v_to_t, const Path& s_to_t);

// Marked points of U union V lying in the left side of p (boundary points
// included).
std::set<int> left_marked_points(const Drawing& d, const Path& p, const MarkedConfig& m);
std::set<int> left_marked_points_in_region(const Drawing& d, const LeftSideRegion& region,
                                           const MarkedConfig& m);

// (-1)^|left_marked_points|.
int path_sign(const Drawing& d, const Path& p, const MarkedConfig& m);
int family_sign(const Drawing& d, std::span<const Path> paths, const MarkedConfig& m);

// Caches the leftmost-path pieces shared by repeated sign queries against a
// fixed drawing and marked config.
class SignEvaluator {
public:
    SignEvaluator(const Drawing& d, const MarkedConfig& m);
    std::set<int> left_points(const Path& p) const;
    int sign(const Path& p) const;

private:
    const Drawing& d_;
    const MarkedConfig& m_;
    Path s_to_t_;
    mutable std::unordered_map<int, Path> from_source_;
    mutable std::unordered_map<int, Path> to_sink_;
};

} // namespace lgvx
