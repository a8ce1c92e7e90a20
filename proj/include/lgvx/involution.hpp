#pragma once

#include <vector>

#include "lgvx/drawing.hpp"
#include "lgvx/pathcount.hpp"

namespace lgvx {

// Total order over vertex ids: rank[v] positions v in the order.
using VertexOrder = std::vector<int>;

// Drawing-stable default: sort by (y, x, name).
VertexOrder default_vertex_order(const Drawing& d);

// Tail-switching involution. A vertex-disjoint family is a fixed point;
// otherwise the least intersection vertex x (under ord) and the two paths
// through x with smallest indices have their tails after x swapped, composing
// the connection type with a transposition.
PathFamily phi(const PathFamily& family, const VertexOrder& ord);

// Maximal vertex run shared by two paths; a single vertex is a length-0
// subpath.
struct CommonSubpath {
    std::vector<int> vertices;
};

std::vector<CommonSubpath> common_subpaths(const Path& p, const Path& q);

// Whether p arrives at and leaves c on different sides of q. Subpaths that
// contain an endpoint of either path (no well-defined arrival or departure)
// are classified non-transversal.
bool is_transversal(const Drawing& d, const Path& p, const Path& q, const CommonSubpath& c);

int intersection_number_pair(const Drawing& d, const Path& p, const Path& q);
int intersection_number(const Drawing& d, const PathFamily& family);

} // namespace lgvx
