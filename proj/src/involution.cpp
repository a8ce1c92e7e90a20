#include "lgvx/involution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lgvx {

VertexOrder default_vertex_order(const Drawing& d) {
    std::vector<int> ids(static_cast<std::size_t>(d.vertex_count()));
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const Vertex& va = d.vertex(a);
        const Vertex& vb = d.vertex(b);
        return std::tie(va.y, va.x, va.name) < std::tie(vb.y, vb.x, vb.name);
    });
    VertexOrder rank(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) rank[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    return rank;
}

PathFamily phi(const PathFamily& family, const VertexOrder& ord) {
    // Vertices shared by at least two paths.
    std::map<int, std::vector<int>> through; // vertex -> path indices
    for (std::size_t i = 0; i < family.paths.size(); ++i)
        for (int v : family.paths[i]) through[v].push_back(static_cast<int>(i));
    int x = -1;
    for (const auto& [v, idx] : through) {
        if (idx.size() < 2) continue;
        if (x < 0 || ord[static_cast<std::size_t>(v)] < ord[static_cast<std::size_t>(x)]) x = v;
    }
    if (x < 0) return family; // fixed point

    const auto& idx = through[x];
    int i = idx[0];
    int j = idx[1];
    const Path& pi = family.paths[static_cast<std::size_t>(i)];
    const Path& pj = family.paths[static_cast<std::size_t>(j)];
    auto pos_i = static_cast<std::size_t>(std::find(pi.begin(), pi.end(), x) - pi.begin());
    auto pos_j = static_cast<std::size_t>(std::find(pj.begin(), pj.end(), x) - pj.begin());

    Path new_i(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(pos_i) + 1);
    new_i.insert(new_i.end(), pj.begin() + static_cast<std::ptrdiff_t>(pos_j) + 1, pj.end());
    Path new_j(pj.begin(), pj.begin() + static_cast<std::ptrdiff_t>(pos_j) + 1);
    new_j.insert(new_j.end(), pi.begin() + static_cast<std::ptrdiff_t>(pos_i) + 1, pi.end());

    PathFamily out = family;
    out.paths[static_cast<std::size_t>(i)] = std::move(new_i);
    out.paths[static_cast<std::size_t>(j)] = std::move(new_j);
    std::swap(out.connection[static_cast<std::size_t>(i)],
              out.connection[static_cast<std::size_t>(j)]);
    return out;
}

std::vector<CommonSubpath> common_subpaths(const Path& p, const Path& q) {
    std::map<int, std::size_t> pos_q;
    for (std::size_t k = 0; k < q.size(); ++k) pos_q.emplace(q[k], k);
    std::vector<std::pair<std::size_t, std::size_t>> common; // (index in p, index in q)
    for (std::size_t k = 0; k < p.size(); ++k) {
        auto it = pos_q.find(p[k]);
        if (it != pos_q.end()) common.emplace_back(k, it->second);
    }
    // Shared vertices of two paths in an acyclic graph appear in the same
    // relative order in both.
    for (std::size_t k = 1; k < common.size(); ++k)
        if (common[k].second <= common[k - 1].second)
            throw internal_error("common vertices out of order on an acyclic graph");
    std::vector<CommonSubpath> out;
    for (std::size_t k = 0; k < common.size(); ++k) {
        if (!out.empty() && common[k].first == common[k - 1].first + 1 &&
            common[k].second == common[k - 1].second + 1) {
            out.back().vertices.push_back(p[common[k].first]);
        } else {
            out.push_back({{p[common[k].first]}});
        }
    }
    return out;
}

namespace {

std::size_t position_in(const Path& p, int v) {
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) throw internal_error("vertex is not on the path");
    return static_cast<std::size_t>(it - p.begin());
}

} // namespace

bool is_transversal(const Drawing& d, const Path& p, const Path& q, const CommonSubpath& c) {
    if (c.vertices.empty()) throw input_error("empty common subpath");
    int entry = c.vertices.front();
    int exit = c.vertices.back();
    std::size_t p_entry = position_in(p, entry);
    std::size_t p_exit = position_in(p, exit);
    std::size_t q_entry = position_in(q, entry);
    std::size_t q_exit = position_in(q, exit);
    // Both an arrival and a departure are required on both paths.
    if (p_entry == 0 || q_entry == 0) return false;
    if (p_exit + 1 >= p.size() || q_exit + 1 >= q.size()) return false;

    auto dir = [&](int from, int to) { return d.position(to) - d.position(from); };
    // Side of q at the entry vertex: the counterclockwise arc from q's
    // forward direction to its backward direction is q's left.
    Pt q_fwd_in = dir(entry, q[q_entry + 1]);
    Pt q_back_in = dir(entry, q[q_entry - 1]);
    Pt probe_in = dir(entry, p[p_entry - 1]);
    bool left_in = ccw_strictly_between(q_fwd_in, q_back_in, probe_in);

    Pt q_fwd_out = dir(exit, q[q_exit + 1]);
    Pt q_back_out = dir(exit, q[q_exit - 1]);
    Pt probe_out = dir(exit, p[p_exit + 1]);
    bool left_out = ccw_strictly_between(q_fwd_out, q_back_out, probe_out);

    return left_in != left_out;
}

int intersection_number_pair(const Drawing& d, const Path& p, const Path& q) {
    int count = 0;
    for (const CommonSubpath& c : common_subpaths(p, q))
        if (is_transversal(d, p, q, c)) ++count;
    return count;
}

int intersection_number(const Drawing& d, const PathFamily& family) {
    int total = 0;
    for (std::size_t i = 0; i < family.paths.size(); ++i)
        for (std::size_t j = i + 1; j < family.paths.size(); ++j)
            total += intersection_number_pair(d, family.paths[i], family.paths[j]);
    return total;
}

} // namespace lgvx
