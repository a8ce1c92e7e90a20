#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace lgvx {

struct Pt {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const Pt&, const Pt&) = default;
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }

using Wide = __int128;

inline Wide cross(const Pt& a, const Pt& b) {
    return Wide(a.x) * b.y - Wide(a.y) * b.x;
}

// Sign of the cross product of (b - a) and (c - a): > 0 when c lies strictly
// left of the directed line a -> b.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    Wide v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// q lies on the closed segment [a, b].
inline bool on_segment(const Pt& a, const Pt& b, const Pt& q) {
    if (orient(a, b, q) != 0) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

// Counterclockwise angular order of direction vectors, measured from the
// positive x-axis over [0, 360) degrees. Half 0 covers [0, 180).
inline int angle_half(const Pt& dir) {
    if (dir.y > 0 || (dir.y == 0 && dir.x > 0)) return 0;
    return 1;
}

inline bool angle_less(const Pt& a, const Pt& b) {
    int ha = angle_half(a);
    int hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

// v lies strictly inside the counterclockwise open arc from f to b. All three
// directions must be pairwise non-parallel or opposite as needed; in a valid
// drawing distinct segments at a vertex never share a direction.
inline bool ccw_strictly_between(const Pt& f, const Pt& b, const Pt& v) {
    if (angle_less(f, b)) return angle_less(f, v) && angle_less(v, b);
    return angle_less(f, v) || angle_less(v, b);
}

// True when segments [a,b] and [c,d] share any point that is not a common
// endpoint of both. Used for the drawing planarity check, where edges may
// touch only at shared vertices.
bool segments_conflict(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Even-odd membership in the closed polyline `boundary` (a cyclic point
// sequence; repeated and zero-length portions permitted). Points on the
// boundary count as inside.
bool region_contains(const std::vector<Pt>& boundary, const Pt& q);

} // namespace lgvx
