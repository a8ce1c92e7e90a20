#pragma once

#include <map>
#include <vector>

#include "lgvx/drawing.hpp"
#include "lgvx/poly.hpp"

namespace lgvx {

// An n-tuple of subgraph paths, p_i starting at u_i; connection[i] is the
// index j with p_i ending at v_j.
struct PathFamily {
    std::vector<Path> paths;
    std::vector<int> connection;
};

struct SignedMatrixResult {
    PolyMatrix M;
    WeightPoly determinant;
    WeightPoly normalized_count; // |det M|: det or -det, all coefficients >= 0
};

std::vector<std::vector<int>> all_permutations(int n);
int permutation_sign(const std::vector<int>& perm);

// All directed subgraph paths u -> v, depth-first with out-edges in angular
// order; the length-0 path when u = v.
std::vector<Path> enumerate_paths(const Drawing& d, int u, int v);

WeightPoly path_weight(const Drawing& d, const Path& p);
WeightPoly family_weight(const Drawing& d, const PathFamily& f);
bool family_disjoint(const PathFamily& f);
int family_sign(const Drawing& d, const PathFamily& f, const MarkedConfig& m);

// Generating function of all paths u -> v: dynamic programming over the
// acyclic subgraph.
WeightPoly h(const Drawing& d, int u, int v);
// Same value by explicit enumeration; the two must agree.
WeightPoly h_enumerate(const Drawing& d, int u, int v);

// Sum of sgn(p) wt(p) over all paths u_i -> v_j.
WeightPoly signed_entry(const Drawing& d, const MarkedConfig& m, int i, int j);

// The signed matrix, its determinant, and the sign-normalized count. Throws
// mixed_sign_error when neither det nor -det has all-nonnegative
// coefficients.
SignedMatrixResult matrix_M(const Drawing& d, const MarkedConfig& m);

// GF of non-intersecting n-tuples per connection type, by exhaustive
// enumeration with pairwise vertex-disjointness pruning.
std::map<std::vector<int>, WeightPoly> brute_force_by_connection(const Drawing& d,
                                                                 const MarkedConfig& m);
// Total over all connection types.
WeightPoly brute_force_nonintersecting(const Drawing& d, const MarkedConfig& m);

// det(h(u_i, v_j)).
WeightPoly lgv_signed(const Drawing& d, const MarkedConfig& m);

struct LgvCheck {
    WeightPoly det_h;
    WeightPoly signed_sum; // sum over pi of sgn(pi) GF_0^pi, brute-forced
    std::map<std::vector<int>, WeightPoly> by_type;
    bool agree = false;
};
LgvCheck lgv_check(const Drawing& d, const MarkedConfig& m);

// True iff every pair of paths u_i -> v_k, u_j -> v_l with i < j, k > l
// shares a vertex.
bool check_compatibility(const Drawing& d, const MarkedConfig& m);

// Every n-tuple of paths (all connection types, in deterministic order),
// optionally restricted to vertex-disjoint tuples.
std::vector<PathFamily> enumerate_families(const Drawing& d, const MarkedConfig& m,
                                           bool only_nonintersecting);

} // namespace lgvx
