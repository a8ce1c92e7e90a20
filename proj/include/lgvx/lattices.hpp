#pragma once

#include <string>

#include "lgvx/drawing.hpp"
#include "lgvx/poly.hpp"

namespace lgvx {

// Variable lists shared by the lattice builders and closed forms.
const std::vector<std::string>& grid_vars(); // {x, y}
const std::vector<std::string>& tri_vars();  // {x, y, z}

std::string grid_vertex_name(long long x, long long y);
std::string tri_vertex_name(long long p, long long q);

// (w+1) x (h+1) grid, east edges weighted wx and north edges wy; source at
// (0,0), sink at (w,h); every edge is in the subgraph.
Drawing build_grid(int w, int h, const WeightPoly& wx, const WeightPoly& wy);

// Triangular-lattice rhombus over lattice coordinates (p,q) in [0,N]^2,
// placed in the plane by (p,q) -> (q-p, p+q) so the steps (1,0), (0,1) and
// (1,1) (weights wx, wy, wz) all point upward.
Drawing build_tri_rhombus(int N, const WeightPoly& wx, const WeightPoly& wy,
                          const WeightPoly& wz);

Integer binomial(long long n, long long k);
Integer catalan_number(int n);

// Total weight of the (1,0)/(0,1)/(1,1)-step paths from (0,0) to (n,k),
// closed form over {x,y,z}.
WeightPoly weighted_delannoy(int n, int k);
// Same value by the defining recurrence.
WeightPoly weighted_delannoy_recurrence(int n, int k);

// Total weight of the length-n paths (0,0) -> (n,n) never passing below the
// diagonal, closed form over {x,y,z}.
WeightPoly weighted_schroder(int n);

// Square-lattice counterparts over {x,y}.
WeightPoly weighted_binomial(int n, int k); // C(n+k,k) x^k y^n
WeightPoly weighted_catalan(int n);         // Cat(n) x^n y^n

// Spacing parameters for two marked pairs on the main diagonal: u1 = (0,0),
// u2 = (a,a), v1 = (a+b,a+b), v2 = (a+b+c,a+b+c).
struct FourPointParams {
    int a = 1;
    int b = 1;
    int c = 1;
};

// Closed form for the total weight of non-intersecting pairs between the
// four diagonal points on the triangular lattice.
WeightPoly four_point_formula_tri(const FourPointParams& params);
// Square-lattice counterpart; equals the triangular form at z = 0.
WeightPoly four_point_formula_square(const FourPointParams& params);

// The four diagonal marked points on build_tri_rhombus(a+b+c). Requires
// b >= 1: at b = 0 the points u2 and v1 coincide, which marked configs
// reject.
MarkedConfig four_point_marked_config(const Drawing& rhombus, const FourPointParams& params);

} // namespace lgvx
