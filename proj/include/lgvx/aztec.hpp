#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lgvx/drawing.hpp"
#include "lgvx/pathcount.hpp"
#include "lgvx/poly.hpp"

namespace lgvx {

// Unit square [i, i+1] x [j, j+1].
struct Cell {
    long long i = 0;
    long long j = 0;
    auto operator<=>(const Cell&) const = default;
};

// Checkerboard coloring anchored so the top-right boundary cells of the
// mixed Aztec rectangle are black.
inline bool cell_black(const Cell& c) { return ((c.i + c.j) % 2 + 2) % 2 == 1; }

// The Aztec rectangle with its m southwest and n southeast boundary cells
// removed (kind Mixed), or the full Aztec rectangle (kind Rectangle; the
// order-n diamond when m = n), plus a list of unit holes.
class AztecRegion {
public:
    enum class Kind { Mixed, Rectangle };

    static AztecRegion mixed(int m, int n);
    static AztecRegion rectangle(int m, int n);
    AztecRegion with_holes(std::vector<Cell> holes) const;

    Kind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<Cell>& holes() const { return holes_; }
    bool contains(const Cell& c) const { return cell_set_.count(c) > 0; }
    bool is_hole(const Cell& c) const { return hole_set_.count(c) > 0; }
    // Cells minus holes, row-major.
    std::vector<Cell> active_cells() const;

private:
    Kind kind_ = Kind::Mixed;
    int m_ = 0;
    int n_ = 0;
    std::vector<Cell> cells_; // row-major (j, then i)
    std::set<Cell> cell_set_;
    std::vector<Cell> holes_;
    std::set<Cell> hole_set_;
};

using Domino = std::pair<Cell, Cell>; // edge-adjacent cells, ordered
struct Tiling {
    std::vector<Domino> dominoes;
};

// Exhaustive matching count over the active cells; throws
// resource_limit_error past the configured ceilings.
Integer count_tilings_brute(const AztecRegion& r);
std::vector<Tiling> enumerate_tilings(const AztecRegion& r);

// The induced non-intersecting-path instance: a triangular-lattice subgraph
// anchored at black-cell left-edge midpoints, hosted in a full rhombus
// supergraph with margin around the region.
struct PathInstance {
    Drawing drawing;
    MarkedConfig config;           // empty when there are no holes
    bool no_tilings = false;       // unequal hole colors
    std::map<std::pair<long long, long long>, int> vertex_at; // tri (p,q) -> vertex
    std::map<Cell, int> vertex_of_black;                      // black cell -> vertex

    PathInstance() : drawing(std::vector<std::string>{}) {}
};

// Triangular-lattice coordinates of the left-edge midpoint of a black cell.
std::pair<long long, long long> black_cell_point(const Cell& c);

PathInstance region_to_paths(const AztecRegion& r, int margin = 1);

// Number of tilings through the path instance: the sign-normalized
// determinant evaluated at x = y = z = 1; 1 when there are no holes.
Integer count_tilings_via_paths(const AztecRegion& r, int margin = 1);

// Closed-form tiling count for four collinear holes colored
// white-white-black-black at spacings 2a-1, 2b, 2c-1.
Integer aztec_four_hole_formula(int a, int b, int c);

// The mixed Aztec rectangle MR_{m,n} holding the four collinear holes with
// the leftmost hole at cell (i1, j); nullopt when any hole falls outside.
std::optional<AztecRegion> collinear_four_hole_region(int a, int b, int c, int m, int n,
                                                      long long i1, long long j);

// The first `count` hole placements (enclosing rectangle plus position) in a
// deterministic small-to-large search order.
std::vector<AztecRegion> four_hole_placements(int a, int b, int c, int count);

// Reads the steps of a tiling into the corresponding path family on the
// instance; used to validate the tiling/path correspondence.
PathFamily tiling_to_family(const AztecRegion& r, const Tiling& t, const PathInstance& inst);

} // namespace lgvx
