#include "lgvx/lattices.hpp"

#include <algorithm>

namespace lgvx {

const std::vector<std::string>& grid_vars() {
    static const std::vector<std::string> vars{"x", "y"};
    return vars;
}

const std::vector<std::string>& tri_vars() {
    static const std::vector<std::string> vars{"x", "y", "z"};
    return vars;
}

std::string grid_vertex_name(long long x, long long y) {
    return "v" + std::to_string(x) + "_" + std::to_string(y);
}

std::string tri_vertex_name(long long p, long long q) {
    return "t" + std::to_string(p) + "_" + std::to_string(q);
}

Drawing build_grid(int w, int h, const WeightPoly& wx, const WeightPoly& wy) {
    if (w < 1 || h < 1) throw input_error("grid dimensions must be positive");
    if (wx.variables() != wy.variables())
        throw input_error("grid weights must share a variable list");
    Drawing d(wx.variables());
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x <= w; ++x) d.add_vertex(grid_vertex_name(x, y), x, y);
    auto id = [&](int x, int y) { return y * (w + 1) + x; };
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x <= w; ++x) {
            if (x < w) d.add_edge(id(x, y), id(x + 1, y), wx);
            if (y < h) d.add_edge(id(x, y), id(x, y + 1), wy);
        }
    d.set_source(id(0, 0));
    d.set_sink(id(w, h));
    return d;
}

Drawing build_tri_rhombus(int N, const WeightPoly& wx, const WeightPoly& wy,
                          const WeightPoly& wz) {
    if (N < 1) throw input_error("rhombus size must be positive");
    if (wx.variables() != wy.variables() || wy.variables() != wz.variables())
        throw input_error("rhombus weights must share a variable list");
    Drawing d(wx.variables());
    auto id = [&](int p, int q) { return q * (N + 1) + p; };
    for (int q = 0; q <= N; ++q)
        for (int p = 0; p <= N; ++p)
            d.add_vertex(tri_vertex_name(p, q), q - p, p + q);
    for (int q = 0; q <= N; ++q)
        for (int p = 0; p <= N; ++p) {
            if (p < N) d.add_edge(id(p, q), id(p + 1, q), wx);
            if (q < N) d.add_edge(id(p, q), id(p, q + 1), wy);
            if (p < N && q < N) d.add_edge(id(p, q), id(p + 1, q + 1), wz);
        }
    d.set_source(id(0, 0));
    d.set_sink(id(N, N));
    return d;
}

Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan_number(int n) {
    Integer c = binomial(2LL * n, n);
    Integer q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), Integer(n + 1).get_mpz_t());
    if (rem != 0) throw internal_error("central binomial not divisible by n + 1");
    return q;
}

WeightPoly weighted_delannoy(int n, int k) {
    if (n < 0 || k < 0) throw input_error("indices must be non-negative");
    const auto& vars = tri_vars();
    WeightPoly xy_plus_z =
        WeightPoly::variable(vars, "x") * WeightPoly::variable(vars, "y") +
        WeightPoly::variable(vars, "z");
    WeightPoly total(vars);
    for (int i = 0; i <= std::min(n, k); ++i) {
        Integer coef = binomial(n, i) * binomial(k, i);
        WeightPoly term = WeightPoly::monomial(
            vars, coef,
            {static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(k - i), 0});
        total += term * xy_plus_z.pow(static_cast<unsigned>(i));
    }
    return total;
}

WeightPoly weighted_delannoy_recurrence(int n, int k) {
    if (n < 0 || k < 0) throw input_error("indices must be non-negative");
    const auto& vars = tri_vars();
    WeightPoly x = WeightPoly::variable(vars, "x");
    WeightPoly y = WeightPoly::variable(vars, "y");
    WeightPoly z = WeightPoly::variable(vars, "z");
    std::vector<std::vector<WeightPoly>> table(
        static_cast<std::size_t>(n) + 1,
        std::vector<WeightPoly>(static_cast<std::size_t>(k) + 1, WeightPoly::zero(vars)));
    for (int a = 0; a <= n; ++a)
        table[static_cast<std::size_t>(a)][0] =
            WeightPoly::monomial(vars, 1, {static_cast<std::uint32_t>(a), 0, 0});
    for (int b = 0; b <= k; ++b)
        table[0][static_cast<std::size_t>(b)] =
            WeightPoly::monomial(vars, 1, {0, static_cast<std::uint32_t>(b), 0});
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= k; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                z * table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                x * table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] +
                y * table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)];
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

WeightPoly weighted_schroder(int n) {
    if (n < 0) throw input_error("length must be non-negative");
    const auto& vars = tri_vars();
    WeightPoly total(vars);
    for (int i = 0; i <= n; ++i) {
        Integer coef = catalan_number(i) * binomial(n + i, n - i);
        total += WeightPoly::monomial(vars, coef,
                                      {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i),
                                       static_cast<std::uint32_t>(n - i)});
    }
    return total;
}

WeightPoly weighted_binomial(int n, int k) {
    if (n < 0 || k < 0) throw input_error("indices must be non-negative");
    return WeightPoly::monomial(grid_vars(), binomial(n + k, k),
                                {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n)});
}

WeightPoly weighted_catalan(int n) {
    if (n < 0) throw input_error("index must be non-negative");
    return WeightPoly::monomial(grid_vars(), catalan_number(n),
                                {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n)});
}

namespace {

void check_params(const FourPointParams& p) {
    if (p.a < 1 || p.c < 1 || p.b < 0)
        throw input_error("parameters require a >= 1, c >= 1, b >= 0");
}

} // namespace

WeightPoly four_point_formula_tri(const FourPointParams& params) {
    check_params(params);
    WeightPoly inner(tri_vars());
    for (int i = 1; i <= params.a; ++i)
        for (int j = 1; j <= params.c; ++j)
            inner += weighted_schroder(params.b + i + j - 1) *
                     weighted_delannoy(params.a - i, params.a - i) *
                     weighted_delannoy(params.c - j, params.c - j);
    // Every path in the decomposition enters and leaves its above- or
    // below-diagonal stretch through one (0,1) and one (1,0) unit step,
    // contributing a factor x*y.
    WeightPoly unit_steps =
        WeightPoly::variable(tri_vars(), "x") * WeightPoly::variable(tri_vars(), "y");
    return WeightPoly::constant(tri_vars(), 2) * weighted_delannoy(params.b, params.b) *
           unit_steps * inner;
}

WeightPoly four_point_formula_square(const FourPointParams& params) {
    check_params(params);
    WeightPoly inner(grid_vars());
    for (int i = 1; i <= params.a; ++i)
        for (int j = 1; j <= params.c; ++j)
            inner += weighted_catalan(params.b + i + j - 1) *
                     weighted_binomial(params.a - i, params.a - i) *
                     weighted_binomial(params.c - j, params.c - j);
    WeightPoly unit_steps =
        WeightPoly::variable(grid_vars(), "x") * WeightPoly::variable(grid_vars(), "y");
    return WeightPoly::constant(grid_vars(), 2) * weighted_binomial(params.b, params.b) *
           unit_steps * inner;
}

MarkedConfig four_point_marked_config(const Drawing& rhombus, const FourPointParams& params) {
    check_params(params);
    if (params.b == 0)
        throw input_error("b = 0 places u2 and v1 on the same vertex; marked points must be "
                          "distinct");
    auto vertex = [&](int p, int q) {
        auto v = rhombus.find_vertex(tri_vertex_name(p, q));
        if (!v) throw input_error("rhombus does not contain " + tri_vertex_name(p, q));
        return *v;
    };
    const int a = params.a, b = params.b, c = params.c;
    MarkedConfig m;
    m.starts = {vertex(0, 0), vertex(a, a)};
    m.ends = {vertex(a + b, a + b), vertex(a + b + c, a + b + c)};
    return m;
}

} // namespace lgvx
