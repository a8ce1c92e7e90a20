#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lgvx/errors.hpp"

namespace lgvx {

using Integer = mpz_class;
using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients over a fixed, ordered variable list. Terms map exponent
// vectors to non-zero coefficients; the zero polynomial is the empty map.
// Values are immutable in spirit: every operation returns a new polynomial.
//
// Text syntax (used by graph files and the CLI): terms joined by `+`/`-`,
// each term an optional integer coefficient followed by `*`-separated
// factors `var` or `var^<uint>`. Examples: `1`, `x`, `-3*x^4*y^2`,
// `13*x^2*y^4 + x`. Whitespace is insignificant.
class WeightPoly {
public:
    using TermMap = std::map<Exponents, Integer>;

    WeightPoly() = default; // zero over the empty variable list
    explicit WeightPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static WeightPoly zero(std::vector<std::string> vars);
    static WeightPoly constant(std::vector<std::string> vars, Integer value);
    static WeightPoly one(std::vector<std::string> vars);
    // The polynomial consisting of the single named variable.
    static WeightPoly variable(std::vector<std::string> vars, const std::string& name);
    static WeightPoly monomial(std::vector<std::string> vars, Integer coef, Exponents exps);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when every stored coefficient is >= 0.
    bool has_nonnegative_coefficients() const;
    bool has_nonpositive_coefficients() const;

    WeightPoly operator-() const;
    WeightPoly operator+(const WeightPoly& rhs) const;
    WeightPoly operator-(const WeightPoly& rhs) const;
    WeightPoly operator*(const WeightPoly& rhs) const;
    WeightPoly& operator+=(const WeightPoly& rhs);
    WeightPoly& operator-=(const WeightPoly& rhs);
    WeightPoly& operator*=(const WeightPoly& rhs);
    WeightPoly pow(unsigned exponent) const;

    bool operator==(const WeightPoly& rhs) const;
    bool operator!=(const WeightPoly& rhs) const { return !(*this == rhs); }

    // Exact integer value under a full assignment; throws input_error when a
    // declared variable is missing from the assignment.
    Integer eval(const std::map<std::string, Integer>& assignment) const;

    // Same variable list, terms with a positive exponent of `var` dropped.
    WeightPoly substitute_zero(const std::string& var) const;
    // Removes `var` from the variable list; requires exponent 0 everywhere.
    WeightPoly drop_variable(const std::string& var) const;

    // Canonical text, leading term first (descending lexicographic exponent
    // order), unit coefficients elided except for the constant term.
    std::string str() const;
    // Same ordering without spaces; a single whitespace-free token.
    std::string compact_str() const;

    // Parses `text` against the declared variable list; throws parse_error
    // (line 1, 1-based column) on malformed input or unknown variables.
    static WeightPoly parse(std::vector<std::string> vars, std::string_view text);

private:
    void add_term(const Exponents& exps, const Integer& coef);
    void require_same_variables(const WeightPoly& other) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Quotient of an exact division a / b; throws internal_error when the
// division leaves a remainder (callers only request provably exact cases).
WeightPoly divide_exact(const WeightPoly& a, const WeightPoly& b);

// Square matrix of polynomials over a shared variable list. n = 0 is legal
// and has determinant 1.
class PolyMatrix {
public:
    PolyMatrix(std::vector<std::string> vars, int n);
    static PolyMatrix identity(std::vector<std::string> vars, int n);

    int n() const { return n_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const WeightPoly& at(int i, int j) const;
    void set(int i, int j, WeightPoly value);

private:
    std::vector<std::string> vars_;
    int n_ = 0;
    std::vector<WeightPoly> entries_;
};

// Exact determinant: cofactor expansion for n <= 8, fraction-free
// elimination with exact division above.
WeightPoly det(const PolyMatrix& m);
WeightPoly det_cofactor(const PolyMatrix& m);
WeightPoly det_bareiss(const PolyMatrix& m);

} // namespace lgvx
