#include "lgvx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace lgvx {

std::size_t enumeration_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("LGVX_LIMIT")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(5'000'000);
    }();
    return limit;
}

WeightPoly WeightPoly::zero(std::vector<std::string> vars) {
    return WeightPoly(std::move(vars));
}

WeightPoly WeightPoly::constant(std::vector<std::string> vars, Integer value) {
    WeightPoly p(std::move(vars));
    if (value != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(value));
    return p;
}

WeightPoly WeightPoly::one(std::vector<std::string> vars) {
    return constant(std::move(vars), 1);
}

WeightPoly WeightPoly::variable(std::vector<std::string> vars, const std::string& name) {
    WeightPoly p(std::move(vars));
    auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    if (it == p.vars_.end()) throw input_error("unknown variable: " + name);
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
    p.terms_.emplace(std::move(e), Integer(1));
    return p;
}

WeightPoly WeightPoly::monomial(std::vector<std::string> vars, Integer coef, Exponents exps) {
    WeightPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw input_error("exponent vector length does not match variable list");
    if (coef != 0) p.terms_.emplace(std::move(exps), std::move(coef));
    return p;
}

bool WeightPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool WeightPoly::has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool WeightPoly::has_nonpositive_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c > 0) return false;
    return true;
}

void WeightPoly::require_same_variables(const WeightPoly& other) const {
    if (vars_ != other.vars_)
        throw input_error("polynomial variable lists do not match");
}

void WeightPoly::add_term(const Exponents& exps, const Integer& coef) {
    if (coef == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

WeightPoly WeightPoly::operator-() const {
    WeightPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& rhs) {
    require_same_variables(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& rhs) {
    require_same_variables(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

WeightPoly WeightPoly::operator+(const WeightPoly& rhs) const {
    WeightPoly r = *this;
    r += rhs;
    return r;
}

WeightPoly WeightPoly::operator-(const WeightPoly& rhs) const {
    WeightPoly r = *this;
    r -= rhs;
    return r;
}

WeightPoly WeightPoly::operator*(const WeightPoly& rhs) const {
    require_same_variables(rhs);
    WeightPoly r(vars_);
    Exponents sum(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

WeightPoly& WeightPoly::operator*=(const WeightPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

WeightPoly WeightPoly::pow(unsigned exponent) const {
    WeightPoly r = one(vars_);
    for (unsigned k = 0; k < exponent; ++k) r *= *this;
    return r;
}

bool WeightPoly::operator==(const WeightPoly& rhs) const {
    if (vars_ != rhs.vars_ || terms_.size() != rhs.terms_.size()) return false;
    auto it = rhs.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Integer WeightPoly::eval(const std::map<std::string, Integer>& assignment) const {
    std::vector<const Integer*> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw input_error("evaluation is missing variable: " + v);
        values.push_back(&it->second);
    }
    Integer total = 0;
    for (const auto& [e, c] : terms_) {
        Integer term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), values[k]->get_mpz_t(), e[k]);
            term *= p;
        }
        total += term;
    }
    return total;
}

WeightPoly WeightPoly::substitute_zero(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw input_error("unknown variable: " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    WeightPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (e[idx] == 0) r.terms_.emplace(e, c);
    return r;
}

WeightPoly WeightPoly::drop_variable(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw input_error("unknown variable: " + var);
    std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    WeightPoly r(rest);
    for (const auto& [e, c] : terms_) {
        if (e[idx] != 0)
            throw input_error("cannot drop variable with non-zero exponent: " + var);
        Exponents shrunk = e;
        shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(idx));
        r.terms_.emplace(std::move(shrunk), c);
    }
    return r;
}

namespace {

void append_term(std::ostream& os, const std::vector<std::string>& vars,
                 const Exponents& exps, const Integer& coef, bool first, bool spaced) {
    Integer abs_coef = coef < 0 ? Integer(-coef) : coef;
    if (first) {
        if (coef < 0) os << "-";
    } else {
        os << (spaced ? (coef < 0 ? " - " : " + ") : (coef < 0 ? "-" : "+"));
    }
    bool any_var = std::any_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e != 0; });
    bool wrote_coef = false;
    if (!any_var || abs_coef != 1) {
        os << abs_coef.get_str();
        wrote_coef = true;
    }
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] == 0) continue;
        if (wrote_coef) os << "*";
        wrote_coef = true;
        os << vars[k];
        if (exps[k] > 1) os << "^" << exps[k];
    }
}

std::string render(const WeightPoly& p, bool spaced) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading (lexicographically largest) exponent vector first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        append_term(os, p.variables(), it->first, it->second, first, spaced);
        first = false;
    }
    return os.str();
}

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg, 1, static_cast<int>(pos) + 1);
    }

    std::string parse_integer_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::string(text.substr(start, pos - start));
    }

    std::string parse_identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected a variable name");
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }

    std::size_t variable_index(const std::string& name) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail("unknown variable: " + name);
        return static_cast<std::size_t>(it - vars.begin());
    }

    // factor := var ['^' uint]
    void parse_factor(Exponents& exps) {
        std::size_t idx = variable_index(parse_identifier());
        std::uint32_t e = 1;
        if (peek() == '^') {
            ++pos;
            e = static_cast<std::uint32_t>(std::stoul(parse_integer_digits()));
        }
        exps[idx] += e;
    }

    // term := int ['*' factor]* | factor ['*' factor]*
    void parse_term(Integer sign, WeightPoly& out) {
        Integer coef = 1;
        Exponents exps(vars.size(), 0);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef = Integer(parse_integer_digits());
        } else {
            parse_factor(exps);
        }
        while (peek() == '*') {
            ++pos;
            parse_factor(exps);
        }
        out += WeightPoly::monomial(vars, sign * coef, std::move(exps));
    }

    WeightPoly parse() {
        WeightPoly out(vars);
        Integer sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (at_end()) fail("empty polynomial");
        parse_term(sign, out);
        while (!at_end()) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                parse_term(c == '-' ? Integer(-1) : Integer(1), out);
            } else {
                fail(std::string("unexpected character: ") + c);
            }
        }
        return out;
    }
};

} // namespace

std::string WeightPoly::str() const { return render(*this, true); }
std::string WeightPoly::compact_str() const { return render(*this, false); }

WeightPoly WeightPoly::parse(std::vector<std::string> vars, std::string_view text) {
    WeightPoly scratch(vars);
    PolyParser parser{text, 0, scratch.variables()};
    return parser.parse();
}

WeightPoly divide_exact(const WeightPoly& a, const WeightPoly& b) {
    if (a.variables() != b.variables())
        throw input_error("polynomial variable lists do not match");
    if (b.is_zero()) throw internal_error("exact division by zero polynomial");
    WeightPoly quotient(a.variables());
    WeightPoly remainder = a;
    const auto& lead = *b.terms().rbegin(); // lex-leading term of the divisor
    while (!remainder.is_zero()) {
        const auto& top = *remainder.terms().rbegin();
        Exponents q_exp(top.first.size());
        for (std::size_t k = 0; k < q_exp.size(); ++k) {
            if (top.first[k] < lead.first[k])
                throw internal_error("exact polynomial division left a remainder");
            q_exp[k] = top.first[k] - lead.first[k];
        }
        Integer q_coef, rem;
        mpz_tdiv_qr(q_coef.get_mpz_t(), rem.get_mpz_t(), top.second.get_mpz_t(),
                    lead.second.get_mpz_t());
        if (rem != 0) throw internal_error("exact polynomial division left a remainder");
        WeightPoly t = WeightPoly::monomial(a.variables(), q_coef, std::move(q_exp));
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

PolyMatrix::PolyMatrix(std::vector<std::string> vars, int n) : vars_(std::move(vars)), n_(n) {
    if (n < 0) throw input_error("matrix dimension must be non-negative");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    WeightPoly::zero(vars_));
}

PolyMatrix PolyMatrix::identity(std::vector<std::string> vars, int n) {
    PolyMatrix m(vars, n);
    for (int i = 0; i < n; ++i) m.set(i, i, WeightPoly::one(m.vars_));
    return m;
}

const WeightPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw input_error("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
}

void PolyMatrix::set(int i, int j, WeightPoly value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw input_error("matrix index out of range");
    if (value.variables() != vars_)
        throw input_error("matrix entry variable list does not match matrix");
    entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(j)] = std::move(value);
}

WeightPoly det_cofactor(const PolyMatrix& m) {
    const int n = m.n();
    if (n == 0) return WeightPoly::one(m.variables());
    // Subset DP over column sets: minors of the first k rows, k = popcount.
    std::vector<WeightPoly> minor(std::size_t(1) << n, WeightPoly::zero(m.variables()));
    minor[0] = WeightPoly::one(m.variables());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        WeightPoly acc(m.variables());
        int sign = row % 2 == 0 ? 1 : -1; // expansion along the last row

        for (int col = 0; col < n; ++col) {
            if (!(mask & (std::uint32_t(1) << col))) continue;
            const WeightPoly& entry = m.at(row, col);
            if (!entry.is_zero()) {
                WeightPoly contrib = entry * minor[mask ^ (std::uint32_t(1) << col)];
                if (sign > 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            sign = -sign;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(std::uint32_t(1) << n) - 1];
}

WeightPoly det_bareiss(const PolyMatrix& m) {
    const int n = m.n();
    if (n == 0) return WeightPoly::one(m.variables());
    std::vector<std::vector<WeightPoly>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    int sign = 1;
    WeightPoly prev_pivot = WeightPoly::one(m.variables());
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!a[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return WeightPoly::zero(m.variables());
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                WeightPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = divide_exact(num, prev_pivot);
            }
            a[i][k] = WeightPoly::zero(m.variables());
        }
        prev_pivot = a[k][k];
    }
    WeightPoly result = a[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
    return sign < 0 ? -result : result;
}

WeightPoly det(const PolyMatrix& m) {
    return m.n() <= 8 ? det_cofactor(m) : det_bareiss(m);
}

} // namespace lgvx
