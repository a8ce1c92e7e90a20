#include "lgvx/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace lgvx {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++number;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::istringstream ss{std::string(raw)};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

long long parse_int(const Line& line, const std::string& tok, const char* what) {
    long long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw parse_error(std::string("expected an integer ") + what + ", got '" + tok + "'",
                          line.number, 1);
    return value;
}

void require_tokens(const Line& line, std::size_t count, const char* form) {
    if (line.tokens.size() != count)
        throw parse_error(std::string("expected '") + form + "'", line.number, 1);
}

} // namespace

ParsedGraph parse_graph_file(std::string_view text) {
    auto lines = tokenize(text);
    const Line* variables_line = nullptr;
    for (const Line& line : lines)
        if (line.tokens[0] == "variables") {
            if (variables_line)
                throw parse_error("duplicate variables line", line.number, 1);
            variables_line = &line;
        }
    if (!variables_line) throw parse_error("missing variables line", 1, 1);
    std::vector<std::string> vars(variables_line->tokens.begin() + 1, variables_line->tokens.end());
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw parse_error("duplicate variable " + vars[i], variables_line->number, 1);

    Drawing d(vars);
    std::optional<std::string> source_name, sink_name;
    std::optional<std::vector<std::string>> start_names, end_names;
    std::vector<const Line*> edge_lines;

    for (const Line& line : lines) {
        const std::string& kind = line.tokens[0];
        if (kind == "variables") continue;
        if (kind == "vertex") {
            require_tokens(line, 4, "vertex <id> <x> <y>");
            try {
                d.add_vertex(line.tokens[1], parse_int(line, line.tokens[2], "x coordinate"),
                             parse_int(line, line.tokens[3], "y coordinate"));
            } catch (const input_error& e) {
                throw parse_error(e.what(), line.number, 1);
            }
        } else if (kind == "edge") {
            edge_lines.push_back(&line);
        } else if (kind == "source") {
            require_tokens(line, 2, "source <id>");
            if (source_name) throw parse_error("duplicate source line", line.number, 1);
            source_name = line.tokens[1];
        } else if (kind == "sink") {
            require_tokens(line, 2, "sink <id>");
            if (sink_name) throw parse_error("duplicate sink line", line.number, 1);
            sink_name = line.tokens[1];
        } else if (kind == "starts") {
            if (start_names) throw parse_error("duplicate starts line", line.number, 1);
            start_names = std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end());
        } else if (kind == "ends") {
            if (end_names) throw parse_error("duplicate ends line", line.number, 1);
            end_names = std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end());
        } else {
            throw parse_error("unknown directive '" + kind + "'", line.number, 1);
        }
    }

    auto lookup = [&](const std::string& name, const Line& line) {
        auto v = d.find_vertex(name);
        if (!v) throw parse_error("unknown vertex '" + name + "'", line.number, 1);
        return *v;
    };

    for (const Line* line : edge_lines) {
        if (line->tokens.size() != 4 &&
            !(line->tokens.size() == 5 && line->tokens[4] == "supergraph_only"))
            throw parse_error("expected 'edge <src> <dst> <weight> [supergraph_only]'",
                              line->number, 1);
        int src = lookup(line->tokens[1], *line);
        int dst = lookup(line->tokens[2], *line);
        WeightPoly weight(vars);
        try {
            weight = WeightPoly::parse(vars, line->tokens[3]);
        } catch (const parse_error& e) {
            throw parse_error(std::string("bad weight: ") + e.what(), line->number, 1);
        }
        d.add_edge(src, dst, std::move(weight), line->tokens.size() == 4);
    }

    if (!source_name) throw parse_error("missing source line", 1, 1);
    if (!sink_name) throw parse_error("missing sink line", 1, 1);
    {
        auto s = d.find_vertex(*source_name);
        if (!s) throw parse_error("unknown source vertex '" + *source_name + "'", 1, 1);
        auto t = d.find_vertex(*sink_name);
        if (!t) throw parse_error("unknown sink vertex '" + *sink_name + "'", 1, 1);
        d.set_source(*s);
        d.set_sink(*t);
    }

    if (start_names.has_value() != end_names.has_value())
        throw parse_error("starts and ends must appear together", 1, 1);

    ParsedGraph out{std::move(d), std::nullopt};

    auto violations = validate_drawing(out.drawing);
    if (!violations.empty()) {
        std::string msg = "invalid drawing:";
        for (const Violation& v : violations)
            msg += "\n  " + violation_kind_name(v.kind) + ": " + v.detail;
        throw input_error(msg);
    }

    if (start_names) {
        MarkedConfig m;
        for (const std::string& name : *start_names) {
            auto v = out.drawing.find_vertex(name);
            if (!v) throw input_error("unknown start vertex '" + name + "'");
            m.starts.push_back(*v);
        }
        for (const std::string& name : *end_names) {
            auto v = out.drawing.find_vertex(name);
            if (!v) throw input_error("unknown end vertex '" + name + "'");
            m.ends.push_back(*v);
        }
        validate_marked_config(out.drawing, m);
        out.config = std::move(m);
    }
    return out;
}

std::string emit_graph_file(const Drawing& d, const MarkedConfig* config) {
    std::ostringstream os;
    os << "# lgvx graph\n";
    os << "variables";
    for (const auto& v : d.variables()) os << " " << v;
    os << "\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        const Vertex& vx = d.vertex(v);
        os << "vertex " << vx.name << " " << vx.x << " " << vx.y << "\n";
    }
    for (int e = 0; e < d.edge_count(); ++e) {
        const EdgeRec& ed = d.edge(e);
        os << "edge " << d.vertex(ed.src).name << " " << d.vertex(ed.dst).name << " "
           << ed.weight.compact_str();
        if (!ed.in_subgraph) os << " supergraph_only";
        os << "\n";
    }
    os << "source " << d.vertex(d.source()).name << "\n";
    os << "sink " << d.vertex(d.sink()).name << "\n";
    if (config) {
        os << "starts";
        for (int v : config->starts) os << " " << d.vertex(v).name;
        os << "\nends";
        for (int v : config->ends) os << " " << d.vertex(v).name;
        os << "\n";
    }
    return os.str();
}

AztecRegion parse_region_file(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error("missing 'aztec <m> <n>' line", 1, 1);
    const Line& head = lines.front();
    bool rectangle = head.tokens[0] == "rectangle";
    if (head.tokens[0] != "aztec" && !rectangle)
        throw parse_error("expected 'aztec <m> <n>' or 'rectangle <m> <n>'", head.number, 1);
    require_tokens(head, 3, rectangle ? "rectangle <m> <n>" : "aztec <m> <n>");
    long long m = parse_int(head, head.tokens[1], "m");
    long long n = parse_int(head, head.tokens[2], "n");
    if (m < 1 || n < 1) throw parse_error("m and n must be positive", head.number, 1);
    std::vector<Cell> holes;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != "hole") throw parse_error("expected 'hole <i> <j>'", line.number, 1);
        require_tokens(line, 3, "hole <i> <j>");
        holes.push_back(
            {parse_int(line, line.tokens[1], "i"), parse_int(line, line.tokens[2], "j")});
    }
    try {
        AztecRegion base = rectangle ? AztecRegion::rectangle(static_cast<int>(m), static_cast<int>(n))
                                     : AztecRegion::mixed(static_cast<int>(m), static_cast<int>(n));
        return base.with_holes(std::move(holes));
    } catch (const input_error& e) {
        throw parse_error(e.what(), head.number, 1);
    }
}

std::string emit_region_file(const AztecRegion& r) {
    std::ostringstream os;
    os << (r.kind() == AztecRegion::Kind::Rectangle ? "rectangle " : "aztec ") << r.m() << " "
       << r.n() << "\n";
    std::vector<Cell> holes = r.holes();
    std::sort(holes.begin(), holes.end());
    for (const Cell& h : holes) os << "hole " << h.i << " " << h.j << "\n";
    return os.str();
}

} // namespace lgvx
