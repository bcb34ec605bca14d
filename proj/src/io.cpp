#include "nashlift/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace nashlift {

namespace {

struct Statement {
    std::string text;
    std::size_t line;
    std::size_t column;
    std::string file;

    // Line and column of text[offset].
    std::pair<std::size_t, std::size_t> at(std::size_t offset) const {
        std::size_t l = line, c = column;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++l;
                c = 1;
            } else {
                ++c;
            }
        }
        return {l, c};
    }

    [[noreturn]] void fail(const std::string& what, std::size_t offset = 0) const {
        auto [l, c] = at(offset);
        throw ParseError(what, l, c, file);
    }
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Statement> split(std::string_view text, const std::string& file) {
    std::vector<Statement> out;
    Statement cur{"", 1, 1, file};
    std::size_t line = 1, col = 1;
    bool started = false;
    bool comment = false;
    for (char ch : text) {
        if (comment) {
            if (ch == '\n') {
                comment = false;
                if (started) cur.text.push_back('\n');
            }
        } else if (ch == '#') {
            comment = true;
        } else if (ch == ';') {
            if (started) out.push_back(cur);
            cur = Statement{"", 0, 0, file};
            started = false;
        } else if (!started && is_space(ch)) {
        } else {
            if (!started) {
                cur.line = line;
                cur.column = col;
                started = true;
            }
            cur.text.push_back(ch);
        }
        if (ch == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    if (started) out.push_back(cur);
    for (auto& s : out)
        while (!s.text.empty() && is_space(s.text.back())) s.text.pop_back();
    return out;
}

// Statements with includes expanded, depth first.
void expand(std::string_view text, const std::filesystem::path& base, const std::string& file,
            std::vector<Statement>& out, std::set<std::filesystem::path>& open) {
    for (auto& st : split(text, file)) {
        if (st.text.rfind("include", 0) == 0 && (st.text.size() == 7 || is_space(st.text[7]))) {
            std::string rest = st.text.substr(7);
            auto a = rest.find('"'), b = rest.rfind('"');
            if (a == std::string::npos || b == a) st.fail("include needs a quoted path");
            std::filesystem::path p = base / rest.substr(a + 1, b - a - 1);
            auto canon = std::filesystem::weakly_canonical(p);
            if (open.count(canon)) st.fail("include cycle through " + p.string());
            open.insert(canon);
            expand(read_file(p), p.parent_path(), p.string(), out, open);
            open.erase(canon);
            continue;
        }
        out.push_back(std::move(st));
    }
}

std::vector<Statement> statements(std::string_view text, const std::filesystem::path& base) {
    std::vector<Statement> out;
    std::set<std::filesystem::path> open;
    expand(text, base, "", out, open);
    return out;
}

// Splits "kw rest" and returns the offset of rest inside the statement.
std::pair<std::string, std::size_t> keyword(const Statement& st) {
    std::size_t i = 0;
    while (i < st.text.size() && (std::isalnum(static_cast<unsigned char>(st.text[i])) || st.text[i] == '_'))
        ++i;
    std::size_t j = i;
    while (j < st.text.size() && is_space(st.text[j])) ++j;
    return {st.text.substr(0, i), j};
}

std::vector<Polynomial> parse_list(const Statement& st, std::size_t offset, const RingPtr& ring) {
    std::vector<Polynomial> out;
    std::size_t start = offset;
    int depth = 0;
    for (std::size_t i = offset; i <= st.text.size(); ++i) {
        char c = i < st.text.size() ? st.text[i] : ',';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            std::string piece = st.text.substr(start, i - start);
            auto [l, col] = st.at(start);
            if (piece.find_first_not_of(" \t\r\n") == std::string::npos) st.fail("empty polynomial", start);
            try {
                out.push_back(parse_polynomial(piece, ring, l, col));
            } catch (const ParseError& e) {
                throw e.in_file(st.file);
            }
            start = i + 1;
        }
    }
    return out;
}

std::optional<long> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
    try {
        return std::stol(s);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace

VarietyFile parse_variety(std::string_view text, const std::filesystem::path& base) {
    RingPtr ring;
    std::optional<Statement> ideal_st, center_st;
    std::optional<int> dim;
    for (const auto& st : statements(text, base)) {
        auto [kw, off] = keyword(st);
        if (kw == "vars") {
            if (ring) st.fail("vars given twice");
            std::vector<std::string> names;
            std::string cur;
            for (char c : st.text.substr(off) + " ") {
                if (is_space(c) || c == ',') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            if (names.empty()) st.fail("vars needs at least one variable");
            for (const auto& n : names)
                if (!std::isalpha(static_cast<unsigned char>(n[0])) ||
                    !std::all_of(n.begin(), n.end(), [](char c) {
                        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                    }))
                    st.fail("invalid variable name '" + n + "'", off);
            try {
                ring = Ring::make(names);
            } catch (const Error& e) {
                st.fail(e.what(), off);
            }
        } else if (kw == "ideal") {
            if (ideal_st) st.fail("ideal given twice");
            ideal_st = st;
        } else if (kw == "center") {
            if (center_st) st.fail("center given twice");
            center_st = st;
        } else if (kw == "dim") {
            auto v = parse_int(st.text.substr(off));
            if (!v) st.fail("dim needs an integer", off);
            dim = static_cast<int>(*v);
        } else {
            st.fail("unknown statement '" + kw + "'");
        }
    }
    if (!ring) throw ParseError("missing vars statement", 1, 1);
    std::vector<Polynomial> gens;
    if (ideal_st) {
        auto [kw, off] = keyword(*ideal_st);
        gens = parse_list(*ideal_st, off, ring);
    }
    std::vector<Polynomial> nonzero;
    for (auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(std::move(g));
    VarietyFile out;
    out.chart = AffineChart::make(Ideal(ring, std::move(nonzero)), dim);
    if (center_st) {
        auto [kw, off] = keyword(*center_st);
        out.center = parse_list(*center_st, off, ring);
    }
    return out;
}

VarietyFile load_variety(const std::filesystem::path& path) {
    std::string text = read_file(path);
    try {
        return parse_variety(text, path.parent_path());
    } catch (const ParseError& e) {
        throw e.in_file(path.string());
    }
}

Arc parse_arc(std::string_view text, const ChartPtr& chart, int default_order,
              const std::filesystem::path& base) {
    static const std::regex big_o(R"(\+\s*O\(\s*t\s*(\^\s*(\d+))?\s*\)\s*$)");
    int order = default_order;
    std::vector<std::optional<Statement>> comps(chart->nvars());
    for (const auto& st : statements(text, base)) {
        auto [kw, off] = keyword(st);
        if (kw == "trunc") {
            auto v = parse_int(st.text.substr(off));
            if (!v || *v < 0) st.fail("trunc needs a non-negative integer", off);
            order = static_cast<int>(*v);
            continue;
        }
        auto idx = chart->ring()->index_of(kw);
        if (!idx) st.fail("unknown variable '" + kw + "'");
        if (off >= st.text.size() || st.text[off] != '=') st.fail("expected '='", off);
        if (comps[*idx]) st.fail("component for " + kw + " given twice");
        comps[*idx] = st;
    }
    RingPtr tring = Ring::make({"t"});
    Arc arc{chart, {}};
    for (std::size_t v = 0; v < comps.size(); ++v) {
        if (!comps[v]) throw ParseError("no component for variable " + chart->ring()->name(v), 1, 1);
        const Statement& st = *comps[v];
        std::size_t eq = st.text.find('=') + 1;
        std::string body = st.text.substr(eq);
        std::optional<int> known;
        std::smatch m;
        if (std::regex_search(body, m, big_o)) {
            known = m[2].matched ? std::stoi(m[2].str()) - 1 : 0;
            body = body.substr(0, static_cast<std::size_t>(m.position(0)));
        }
        auto [l, c] = st.at(eq);
        Polynomial p;
        try {
            p = parse_polynomial(body, tring, l, c);
        } catch (const ParseError& e) {
            throw e.in_file(st.file);
        }
        TruncatedSeries s = series_from_polynomial(p, order);
        if (known) s = s.truncated(std::min(*known, order));
        arc.components.push_back(std::move(s));
    }
    return arc;
}

Arc load_arc(const std::filesystem::path& path, const ChartPtr& chart, int default_order) {
    std::string text = read_file(path);
    try {
        return parse_arc(text, chart, default_order, path.parent_path());
    } catch (const ParseError& e) {
        throw e.in_file(path.string());
    }
}

std::string chart_to_text(const AffineChart& chart) {
    std::string s = "vars";
    for (const auto& n : chart.ring()->names()) s += " " + n;
    s += ";\nideal ";
    const auto& g = chart.ideal().generators();
    if (g.empty()) s += "0";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + g[i].to_string();
    s += ";\ndim " + std::to_string(chart.dim()) + ";\n";
    return s;
}

std::string arc_to_text(const Arc& arc) {
    std::string s;
    for (std::size_t v = 0; v < arc.components.size(); ++v)
        s += arc.chart->ring()->name(v) + " = " + arc.components[v].to_string() + ";\n";
    s += "trunc " + std::to_string(arc.truncation()) + ";\n";
    return s;
}

} // namespace nashlift
