#include "rankatlas/render.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <vector>

#include "rankatlas/hypercube.hpp"

namespace rankatlas {

namespace {

std::string mix_hex(unsigned dark, unsigned light, int rank, int k) {
    const double t = k > 1 ? static_cast<double>(rank - 1) / (k - 1) : 0.0;
    char buffer[8];
    unsigned mixed = 0;
    for (int shift = 16; shift >= 0; shift -= 8) {
        const double d = static_cast<double>((dark >> shift) & 0xff);
        const double l = static_cast<double>((light >> shift) & 0xff);
        mixed = (mixed << 8) | static_cast<unsigned>(d + t * (l - d) + 0.5);
    }
    std::snprintf(buffer, sizeof buffer, "#%06x", mixed);
    return buffer;
}

std::string rank_letter(Rank rank) {
    if (rank <= 26) return std::string(1, static_cast<char>('A' + rank - 1));
    return "R" + std::to_string(rank);
}

}  // namespace

std::string render_dot(const RankVector& rv, const std::string& graph_name,
                       const RenderStyle& style) {
    check_rank_vector(rv);
    const std::uint32_t size = num_nodes(rv.n);
    const int k = rank_count(rv);

    std::string out = "digraph \"" + graph_name + "\" {\n";
    out += "  node [shape=circle, style=filled, fontsize=11];\n";
    for (Node x = 0; x < size; ++x) {
        bool improving = false;
        bool equal = false;
        for (int bit = 0; bit < rv.n; ++bit) {
            const Node y = x ^ (Node{1} << bit);
            improving = improving || rv.ranks[y] < rv.ranks[x];
            equal = equal || rv.ranks[y] == rv.ranks[x];
        }
        std::string fill;
        if (rv.ranks[x] == 1) {
            fill = style.global_color;
        } else if (!improving && !equal) {
            fill = style.strict_suboptimum_color;
        } else if (!improving) {
            fill = style.weak_suboptimum_color;
        } else {
            fill = mix_hex(style.dark_rgb, style.light_rgb, rv.ranks[x], k);
        }
        out += "  \"" + node_string(x, rv.n) + "\" [label=\"" + node_string(x, rv.n) +
               "\\n" + rank_letter(rv.ranks[x]) + "\", fillcolor=\"" + fill + "\"];\n";
    }
    for (Node x = 0; x < size; ++x) {
        for (int bit = 0; bit < rv.n; ++bit) {
            const Node y = x ^ (Node{1} << bit);
            if (y < x) continue;
            if (rv.ranks[x] == rv.ranks[y]) {
                out += "  \"" + node_string(x, rv.n) + "\" -> \"" + node_string(y, rv.n) +
                       "\" [dir=none, style=dashed, color=\"" + style.neutral_edge_color +
                       "\"];\n";
            } else {
                const Node worse = rv.ranks[x] > rv.ranks[y] ? x : y;
                const Node better = worse == x ? y : x;
                out += "  \"" + node_string(worse, rv.n) + "\" -> \"" +
                       node_string(better, rv.n) + "\";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

namespace {

struct DotScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_arrow() {
        skip_space();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }
    // bare identifier: letters, digits, underscores, dots
    bool identifier(std::string* out) {
        skip_space();
        const std::size_t start = pos;
        while (pos < text.size()) {
            const char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') ++pos;
            else break;
        }
        if (pos == start) return false;
        if (out) *out = text.substr(start, pos - start);
        return true;
    }
    // double-quoted string with backslash escapes
    bool quoted(std::string* out) {
        skip_space();
        if (pos >= text.size() || text[pos] != '"') return false;
        std::string value;
        for (std::size_t i = pos + 1; i < text.size(); ++i) {
            if (text[i] == '\\') {
                if (++i >= text.size()) return false;
                value += text[i];
            } else if (text[i] == '"') {
                pos = i + 1;
                if (out) *out = value;
                return true;
            } else {
                value += text[i];
            }
        }
        return false;  // unterminated
    }
    // bracketed attribute list, no nesting
    bool attr_list() {
        skip_space();
        if (pos >= text.size() || text[pos] != '[') return false;
        for (std::size_t i = pos + 1; i < text.size(); ++i) {
            if (text[i] == '[') return false;
            if (text[i] == '"') {
                std::size_t saved = pos;
                pos = i;
                if (!quoted(nullptr)) {
                    pos = saved;
                    return false;
                }
                i = pos - 1;
                pos = saved;
            } else if (text[i] == ']') {
                pos = i + 1;
                return true;
            }
        }
        return false;
    }
};

bool fail(std::string* reason, const std::string& why) {
    if (reason) *reason = why;
    return false;
}

}  // namespace

bool validate_dot(const std::string& text, std::string* reason) {
    DotScanner scan{text};
    std::string word;
    if (!scan.identifier(&word) || word != "digraph") {
        return fail(reason, "missing digraph keyword");
    }
    if (!scan.quoted(nullptr)) scan.identifier(nullptr);  // optional graph name
    if (!scan.eat('{')) return fail(reason, "missing opening brace");

    std::set<std::string> declared;
    while (true) {
        if (scan.eat('}')) break;
        if (scan.done()) return fail(reason, "missing closing brace");
        std::string id;
        if (scan.quoted(&id)) {
            if (scan.eat_arrow()) {
                std::string target;
                if (!scan.quoted(&target)) return fail(reason, "edge without target node");
                if (!declared.count(id) || !declared.count(target)) {
                    return fail(reason, "edge references undeclared node");
                }
                scan.attr_list();
            } else {
                declared.insert(id);
                scan.attr_list();
            }
        } else if (scan.identifier(&id)) {
            // attribute statement: `node [..];` or `key=value;`
            if (scan.eat('=')) {
                std::string value;
                if (!scan.quoted(&value) && !scan.identifier(&value)) {
                    return fail(reason, "attribute without value");
                }
            } else if (!scan.attr_list()) {
                return fail(reason, "expected attribute list after keyword");
            }
        } else {
            return fail(reason, "unparseable statement");
        }
        if (!scan.eat(';')) return fail(reason, "statement missing semicolon");
    }
    if (!scan.done()) return fail(reason, "content after closing brace");
    if (declared.empty()) return fail(reason, "no nodes declared");
    return true;
}

}  // namespace rankatlas
