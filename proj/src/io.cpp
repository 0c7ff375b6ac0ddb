#include "homreconf/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace homreconf {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Non-empty, non-comment lines; an empty word list marks a blank line when keep_blank is set.
std::vector<Line> lex(std::string_view text, bool keep_blank = false)
{
    std::vector<Line> out;
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto line = text.substr(start, end - start);
        auto words = split_words(line);
        if (!words.empty() && words.front().front() == '#')
            words.clear();
        if (!words.empty() || keep_blank)
            out.push_back({number, std::move(words)});
        start = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line & line, const std::string & what)
{
    throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

std::size_t parse_count(const Line & line, const std::string & word)
{
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(word, &used);
    }
    catch (const std::exception &) {
        fail(line, "expected a number, got '" + word + "'");
    }
    if (used != word.size() || word.front() == '-')
        fail(line, "expected a number, got '" + word + "'");
    return static_cast<std::size_t>(x);
}

Vertex lookup(const GraphBuilder & b, const Line & line, const std::string & label)
{
    auto v = b.find(label);
    if (!v)
        fail(line, "unknown vertex '" + label + "'");
    return *v;
}

void declare(GraphBuilder & b, const Line & line, const std::string & label)
{
    if (b.find(label))
        fail(line, "vertex '" + label + "' declared twice");
    b.add_vertex(label);
}

void write_tags(std::ostringstream & out, const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.tag(v).empty())
            out << "r " << g.label(v) << ' ' << g.tag(v) << '\n';
}

std::string dot_quote(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string write_graph(const Graph & g)
{
    std::ostringstream out;
    for (Vertex v = 0; v < g.order(); ++v)
        out << "v " << g.label(v) << (g.has_loop(v) ? " loop" : "") << '\n';
    for (const auto & e : g.edges())
        if (e.u != e.v)
            out << "e " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    write_tags(out, g);
    return out.str();
}

Graph read_graph(std::string_view text)
{
    GraphBuilder b;
    for (const auto & line : lex(text)) {
        const auto & w = line.words;
        if (w[0] == "v") {
            if (w.size() == 2 || (w.size() == 3 && w[2] == "loop")) {
                declare(b, line, w[1]);
                if (w.size() == 3)
                    b.add_edge(w[1], w[1]);
            }
            else
                fail(line, "expected 'v <label> [loop]'");
        }
        else if (w[0] == "e") {
            if (w.size() != 3)
                fail(line, "expected 'e <label> <label>'");
            if (!b.add_edge(lookup(b, line, w[1]), lookup(b, line, w[2])))
                fail(line, "repeated edge");
        }
        else if (w[0] == "r") {
            if (w.size() != 3)
                fail(line, "expected 'r <label> <tag>'");
            b.set_tag(lookup(b, line, w[1]), w[2]);
        }
        else if (w[0] == "layers")
            fail(line, "edge-coloured graph where a plain graph was expected");
        else
            fail(line, "unknown directive '" + w[0] + "'");
    }
    return b.build();
}

std::string write_ec_graph(const EdgeColouredGraph & g)
{
    std::ostringstream out;
    out << "layers " << g.layer_count() << '\n';
    const Graph & first = g.layer(0);
    for (Vertex v = 0; v < g.order(); ++v)
        out << "v " << first.label(v) << '\n';
    for (std::size_t i = 0; i < g.layer_count(); ++i)
        for (const auto & e : g.layer(i).edges())
            out << "e " << i << ' ' << first.label(e.u) << ' ' << first.label(e.v) << '\n';
    write_tags(out, first);
    return out.str();
}

EdgeColouredGraph read_ec_graph(std::string_view text)
{
    auto lines = lex(text);
    if (lines.empty() || lines.front().words[0] != "layers" || lines.front().words.size() != 2)
        throw ParseError(lines.empty() ? "empty edge-coloured graph" : "line " + std::to_string(lines.front().number) +
                                                                            ": expected 'layers <count>'");
    const std::size_t count = parse_count(lines.front(), lines.front().words[1]);
    if (count == 0)
        fail(lines.front(), "at least one layer is needed");
    std::vector<GraphBuilder> layers(count);
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto & line = lines[li];
        const auto & w = line.words;
        if (w[0] == "v") {
            if (w.size() != 2)
                fail(line, "expected 'v <label>'");
            for (auto & b : layers)
                declare(b, line, w[1]);
        }
        else if (w[0] == "e") {
            if (w.size() != 4)
                fail(line, "expected 'e <layer> <label> <label>'");
            std::size_t layer = parse_count(line, w[1]);
            if (layer >= count)
                fail(line, "layer index out of range");
            auto & b = layers[layer];
            if (!b.add_edge(lookup(b, line, w[2]), lookup(b, line, w[3])))
                fail(line, "repeated edge");
        }
        else if (w[0] == "r") {
            if (w.size() != 3)
                fail(line, "expected 'r <label> <tag>'");
            for (auto & b : layers)
                b.set_tag(lookup(b, line, w[1]), w[2]);
        }
        else
            fail(line, "unknown directive '" + w[0] + "'");
    }
    std::vector<Graph> built;
    for (const auto & b : layers)
        built.push_back(b.build());
    return EdgeColouredGraph(std::move(built));
}

EdgeColouredGraph read_any_graph(std::string_view text)
{
    auto lines = lex(text);
    if (!lines.empty() && lines.front().words[0] == "layers")
        return read_ec_graph(text);
    return EdgeColouredGraph({read_graph(text)});
}

std::string write_hom(const Graph & source, const Graph & target, const Hom & f)
{
    if (f.size() != source.order())
        throw std::invalid_argument("map size differs from the source order");
    std::ostringstream out;
    for (Vertex v = 0; v < source.order(); ++v)
        out << "map " << source.label(v) << ' ' << target.label(f[v]) << '\n';
    return out.str();
}

namespace {

Hom hom_from_lines(const std::vector<Line> & lines, std::size_t from, std::size_t to, const Graph & source,
                   const Graph & target)
{
    std::vector<Vertex> image(source.order(), 0);
    std::vector<char> seen(source.order(), 0);
    for (std::size_t i = from; i < to; ++i) {
        const auto & line = lines[i];
        const auto & w = line.words;
        if (w.size() != 3 || w[0] != "map")
            fail(line, "expected 'map <source-label> <target-label>'");
        auto v = source.find(w[1]);
        if (!v)
            fail(line, "unknown source vertex '" + w[1] + "'");
        auto c = target.find(w[2]);
        if (!c)
            fail(line, "unknown target vertex '" + w[2] + "'");
        if (seen[*v])
            fail(line, "source vertex '" + w[1] + "' mapped twice");
        seen[*v] = 1;
        image[*v] = *c;
    }
    for (Vertex v = 0; v < source.order(); ++v)
        if (!seen[v]) {
            std::string where = from < to ? "line " + std::to_string(lines[from].number) + ": " : "";
            throw ParseError(where + "source vertex '" + source.label(v) + "' is not mapped");
        }
    return Hom(std::move(image));
}

} // namespace

Hom read_hom(std::string_view text, const Graph & source, const Graph & target)
{
    auto lines = lex(text);
    return hom_from_lines(lines, 0, lines.size(), source, target);
}

std::string write_path(const Graph & source, const Graph & target, const ReconfigPath & path)
{
    std::string out;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (i > 0)
            out += '\n';
        out += write_hom(source, target, path.steps[i]);
    }
    return out;
}

ReconfigPath read_path(std::string_view text, const Graph & source, const Graph & target)
{
    auto lines = lex(text, true);
    ReconfigPath path;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].words.empty()) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < lines.size() && !lines[j].words.empty())
            ++j;
        path.steps.push_back(hom_from_lines(lines, i, j, source, target));
        i = j;
    }
    // A source without vertices has exactly one map, written as nothing at all.
    if (path.steps.empty() && source.order() == 0)
        path.steps.push_back(Hom{});
    if (path.steps.empty())
        throw ParseError("a path needs at least one homomorphism");
    return path;
}

std::string write_relation(const KRelation & r)
{
    std::ostringstream out;
    out << "relation " << r.arity() << " over";
    for (const auto & l : r.domain())
        out << ' ' << l;
    out << '\n';
    for (const auto & t : r.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out << (i ? " " : "") << r.label(t[i]);
        out << '\n';
    }
    return out.str();
}

KRelation read_relation(std::string_view text)
{
    auto lines = lex(text);
    if (lines.empty())
        throw ParseError("empty relation");
    const auto & head = lines.front();
    if (head.words.size() < 3 || head.words[0] != "relation" || head.words[2] != "over")
        fail(head, "expected 'relation <k> over <labels...>'");
    const std::size_t k = parse_count(head, head.words[1]);
    if (k == 0)
        fail(head, "arity must be positive");
    std::vector<std::string> domain(head.words.begin() + 3, head.words.end());
    std::unordered_map<std::string, Vertex> index;
    for (Vertex i = 0; i < domain.size(); ++i)
        if (!index.emplace(domain[i], i).second)
            fail(head, "domain element '" + domain[i] + "' repeated");
    std::vector<Tuple> tuples;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto & line = lines[li];
        if (line.words.size() != k)
            fail(line, "tuple has " + std::to_string(line.words.size()) + " entries, expected " + std::to_string(k));
        Tuple t;
        for (const auto & w : line.words) {
            auto it = index.find(w);
            if (it == index.end())
                fail(line, "unknown domain element '" + w + "'");
            t.push_back(it->second);
        }
        tuples.push_back(std::move(t));
    }
    return KRelation(std::move(domain), k, std::move(tuples));
}

std::string write_dot(const Graph & g, std::string_view name)
{
    return write_dot(EdgeColouredGraph({g}), name);
}

std::string write_dot(const EdgeColouredGraph & g, std::string_view name)
{
    static const char * palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple"};
    std::ostringstream out;
    out << "graph " << dot_quote(name) << " {\n";
    const Graph & first = g.layer(0);
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << dot_quote(first.label(v));
        if (!first.tag(v).empty())
            out << " [role=" << dot_quote(first.tag(v)) << ']';
        out << ";\n";
    }
    for (std::size_t i = 0; i < g.layer_count(); ++i)
        for (const auto & e : g.layer(i).edges()) {
            out << "  " << dot_quote(first.label(e.u)) << " -- " << dot_quote(first.label(e.v));
            if (g.layer_count() > 1)
                out << " [color=" << palette[i % 6] << ", layer=" << i << ']';
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

std::string write_sections(const Sections & sections)
{
    std::string out;
    for (const auto & [name, body] : sections) {
        out += "[" + name + "]\n";
        out += body;
        if (!body.empty() && body.back() != '\n')
            out += '\n';
    }
    return out;
}

Sections read_sections(std::string_view text)
{
    Sections out;
    std::size_t start = 0, number = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        auto line = text.substr(start, end - start);
        if (line.size() >= 2 && line.front() == '[' && line.back() == ']')
            out.emplace_back(std::string(line.substr(1, line.size() - 2)), std::string{});
        else if (out.empty()) {
            if (!split_words(line).empty() && line.front() != '#')
                throw ParseError("line " + std::to_string(number) + ": text before the first section");
        }
        else {
            out.back().second.append(line);
            out.back().second += '\n';
        }
        start = end + 1;
    }
    return out;
}

const std::string & section(const Sections & sections, std::string_view name)
{
    for (const auto & [n, body] : sections)
        if (n == name)
            return body;
    throw ParseError("missing section [" + std::string(name) + "]");
}

bool has_section(const Sections & sections, std::string_view name)
{
    return std::any_of(sections.begin(), sections.end(), [&](const auto & s) { return s.first == name; });
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed)
{
    std::uint64_t x = seed;
    for (unsigned char c : data)
        x = (x ^ c) * 1099511628211ull;
    return x;
}

std::string hex64(std::uint64_t x)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string & path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

} // namespace homreconf
