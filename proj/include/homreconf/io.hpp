#pragma once

#include "homreconf/csp.hpp"
#include "homreconf/graph.hpp"
#include "homreconf/hom.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homreconf {

/// Malformed input; the message starts with "line <n>:" when a line is to blame.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graphs:            v <label> [loop]     e <label> <label>     r <label> <tag>
// Edge-coloured:     layers <L>   v <label>   e <layer> <label> <label>   r <label> <tag>
// Homomorphisms:     map <source-label> <target-label>, one line per source vertex
// Paths:             homomorphism blocks separated by blank lines
// Relations:         relation <k> over <labels...>, then one tuple of labels per line
// Lines starting with '#' and blank lines (outside paths) are ignored.

std::string write_graph(const Graph & g);
Graph read_graph(std::string_view text);

std::string write_ec_graph(const EdgeColouredGraph & g);
EdgeColouredGraph read_ec_graph(std::string_view text);

/// Reads either format, treating a plain graph as one layer.
EdgeColouredGraph read_any_graph(std::string_view text);

std::string write_hom(const Graph & source, const Graph & target, const Hom & f);
Hom read_hom(std::string_view text, const Graph & source, const Graph & target);

std::string write_path(const Graph & source, const Graph & target, const ReconfigPath & path);
ReconfigPath read_path(std::string_view text, const Graph & source, const Graph & target);

std::string write_relation(const KRelation & r);
KRelation read_relation(std::string_view text);

/// Graphviz rendering; layers of an edge-coloured graph get distinct edge colours.
std::string write_dot(const Graph & g, std::string_view name = "G");
std::string write_dot(const EdgeColouredGraph & g, std::string_view name = "G");

/// Named text sections, written as "[name]" header lines followed by their content.
using Sections = std::vector<std::pair<std::string, std::string>>;
std::string write_sections(const Sections & sections);
Sections read_sections(std::string_view text);
/// Content of the first section with this name; ParseError if absent.
const std::string & section(const Sections & sections, std::string_view name);
bool has_section(const Sections & sections, std::string_view name);

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 14695981039346656037ull);
std::string hex64(std::uint64_t x);

std::string read_file(const std::string & path);
void write_file(const std::string & path, std::string_view content);

} // namespace homreconf
