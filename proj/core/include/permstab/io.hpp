#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "permstab/correction.hpp"
#include "permstab/gamma_graph.hpp"

namespace permstab::io {

// All formats are line-oriented text with exact rationals "p/q". Emitters
// write a canonical form; parsers additionally allow blank lines and
// '#' comment lines. Every emitted file parses back to an equal value.

void write_group(std::ostream& out, const FiniteGroup& g);
GroupPtr read_group(std::istream& in);
GroupPtr load_group(const std::filesystem::path& path);
void save_group(const std::filesystem::path& path, const FiniteGroup& g);

// Maps are written with their group inline, so files are self-contained;
// reading also accepts "group file <path>" relative to the map's directory.
void write_map(std::ostream& out, const GroupMap& f);
GroupMap read_map(std::istream& in, const std::filesystem::path& base_dir = ".");
GroupMap load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const GroupMap& f);

void write_correction(std::ostream& out, const CorrectionResult& r);
CorrectionResult read_correction(std::istream& in);
CorrectionResult load_correction(const std::filesystem::path& path);
void save_correction(const std::filesystem::path& path, const CorrectionResult& r);

// Structural graph dump for debugging: vertices, labelled edge triples and
// (optionally) edge weights as exact rationals.
struct GraphDump {
    int ambient = 0;
    std::vector<int> vertices;
    struct Edge {
        int from;
        int label;
        int to;
    };
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, Rational>> weights;
};

GraphDump dump_graph(const GammaGraph& g);
GraphDump dump_graph(const GammaGraph& g, const WeightTable& w);
void write_graph(std::ostream& out, const GraphDump& d);
GraphDump read_graph(std::istream& in);

// Cycle notation for the command line: "(0 1)(2 3 4)" with an explicit
// degree; entries may be separated by spaces or commas. parse_perm_any picks
// between one-line and cycle form.
Perm parse_cycles(std::string_view text, int degree);
Perm parse_perm_any(std::string_view text, int degree_hint);

} // namespace permstab::io
