#include "permstab/io.hpp"

#include <fstream>
#include <sstream>

#include "permstab/errors.hpp"

namespace permstab::io {

namespace {

// Line reader that tracks numbers for error messages and skips blanks and
// comments.
class Lines {
public:
    explicit Lines(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t i = line.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line.substr(i);
            return true;
        }
        return false;
    }

    std::string expect(const std::string& what) {
        std::string line;
        if (!next(line)) throw parse_error("unexpected end of input, expected " + what);
        return line;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("line " + std::to_string(number_) + ": " + why);
    }

private:
    std::istream& in_;
    int number_ = 0;
};

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

int to_int(Lines& lines, const std::string& s) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) lines.fail("bad integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        lines.fail("bad integer '" + s + "'");
    }
}

std::vector<int> parse_int_list(Lines& lines, const std::string& s) {
    if (s == "none") return {};
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(to_int(lines, s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

std::string int_list(const std::vector<int>& v) {
    if (v.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

GroupPtr read_group_body(Lines& lines) {
    std::string name;
    int order = -1;
    std::string line = lines.expect("'name' or 'order'");
    if (line.rfind("name ", 0) == 0) {
        name = line.substr(5);
        line = lines.expect("'order'");
    }
    if (line.rfind("order ", 0) != 0) lines.fail("expected 'order <m>'");
    order = to_int(lines, line.substr(6));
    if (order < 1) lines.fail("order must be positive");
    line = lines.expect("'mul'");
    if (line != "mul") lines.fail("expected 'mul'");
    std::vector<std::vector<int>> table;
    table.reserve(static_cast<std::size_t>(order));
    for (int r = 0; r < order; ++r) {
        std::string row_line = lines.expect("multiplication table row");
        std::vector<std::string> toks = split_ws(row_line);
        if (static_cast<int>(toks.size()) != order) lines.fail("table row needs " + std::to_string(order) + " entries");
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(order));
        for (const std::string& t : toks) row.push_back(to_int(lines, t));
        table.push_back(std::move(row));
    }
    line = lines.expect("'end'");
    if (line != "end") lines.fail("expected 'end' after the table");
    return FiniteGroup::from_mul_table(table, name);
}

} // namespace

void write_group(std::ostream& out, const FiniteGroup& g) {
    out << "permstab-group\n";
    if (!g.name().empty()) out << "name " << g.name() << "\n";
    out << "order " << g.order() << "\n";
    out << "mul\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
    out << "end\n";
}

GroupPtr read_group(std::istream& in) {
    Lines lines(in);
    std::string head = lines.expect("'permstab-group'");
    if (head != "permstab-group") lines.fail("not a group file");
    return read_group_body(lines);
}

GroupPtr load_group(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open group file " + path.string());
    return read_group(in);
}

void save_group(const std::filesystem::path& path, const FiniteGroup& g) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path.string());
    write_group(out, g);
}

void write_map(std::ostream& out, const GroupMap& f) {
    out << "permstab-map\n";
    out << "group inline\n";
    write_group(out, *f.group());
    out << "degree " << f.degree() << "\n";
    for (int g = 0; g < f.group()->order(); ++g) out << "perm " << g << " " << f.at(g).str() << "\n";
    out << "end\n";
}

GroupMap read_map(std::istream& in, const std::filesystem::path& base_dir) {
    Lines lines(in);
    std::string head = lines.expect("'permstab-map'");
    if (head != "permstab-map") lines.fail("not a map file");

    std::string line = lines.expect("'group inline' or 'group file <path>'");
    GroupPtr group;
    if (line == "group inline") {
        std::string ghead = lines.expect("'permstab-group'");
        if (ghead != "permstab-group") lines.fail("expected inline group block");
        group = read_group_body(lines);
    } else if (line.rfind("group file ", 0) == 0) {
        std::filesystem::path p = line.substr(11);
        if (p.is_relative()) p = base_dir / p;
        group = load_group(p);
    } else {
        lines.fail("expected a group reference");
    }

    line = lines.expect("'degree'");
    if (line.rfind("degree ", 0) != 0) lines.fail("expected 'degree <n>'");
    const int degree = to_int(lines, line.substr(7));

    std::vector<Perm> table(static_cast<std::size_t>(group->order()), Perm::identity(std::max(degree, 1)));
    std::vector<char> got(static_cast<std::size_t>(group->order()), 0);
    for (int i = 0; i < group->order(); ++i) {
        line = lines.expect("'perm <index> <image>'");
        std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 3 || toks[0] != "perm") lines.fail("expected 'perm <index> <image>'");
        int idx = to_int(lines, toks[1]);
        if (idx < 0 || idx >= group->order() || got[static_cast<std::size_t>(idx)])
            lines.fail("bad or repeated element index " + toks[1]);
        got[static_cast<std::size_t>(idx)] = 1;
        try {
            table[static_cast<std::size_t>(idx)] = Perm::parse(toks[2]);
        } catch (const parse_error& e) {
            lines.fail(e.what());
        }
    }
    line = lines.expect("'end'");
    if (line != "end") lines.fail("expected 'end'");
    try {
        return GroupMap(group, degree, std::move(table));
    } catch (const domain_error& e) {
        lines.fail(e.what());
    }
}

GroupMap load_map(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open map file " + path.string());
    return read_map(in, path.has_parent_path() ? path.parent_path() : ".");
}

void save_map(const std::filesystem::path& path, const GroupMap& f) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path.string());
    write_map(out, f);
}

void write_correction(std::ostream& out, const CorrectionResult& r) {
    out << "permstab-correction\n";
    out << "n " << r.report.n << "\n";
    out << "N " << r.report.big_n << "\n";
    out << "defect-inf " << r.report.defect_inf.str() << "\n";
    out << "defect-mean " << r.report.defect_mean.str() << "\n";
    out << "d-inf " << r.report.d_inf.str() << "\n";
    out << "d-mean " << r.report.d_mean.str() << "\n";
    out << "fallback " << (r.report.used_trivial_fallback ? 1 : 0) << "\n";
    for (const auto& [name, value] : r.report.values) out << "value " << name << " " << value.str() << "\n";
    for (const BoundCheck& b : r.report.bounds)
        out << "bound " << b.name << " " << b.lhs.str() << " " << b.rhs.str() << "\n";
    out << "z-vertices " << int_list(r.z_vertices) << "\n";
    out << "embedding " << int_list(r.embedding) << "\n";
    out << "map inline\n";
    write_map(out, r.h);
    out << "end\n";
}

CorrectionResult read_correction(std::istream& in) {
    Lines lines(in);
    std::string head = lines.expect("'permstab-correction'");
    if (head != "permstab-correction") lines.fail("not a correction file");

    CorrectionReport report;
    std::vector<int> z_vertices;
    std::vector<int> embedding;

    auto field = [&](const char* key) {
        std::string line = lines.expect(std::string("'") + key + "'");
        std::string prefix = std::string(key) + " ";
        if (line.rfind(prefix, 0) != 0) lines.fail(std::string("expected '") + key + " ...'");
        return line.substr(prefix.size());
    };

    report.n = to_int(lines, field("n"));
    report.big_n = to_int(lines, field("N"));
    report.defect_inf = Rational::parse(field("defect-inf"));
    report.defect_mean = Rational::parse(field("defect-mean"));
    report.d_inf = Rational::parse(field("d-inf"));
    report.d_mean = Rational::parse(field("d-mean"));
    report.used_trivial_fallback = to_int(lines, field("fallback")) != 0;

    std::string line = lines.expect("'value', 'bound' or 'z-vertices'");
    while (line.rfind("value ", 0) == 0) {
        std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 3) lines.fail("expected 'value <name> <rational>'");
        report.values.emplace_back(toks[1], Rational::parse(toks[2]));
        line = lines.expect("'value', 'bound' or 'z-vertices'");
    }
    while (line.rfind("bound ", 0) == 0) {
        std::vector<std::string> toks = split_ws(line);
        if (toks.size() != 4) lines.fail("expected 'bound <name> <lhs> <rhs>'");
        report.bounds.push_back(BoundCheck{toks[1], Rational::parse(toks[2]), Rational::parse(toks[3])});
        line = lines.expect("'z-vertices'");
    }
    if (line.rfind("z-vertices ", 0) != 0) lines.fail("expected 'z-vertices'");
    z_vertices = parse_int_list(lines, line.substr(11));
    line = lines.expect("'embedding'");
    if (line.rfind("embedding ", 0) != 0) lines.fail("expected 'embedding'");
    embedding = parse_int_list(lines, line.substr(10));
    line = lines.expect("'map inline'");
    if (line != "map inline") lines.fail("expected 'map inline'");

    // Delegate the map block back through its own reader.
    std::string rest;
    {
        std::ostringstream buffer;
        std::string raw;
        // The map block is self-delimiting: header, inline group ending with
        // its own 'end', degree, |G| perm lines, final 'end'.
        raw = lines.expect("'permstab-map'");
        if (raw != "permstab-map") lines.fail("expected map block");
        buffer << raw << "\n";
        int ends_needed = 2; // one for the inline group, one for the map
        while (ends_needed > 0) {
            raw = lines.expect("map block line");
            buffer << raw << "\n";
            if (raw == "end") --ends_needed;
        }
        rest = buffer.str();
    }
    std::istringstream map_in(rest);
    GroupMap h = read_map(map_in);

    line = lines.expect("'end'");
    if (line != "end") lines.fail("expected final 'end'");

    return CorrectionResult{std::move(h), std::move(z_vertices), std::move(embedding), std::move(report)};
}

CorrectionResult load_correction(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open correction file " + path.string());
    return read_correction(in);
}

void save_correction(const std::filesystem::path& path, const CorrectionResult& r) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path.string());
    write_correction(out, r);
}

GraphDump dump_graph(const GammaGraph& g) {
    GraphDump d;
    d.ambient = g.ambient();
    d.vertices = g.vertices();
    for (int v : g.vertices())
        for (int lab = 0; lab < g.group()->order(); ++lab) {
            int w = g.edge(v, lab);
            if (w >= 0) d.edges.push_back(GraphDump::Edge{v, lab, w});
        }
    return d;
}

GraphDump dump_graph(const GammaGraph& g, const WeightTable& w) {
    GraphDump d = dump_graph(g);
    for (const GraphDump::Edge& e : d.edges) d.weights.emplace_back(e, w.weight(e.from, e.label));
    return d;
}

void write_graph(std::ostream& out, const GraphDump& d) {
    out << "permstab-graph\n";
    out << "ambient " << d.ambient << "\n";
    out << "vertices " << int_list(d.vertices) << "\n";
    for (const auto& e : d.edges) out << "edge " << e.from << " " << e.label << " " << e.to << "\n";
    for (const auto& [e, w] : d.weights)
        out << "weight " << e.from << " " << e.label << " " << e.to << " " << w.num() << " " << w.den() << "\n";
    out << "end\n";
}

GraphDump read_graph(std::istream& in) {
    Lines lines(in);
    std::string head = lines.expect("'permstab-graph'");
    if (head != "permstab-graph") lines.fail("not a graph dump");
    GraphDump d;
    std::string line = lines.expect("'ambient'");
    if (line.rfind("ambient ", 0) != 0) lines.fail("expected 'ambient'");
    d.ambient = to_int(lines, line.substr(8));
    line = lines.expect("'vertices'");
    if (line.rfind("vertices ", 0) != 0) lines.fail("expected 'vertices'");
    d.vertices = parse_int_list(lines, line.substr(9));
    while (true) {
        line = lines.expect("'edge', 'weight' or 'end'");
        if (line == "end") break;
        std::vector<std::string> toks = split_ws(line);
        if (toks[0] == "edge" && toks.size() == 4) {
            d.edges.push_back(GraphDump::Edge{to_int(lines, toks[1]), to_int(lines, toks[2]), to_int(lines, toks[3])});
        } else if (toks[0] == "weight" && toks.size() == 6) {
            d.weights.emplace_back(GraphDump::Edge{to_int(lines, toks[1]), to_int(lines, toks[2]), to_int(lines, toks[3])},
                                   Rational(to_int(lines, toks[4]), to_int(lines, toks[5])));
        } else {
            lines.fail("expected 'edge x g y' or 'weight x g y p q'");
        }
    }
    return d;
}

Perm parse_cycles(std::string_view text, int degree) {
    if (degree < 1) throw parse_error("cycle notation needs a positive degree");
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(') throw parse_error("expected '(' in cycle notation");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t j = i;
            int v = 0;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') v = v * 10 + (text[j++] - '0');
            if (j == i) throw parse_error("expected a point in cycle notation");
            if (v >= degree) throw parse_error("cycle entry " + std::to_string(v) + " out of range for degree " +
                                               std::to_string(degree));
            if (used[static_cast<std::size_t>(v)]) throw parse_error("point repeated across cycles: " + std::to_string(v));
            used[static_cast<std::size_t>(v)] = 1;
            cycle.push_back(v);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        if (cycle.empty()) throw parse_error("empty cycle");
        for (std::size_t c = 0; c < cycle.size(); ++c)
            img[static_cast<std::size_t>(cycle[c])] = cycle[(c + 1) % cycle.size()];
        any = true;
        skip_ws();
    }
    if (!any) throw parse_error("no cycles found");
    return Perm(std::move(img));
}

Perm parse_perm_any(std::string_view text, int degree_hint) {
    std::size_t i = text.find_first_not_of(" \t");
    if (i != std::string_view::npos && text[i] == '(') return parse_cycles(text, degree_hint);
    return Perm::parse(text);
}

} // namespace permstab::io
