// permstab: measure, test, repair and stress approximate actions of finite
// groups on finite sets. All file formats are line-oriented text with exact
// rationals; all randomness is seeded and reproducible.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permstab/correction.hpp"
#include "permstab/errors.hpp"
#include "permstab/io.hpp"
#include "permstab/oracle.hpp"
#include "permstab/testers.hpp"
#include "permstab/words.hpp"

namespace fs = std::filesystem;
using namespace permstab;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

long long budget_from_env(long long flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PERMSTAB_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw domain_error("PERMSTAB_BUDGET is not an integer");
        }
    }
    return kDefaultEnumerationBudget;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path);
    out << text;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        try {
            out.push_back(std::stoi(text.substr(i, j - i)));
        } catch (const std::exception&) {
            throw domain_error("bad element index list '" + text + "'");
        }
        i = j + 1;
    }
    return out;
}

void print_report(const CorrectionReport& r) {
    std::cout << "n " << r.n << "\n";
    std::cout << "N " << r.big_n << "\n";
    std::cout << "defect-inf " << r.defect_inf.str() << "\n";
    std::cout << "defect-mean " << r.defect_mean.str() << "\n";
    std::cout << "d-inf " << r.d_inf.str() << "\n";
    std::cout << "d-mean " << r.d_mean.str() << "\n";
    std::cout << "fallback " << (r.used_trivial_fallback ? 1 : 0) << "\n";
    for (const auto& [name, value] : r.values) std::cout << "value " << name << " " << value.str() << "\n";
    for (const BoundCheck& b : r.bounds)
        std::cout << "bound " << b.name << " lhs " << b.lhs.str() << " rhs " << b.rhs.str() << " slack "
                  << b.slack().str() << "\n";
}

struct GenOptions {
    std::string kind;
    int order = 0;
    int points = 0;
    int degree = 0;
    int k = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string group_path;
    std::string map_path;
    std::string word;
    std::string words_file;
    std::string out;
};

void run_gen(const GenOptions& o) {
    auto emit_map = [&](const GroupMap& f) {
        if (o.out.empty()) {
            io::write_map(std::cout, f);
        } else {
            io::save_map(o.out, f);
        }
    };
    auto emit_perm_lines = [&](const std::vector<std::string>& lines) {
        std::string text;
        for (const std::string& l : lines) text += l + "\n";
        if (o.out.empty())
            std::cout << text;
        else
            write_text(o.out, text);
    };

    if (o.kind == "cyclic") {
        if (o.order < 1) throw domain_error("gen cyclic needs --order >= 1");
        auto g = FiniteGroup::cyclic(o.order);
        if (o.out.empty())
            io::write_group(std::cout, *g);
        else
            io::save_group(o.out, *g);
    } else if (o.kind == "symmetric") {
        if (o.points < 1) throw domain_error("gen symmetric needs --points >= 1");
        auto g = FiniteGroup::symmetric(o.points);
        if (o.out.empty())
            io::write_group(std::cout, *g);
        else
            io::save_group(o.out, *g);
    } else if (o.kind == "shift") {
        if (o.order < 1) throw domain_error("gen shift needs --order >= 1");
        emit_map(GroupMap::regular(FiniteGroup::cyclic(o.order)));
    } else if (o.kind == "regular") {
        if (o.group_path.empty()) throw domain_error("gen regular needs --group");
        emit_map(GroupMap::regular(io::load_group(o.group_path)));
    } else if (o.kind == "action") {
        if (o.group_path.empty() || o.degree < 1) throw domain_error("gen action needs --group and --degree");
        Rng rng(o.seed);
        emit_map(random_action(io::load_group(o.group_path), o.degree, rng));
    } else if (o.kind == "random-map") {
        if (o.group_path.empty() || o.degree < 1) throw domain_error("gen random-map needs --group and --degree");
        Rng rng(o.seed);
        emit_map(random_map(io::load_group(o.group_path), o.degree, rng));
    } else if (o.kind == "perturb") {
        if (o.map_path.empty()) throw domain_error("gen perturb needs --map");
        Rng rng(o.seed);
        emit_map(perturb(io::load_map(o.map_path), o.count, rng));
    } else if (o.kind == "drop-point") {
        if (o.map_path.empty()) throw domain_error("gen drop-point needs --map");
        emit_map(drop_point(io::load_map(o.map_path)));
    } else if (o.kind == "gk") {
        if (o.k < 1) throw domain_error("gen gk needs --k >= 1");
        GridMap grid(o.k);
        std::vector<std::string> lines;
        if (!o.words_file.empty()) {
            std::ifstream in(o.words_file);
            if (!in) throw domain_error("cannot open words file " + o.words_file);
            std::string line;
            while (std::getline(in, line)) lines.push_back(grid.eval(FreeWord::parse(line)).str());
        } else {
            lines.push_back(grid.eval(FreeWord::parse(o.word)).str());
        }
        emit_perm_lines(lines);
    } else if (o.kind == "gamma0") {
        if (o.k < 1) throw domain_error("gen gamma0 needs --k >= 1");
        auto [perm, dist] = gamma0_image(o.k);
        std::cout << "distance-to-id " << dist.str() << "\n";
        emit_perm_lines({perm.str()});
    } else {
        throw domain_error("unknown --kind '" + o.kind + "'");
    }
}

int run_verify(const std::string& dir) {
    std::vector<fs::path> groups;
    std::vector<fs::path> maps;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".group") groups.push_back(entry.path());
        if (entry.path().extension() == ".map") maps.push_back(entry.path());
    }
    std::sort(groups.begin(), groups.end());
    std::sort(maps.begin(), maps.end());
    int failures = 0;
    bool invariant_failed = false;
    for (const fs::path& p : groups) {
        try {
            io::load_group(p);
            std::cout << "OK " << p.string() << " (group valid)\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL " << p.string() << ": " << e.what() << "\n";
            ++failures;
        }
    }
    for (const fs::path& p : maps) {
        try {
            GroupMap f = io::load_map(p);
            DefectReport rep = defects(f);
            if (rejection_probability_exact(f) != rep.defect_mean)
                throw invariant_error("tester/defect identity failed");
            GroupMap fsym = symmetrize(f);
            build_cascade(fsym, Rational(1, 6));
            CorrectionResult res = correct(f);
            if (!is_homomorphism(res.h)) throw invariant_error("corrected map not a homomorphism");
            std::cout << "OK " << p.string() << " (defect-inf " << rep.defect_inf.str() << ", corrected N "
                      << res.report.big_n << ")\n";
        } catch (const invariant_error& e) {
            std::cout << "FAIL " << p.string() << ": invariant: " << e.what() << "\n";
            invariant_failed = true;
            ++failures;
        } catch (const std::exception& e) {
            std::cout << "FAIL " << p.string() << ": " << e.what() << "\n";
            ++failures;
        }
    }
    std::cout << "verified " << (groups.size() + maps.size()) << " files, " << failures << " failures\n";
    if (invariant_failed) return 2;
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permstab: approximate group actions on finite sets — defects, testing, repair"};
    app.require_subcommand(1);

    // gen
    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "Generate groups, maps and hard instances");
    cmd_gen->add_option("--kind", gen.kind,
                        "cyclic|symmetric|shift|regular|action|random-map|perturb|drop-point|gk|gamma0")
        ->required();
    cmd_gen->add_option("--order", gen.order, "group order for cyclic/shift");
    cmd_gen->add_option("--points", gen.points, "points for symmetric");
    cmd_gen->add_option("--degree", gen.degree, "degree for action/random-map");
    cmd_gen->add_option("--k", gen.k, "grid parameter for gk/gamma0");
    cmd_gen->add_option("--count", gen.count, "number of corruptions for perturb");
    cmd_gen->add_option("--seed", gen.seed, "seed for randomized kinds");
    cmd_gen->add_option("--group", gen.group_path, "input group file");
    cmd_gen->add_option("--map", gen.map_path, "input map file");
    cmd_gen->add_option("--word", gen.word, "word in x1/x2 with ^exponents, for gk");
    cmd_gen->add_option("--words-file", gen.words_file, "file with one word per line, for gk");
    cmd_gen->add_option("--out", gen.out, "output path (stdout when omitted)");

    // perm: notation helper for authoring map files by hand
    std::string perm_text;
    int perm_degree = 0;
    CLI::App* cmd_perm = app.add_subcommand("perm", "Convert cycle or one-line notation to canonical one-line form");
    cmd_perm->add_option("--perm", perm_text, "permutation, e.g. \"(0 1)(2 3 4)\" or \"1,0,3,4,2\"")->required();
    cmd_perm->add_option("--degree", perm_degree, "degree (required for cycle notation)");

    // defect
    std::string defect_map;
    CLI::App* cmd_defect = app.add_subcommand("defect", "Uniform and mean local defect of a map");
    cmd_defect->add_option("--map", defect_map, "map file")->required();

    // symmetrize
    std::string sym_map, sym_out;
    CLI::App* cmd_sym = app.add_subcommand("symmetrize", "Deform a map into a symmetric one (bounds asserted)");
    cmd_sym->add_option("--map", sym_map, "map file")->required();
    cmd_sym->add_option("--out", sym_out, "output map path (stdout when omitted)");

    // correct
    std::string cor_map, cor_out, cor_dump;
    CLI::App* cmd_cor = app.add_subcommand("correct", "Repair a map into an exact homomorphism on N >= n points");
    cmd_cor->add_option("--map", cor_map, "map file")->required();
    cmd_cor->add_option("--out", cor_out, "correction-result output path");
    cmd_cor->add_option("--dump-cascade", cor_dump, "prefix for X/Y/Z graph dumps of the symmetrized map");

    // correct-quotient
    std::string corq_map, corq_out, corq_gens;
    CLI::App* cmd_corq = app.add_subcommand("correct-quotient", "Repair through a quotient by a normal subgroup");
    cmd_corq->add_option("--map", corq_map, "map file")->required();
    cmd_corq->add_option("--normal-gens", corq_gens, "comma-separated generators of the normal subgroup")->required();
    cmd_corq->add_option("--out", corq_out, "correction-result output path");

    // test
    std::string test_map, test_algorithm = "sym", test_mode = "monte-carlo", test_eps = "1/10", test_alpha = "1/100",
                test_csv;
    long long test_samples = 100000;
    std::uint64_t test_seed = 0;
    CLI::App* cmd_test = app.add_subcommand("test", "Randomized homomorphism testing");
    cmd_test->add_option("--map", test_map, "map file")->required();
    cmd_test->add_option("--algorithm", test_algorithm, "sym (sampled point) or blr (whole permutations)");
    cmd_test->add_option("--mode", test_mode, "once|amplified|monte-carlo");
    cmd_test->add_option("--samples", test_samples, "samples for monte-carlo");
    cmd_test->add_option("--eps", test_eps, "distance parameter for amplified, as p/q");
    cmd_test->add_option("--alpha", test_alpha, "target acceptance probability for far maps, as p/q");
    cmd_test->add_option("--seed", test_seed, "rng seed");
    cmd_test->add_option("--csv", test_csv, "write per-batch rejection counts as CSV");

    // oracle
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "Brute-force ground truth at tiny scale");
    cmd_oracle->require_subcommand(1);
    std::string on_map;
    int on_nmax = 0;
    long long on_budget = 0;
    CLI::App* cmd_on = cmd_oracle->add_subcommand("nearest", "Nearest homomorphism into Sym(N), n <= N <= n-max");
    cmd_on->add_option("--map", on_map, "map file")->required();
    cmd_on->add_option("--n-max", on_nmax, "largest N to search")->required();
    cmd_on->add_option("--budget", on_budget, "search budget (default 1e7; env PERMSTAB_BUDGET)");
    std::string oi_h, oi_f;
    CLI::App* cmd_oi = cmd_oracle->add_subcommand("intertwiner", "Minimum distance from the inclusion to an intertwiner");
    cmd_oi->add_option("--map-h", oi_h, "homomorphism into Sym(n-1)")->required();
    cmd_oi->add_option("--map-f", oi_f, "transitive homomorphism into Sym(n)")->required();
    std::string oe_group;
    int oe_degree = 0;
    long long oe_budget = 0;
    bool oe_print = false;
    CLI::App* cmd_oe = cmd_oracle->add_subcommand("enumerate", "Count (optionally print) all homomorphisms");
    cmd_oe->add_option("--group", oe_group, "group file")->required();
    cmd_oe->add_option("--degree", oe_degree, "target degree")->required();
    cmd_oe->add_option("--budget", oe_budget, "search budget (default 1e7; env PERMSTAB_BUDGET)");
    cmd_oe->add_flag("--print", oe_print, "print each homomorphism's table");

    // verify
    std::string verify_dir;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Run the invariant suite over a directory of instances");
    cmd_verify->add_option("--dir", verify_dir, "directory with .group/.map files")->required();

    try {
        app.parse(argc, argv);

        if (*cmd_gen) run_gen(gen);

        if (*cmd_perm) {
            Perm p = io::parse_perm_any(perm_text, perm_degree);
            std::cout << p.str() << "\n";
        }

        if (*cmd_defect) {
            GroupMap f = io::load_map(defect_map);
            DefectReport rep = defects(f);
            std::cout << "order " << f.group()->order() << "\n";
            std::cout << "degree " << f.degree() << "\n";
            std::cout << "defect-inf " << rep.defect_inf.str() << "\n";
            std::cout << "defect-mean " << rep.defect_mean.str() << "\n";
            std::cout << "argmax-pair " << rep.argmax.first << " " << rep.argmax.second << "\n";
            std::cout << "homomorphism " << (is_homomorphism(f) ? 1 : 0) << "\n";
            std::cout << "symmetric " << (is_symmetric(f) ? 1 : 0) << "\n";
        }

        if (*cmd_sym) {
            GroupMap f = io::load_map(sym_map);
            DefectReport before = defects(f);
            GroupMap out = symmetrize(f);
            DefectReport after = defects(out);
            MapDistance moved = distance(f, out);
            // keep stdout a valid map file when it doubles as the output
            const char* lead = sym_out.empty() ? "# " : "";
            std::cout << lead << "d-inf " << moved.d_inf.str() << " max " << (Rational(2) * before.defect_inf).str()
                      << "\n";
            std::cout << lead << "d-mean " << moved.d_mean.str() << " max "
                      << (Rational(3) * before.defect_mean).str() << "\n";
            std::cout << lead << "defect-inf " << after.defect_inf.str() << " max "
                      << (Rational(7) * before.defect_inf).str() << "\n";
            std::cout << lead << "defect-mean " << after.defect_mean.str() << " max "
                      << (Rational(10) * before.defect_mean).str() << "\n";
            if (sym_out.empty())
                io::write_map(std::cout, out);
            else
                io::save_map(sym_out, out);
        }

        if (*cmd_cor) {
            GroupMap f = io::load_map(cor_map);
            CorrectionResult res = correct(f);
            print_report(res.report);
            if (!cor_out.empty()) io::save_correction(cor_out, res);
            if (!cor_dump.empty()) {
                Cascade c = build_cascade(symmetrize(f), Rational(1, 6));
                for (auto [g, tag] : {std::pair{&c.x_eps, "x"}, std::pair{&c.y_eps, "y"}, std::pair{&c.z_eps, "z"}}) {
                    std::ofstream out(cor_dump + "." + tag + ".graph");
                    if (!out) throw domain_error("cannot write cascade dump");
                    io::write_graph(out, io::dump_graph(*g, c.weights));
                }
            }
        }

        if (*cmd_corq) {
            GroupMap f = io::load_map(corq_map);
            Subgroup d = subgroup_generated(f.group(), parse_index_list(corq_gens));
            CorrectionResult res = correct_via_quotient(f, d);
            print_report(res.report);
            if (!corq_out.empty()) io::save_correction(corq_out, res);
        }

        if (*cmd_test) {
            GroupMap f = io::load_map(test_map);
            Rng rng(test_seed);
            if (test_algorithm != "sym" && test_algorithm != "blr")
                throw domain_error("unknown --algorithm '" + test_algorithm + "'");
            std::cout << "algorithm " << test_algorithm << "\n";
            std::cout << "mode " << test_mode << "\n";
            std::cout << "seed " << test_seed << "\n";
            if (test_mode == "once") {
                TestOutcome t = test_algorithm == "sym" ? sym_test_once(f, rng) : blr_test_once(f, rng);
                std::cout << "verdict " << (t.accept ? "accept" : "reject") << "\n";
                std::cout << "witness " << t.g1 << " " << t.g2;
                if (t.x >= 0) std::cout << " " << t.x;
                std::cout << "\n";
            } else if (test_mode == "amplified") {
                if (test_algorithm != "sym") throw domain_error("amplified mode drives the sym algorithm");
                AmplifiedOutcome a = amplified_test(f, Rational::parse(test_eps), Rational::parse(test_alpha), rng);
                std::cout << "iterations " << a.iterations << "\n";
                std::cout << "verdict " << (a.accept ? "accept" : "reject") << "\n";
                if (!a.accept)
                    std::cout << "witness " << a.witness.g1 << " " << a.witness.g2 << " " << a.witness.x << "\n";
            } else if (test_mode == "monte-carlo") {
                if (test_algorithm != "sym") throw domain_error("monte-carlo mode drives the sym algorithm");
                TestStats s = monte_carlo(f, test_samples, rng);
                std::cout << "samples " << s.samples << "\n";
                std::cout << "rejections " << s.rejections << "\n";
                std::cout << "estimate " << fmt_double(s.estimate) << "\n";
                std::cout << "confidence-radius " << fmt_double(s.confidence_radius) << "\n";
                std::cout << "exact " << rejection_probability_exact(f).str() << "\n";
                if (!test_csv.empty()) {
                    std::string csv = "batch,rejections\n";
                    for (std::size_t i = 0; i < s.batch_rejections.size(); ++i)
                        csv += std::to_string(i) + "," + std::to_string(s.batch_rejections[i]) + "\n";
                    write_text(test_csv, csv);
                }
            } else {
                throw domain_error("unknown --mode '" + test_mode + "'");
            }
        }

        if (*cmd_oracle) {
            if (*cmd_on) {
                GroupMap f = io::load_map(on_map);
                NearestHom nh = nearest_homomorphism(f, on_nmax, budget_from_env(on_budget));
                std::cout << "n-used " << nh.n_used << "\n";
                std::cout << "d-inf " << nh.d_inf.str() << "\n";
                std::cout << "d-mean " << nh.d_mean.str() << "\n";
                for (int g = 0; g < nh.h.group()->order(); ++g)
                    std::cout << "perm " << g << " " << nh.h.at(g).str() << "\n";
            }
            if (*cmd_oi) {
                GroupMap h = io::load_map(oi_h);
                GroupMap f = io::load_map(oi_f);
                IntertwinerCheck c = intertwiner_min_distance(h, f);
                std::cout << "n " << c.n << "\n";
                std::cout << "distance " << fmt_double(c.distance) << "\n";
                std::cout << "bound " << fmt_double(c.bound) << "\n";
            }
            if (*cmd_oe) {
                GroupPtr g = io::load_group(oe_group);
                long long count = enumerate_homomorphisms(
                    g, oe_degree,
                    [&](const GroupMap& h) {
                        if (oe_print) {
                            for (int e = 0; e < g->order(); ++e) std::cout << h.at(e).str() << (e + 1 < g->order() ? " " : "\n");
                        }
                    },
                    budget_from_env(oe_budget));
                std::cout << "count " << count << "\n";
            }
        }

        if (*cmd_verify) return run_verify(verify_dir);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const invariant_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
