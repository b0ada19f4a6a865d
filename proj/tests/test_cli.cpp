#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "permstab/correction.hpp"
#include "permstab/io.hpp"

using namespace permstab;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code;
    std::string stdout_text;
};

CliRun run_cli(const std::string& args, const fs::path& workdir) {
    fs::path out = workdir / "stdout.txt";
    std::string cmd = "cd '" + workdir.string() + "' && '" + PERMSTAB_CLI_PATH + "' " + args + " > '" +
                      out.string() + "' 2> '" + (workdir / "stderr.txt").string() + "'";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("permstab_cli_" + std::to_string(std::rand()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("cli round trip: correct output passes defect with zeros") {
    TempDir dir;
    CHECK(run_cli("gen --kind shift --order 5 --out s5.map", dir.path).exit_code == 0);
    CHECK(run_cli("gen --kind perturb --map s5.map --count 1 --seed 9 --out p5.map", dir.path).exit_code == 0);
    CHECK(run_cli("correct --map p5.map --out p5.result", dir.path).exit_code == 0);

    CorrectionResult res = io::load_correction(dir.path / "p5.result");
    CHECK(is_homomorphism(res.h));
    CHECK(defects(res.h).defect_inf == Rational(0));

    // and the emitted file is bit-identical when re-emitted after parsing
    std::ostringstream re;
    io::write_correction(re, res);
    std::ifstream original(dir.path / "p5.result");
    std::stringstream buf;
    buf << original.rdbuf();
    CHECK(re.str() == buf.str());
}

TEST_CASE("cli determinism: same seed, byte-identical output") {
    TempDir dir;
    REQUIRE(run_cli("gen --kind shift --order 5 --out s5.map", dir.path).exit_code == 0);
    REQUIRE(run_cli("gen --kind perturb --map s5.map --count 1 --seed 3 --out p.map", dir.path).exit_code == 0);
    CliRun a = run_cli("test --map p.map --algorithm sym --mode monte-carlo --samples 100000 --seed 7", dir.path);
    CliRun b = run_cli("test --map p.map --algorithm sym --mode monte-carlo --samples 100000 --seed 7", dir.path);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(a.stdout_text.find("estimate") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    TempDir dir;
    CHECK(run_cli("defect --no-such-flag x", dir.path).exit_code == 1);
    CHECK(run_cli("defect --map missing.map", dir.path).exit_code == 1);
    {
        std::ofstream bad(dir.path / "bad.map");
        bad << "not a map\n";
    }
    CHECK(run_cli("defect --map bad.map", dir.path).exit_code == 1);
    CHECK(run_cli("gen --kind gamma0 --k 10", dir.path).exit_code == 0);
    CHECK(run_cli("--help", dir.path).exit_code == 0);
}

TEST_CASE("cli repairs the core-shrinking instance and reports its slack") {
    TempDir dir;
    io::save_map(dir.path / "adv.map", permstab::testing::adversarial_fixed_point_instance());
    CliRun r = run_cli("correct --map adv.map --out adv.result", dir.path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("bound core:V1-lower lhs 349 rhs 348 slack -1") != std::string::npos);
    CorrectionResult res = io::load_correction(dir.path / "adv.result");
    CHECK(is_homomorphism(res.h));
    CHECK(res.report.big_n >= res.report.n);
}

TEST_CASE("cli defect on a homomorphism reports zeros") {
    TempDir dir;
    REQUIRE(run_cli("gen --kind shift --order 5 --out s5.map", dir.path).exit_code == 0);
    CliRun r = run_cli("defect --map s5.map", dir.path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("defect-inf 0\n") != std::string::npos);
    CHECK(r.stdout_text.find("defect-mean 0\n") != std::string::npos);
    CHECK(r.stdout_text.find("homomorphism 1") != std::string::npos);
}

TEST_CASE("cli reads the oracle budget from the environment") {
    TempDir dir;
    REQUIRE(run_cli("gen --kind cyclic --order 2 --out z2.group", dir.path).exit_code == 0);
    CHECK(run_cli("oracle enumerate --group z2.group --degree 5", dir.path).exit_code == 0);
    fs::path out = dir.path / "stdout.txt";
    std::string cmd = "cd '" + dir.path.string() + "' && PERMSTAB_BUDGET=10 '" + PERMSTAB_CLI_PATH +
                      "' oracle enumerate --group z2.group --degree 5 > '" + out.string() + "' 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1); // budget refusal is a domain error
}

TEST_CASE("cli verify runs the invariant suite over a directory") {
    TempDir dir;
    fs::create_directories(dir.path / "corpus");
    REQUIRE(run_cli("gen --kind cyclic --order 6 --out corpus/z6.group", dir.path).exit_code == 0);
    REQUIRE(run_cli("gen --kind shift --order 5 --out corpus/s5.map", dir.path).exit_code == 0);
    REQUIRE(run_cli("gen --kind perturb --map corpus/s5.map --count 1 --seed 5 --out corpus/p5.map", dir.path)
                .exit_code == 0);
    CliRun v = run_cli("verify --dir corpus", dir.path);
    CHECK(v.exit_code == 0);
    CHECK(v.stdout_text.find("0 failures") != std::string::npos);
}

TEST_CASE("cli symmetrize to stdout stays a parseable map") {
    TempDir dir;
    REQUIRE(run_cli("gen --kind shift --order 5 --out s5.map", dir.path).exit_code == 0);
    REQUIRE(run_cli("gen --kind perturb --map s5.map --count 1 --seed 2 --out p.map", dir.path).exit_code == 0);
    CliRun r = run_cli("symmetrize --map p.map", dir.path);
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.stdout_text); // stat lines are comments, the rest is the map
    GroupMap out = io::read_map(in);
    CHECK(is_symmetric(out));
}

TEST_CASE("cli perm notation helper") {
    TempDir dir;
    CliRun cycles = run_cli("perm --perm '(0 1)(2 3 4)' --degree 5", dir.path);
    CHECK(cycles.exit_code == 0);
    CHECK(cycles.stdout_text == "1,0,3,4,2\n");
    CliRun oneline = run_cli("perm --perm 1,0,3,4,2", dir.path);
    CHECK(oneline.exit_code == 0);
    CHECK(oneline.stdout_text == "1,0,3,4,2\n");
    CHECK(run_cli("perm --perm '(0 9)' --degree 3", dir.path).exit_code == 1);
}

TEST_CASE("cli gk words from file") {
    TempDir dir;
    {
        std::ofstream words(dir.path / "words.txt");
        words << "x1 x2\n";
        words << "x2^5\n";
    }
    CliRun r = run_cli("gen --kind gk --k 5 --words-file words.txt", dir.path);
    CHECK(r.exit_code == 0);
    // second word reduces to the identity on the 25-point grid
    std::string id25 = Perm::identity(25).str();
    CHECK(r.stdout_text.find(id25) != std::string::npos);
}
