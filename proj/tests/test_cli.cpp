#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wordlab/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = wordlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Temp files for the duration of the test binary.
class TempDir {
  public:
    TempDir() {
        path_ = fs::temp_directory_path() / "wordlab-cli-test";
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string file(const std::string& name, const std::string& content) {
        fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

  private:
    fs::path path_;
};

TempDir& tmp() {
    static TempDir dir;
    return dir;
}

std::string fib_spec_file() {
    static std::string path = tmp().file("fib.spec", "alphabet 2\nsturmian ;1\n");
    return path;
}

}  // namespace

TEST_CASE("gen prints the prefix") {
    auto r = run_cli({"gen", "--spec", fib_spec_file(), "--n", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "01001010010010100101\n");
}

TEST_CASE("complexity CSV has the Sturmian profile") {
    auto r = run_cli({"complexity", "--spec", fib_spec_file(), "--max-n", "10", "--prefix",
                      "1000", "--cap", "100000"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,p,stable");
    for (size_t n = 1; n <= 10; ++n) {
        std::getline(lines, line);
        CHECK(line == std::to_string(n) + "," + std::to_string(n + 1) + ",1");
    }
}

TEST_CASE("recurrence CSV") {
    auto r = run_cli({"recurrence", "--spec", fib_spec_file(), "--max-n", "3", "--prefix", "1000"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,R\n1,3\n", 0) == 0);
}

TEST_CASE("algebra subcommands") {
    auto r = run_cli({"algebra", "period", "0100101001"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    r = run_cli({"algebra", "root", "010101"});
    CHECK(r.code == 0);
    CHECK(r.out == "01^3\n");
}

TEST_CASE("perm-check matches the worked example") {
    auto r = run_cli({"perm-check", "--spec", fib_spec_file(), "--words", "0,1,00", "--prefix",
                      "10000"});
    CHECK(r.code == 0);
    CHECK(r.out == "P_B size=4 l_B=4 missing=0001\n");
}

TEST_CASE("witness search is deterministic and byte-identical") {
    std::string fam = tmp().file("fam.txt", "prefixes " + fib_spec_file() + " lengths 1,2,3,4,5,6\n");
    std::vector<std::string> args = {"witness", "--spec", fib_spec_file(), "--family", fam,
                                     "--prefix", "10000", "--max-k", "3", "--max-index", "6"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "witness indices=0,3 sigma=2,1 word=01000 absent_at=10000\n");
}

TEST_CASE("family files may list words directly") {
    std::string fam = tmp().file("fam_words.txt", "0\n0\n0\n");
    auto r = run_cli({"witness", "--spec", fib_spec_file(), "--family", fam, "--prefix", "10000",
                      "--max-k", "3", "--max-index", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "witness indices=0,1,2 sigma=1,2,3 word=000 absent_at=10000\n");
}

TEST_CASE("lemma2 exit codes encode the hypothesis") {
    std::string fam = tmp().file("fam2.txt",
                                 "prefixes " + fib_spec_file() +
                                     " lengths 1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20\n");
    auto r = run_cli({"lemma2", "--spec", fib_spec_file(), "--family", fam, "--subset", "0",
                      "--prefix", "10000"});
    CHECK(r.code == 0);  // singleton subset: hypothesis holds, bound trivial
    CHECK(r.out.find("P_B=1") != std::string::npos);

    std::string cube_fam = tmp().file("fam_cube.txt", "0\n1\n00\n01001010\n");
    r = run_cli({"lemma2", "--spec", fib_spec_file(), "--family", cube_fam, "--subset", "0,1,2",
                 "--prefix", "10000"});
    CHECK(r.code == 2);  // some v.b contains 000 and is absent
    CHECK(r.out.find("hypothesis_ok=0") != std::string::npos);
    CHECK(r.out.find("missing=") != std::string::npos);
}

TEST_CASE("classify exit codes encode the verdict") {
    std::string per = tmp().file("per.spec", "alphabet 2\nperiodic 011\n");
    std::string per_fam = tmp().file("per_fam.txt", "011\n0110\n");
    auto r = run_cli({"classify", "--spec", per, "--family", per_fam, "--prefix", "3000"});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict=periodic period=3\n");

    std::string fam = tmp().file("fam3.txt", "prefixes " + fib_spec_file() + " lengths 1,2,3,4,5,6\n");
    r = run_cli({"classify", "--spec", fib_spec_file(), "--family", fam, "--prefix", "10000"});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("verdict=missing-permutation\n", 0) == 0);
}

TEST_CASE("usage and file errors use the documented exit codes") {
    CHECK(run_cli({"no-such-command"}).code == 64);
    CHECK(run_cli({"gen", "--spec", fib_spec_file()}).code == 64);  // --n missing
    CHECK(run_cli({"gen", "--spec", "/nonexistent/x.spec", "--n", "5"}).code == 66);
}

TEST_CASE("power-free subcommand") {
    auto r = run_cli({"power-free", "--spec", fib_spec_file(), "--prefix", "10000", "--r", "4",
                      "--max-root", "20"});
    CHECK(r.code == 0);
    CHECK(r.out == "power-free r=4 max-root=20\n");
}
