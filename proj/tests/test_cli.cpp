// End-to-end tests of the command line binary. The binary path comes from the
// AKCODES_CLI environment variable (set by the test harness), with ./akcodes
// as a fallback for manual runs from the build directory.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    if (const char* env = std::getenv("AKCODES_CLI")) return env;
    return "./akcodes";
}

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("akcodes-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

RunResult run(const std::string& args) {
    const fs::path out_file = temp_dir() / "stdout.txt";
    const fs::path err_file = temp_dir() / "stderr.txt";
    const std::string cmd = "\"" + cli_path() + "\" " + args + " > \"" + out_file.string() +
                            "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::string kSmallSpec =
    "name = small\n"
    "k = 2\n"
    "n = 4\n"
    "S = 1,2\n"
    "T = 1\n"
    "generator = x^2+1\n"
    "expected_d = 2\n";

}  // namespace

TEST_CASE("cli: binary exists") {
    const RunResult r = run("--help");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.out, "build"));
    CHECK(contains(r.out, "verify-table"));
}

TEST_CASE("cli: build prints the shape of a spec") {
    const fs::path f = temp_dir() / "small.spec";
    spit(f, kSmallSpec);
    const RunResult r = run("build \"" + f.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "name: small"));
    CHECK(contains(r.out, "cardinality: 2^8"));
    CHECK(contains(r.out, "skew-cyclic for S: yes"));
}

TEST_CASE("cli: check reports every reading and matches the claim") {
    const fs::path f = temp_dir() / "small.spec";
    spit(f, kSmallSpec);
    const RunResult r = run("check \"" + f.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "Gray image fixed by Sigma_S: yes"));
    CHECK(contains(r.out, "closed under the twisted shift: yes"));
    CHECK(contains(r.out, "characterization readings agree: yes"));
    CHECK(contains(r.out, "self-dual for T = {1}: yes"));
    CHECK(contains(r.out, "minimum distance over A_k: 2"));
    CHECK(contains(r.out, "match: yes"));
}

TEST_CASE("cli: check fails the exit code on a wrong distance claim") {
    const fs::path f = temp_dir() / "wrong.spec";
    spit(f,
         "k = 2\nn = 4\nS = 1,2\nT = 1\ngenerator = x^2+1\nexpected_d = 3\n");
    const RunResult r = run("check \"" + f.string() + "\"");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "match: no"));
}

TEST_CASE("cli: the three distance methods agree on a small code") {
    const fs::path f = temp_dir() / "small.spec";
    spit(f, kSmallSpec);
    for (const std::string method : {"components", "brute", "gray"}) {
        const RunResult r = run("distance \"" + f.string() + "\" --method " + method);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, ": 2"));
    }
    const RunResult bad = run("distance \"" + temp_dir().string() + "/small.spec\" --method nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: verify-table emits the TSV report and a matching exit code") {
    const fs::path out = temp_dir() / "report.tsv";
    const RunResult r = run("verify-table --threads 2 --out \"" + out.string() + "\"");
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 13);  // header + 12 rows
    CHECK(lines[0] ==
          "name\tn\tk\tS\tT\tskew_cyclic\tself_dual\td_ak\td_gray\ttable_d\tmatch\tnotes");
    bool all_match = true;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        // The match column is the second to last.
        const auto cols = [&] {
            std::vector<std::string> c;
            std::istringstream ss(lines[i]);
            std::string col;
            while (std::getline(ss, col, '\t')) c.push_back(col);
            return c;
        }();
        // 11 when the trailing notes field is empty, 12 otherwise.
        REQUIRE(cols.size() >= 11);
        REQUIRE(cols.size() <= 12);
        if (cols[10] != "yes") all_match = false;
    }
    CHECK(r.exit_code == (all_match ? 0 : 1));
    CHECK(slurp(out) == r.out);
}

TEST_CASE("cli: verify-table output is identical across thread counts") {
    const RunResult r1 = run("verify-table --threads 1");
    const RunResult r8 = run("verify-table --threads 8");
    CHECK(r1.out == r8.out);
    CHECK(r1.exit_code == r8.exit_code);
}

TEST_CASE("cli: verify-table on an explicit file, including the empty table") {
    const fs::path empty = temp_dir() / "empty.table";
    spit(empty, "");
    const RunResult r = run("verify-table \"" + empty.string() + "\"");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);  // header only
    const fs::path one = temp_dir() / "one.table";
    spit(one, kSmallSpec);
    const RunResult r2 = run("verify-table \"" + one.string() + "\"");
    CHECK(r2.exit_code == 0);
    CHECK(lines_of(r2.out).size() == 2);
    CHECK(contains(r2.out, "small\t4\t2\t1,2\t1\tyes\tyes\t2\t2\t2\tyes"));
}

TEST_CASE("cli: even construction emits a spec that rebuilds the same code") {
    const fs::path out = temp_dir() / "even.spec";
    const RunResult r =
        run("construct even --k 1 --S 1 --n 2 --g x+1 --g x+1 --name twopoint --out \"" +
            out.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "cardinality 2^2"));
    const RunResult built = run("build \"" + out.string() + "\"");
    CHECK(built.exit_code == 0);
    CHECK(contains(built.out, "cardinality: 2^2"));
    CHECK(contains(built.out, "skew-cyclic for S: yes"));
    // A violated pairing is a usage error.
    const RunResult bad = run("construct even --k 1 --S 1 --n 2 --g x+1 --g 0");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.err, "error:"));
}

TEST_CASE("cli: odd construction emits a spec that rebuilds the same code") {
    const fs::path out = temp_dir() / "odd.spec";
    const RunResult r = run("construct odd --k 1 --S 1 --n 3 --g x+1 --out \"" + out.string() + "\"");
    CHECK(r.exit_code == 0);
    // The even-weight pullback spans the full module: both components F2^3.
    CHECK(contains(r.out, "cardinality 2^6"));
    const RunResult built = run("build \"" + out.string() + "\"");
    CHECK(built.exit_code == 0);
    CHECK(contains(built.out, "skew-cyclic for S: yes"));
}

TEST_CASE("cli: subring construction lifts the worked example") {
    const fs::path s1 = temp_dir() / "slot1.spec";
    const fs::path s2 = temp_dir() / "slot2.spec";
    spit(s1, "k = 1\nn = 2\nS = empty\nquasi = 2\ngenerator = x\n");
    spit(s2, "k = 1\nn = 2\nS = empty\nquasi = 2\ngenerator = 1\n");
    const fs::path out = temp_dir() / "lifted.spec";
    const RunResult r = run("construct from-ap --S 2 \"" + s1.string() + "\" \"" + s2.string() +
                            "\" --out \"" + out.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "slot pairing (1 2)"));
    const std::string spec_text = slurp(out);
    CHECK(contains(spec_text, "generator = (1+v2)x"));
    CHECK(contains(spec_text, "generator = v2"));
    const RunResult built = run("build \"" + out.string() + "\"");
    CHECK(built.exit_code == 0);
    CHECK(contains(built.out, "skew-cyclic for S: yes"));
    // The pairing is forced: the identity is rejected, the swap accepted.
    const RunResult bad =
        run("construct from-ap --S 2 --mu 1,2 \"" + s1.string() + "\" \"" + s2.string() + "\"");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.err, "pairing"));
    const RunResult good =
        run("construct from-ap --S 2 --mu 2,1 \"" + s1.string() + "\" \"" + s2.string() + "\"");
    CHECK(good.exit_code == 0);
}

TEST_CASE("cli: dual emits a verifiable spec") {
    const fs::path f = temp_dir() / "small.spec";
    spit(f, kSmallSpec);
    const fs::path out = temp_dir() / "dual.spec";
    const RunResult r = run("dual \"" + f.string() + "\" --T 1 --out \"" + out.string() + "\"");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "self-dual: yes"));
    const RunResult built = run("build \"" + out.string() + "\"");
    CHECK(built.exit_code == 0);
    CHECK(contains(built.out, "cardinality: 2^8"));
}

TEST_CASE("cli: malformed input is a usage error") {
    const fs::path f = temp_dir() / "broken.spec";
    spit(f, "k = 2\nn = 4\nwhat = no\n");
    const RunResult r = run("build \"" + f.string() + "\"");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.err, "error:"));
    const RunResult missing = run("build \"" + (temp_dir() / "absent.spec").string() + "\"");
    CHECK(missing.exit_code == 2);
    const RunResult noargs = run("");
    CHECK(noargs.exit_code == 2);
}
