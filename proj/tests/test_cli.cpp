#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>
#include <unistd.h>

#include "chainorder/estimator.hpp"
#include "chainorder/sequence.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("chainorder_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CHAINORDER_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "CHAINORDER_CLI must point at the binary");
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter));
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(bin) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

std::string alternating_tokens(int len) {
    std::string s;
    for (int t = 0; t < len; ++t) {
        if (t) s += ' ';
        s += (t % 2) ? '1' : '0';
    }
    return s;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

const std::string kOrder1Spec = R"({
  "order": 1,
  "alphabet": ["0", "1"],
  "transitions": {"0": [0.9, 0.1], "1": [0.2, 0.8]}
})";

const std::string kIidSpec = R"({
  "order": 0,
  "alphabet": ["a"],
  "transitions": {"": [1.0]}
})";

const std::string kHmmSpec = R"({
  "hidden_transitions": [[0.9, 0.1], [0.1, 0.9]],
  "emissions": [[0.8, 0.2], [0.3, 0.7]],
  "alphabet": ["x", "y"]
})";

}  // namespace

TEST_CASE("estimate prints the profile and chi") {
    const fs::path input = write_file("alt41.txt", alternating_tokens(41));
    RunResult r = run_cli("estimate --input " + input.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n = 40") != std::string::npos);
    CHECK(r.out.find("gamma = 0.5") != std::string::npos);
    CHECK(r.out.find("beta = 0.2") != std::string::npos);
    CHECK(r.out.find("chi = 1") != std::string::npos);
}

TEST_CASE("estimate on a single token") {
    const fs::path input = write_file("one.txt", "solo");
    RunResult r = run_cli("estimate --input " + input.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("chi = 0") != std::string::npos);
}

TEST_CASE("estimate rejects invalid parameters with exit 2") {
    const fs::path input = write_file("alt41b.txt", alternating_tokens(41));
    RunResult r =
        run_cli("estimate --input " + input.string() + " --gamma 0.5 --beta 0.3");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("2*beta + gamma must be < 1") != std::string::npos);
}

TEST_CASE("estimate rejects empty input with exit 2") {
    const fs::path input = write_file("empty.txt", "  \n ");
    RunResult r = run_cli("estimate --input " + input.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("empty sequence") != std::string::npos);
}

TEST_CASE("delta-profile emits the pinned CSV schema") {
    const fs::path input = write_file("alt41c.txt", alternating_tokens(41));
    RunResult r = run_cli("delta-profile --input " + input.string() + " --k-max 2");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "k,delta_hat,threshold");
    CHECK(lines[1].rfind("0,0.52381,", 0) == 0);
    CHECK(lines[2].rfind("1,0,", 0) == 0);
    CHECK(lines[3].rfind("2,0,", 0) == 0);

    // constant input: every level passes immediately
    const fs::path czero = write_file("const.txt", "z z z z z z z z z z z z");
    RunResult rc = run_cli("delta-profile --input " + czero.string() + " --k-max 3");
    auto clines = lines_of(rc.out);
    REQUIRE(clines.size() == 5);
    for (int k = 0; k <= 3; ++k)
        CHECK(clines[static_cast<std::size_t>(k + 1)].rfind(std::to_string(k) + ",0,", 0) == 0);

    RunResult rk = run_cli("delta-profile --input " + czero.string() + " --k-max 0");
    CHECK(lines_of(rk.out).size() == 2);  // header plus one row
}

TEST_CASE("simulate writes deterministic token files") {
    const fs::path spec = write_file("order1.json", kOrder1Spec);
    const fs::path out1 = scratch_dir() / "sim1.txt";
    const fs::path out2 = scratch_dir() / "sim2.txt";
    RunResult r1 = run_cli("simulate --spec " + spec.string() +
                           " --model chain --length 100 --seed 7 --output " +
                           out1.string());
    RunResult r2 = run_cli("simulate --spec " + spec.string() +
                           " --model chain --length 100 --seed 7 --output " +
                           out2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));

    std::istringstream in(slurp(out1));
    int tokens = 0;
    for (std::string t; in >> t;) {
        ++tokens;
        CHECK((t == "0" || t == "1"));
    }
    CHECK(tokens == 100);
}

TEST_CASE("simulate iid point mass repeats one token") {
    const fs::path spec = write_file("point.json", kIidSpec);
    const fs::path out = scratch_dir() / "point.txt";
    RunResult r = run_cli("simulate --spec " + spec.string() +
                          " --model iid --length 20 --seed 1 --output " + out.string());
    CHECK(r.exit_code == 0);
    std::istringstream in(slurp(out));
    int tokens = 0;
    for (std::string t; in >> t;) {
        ++tokens;
        CHECK(t == "a");
    }
    CHECK(tokens == 20);
}

TEST_CASE("simulate hmm stays inside the declared alphabet") {
    const fs::path spec = write_file("hmm.json", kHmmSpec);
    const fs::path out = scratch_dir() / "hmm.txt";
    RunResult r = run_cli("simulate --spec " + spec.string() +
                          " --model hmm --length 10 --seed 5 --output " + out.string());
    CHECK(r.exit_code == 0);
    std::istringstream in(slurp(out));
    int tokens = 0;
    for (std::string t; in >> t;) {
        ++tokens;
        CHECK((t == "x" || t == "y"));
    }
    CHECK(tokens == 10);
}

TEST_CASE("simulate rejects malformed specs with exit 2") {
    const fs::path spec = write_file("broken.json",
                                     R"({"order": 1, "alphabet": ["0", "1"],
                                         "transitions": {"0": [0.9, 0.1]}})");
    const fs::path out = scratch_dir() / "never.txt";
    RunResult r = run_cli("simulate --spec " + spec.string() +
                          " --model chain --length 10 --seed 1 --output " + out.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("transitions missing context \"1\"") != std::string::npos);
}

TEST_CASE("sweep writes one row per length and replicate") {
    const fs::path spec = write_file("order1s.json", kOrder1Spec);
    const fs::path out = scratch_dir() / "sweep.csv";
    RunResult r = run_cli("sweep --spec " + spec.string() +
                          " --model chain --lengths 400 --replicates 1 --seed 3 " +
                          "--output " + out.string());
    CHECK(r.exit_code == 0);
    auto lines = lines_of(slurp(out));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,replicate,seed,chi,runtime_s");
    CHECK(lines[1].rfind("399,0,3,", 0) == 0);

    RunResult bad = run_cli("sweep --spec " + spec.string() +
                            " --model chain --lengths 400,200 --replicates 1 " +
                            "--output " + out.string());
    CHECK(bad.exit_code == 2);
}

TEST_CASE("decide answers YES and NO through the exit code") {
    const fs::path input = write_file("alt41d.txt", alternating_tokens(41));
    RunResult yes = run_cli("decide --input " + input.string() + " --max-order 2");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "YES\n");

    RunResult no = run_cli("decide --input " + input.string() + " --max-order 1");
    CHECK(no.exit_code == 1);
    CHECK(no.out == "NO\n");

    const fs::path czero = write_file("constd.txt", "q q q q q q q q");
    RunResult cy = run_cli("decide --input " + czero.string() + " --max-order 1");
    CHECK(cy.exit_code == 0);
    CHECK(cy.out == "YES\n");

    RunResult bad = run_cli("decide --input " + input.string() + " --max-order 0");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("estimate chi equals the library result on the same bytes") {
    std::mt19937_64 g(731);
    std::string tokens;
    for (int t = 0; t < 4000; ++t) {
        if (t) tokens += ' ';
        tokens += static_cast<char>('a' + (g() % 3));
        if (g() % 4 == 0) tokens += tokens.back();  // some repetition
    }
    const fs::path input = write_file("mixed.txt", tokens);

    auto [alphabet, seq] = chainorder::ingest_file(input.string());
    const int lib_chi =
        chainorder::estimate_order(seq, chainorder::EstimatorParams()).chi;

    RunResult est = run_cli("estimate --input " + input.string());
    CHECK(est.exit_code == 0);
    CHECK(est.out.find("chi = " + std::to_string(lib_chi) + "\n") !=
          std::string::npos);
}
