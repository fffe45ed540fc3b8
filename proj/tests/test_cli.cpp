#include "test_support.hpp"

#include "afbd/cli.hpp"
#include "afbd/io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int status = afbd::cli::run(args, in, out, err);
    return {status, out.str(), err.str()};
}

const std::string example_file = std::string(AFBD_TEST_DATA_DIR) + "/data/running_example.apx";

// A scratch directory removed on scope exit.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        path_ = fs::temp_directory_path() / ("afbd-cli-" + tag + "-" + std::to_string(std::rand()));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }

private:
    fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("recognize") {
    auto r = run({"recognize", example_file, "--class", "sym"});
    CHECK(r.status == 1);
    CHECK(r.out == "no\n");

    TempDir dir("recognize");
    auto dag = dir.write("dag.apx", "arg(a).\narg(b).\natt(a,b).\n");
    r = run({"recognize", dag, "--class", "acyc"});
    CHECK(r.status == 0);
    CHECK(r.out == "yes\n");

    r = run({"recognize", (dir.path() / "missing.apx").string(), "--class", "acyc"});
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());

    auto broken = dir.write("broken.apx", "arg(a).\natt(a,b).\n");
    r = run({"recognize", broken, "--class", "acyc"});
    CHECK(r.status == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("backdoor") {
    auto r = run({"backdoor", example_file, "--class", "bip", "--max-k", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "2\n");

    r = run({"backdoor", example_file, "--class", "acyc", "--distance"});
    CHECK(r.out == "2\n");

    r = run({"backdoor", example_file, "--class", "acyc"});
    CHECK(r.out == "2\n4\n");

    r = run({"backdoor", example_file, "--class", "sym", "--max-k", "1"});
    CHECK(r.status == 1);
    CHECK(r.out == "NOT FOUND within k=1\n");

    TempDir dir("backdoor");
    auto dag = dir.write("dag.apx", "arg(a).\narg(b).\natt(a,b).\n");
    r = run({"backdoor", dag, "--class", "acyc"});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
}

TEST_CASE("extensions") {
    auto r = run({"extensions", example_file, "--semantics", "com", "--method", "backdoor", "--class", "acyc"});
    CHECK(r.status == 0);
    CHECK(r.out == "\n1,3,5\n");
    CHECK(run({"extensions", example_file, "--semantics", "com", "--method", "oracle"}).out == r.out);
    CHECK(run({"extensions", example_file, "--semantics", "com", "--class", "noeven"}).out == r.out);
    CHECK(run({"extensions", example_file, "--semantics", "stb"}).out == "1,3,5\n");
    CHECK(lines(run({"extensions", example_file, "--semantics", "adm", "--method", "oracle"}).out).size() == 7);

    // ADM enumeration is only available from the oracle.
    CHECK(run({"extensions", example_file, "--semantics", "adm"}).status == 2);
    CHECK(run({"extensions", example_file, "--semantics", "grd"}).status == 2);
    CHECK(run({"extensions", example_file, "--max-k", "1"}).status == 2);
}

TEST_CASE("accept") {
    auto r = run({"accept", example_file, "--mode", "credulous", "--semantics", "com", "--argument", "5"});
    CHECK(r.status == 0);
    CHECK(r.out == "accepted\n");

    r = run({"accept", example_file, "--mode", "skeptical", "--semantics", "com", "--argument", "1", "--explain"});
    CHECK(r.status == 1);
    CHECK(r.out == "rejected\ncounterexample: {}\n");

    r = run({"accept", example_file, "--mode", "credulous", "--semantics", "com", "--argument", "2"});
    CHECK(r.status == 1);
    CHECK(r.out == "rejected\n");

    r = run({"accept", example_file, "--mode", "credulous", "--semantics", "prf", "--argument", "3", "--explain",
             "--method", "oracle"});
    CHECK(r.status == 0);
    CHECK(r.out == "accepted\nwitness: {1,3,5}\n");

    CHECK(run({"accept", example_file, "--mode", "credulous", "--argument", "9"}).status == 2);
    CHECK(run({"accept", example_file, "--mode", "sometimes", "--argument", "1"}).status == 2);
}

TEST_CASE("stdin and tgf input") {
    auto r = run({"extensions", "-", "--semantics", "com"}, afbd::test::running_example_apx);
    CHECK(r.out == "\n1,3,5\n");

    const auto tgf = afbd::serialize_tgf(afbd::test::running_example());
    r = run({"extensions", "-", "--format", "tgf", "--semantics", "stb"}, tgf);
    CHECK(r.out == "1,3,5\n");

    TempDir dir("tgf");
    auto path = dir.write("ex.tgf", tgf);
    CHECK(run({"recognize", path, "--class", "bip"}).out == "no\n");
}

TEST_CASE("reduce") {
    const std::string fig3 = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n";
    auto r = run({"reduce", "-", "--type", "ca-bip"}, fig3);
    CHECK(r.status == 0);
    const auto out = lines(r.out);
    CHECK(out.back() == "% query: phi");
    CHECK(afbd::parse_apx(r.out).size() == 9);

    const std::string fig4 = "p cnf 3 3\n1 2 3 0\n-1 2 -3 0\n-1 -2 -3 0\n";
    r = run({"reduce", "-", "--type", "sa-sym"}, fig4);
    CHECK(lines(r.out).back() == "% query: phiP");
    CHECK(afbd::parse_apx(r.out).size() == 11);

    r = run({"reduce", "-", "--type", "ca-bip"}, fig4);
    CHECK(r.status == 2);
    CHECK(run({"reduce", "-", "--type", "ca-bip"}, "p cnf 1 2\n1 0\n").status == 2);
}

TEST_CASE("generate") {
    auto r = run({"generate", "--args", "8", "--attack-prob", "0.25", "--seed", "42"});
    CHECK(r.status == 0);
    CHECK(r.out == afbd::serialize_apx(afbd::generate_random(8, 0.25, 42)));
    CHECK(run({"generate", "--args", "3", "--attack-prob", "2", "--seed", "1"}).status == 2);
}

TEST_CASE("bench") {
    const std::string header = "instance\tn\tattacks\tk\tbackdoor_ms\toracle_ms\tagreement";
    TempDir empty("bench-empty");
    auto r = run({"bench", empty.path().string()});
    CHECK(r.status == 0);
    CHECK(r.out == header + "\n");

    TempDir one("bench-one");
    one.write("running_example.apx", afbd::test::running_example_apx);
    for (auto sigma : {"adm", "com", "prf", "sem", "stb"}) {
        r = run({"bench", one.path().string(), "--semantics", sigma, "--repeat", "2"});
        auto rows = lines(r.out);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == header);
        CHECK(rows[1].starts_with("running_example.apx\t5\t11\t2\t"));
        CHECK(rows[1].ends_with("\tok"));
    }

    ::setenv(afbd::cli::oracle_guard_env, "3", 1);
    r = run({"bench", one.path().string()});
    ::unsetenv(afbd::cli::oracle_guard_env);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].ends_with("\t-\t-"));

    CHECK(run({"bench", (one.path() / "nope").string()}).status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"recognize", example_file, "--class", "acyc", "--bogus"}).status == 2);
    CHECK(run({"recognize", example_file, "--class", "tree"}).status == 2);
    auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("recognize") != std::string::npos);
}

TEST_CASE("commands are deterministic") {
    for (int i = 0; i < 3; ++i) {
        CHECK(run({"backdoor", example_file, "--class", "noeven"}).out == "1\n3\n");
        CHECK(run({"extensions", example_file, "--semantics", "adm", "--method", "oracle"}).out ==
              "\n1\n3\n1,3\n1,5\n3,5\n1,3,5\n");
    }
}

} // TEST_SUITE
