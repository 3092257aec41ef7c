#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ecoc/cli.hpp"
#include "ecoc/instance_gen.hpp"
#include "ecoc/instance_io.hpp"

using namespace ecoc;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return CliRun{status, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = "cli_test_tmp_" + std::to_string(counter++) + ".ecoc";
        std::ofstream f(path_);
        f << contents;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* kStarFile = "p ecoc 4 3 1 1\ne 1 2\ne 1 3\ne 1 4\n";

}  // namespace

TEST_CASE("kernelize subcommand emits the kernel and exit code 0") {
    TempFile f(kStarFile);
    CliRun r = run({"kernelize", f.path()});
    CHECK(r.status == 0);
    CHECK(r.out == "p ecoc 0 0 1 0\n");
}

TEST_CASE("kernelize subcommand reports NO with exit code 1") {
    TempFile f("p ecoc 1 0 2 0\n");
    CliRun r = run({"kernelize", f.path()});
    CHECK(r.status == 1);
    CHECK(r.out == "NO\n");
}

TEST_CASE("kernelize writes trace and lp dump files") {
    TempFile f(kStarFile);
    std::string trace_path = "cli_test_trace.txt";
    std::string lp_path = "cli_test_lp.txt";
    CliRun r = run({"kernelize", f.path(), "--trace", trace_path, "--dump-lp", lp_path});
    CHECK(r.status == 0);

    std::ifstream tr(trace_path);
    std::stringstream trace;
    trace << tr.rdbuf();
    CHECK(trace.str().find("ecoc trace v1") == 0);
    CHECK(trace.str().find("rule RR4") != std::string::npos);
    CHECK(trace.str().find("result kernel n=0") != std::string::npos);

    std::ifstream lp(lp_path);
    std::stringstream lp_text;
    lp_text << lp.rdbuf();
    CHECK(lp_text.str().find("Minimize") != std::string::npos);

    std::remove(trace_path.c_str());
    std::remove(lp_path.c_str());
}

TEST_CASE("kernelize --lazy-lp matches the eager result") {
    TempFile f(kStarFile);
    CliRun eager = run({"kernelize", f.path()});
    CliRun lazy = run({"kernelize", f.path(), "--lazy-lp"});
    CHECK(eager.status == lazy.status);
    CHECK(eager.out == lazy.out);
}

TEST_CASE("solve subcommand") {
    TempFile yes(kStarFile);
    CliRun r1 = run({"solve", yes.path()});
    CHECK(r1.status == 0);
    CHECK(r1.out.find("YES\noptimum 1\nwitness 1\n") == 0);

    TempFile no("p ecoc 3 3 2 0\ne 1 2\ne 2 3\ne 1 3\n");
    CliRun r2 = run({"solve", no.path()});
    CHECK(r2.status == 1);
    CHECK(r2.out.find("NO\n") == 0);

    TempFile big(emit_instance(gen_random(30, make_rational(1, 10), 1, 2, 3)));
    CliRun r3 = run({"solve", big.path()});
    CHECK(r3.status == 2);  // oracle guard
    CHECK(r3.err.find("error:") == 0);
}

TEST_CASE("verify subcommand passes on seeded planted instances") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Instance inst = gen_planted(2 + static_cast<int>(seed % 3),
                                    1 + static_cast<int>(seed % 3),
                                    1 + static_cast<int>(seed % 2), make_rational(1, 3), seed);
        if (inst.graph.num_vertices() > 16)
            continue;
        TempFile f(emit_instance(inst));
        CliRun r = run({"verify", f.path()});
        REQUIRE(r.status == 0);
        REQUIRE(r.out == "PASS\n");
    }
}

TEST_CASE("gen subcommand is deterministic and parseable") {
    CliRun a = run({"gen", "planted", "--components", "3", "--l", "2", "--k", "1",
                    "--p", "1/2", "--seed", "7"});
    CliRun b = run({"gen", "planted", "--components", "3", "--l", "2", "--k", "1",
                    "--p", "1/2", "--seed", "7"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    Instance parsed = parse_instance(a.out);
    CHECK(parsed.graph.num_vertices() == 7);
    CHECK(parsed.k == 1);
    CHECK(parsed.l == 2);

    CliRun c = run({"gen", "random", "--n", "6", "--l", "1", "--k", "2",
                    "--p", "0.25", "--seed", "11"});
    CHECK(c.status == 0);
    CHECK(parse_instance(c.out).graph.num_vertices() == 6);
}

TEST_CASE("kernelize output is byte-identical across runs") {
    Instance inst = gen_random(14, make_rational(1, 4), 2, 3, 77);
    TempFile f(emit_instance(inst));
    CliRun r1 = run({"kernelize", f.path()});
    CliRun r2 = run({"kernelize", f.path()});
    CHECK(r1.out == r2.out);
    CHECK(r1.status == r2.status);
}

TEST_CASE("bench emits the documented csv header and rows") {
    CliRun r = run({"bench", "--grid", "l=1,2;n=8;k=2;p=0.3;seeds=2;seed0=5", "--csv", "-"});
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "kind,seed,n,m,l,k,outcome,kernel_n,kernel_k,rr1,rr2,rr3,rr4,wall_ms");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row))
        ++rows;
    CHECK(rows == 2 * 2 * 2);  // kinds x ls x seeds

    CliRun parallel = run({"bench", "--grid", "l=1;n=8;k=2;p=0.3;seeds=4", "--jobs", "4",
                           "--csv", "-"});
    CHECK(parallel.status == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CliRun r1 = run({"kernelize"});
    CHECK(r1.status == 2);

    CliRun r2 = run({"kernelize", "no_such_file.ecoc"});
    CHECK(r2.status == 2);
    CHECK(r2.err.find("error:") == 0);

    CliRun r3 = run({"frobnicate"});
    CHECK(r3.status == 2);

    CliRun r4 = run({"kernelize", "x", "--unknown-flag"});
    CHECK(r4.status == 2);

    TempFile bad("p ecoc 2 1 2 0\ne 1 5\n");
    CliRun r5 = run({"kernelize", bad.path()});
    CHECK(r5.status == 2);
    CHECK(r5.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits zero") {
    CliRun r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("kernelize") != std::string::npos);
}
