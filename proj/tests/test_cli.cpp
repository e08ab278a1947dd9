#include "bipramsey/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = bipramsey::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

}  // namespace

TEST_CASE("ramsey-exact prints the value") {
    const Run r = run({"ramsey-exact", "--targets", "P3,P3", "--nmax", "5"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\n3\n"));
    CHECK(r.out.rfind("# ramsey-exact targets=P3,P3 nmax=5\n", 0) == 0);
}

TEST_CASE("verify-lower prints the certified bound") {
    const Run r = run({"verify-lower", "--H", "C4", "--n", "4"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "avoids: true, certifies R ≥ 4\n"));
}

TEST_CASE("constants prints xi") {
    const Run r = run({"constants", "--gamma", "6", "--delta", "1", "--eps1", "2", "--K0", "1"});
    CHECK(r.status == 0);
    CHECK(contains(r.out, "\nxi=1\n"));
    const Run q = run({"constants", "--gamma", "0.5", "--delta", "4", "--eps1", "0.01", "--K0", "100"});
    CHECK(contains(q.out, "eps=1/9600026\n"));
    CHECK(contains(q.out, "xi=1/12\n"));
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"ramsey-exact"}).status == 2);  // --targets is required
    CHECK(run({"verify-lower", "--H", "C4", "--n", "four"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("operation errors exit with status 1 and an error code") {
    const Run odd = run({"verify-lower", "--H", "C4", "--n", "3"});
    CHECK(odd.status == 1);
    CHECK(odd.err.rfind("error: structural\n", 0) == 0);
    const Run bad = run({"check-regular", "--host", "mono:4", "--colour", "1", "--left", "1,2", "--right", "1,x",
                         "--eps", "1/4"});
    CHECK(bad.status == 1);
    CHECK(bad.err.rfind("error: parse\n", 0) == 0);
    const Run eps = run({"constants", "--gamma", "1/0", "--delta", "1", "--eps1", "1", "--K0", "1"});
    CHECK(eps.status == 1);
    CHECK(run({"find-mono", "--H", "P3"}).err.rfind("error: parameter", 0) == 0);
    CHECK(run({"plan-h", "--H", "P12", "--hat-ell", "5"}).err.rfind("error: divisibility", 0) == 0);
}

TEST_CASE("generated files round trip through the other commands") {
    const auto dir = std::filesystem::temp_directory_path() / "bipramsey_cli_test";
    std::filesystem::create_directories(dir);
    const std::string col = (dir / "host.txt").string();
    const std::string graph = (dir / "h.txt").string();
    REQUIRE(run({"gen-colouring", "--kind", "extremal", "--n", "6", "--out", col}).status == 0);
    REQUIRE(run({"gen-h", "--H", "C6", "--out", graph}).status == 0);
    CHECK(slurp(col).rfind("# gen-colouring kind=extremal n=6", 0) == 0);
    CHECK(slurp(graph).rfind("graph 6\n", 0) == 0);
    const Run found = run({"find-mono", "--colouring", col, "--H-file", graph});
    CHECK(found.status == 0);
    CHECK(contains(found.out, "monochromatic copy: no\n"));
    const Run star = run({"find-mono", "--colouring", col, "--H", "S2"});
    CHECK(contains(star.out, "monochromatic copy: yes\n"));

    const std::string cert = (dir / "cert.txt").string();
    REQUIRE(run({"verify-lower", "--H", "P6", "--n", "6", "--certificate", cert}).status == 0);
    CHECK(slurp(cert).rfind("certificate ramsey-lower 7 3\nbipcol 6 6 3\n", 0) == 0);
    const Run reread = run({"find-mono", "--colouring", cert, "--H", "P6"});
    CHECK(contains(reread.out, "monochromatic copy: no\n"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("regularity, reduction, matching and shape commands") {
    const Run half = run({"check-regular", "--host", "mono:4", "--colour", "1", "--left", "1,2", "--right", "1,2",
                          "--eps", "1/4"});
    CHECK(half.status == 0);
    CHECK(contains(half.out, "pair 1 2 1/4 regular exhaustive\n"));

    const Run red = run({"reduce", "--host", "mono:6", "--per-side", "3", "--eps", "1/10"});
    CHECK(red.status == 0);
    CHECK(contains(red.out, "reduced 6 3 9\n"));
    CHECK(contains(red.out, "edge 1 4 1\n"));

    const Run m = run({"matching", "--host", "mono:6", "--per-side", "3"});
    CHECK(contains(m.out, "matching colour 1 size 3\n"));

    const Run shape = run({"shape", "--host", "mono:6", "--per-side", "3"});
    CHECK(contains(shape.out, "cmshape 3 0 6 1\n"));

    const Run plan = run({"plan-h", "--H", "P16", "--ell", "2", "--hat-ell", "4", "--beta", "1/16"});
    CHECK(plan.status == 0);
    CHECK(contains(plan.out, "plan 16 4 2 0\n"));
    CHECK(contains(plan.out, "# bounds hold"));
}

TEST_CASE("pipeline commands report each stage") {
    const Run full = run({"pipeline", "--host", "mono:24", "--H", "P16", "--seed", "4"});
    CHECK(full.status == 0);
    CHECK(contains(full.out, "stage verify ok"));
    CHECK(contains(full.out, "\nmap "));
    const Run compat = run({"compat", "--host", "mono:24", "--H", "P16"});
    CHECK(compat.status == 0);
    CHECK(contains(compat.out, "stage compat ok"));
    CHECK_FALSE(contains(compat.out, "stage embed"));
    const Run losing = run({"embed", "--host", "extremal:8", "--H", "C8", "--per-side", "3"});
    CHECK(losing.status == 1);
    CHECK(contains(losing.out, " fail "));
}

TEST_CASE("identical flags give identical output, whatever the worker count") {
    const std::vector<std::vector<std::string>> commands{
        {"ramsey-exact", "--targets", "P4,P4", "--nmax", "4"},
        {"reduce", "--host", "random:12:3:9", "--per-side", "2", "--eps", "1/3"},
        {"matching", "--host", "random:12:2:4", "--per-side", "3", "--eps", "1/2"},
        {"pipeline", "--host", "mono:24", "--H", "P16", "--seed", "11"},
    };
    for (auto args : commands) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.out == b.out);
        args.push_back("--workers");
        args.push_back("1");
        const Run one = run(args);
        args.back() = "3";
        const Run three = run(args);
        CHECK(one.out == a.out);
        CHECK(three.out == a.out);
    }
}
