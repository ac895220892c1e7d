#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cantor::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("eval and expand") {
    CHECK(run({"eval", "--vector", "3:101", "--x", "1/4"}).out == "1/3\n");
    CHECK(run({"eval", "--vector", "3:101", "--x", "3:(02)"}).out == "1/3\n");
    CHECK(run({"eval", "--vector", "4:1101", "--x", "3/8", "--digits", "5"}).out == "0.55555\n");
    CHECK(run({"expand", "--x", "1/3", "--base", "3", "--alternate"}).out == "3:1(0)\n3:0(2)\n");
    CHECK(run({"expand", "--x", "1", "--base", "3"}).out == "3:(2)\n");
}

TEST_CASE("vector algebra commands") {
    CHECK(run({"kron", "--left", "3:101", "--right", "3:101"}).out == "9:101000101\n");
    CHECK(run({"power", "--vector", "3:101", "--n", "2"}).out == "9:101000101\n");
    CHECK(run({"reverse", "--vector", "4:1101"}).out == "4:1011\n");
    CHECK(run({"canon", "--vector", "9:101000101"}).out == "3:101\n");
    CHECK(run({"equiv", "--left", "3:101", "--right", "4:1001"}).out == "false\n");
    CHECK(run({"equiv", "--left", "3:101", "--right", "9:101000101"}).out.rfind("true\n", 0) == 0);
}

TEST_CASE("approx prints plot data") {
    const auto r = run({"approx", "--vector", "4:1101", "--level", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\t0\n1/4\t1/3\n1/2\t2/3\n3/4\t2/3\n1\t1\n");
    const auto d = run({"approx", "--vector", "3:101", "--digits", "3"});
    CHECK(d.out == "0.000\t0.000\n0.333\t0.500\n0.666\t0.500\n1.000\t1.000\n");
}

TEST_CASE("interp and maxerr") {
    write("cli_data.csv", "x,y\n1/4,1/3\n1/2,2/3\n");
    const auto r = run({"interp", "--in", "cli_data.csv", "--out", "cli_vector.json"});
    CHECK(r.out == "8:10101000\n");
    CHECK(slurp("cli_vector.json") == "{\"base\":8,\"bits\":\"10101000\"}\n");
    CHECK(run({"eval", "--vector", "cli_vector.json", "--x", "1/4"}).out == "1/3\n");
    CHECK(run({"maxerr", "--in", "cli_data.csv"}).out == "1/3\n");
    write("cli_bad.csv", "x,y\n1/2,1/2\n1/4,2/3\n");
    CHECK(run({"interp", "--in", "cli_bad.csv"}).code == 1);
    std::remove("cli_data.csv");
    std::remove("cli_bad.csv");
    std::remove("cli_vector.json");
}

TEST_CASE("reconstruct") {
    write("cli_hidden.json", "{\"base\":4,\"bits\":\"1101\"}\n");
    const auto r = run({"reconstruct", "--mode", "conditional", "--n", "4", "--oracle", "cli_hidden.json", "--log",
                        "cli_log.csv", "--out", "cli_rec.json"});
    CHECK(r.code == 0);
    CHECK(r.out == "4:1101\nqueries: 2\n");
    CHECK(slurp("cli_log.csv") == "x,Fx\n3/8,5/9\n5/8,2/3\n");
    CHECK(slurp("cli_rec.json") == "{\"base\":4,\"bits\":\"1101\"}\n");

    CHECK(run({"reconstruct", "--mode", "known-n", "--n", "4", "--oracle", "cli_hidden.json"}).out ==
          "4:1101\nqueries: 3\n");
    const auto wrong = run({"reconstruct", "--mode", "known-n", "--n", "4", "--oracle", "3:101"});
    CHECK(wrong.code == 2);
    CHECK(wrong.err.find("InconsistentSamples") != std::string::npos);

    write("cli_table.csv", "x,y\n1/3,1/2\n2/3,1/2\n");
    CHECK(run({"reconstruct", "--mode", "known-n", "--n", "3", "--oracle", "cli_table.csv"}).out ==
          "3:101\nqueries: 2\n");
    const auto missing = run({"reconstruct", "--mode", "known-n", "--n", "4", "--oracle", "cli_table.csv"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("MissingSample") != std::string::npos);

    const auto bounded = run({"reconstruct", "--mode", "bounded-k", "--k", "5", "--seed", "3", "--oracle", "9:101000101"});
    CHECK(bounded.code == 0);  // base 9 is outside K = 5 but its root is not
    CHECK(bounded.out.rfind("3:101\n", 0) == 0);
    CHECK(run({"reconstruct", "--mode", "bounded-k", "--k", "3", "--seed", "3", "--oracle", "4:1101"}).code == 2);
    CHECK(run({"reconstruct", "--mode", "bounded-k", "--k", "5", "--seed", "3", "--oracle", "4:1101"}).out ==
          "4:1101\nqueries: 47\nstream queries: 19\n");
    CHECK(run({"reconstruct", "--mode", "bounded-k", "--k", "5", "--oracle", "4:1101"}).code == 1);
    std::remove("cli_hidden.json");
    std::remove("cli_log.csv");
    std::remove("cli_rec.json");
    std::remove("cli_table.csv");
}

TEST_CASE("uniqueness commands") {
    const auto u = run({"uniqueness", "--k", "3", "--seed", "1"});
    CHECK(u.code == 0);
    CHECK(u.out.rfind("# rational points: 11", 0) == 0);
    CHECK(u.out.find("# stream probes: 3") != std::string::npos);
    CHECK(run({"verify-uniqueness", "--k", "3", "--points", "1/9,2/9"}).out == "true\n");
    CHECK(run({"verify-uniqueness", "--k", "3", "--points", "1/3"}).out == "false\n");
    const auto greedy = run({"uniqueness", "--k", "4", "--bruteforce"});
    write("cli_points.txt", greedy.out);
    CHECK(run({"verify-uniqueness", "--k", "4", "--in", "cli_points.txt"}).out == "true\n");
    std::remove("cli_points.txt");
}

TEST_CASE("measure commands are deterministic") {
    const std::vector<std::string> args{"mu-sample", "--vector", "3:101", "--count", "3", "--depth", "10", "--seed", "7"};
    const auto a = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == run(args).out);
    CHECK(a.out.rfind("index,digits,value\n", 0) == 0);
    CHECK(run({"mu-sample", "--vector", "3:101", "--count", "3"}).code == 1);

    const auto n = run({"normality", "--vector", "3:101", "--base", "2", "--digits", "64", "--samples", "20",
                        "--seed", "1", "--jobs", "2"});
    CHECK(n.code == 0);
    CHECK(n.out.rfind("digit,count,frequency\n", 0) == 0);
    CHECK(run({"intersect", "--a", "3:101", "--b", "3:101", "--count", "20", "--depth", "30", "--seed", "1"}).out ==
          "1.000000\n");
    const auto w = run({"weyl", "--vector", "3:101", "--m", "2", "--lmax", "128", "--samples", "5", "--seed", "1"});
    CHECK(w.code == 0);
    CHECK(w.out.rfind("L,median_ratio\n64,", 0) == 0);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"eval", "--vector", "3:101"}).code == 1);
    CHECK(run({"eval", "--vector", "3:111", "--x", "1/2"}).code == 1);
    CHECK(run({"eval", "--vector", "3:101", "--x", "1/0"}).code == 1);
    CHECK(run({"reconstruct", "--mode", "psychic", "--oracle", "3:101"}).code == 1);
    CHECK(run({"eval", "--help"}).code == 0);
}

TEST_CASE("verify runs a suite") {
    const auto r = run({"verify", "algebra"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
