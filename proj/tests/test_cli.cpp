#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "sgfb/serialization.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = sgfb::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

int count_lines(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify-pr prints residuals") {
    const auto r = run({"verify-pr", "--design", "meyer", "--n", "64"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["identity_residual"].get<double>() <= 1e-12);
    CHECK(j["alias_residual"].get<double>() <= 1e-12);
  }

  TEST_CASE("errors produce JSON and nonzero status") {
    auto r = run({"verify-pr", "--design", "haar"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] == "InvalidArgument");
    r = run({"verify-pr", "--n", "7"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] == "OddLength");
    r = run({"no-such-command"});
    CHECK(r.status == 2);
    CHECK(nlohmann::json::parse(r.err)["error"] == "UsageError");
    r = run({"decompose", "--in", "/nonexistent/f.csv", "--no-cache"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] == "IoError");
    r = run({"decompose", "--graph", "path", "--n", "100", "--levels", "3", "--no-cache", "--in",
             "/nonexistent/f.csv"});
    CHECK(r.status == 1);
  }

  TEST_CASE("decompose then reconstruct through files") {
    sgfb::test::TempDir dir("cli");
    const std::string graph = dir.file("g.txt");
    const std::string cache = dir.file("cache");
    REQUIRE(run({"gen-graph", "--graph", "sensor", "--n", "64", "--seed", "4", "--out", graph}).status == 0);
    REQUIRE(run({"gen-signal", "--graph", graph, "--out", dir.file("f.csv"), "--noise", "0.1",
                 "--cache-dir", cache})
                .status == 0);
    for (const std::string design : {"ideal", "meyer", "cdf97"}) {
      for (const std::string kind : {"combinatorial", "normalized"}) {
        auto r = run({"decompose", "--graph", graph, "--laplacian", kind, "--design", design,
                      "--levels", "3", "--in", dir.file("f.csv"), "--out", dir.file("p.json"),
                      "--cache-dir", cache});
        REQUIRE(r.status == 0);
        r = run({"reconstruct", "--graph", graph, "--laplacian", kind, "--design", design, "--in",
                 dir.file("p.json"), "--out", dir.file("r.csv"), "--cache-dir", cache});
        REQUIRE(r.status == 0);
        const Eigen::VectorXd f = sgfb::load_signal(dir.file("f.csv"));
        const Eigen::VectorXd g = sgfb::load_signal(dir.file("r.csv"));
        CHECK((f - g).cwiseAbs().maxCoeff() / f.cwiseAbs().maxCoeff() <= 1e-9);
      }
    }
  }

  TEST_CASE("reconstruct rejects a pyramid for another graph size") {
    sgfb::test::TempDir dir("cli-size");
    REQUIRE(run({"gen-signal", "--graph", "ring", "--n", "16", "--out", dir.file("f.csv"), "--no-cache"}).status == 0);
    REQUIRE(run({"decompose", "--graph", "ring", "--n", "16", "--in", dir.file("f.csv"), "--out",
                 dir.file("p.json"), "--no-cache"})
                .status == 0);
    const auto r = run({"reconstruct", "--graph", "ring", "--n", "32", "--in", dir.file("p.json"), "--no-cache"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] == "DimensionMismatch");
  }

  TEST_CASE("denoise writes one row per run plus the mean") {
    sgfb::test::TempDir dir("cli-dn");
    const auto r = run({"denoise", "--graph", "sensor", "--n", "100", "--sigma", "0.25", "--design",
                        "cdf97", "--laplacian", "combinatorial", "--runs", "100", "--seed", "1",
                        "--out", dir.file("d.csv")});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("denoise cdf97(C)", 0) == 0);
    CHECK(count_lines(dir.file("d.csv")) == 102);
    const auto again = run({"denoise", "--graph", "sensor", "--n", "100", "--sigma", "0.25",
                            "--runs", "100", "--seed", "1", "--out", dir.file("e.csv")});
    std::ifstream a(dir.file("d.csv")), b(dir.file("e.csv"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
  }

  TEST_CASE("nla with a fraction list") {
    sgfb::test::TempDir dir("cli-nla");
    const auto r = run({"nla", "--graph", "sensor", "--n", "64", "--runs", "3", "--fractions",
                        "0.1,0.3", "--out", dir.file("n.json")});
    REQUIRE(r.status == 0);
    std::ifstream in(dir.file("n.json"));
    const auto j = nlohmann::json::parse(in);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["fraction"] == 0.1);
    CHECK(j[1]["runs"].size() == 3);
  }

  TEST_CASE("filter dump and theorem checks") {
    auto r = run({"filter-dump", "--design", "ideal", "--n", "4"});
    CHECK(r.status == 0);
    CHECK(r.out == "i,h0,h1,g0,g1\n0,1,0,1,0\n1,1,0,1,0\n2,0,1,0,1\n3,0,1,0,1\n");
    r = run({"verify-theorem2", "--n", "20", "--seed", "3", "--no-cache"});
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["max_deviation"].get<double>() <= 1e-9);
    r = run({"verify-theorem3", "--graph", "sensor", "--no-cache"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.err)["error"] == "NotBipartite");
  }

  TEST_CASE("passband-compare") {
    sgfb::test::TempDir dir("cli-pb");
    const auto r = run({"passband-compare", "--runs", "4", "--concentrated", "0.4", "--out",
                        dir.file("pb.csv"), "--spectrum-out", dir.file("s.csv")});
    REQUIRE(r.status == 0);
    CHECK(r.out.rfind("passband ideal=", 0) == 0);
    CHECK(count_lines(dir.file("pb.csv")) == 1 + 4 * 3);
    CHECK(count_lines(dir.file("s.csv")) == 101);
  }
}
