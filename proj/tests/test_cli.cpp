#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lozenge/lattice.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LOZENGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("count") {
  Run r = run("count --family hexagon --a 1 --b 1 --c 2");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run("count --family holed --a 10 --b 4 --ks 2,4").out == "60385889567489303661712\n");
  CHECK(run("count --family dregion --a 3 --b 3 --eps 0 --is 1,3").out == "882\n");
}

TEST_CASE("json output") {
  Run r = run("count --family hexagon --a 2 --b 2 --c 2 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "count");
  CHECK(j["result"] == "20");
  CHECK(j["params"]["a"] == 2);

  auto v = nlohmann::json::parse(run("verify --id I1_9 --a 1 --b 1 --json").out);
  CHECK(v["result"]["lhs"] == "3");
  CHECK(v["result"]["verdict"] == true);
}

TEST_CASE("symmetric counts") {
  CHECK(run("count-sym --family hexagon --a 2 --b 2 --c 2 --sym rot120").out == "5\n");
  CHECK(run("count-sym --family hexagon --a 2 --b 2 --c 2 --sym rot60 --method enumerate").out ==
        "1\n");
  CHECK(run("count-sym --family holed --a 7 --b 3 --ks 2 --sym rot180").out == "777924\n");
}

TEST_CASE("verify and sweep") {
  Run r = run("verify --id I1_9 --a 1 --b 1");
  CHECK(r.code == 0);
  CHECK(r.out == "3 = 3 × 1 OK\n");
  Run s = run("sweep --id I1_10 --grid \"a=1..3;b=1..2\"");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("identity,params,lhs,rhs,verdict\nI1_10,\"a=1;b=1\",1,1,true\n", 0) == 0);
  CHECK(s.out == run("sweep --id I1_10 --grid \"a=1..3;b=1..2\"").out);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("count --nonsense").code == 2);
  CHECK(run("count --family holed --a 4 --b 1 --ks 3").code == 2);
  CHECK(run("count-sym --family hexagon --a 1 --b 2 --c 3 --sym rot120").code == 2);
  CHECK(run("verify --id NOPE").code == 2);
  CHECK(run("verify --id E3_5 --a 2 --b 1 --ks 2").code == 1);
  CHECK(run("count --region /nonexistent/file.json").code == 2);
}

TEST_CASE("region files") {
  const std::string path = "cli_test_region.json";
  {
    std::ofstream f(path);
    f << lozenge::serialize_region(lozenge::holed_hexagon(7, 3, {2}));
  }
  CHECK(run("count --region " + path).out == "2742555744500\n");
  {
    std::ofstream f(path);
    f << "{}";
  }
  CHECK(run("count --region " + path).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("graph exports and pictures") {
  Run q = run("quotient --family holed --a 10 --b 4 --ks 2,4 --sym rot180");
  CHECK(q.code == 0);
  CHECK_FALSE(q.out.empty());
  Run s = run("split --family holed --a 10 --b 4 --ks 2,4");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("# multiplier 2^3\n", 0) == 0);
  Run l = run("split --family holed --a 7 --b 3 --ks 2");
  CHECK(l.out.rfind("# multiplier 2^2\n# vertices 128\n", 0) == 0);

  for (const char* overlay : {"none", "tiling", "dual", "quotient"}) {
    Run r = run(std::string("render --family holed --a 6 --b 1 --ks 2 --overlay ") + overlay);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out == run(std::string("render --family holed --a 6 --b 1 --ks 2 --overlay ") + overlay).out);
  }
  CHECK(run("render --family hexagon --a 1 --b 1 --c 1 --overlay bogus").code == 2);
}
