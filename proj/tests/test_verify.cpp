#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "lozenge/verify.hpp"

using namespace lozenge;

namespace {

CheckParams ab(int a, int b) {
  CheckParams p;
  p.a = a;
  p.b = b;
  return p;
}

bool central_even(const CheckParams& p) { return !p.ks.empty() && p.ks.back() == p.a; }

}  // namespace

TEST_CASE("identity names round trip") {
  for (IdentityId id : all_identities()) CHECK(parse_identity(identity_name(id)) == id);
  CHECK(all_identities().size() == 16);
  CHECK_THROWS_AS(parse_identity("E9_9"), ParameterError);
}

TEST_CASE("product of two reflective classes") {
  IdentityCheck c = check(IdentityId::I1_9, ab(1, 1));
  CHECK(c.verdict);
  CHECK(c.summary() == "3 = 3 × 1 OK");
  const int lhs[][2] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}};
  const char* want[] = {"3", "20", "175", "5", "105", "4116"};
  for (int i = 0; i < 6; ++i) {
    IdentityCheck d = check(IdentityId::I1_9, ab(lhs[i][0], lhs[i][1]));
    CHECK(d.lhs.get_str() == want[i]);
    CHECK(d.verdict);
  }
}

TEST_CASE("squares of the fixed-point counts") {
  IdentityCheck c = check(IdentityId::I1_10, ab(2, 2));
  CHECK(c.verdict);
  CHECK(c.lhs == 9);
  CHECK(c.summary() == "9 = 3^2 OK");
  CHECK(check(IdentityId::I1_11, ab(1, 0)).lhs == 5);
  CHECK(check(IdentityId::I1_11, ab(2, 0)).lhs == 132);
  CHECK(check(IdentityId::I1_12, ab(1, 0)).lhs == 1);
  CHECK(check(IdentityId::I1_12, ab(2, 0)).lhs == 4);
}

TEST_CASE("holed and cored identities hold on small grids") {
  for (IdentityId id : {IdentityId::T2_1_even, IdentityId::T2_1_cored, IdentityId::E3_1,
                        IdentityId::E3_9, IdentityId::E3_10, IdentityId::E3_13, IdentityId::E3_7,
                        IdentityId::E3_12, IdentityId::SQUARE_ODD, IdentityId::FOUR_CLASS}) {
    for (const SweepRow& r : sweep(id, default_grid(id, 2, 2))) {
      CAPTURE(identity_name(id));
      CAPTURE(r.params.str(id));
      CAPTURE(r.error);
      CHECK(r.verdict);
    }
  }
}

TEST_CASE("even formula fails only at the centre") {
  for (IdentityId id : {IdentityId::E3_5, IdentityId::SQUARE_EVEN})
    for (const SweepRow& r : sweep(id, default_grid(id, 3, 2))) {
      CAPTURE(r.params.str(id));
      if (!r.verdict) {
        CHECK(central_even(r.params));
        CHECK(r.error.find("centre") != std::string::npos);
      }
    }
}

TEST_CASE("grids") {
  auto g = parse_grid(IdentityId::T2_1_even, "a=4..4;b=1..2;ks=1,2");
  REQUIRE(g.size() == 2);
  CHECK(g[0].str(IdentityId::T2_1_even) == "a=4;b=1;ks=1,2");
  CHECK(parse_grid(IdentityId::I1_11, "a=1..2").size() == 2);
  CHECK(parse_grid(IdentityId::FOUR_CLASS, "a=1..1;b=1..2;eq=3").size() == 1);
  CHECK(default_grid(IdentityId::E3_9, 1, 1).front().a == 0);
  CHECK_THROWS_AS(parse_grid(IdentityId::I1_9, "a=1..2;ks=1"), ParameterError);
  CHECK_THROWS_AS(parse_grid(IdentityId::I1_9, "z=1"), ParameterError);
  CHECK_THROWS_AS(parse_grid(IdentityId::I1_9, "a=x..2"), ParameterError);
}

TEST_CASE("sweep output is independent of the thread count") {
  auto grid = default_grid(IdentityId::T2_1_even, 4, 2);
  setenv("LOZENGE_THREADS", "1", 1);
  std::ostringstream one;
  write_csv(one, sweep(IdentityId::T2_1_even, grid));
  setenv("LOZENGE_THREADS", "4", 1);
  std::ostringstream four;
  write_csv(four, sweep(IdentityId::T2_1_even, grid));
  unsetenv("LOZENGE_THREADS");
  CHECK(one.str() == four.str());
  CHECK(one.str().rfind("identity,params,lhs,rhs,verdict\n", 0) == 0);
}

TEST_CASE("csv error rows") {
  SweepRow r;
  r.id = IdentityId::E3_5;
  r.params = ab(2, 1);
  r.params.ks = {2};
  r.error = "bad, \"thing\"";
  std::ostringstream out;
  write_csv(out, {r});
  CHECK(out.str() == "identity,params,lhs,rhs,verdict\nE3_5,\"a=2;b=1;ks=2\",error: bad; 'thing',,false\n");
}
