#include <random>

#include "doctest.h"
#include "lozenge/counting.hpp"
#include "lozenge/duality.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/lattice.hpp"

using namespace lozenge;

namespace {

// Connected induced subgraph grown from a random vertex.
MatchGraph random_piece(const MatchGraph& g, std::mt19937& rng, int target) {
  auto adj = g.adjacency();
  std::vector<char> keep(g.num_vertices(), 0);
  std::vector<int> frontier{std::uniform_int_distribution<int>(0, g.num_vertices() - 1)(rng)};
  keep[frontier[0]] = 1;
  int taken = 1;
  while (taken < target && !frontier.empty()) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    int v = frontier[i];
    std::vector<int> fresh;
    for (int w : adj[v])
      if (!keep[w]) fresh.push_back(w);
    if (fresh.empty()) {
      frontier.erase(frontier.begin() + static_cast<long>(i));
      continue;
    }
    int w = fresh[std::uniform_int_distribution<std::size_t>(0, fresh.size() - 1)(rng)];
    keep[w] = 1;
    frontier.push_back(w);
    ++taken;
  }
  return g.induced(keep);
}

}  // namespace

TEST_CASE("MacMahon box formula") {
  CHECK(macmahon_box(1, 1, 1) == 2);
  CHECK(macmahon_box(2, 2, 2) == 20);
  CHECK(macmahon_box(3, 3, 3) == 980);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CHECK(macmahon_box(a, b, c) == macmahon_box(b, c, a));
        CHECK(count_tilings(hexagon(a, b, c)) == macmahon_box(a, b, c));
        CHECK(count_matchings_oracle(dual_graph(hexagon(a, b, c))) == macmahon_box(a, b, c));
      }
}

TEST_CASE("oracle and Pfaffian agree on random pieces") {
  std::mt19937 rng(12345);
  MatchGraph big = dual_graph(holed_hexagon(8, 2, {2, 4}));
  for (int t = 0; t < 60; ++t) {
    MatchGraph g = random_piece(big, rng, 6 + t % 30);
    CHECK(Rational(count_matchings_oracle(g)) == count_matchings_pfaffian(g));
  }
}

TEST_CASE("weighted Pfaffian matches the weighted oracle") {
  MatchGraph g = rbar_dual_graph(rbar_region({}, {1}, 1));
  CHECK(count_matchings_pfaffian(g) == mgf_oracle(g));
  MatchGraph r = rbar_dual_graph(rbar_region({1}, {1, 2}, 1));
  CHECK(count_matchings_pfaffian(r) == mgf_oracle(r));
}

TEST_CASE("frozen tiling counts") {
  CHECK(count_tilings(hexagon(1, 1, 2)) == 3);
  CHECK(count_tilings(holed_hexagon(10, 4, {2, 4})) == Integer("60385889567489303661712"));
  CHECK(count_tilings(holed_hexagon(7, 3, {2})) == Integer("2742555744500"));
  CHECK(count_tilings(cored_hexagon(4, 3, {2}, 1)) == Integer("662440977900"));
  CHECK(count_tilings(rbar_region({}, {1}, 1)) == 3);
}

TEST_CASE("symmetric counts by quotient and by enumeration") {
  Region h = hexagon(2, 2, 2);
  CHECK(count_symmetric_tilings(h, {SymKind::Rot60}) == 1);
  CHECK(count_symmetric_tilings(h, {SymKind::Rot120}) == 5);
  for (auto gens : std::vector<std::vector<SymKind>>{{SymKind::Rot180},
                                                     {SymKind::Rot120},
                                                     {SymKind::Rot60},
                                                     {SymKind::ReflV},
                                                     {SymKind::ReflH},
                                                     {SymKind::Rot180, SymKind::ReflV}}) {
    Integer e = count_symmetric_tilings(h, gens, SymMethod::Enumerate);
    CHECK(e == count_symmetric_tilings(h, gens, SymMethod::Auto));
  }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b) {
      Region r = hexagon(a, a, 2 * b);
      CHECK(count_symmetric_tilings(r, {SymKind::Rot180}, SymMethod::Quotient) ==
            count_symmetric_tilings(r, {SymKind::Rot180}, SymMethod::Enumerate));
    }
  CHECK(count_symmetric_tilings(holed_hexagon(10, 4, {2, 4}), {SymKind::Rot180}) ==
        Integer("205230744576"));
  CHECK(count_symmetric_tilings(holed_hexagon(7, 3, {2}), {SymKind::Rot180}) == 777924);
  CHECK_THROWS_AS(count_symmetric_tilings(h, {SymKind::ReflV}, SymMethod::Quotient), UnsupportedActionError);
  CHECK_THROWS_AS(count_symmetric_tilings(hexagon(1, 2, 3), {SymKind::Rot120}), SymmetryAbsentError);
}

TEST_CASE("free boundary counts") {
  CHECK(count_tilings_free(d_region(5, 4, -1, {1, 3, 5})) == 453024);
  CHECK(count_tilings_free(d_region(3, 3, 0, {1, 3})) == 882);
}

TEST_CASE("exhaustive search respects its budget") {
  CHECK_THROWS_AS(count_matchings_oracle(dual_graph(hexagon(4, 4, 4))), BudgetExceededError);
  OracleLimits tight;
  tight.max_states = 10;
  CHECK_THROWS_AS(count_matchings_oracle(dual_graph(hexagon(3, 3, 2)), tight), BudgetExceededError);
}

TEST_CASE("perfect matching search") {
  MatchGraph g = dual_graph(holed_hexagon(8, 2, {2}));
  auto m = find_matching(g);
  CHECK(static_cast<int>(m.size()) * 2 == g.num_vertices());
  std::vector<int> cover(g.num_vertices(), 0);
  for (int e : m) {
    ++cover[g.edges()[e].u];
    ++cover[g.edges()[e].v];
  }
  for (int c : cover) CHECK(c == 1);
}

TEST_CASE("Bareiss determinant") {
  CHECK(bareiss_determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
}
