#include "doctest.h"
#include "lozenge/counting.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/lattice.hpp"

using namespace lozenge;

namespace {

// All increasing lists drawn from [1, n], with at most `cap` entries.
std::vector<std::vector<int>> subsets(int n, std::size_t cap = 99) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    if (s.size() <= cap) out.push_back(s);
  }
  return out;
}

Integer rot180(const Region& r) { return count_symmetric_tilings(r, {SymKind::Rot180}); }

}  // namespace

TEST_CASE("hole lists") {
  HoleLists h = hole_lists(5, {2, 4});
  CHECK(h.l == std::vector<int>{2, 4});
  CHECK(h.q == std::vector<int>{1, 3, 5});
  h = hole_lists(4, {3});
  CHECK(h.l == std::vector<int>{2, 3});
  CHECK(h.q == std::vector<int>{1, 3, 4});
  h = hole_lists(4, {});
  CHECK(h.l == std::vector<int>{1, 2, 3});
  CHECK(h.q == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("ascending-descending product") {
  CHECK(ascending_descending(0, 0) == 1);
  CHECK(ascending_descending(0, 1) == 1);
  CHECK(ascending_descending(0, 3) == 1 * 2 * 2 * 3);
  CHECK(ascending_descending(1, 4) == 2 * 3 * 3 * 4 * 4 * 5);
}

TEST_CASE("frozen formula values") {
  CHECK(holed_count_even(5, 4, {2, 4}) == Integer("205230744576"));
  CHECK(holed_count_odd(3, 3, {2}) == 777924);
  CHECK(cored_count(4, 3, {2}, 1) == 777924);
  CHECK(d_count(5, 4, -1, {1, 3, 5}) == 453024);
  CHECK(d_count(3, 3, 0, {1, 3}) == 882);
}

TEST_CASE("even holed formula matches the quotient count off centre") {
  int central_refusals = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const auto& ks : subsets(a)) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(ks.size());
        const bool central = !ks.empty() && ks.back() == a;
        Integer f;
        try {
          f = holed_count_even(a, b, ks);
        } catch (const FormulaError&) {
          CHECK(central);
          ++central_refusals;
          continue;
        }
        CHECK(f == rot180(holed_hexagon(2 * a, b, ks)));
      }
  CHECK(central_refusals > 0);
  CHECK_THROWS_AS(holed_count_even(2, 1, {2}), FormulaError);
}

TEST_CASE("odd holed formula matches the quotient count") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b)
      for (const auto& ks : subsets(a)) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(holed_count_odd(a, b, ks) == rot180(holed_hexagon(2 * a + 1, b, ks)));
      }
}

TEST_CASE("cored formula matches the quotient count") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int x = 1; x <= a; ++x)
        for (const auto& ks : subsets(a - 1)) {
          Region r;
          try {
            r = cored_hexagon(a, b, ks, x);
          } catch (const ParameterError&) {
            continue;
          }
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(x);
          CHECK(cored_count(a, b, ks, x) == rot180(r));
        }
}

TEST_CASE("free-boundary formula matches the exhaustive count") {
  for (int eps : {-1, 0})
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 2; ++b)
        for (auto is : subsets(a - 1)) {
          is.push_back(a);
          CAPTURE(eps);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(d_count(a, b, eps, is) == count_tilings_free(d_region(a, b, eps, is)));
        }
}

TEST_CASE("reduction of a boundary hole") {
  auto [a, b, ks] = reduce_k1(7, 3, {1, 3});
  CHECK(a < 7);
  CHECK((ks.empty() || ks.front() != 1));
  // Forced lozenges do not change the symmetric count.
  CHECK(rot180(holed_hexagon(a, b, ks)) == rot180(holed_hexagon(7, 3, {1, 3})));
  auto same = reduce_k1(7, 3, {2});
  CHECK(std::get<0>(same) == 7);
  CHECK(std::get<2>(same) == std::vector<int>{2});
}

TEST_CASE("formulas reject bad parameters") {
  CHECK_THROWS_AS(holed_count_even(0, 1, {}), ParameterError);
  CHECK_THROWS_AS(holed_count_even(2, 1, {3}), ParameterError);
  CHECK_THROWS_AS(d_count(2, 1, 1, {2}), ParameterError);
}
