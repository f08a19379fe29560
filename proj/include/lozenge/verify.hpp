#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

enum class IdentityId {
  I1_9,
  I1_10,
  I1_11,
  I1_12,
  T2_1_even,
  T2_1_cored,
  E3_1,
  E3_5,
  E3_7,
  E3_9,
  E3_10,
  E3_12,
  E3_13,
  FOUR_CLASS,
  SQUARE_EVEN,
  SQUARE_ODD,
};

const char* identity_name(IdentityId id);
IdentityId parse_identity(const std::string& s);
std::vector<IdentityId> all_identities();

// Parameters by identity:
//   I1_9, I1_10            hexagon(a, a, 2b)
//   I1_11, I1_12           hexagon(2a, 2a, 2a)
//   T2_1_even, E3_1        holed_hexagon(a, b, ks), any parity of a
//   T2_1_cored, E3_13      cored_hexagon(a, b, ks, x)
//   E3_5, SQUARE_EVEN      holed_hexagon(2a, b, ks)
//   E3_9, E3_10, SQUARE_ODD holed_hexagon(2a+1, b, ks)
//   E3_7, E3_12            d_region(a, b, -1 or 0, is)
//   FOUR_CLASS             identity number eq in 1..4 on box (a, a, 2b) or (2a, 2a, 2a)
struct CheckParams {
  int a = 0, b = 0, x = 0, eq = 0;
  std::vector<int> ks, is;

  std::string str(IdentityId id) const;
};

struct IdentityCheck {
  IdentityId id{};
  CheckParams params;
  Rational lhs;
  Rational rhs;
  // rhs is the product of these; a factor listed twice is a square.
  std::vector<Rational> rhs_factors;
  std::string lhs_source;
  std::string rhs_source;
  bool verdict = false;

  // "lhs = f1 × f2 OK" or "... FAIL".
  std::string summary() const;
};

IdentityCheck check(IdentityId id, const CheckParams& p);

struct SweepRow {
  IdentityId id{};
  CheckParams params;
  std::string lhs, rhs;
  bool verdict = false;
  std::string error;
};

// Every legal parameter choice with a <= max_a and b <= max_b (ks, is and x
// ranging over all legal values). FOUR_CLASS ranges over eq as well.
std::vector<CheckParams> default_grid(IdentityId id, int max_a, int max_b);
// Parses "a=1..3;b=1..2" style grids; ks, is, x, eq default to all legal
// values unless given explicitly as "ks=2,4" (or "ks=" for empty).
std::vector<CheckParams> parse_grid(IdentityId id, const std::string& text);

// Checks run in parallel; the thread count comes from LOZENGE_THREADS,
// defaulting to the hardware concurrency. Row order follows the grid.
std::vector<SweepRow> sweep(IdentityId id, const std::vector<CheckParams>& grid);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace lozenge
