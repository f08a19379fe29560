#pragma once

#include <cstddef>
#include <vector>

#include "lozenge/duality.hpp"
#include "lozenge/exact.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

struct OracleLimits {
  int max_vertices = 64;
  std::size_t max_states = 20'000'000;
};

// Exhaustive count: branch on a vertex of least remaining degree, memoize on
// the set of unmatched vertices. Loops are rejected.
Integer count_matchings_oracle(const MatchGraph& g, const OracleLimits& lim = {});
// Same search summing products of weights. A loop at v lets v be covered on
// its own, contributing the loop weight.
Rational mgf_oracle(const MatchGraph& g, const OracleLimits& lim = {});

// Kasteleyn orientation on the stored embedding followed by an exact
// determinant. Works per connected component.
Rational count_matchings_pfaffian(const MatchGraph& g);
Integer count_matchings_pfaffian_int(const MatchGraph& g);

// Kasteleyn signs: +1 if edge e is oriented u->v, -1 otherwise.
std::vector<int> kasteleyn_orientation(const MatchGraph& g);

// Determinant of an integer matrix by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

Integer count_tilings(const Region& r);

enum class SymMethod { Auto, Enumerate, Quotient };

// Tilings fixed by every element of the group the kinds generate.
Integer count_symmetric_tilings(const Region& r, const std::vector<SymKind>& gens,
                                SymMethod method = SymMethod::Auto,
                                std::size_t max_states = 20'000'000);

// Tilings of a region whose free edges may each be crossed by a lozenge
// sticking out halfway.
Integer count_tilings_free(const Region& r, const OracleLimits& lim = {});

// A single perfect matching, as edge indices; empty if none exists.
std::vector<int> find_matching(const MatchGraph& g);

}  // namespace lozenge
