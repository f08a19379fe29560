#pragma once

#include <tuple>
#include <vector>

#include "lozenge/exact.hpp"

namespace lozenge {

// Number of plane partitions in an a x b x c box.
Integer macmahon_box(int a, int b, int c);

struct HoleLists {
  std::vector<int> l;  // [a-1] minus {a-k}
  std::vector<int> q;  // [a] minus {a-k+1}
};

HoleLists hole_lists(int a, const std::vector<int>& ks);

// prod_{t=1}^{m} (x+t)^{min(t, m+1-t)}
Integer ascending_descending(const Integer& x, int m);

// Q_{l,q}(x) with n = a - s.
Integer eval_Q(const std::vector<int>& l, const std::vector<int>& q, const Integer& x, int a, int s);
// S_q(x) with n = a - s.
Integer eval_S(const std::vector<int>& q, const Integer& x, int a, int s);

// Centrally symmetric tilings of holed_hexagon(2a, b, ks).
Integer holed_count_even(int a, int b, const std::vector<int>& ks);
// Centrally symmetric tilings of holed_hexagon(2a+1, b, ks).
Integer holed_count_odd(int a, int b, const std::vector<int>& ks);
// Centrally symmetric tilings of cored_hexagon(a, b, ks, x).
Integer cored_count(int a, int b, const std::vector<int>& ks, int x);
// Index list q' of the half region left after splitting cored_hexagon(a, b, ks, x).
std::vector<int> cored_index_list(int a, const std::vector<int>& ks, int x);
// Odd-case product over an index list q with n = |q|, at x = b + a - n.
Integer odd_product(int a, int b, const std::vector<int>& q);

// Free-boundary tilings of d_region(a, b, eps, is).
Integer d_count(int a, int b, int eps, const std::vector<int>& is);

// Strip the forced lozenges caused by a hole touching the boundary (k_1 = 1)
// from holed_hexagon(a, b, ks); repeats until k_1 != 1. No-op otherwise.
std::tuple<int, int, std::vector<int>> reduce_k1(int a, int b, const std::vector<int>& ks);

}  // namespace lozenge
