#include "lozenge/formulas.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lozenge {

namespace {

Integer to_integer(Rational r, const char* what) {
  r.canonicalize();
  if (r.get_den() != 1)
    throw FormulaError(std::string(what) + " evaluated to non-integer " + r.get_str());
  if (r < 0) throw FormulaError(std::string(what) + " evaluated to negative " + r.get_str());
  return r.get_num();
}

Integer vandermonde(const std::vector<int>& xs) {
  Integer r = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) r *= xs[j] - xs[i];
  return r;
}

std::vector<int> range_minus(int n, const std::set<int>& drop) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!drop.count(i)) out.push_back(i);
  return out;
}

void check_ks(int a, const std::vector<int>& ks) {
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || ks[i] > a) throw ParameterError("hole index out of range");
    if (i > 0 && ks[i] <= ks[i - 1]) throw ParameterError("ks must be strictly increasing");
  }
}

}  // namespace

Integer macmahon_box(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw ParameterError("box sides must be non-negative");
  Rational r = 1;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
  return to_integer(r, "MacMahon product");
}

HoleLists hole_lists(int a, const std::vector<int>& ks) {
  check_ks(a, ks);
  std::set<int> dl, dq;
  for (int k : ks) {
    dl.insert(a - k);
    dq.insert(a - k + 1);
  }
  return {range_minus(a - 1, dl), range_minus(a, dq)};
}

Integer ascending_descending(const Integer& x, int m) {
  Integer r = 1;
  for (int t = 1; t <= m; ++t) {
    Integer f = x + t;
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), f.get_mpz_t(), std::min(t, m + 1 - t));
    r *= p;
  }
  return r;
}

Integer eval_Q(const std::vector<int>& l, const std::vector<int>& q, const Integer& x, int a,
               int s) {
  const int n = a - s;
  Integer r = ascending_descending(x, 2 * n - 1);
  r *= r;
  for (int i = 1; i <= static_cast<int>(l.size()); ++i)
    for (int j = 1; j <= l[i - 1] - i; ++j) r *= (x - i - j + n) * (x + i + j + n);
  for (int i = 1; i <= static_cast<int>(q.size()); ++i)
    for (int j = 1; j <= q[i - 1] - i; ++j) r *= (x - i - j + n + 1) * (x + i + j + n - 1);
  return r;
}

Integer eval_S(const std::vector<int>& q, const Integer& x, int a, int s) {
  const int n = a - s;
  Integer inner = 1;
  for (int i = 1; i <= static_cast<int>(q.size()); ++i)
    for (int j = 1; j <= q[i - 1] - i; ++j) inner *= (x - i - j + n + 1) * (x + i + j + n);
  Integer r = ascending_descending(x, 2 * n) * inner;
  return r * r;
}

Integer holed_count_even(int a, int b, const std::vector<int>& ks) {
  if (a < 1 || b < 1) throw ParameterError("a and b must be positive");
  check_ks(a, ks);
  if (!ks.empty() && ks.front() == 1) {
    auto [a2, b2, ks2] = reduce_k1(2 * a, b, ks);
    if (a2 == 0) return 1;
    return holed_count_even(a2 / 2, b2, ks2);
  }
  const int s = static_cast<int>(ks.size());
  HoleLists h = hole_lists(a, ks);
  // The product needs |l| = |q| - 1, which fails when k_s = a (holes meeting
  // at the centre).
  if (h.l.size() + 1 != h.q.size())
    throw FormulaError("even holed-hexagon formula does not cover a hole at the centre");
  Rational r = 2;
  for (int li : h.l) r /= factorial(2 * li - 1);
  for (int qi : h.q) r /= factorial(2 * qi);
  r *= vandermonde(h.l) * vandermonde(h.q);
  for (int li : h.l)
    for (int qj : h.q) r /= li + qj;
  r *= eval_Q(h.l, h.q, b + s, a, s);
  return to_integer(r, "even holed-hexagon formula");
}

Integer odd_product(int a, int b, const std::vector<int>& q) {
  const int n = static_cast<int>(q.size());
  Rational r = 1;
  for (int qi : q) r /= factorial(2 * qi - 1) * factorial(2 * qi);
  Integer v = vandermonde(q);
  r *= v * v;
  for (int qi : q)
    for (int qj : q) r /= qi + qj;
  r *= eval_S(q, b + a - n, a, a - n);
  return to_integer(r, "odd holed-hexagon formula");
}

Integer holed_count_odd(int a, int b, const std::vector<int>& ks) {
  if (a < 0 || b < 1) throw ParameterError("a must be non-negative and b positive");
  check_ks(a, ks);
  if (!ks.empty() && ks.front() == 1) {
    auto [a2, b2, ks2] = reduce_k1(2 * a + 1, b, ks);
    return holed_count_odd(a2 / 2, b2, ks2);
  }
  return odd_product(a, b, hole_lists(a, ks).q);
}

std::vector<int> cored_index_list(int a, const std::vector<int>& ks, int x) {
  if (a < 1 || x < 1 || x > a) throw ParameterError("core parameter x must satisfy 1 <= x <= a");
  const int half = a - 1;
  std::set<int> drop;
  for (int i = 1; i <= x - 1; ++i) drop.insert(i);
  for (int k : ks) {
    if (k < 1 || k > a - x) throw ParameterError("core collides with hole k=" + std::to_string(k));
    drop.insert(half - k + 1);
  }
  return range_minus(half, drop);
}

Integer cored_count(int a, int b, const std::vector<int>& ks, int x) {
  if (b < 1) throw ParameterError("b must be positive");
  return odd_product(a - 1, b, cored_index_list(a, ks, x));
}

Integer d_count(int a, int b, int eps, const std::vector<int>& is) {
  if (eps != -1 && eps != 0) throw ParameterError("eps must be -1 or 0");
  for (std::size_t i = 0; i < is.size(); ++i) {
    if (is[i] < 1 || is[i] > a) throw ParameterError("index out of range");
    if (i > 0 && is[i] <= is[i - 1]) throw ParameterError("is must be strictly increasing");
  }
  Rational r = 1;
  for (int i : is)
    r *= eps == 0 ? binomial(a + b + i, 2 * i) : binomial(a + b + i - 1, 2 * i - 1);
  for (std::size_t j = 0; j < is.size(); ++j)
    for (std::size_t k = j + 1; k < is.size(); ++k)
      r *= Rational(is[k] - is[j], is[j] + is[k] + eps);
  return to_integer(r, "free-boundary formula");
}

std::tuple<int, int, std::vector<int>> reduce_k1(int a, int b, const std::vector<int>& ks) {
  std::vector<int> cur = ks;
  while (!cur.empty() && cur.front() == 1) {
    a -= 2;
    b += 1;
    std::vector<int> next;
    for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - 1);
    cur = std::move(next);
  }
  return {a, b, cur};
}

}  // namespace lozenge
