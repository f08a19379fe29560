#include "lozenge/exact.hpp"

#include <mutex>
#include <vector>

namespace lozenge {

Integer factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> table{1};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) table.push_back(table.back() * Integer(table.size()));
  return table[n];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer exact_sqrt(const Integer& n) {
  if (n < 0) throw FormulaError("square root of negative value " + n.get_str());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) throw FormulaError("not a perfect square: " + n.get_str());
  return r;
}

}  // namespace lozenge
