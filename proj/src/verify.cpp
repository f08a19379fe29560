#include "lozenge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "lozenge/counting.hpp"
#include "lozenge/duality.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

namespace {

struct IdName {
  IdentityId id;
  const char* name;
};

constexpr IdName kIds[] = {
    {IdentityId::I1_9, "I1_9"},
    {IdentityId::I1_10, "I1_10"},
    {IdentityId::I1_11, "I1_11"},
    {IdentityId::I1_12, "I1_12"},
    {IdentityId::T2_1_even, "T2_1_even"},
    {IdentityId::T2_1_cored, "T2_1_cored"},
    {IdentityId::E3_1, "E3_1"},
    {IdentityId::E3_5, "E3_5"},
    {IdentityId::E3_7, "E3_7"},
    {IdentityId::E3_9, "E3_9"},
    {IdentityId::E3_10, "E3_10"},
    {IdentityId::E3_12, "E3_12"},
    {IdentityId::E3_13, "E3_13"},
    {IdentityId::FOUR_CLASS, "FOUR_CLASS"},
    {IdentityId::SQUARE_EVEN, "SQUARE_EVEN"},
    {IdentityId::SQUARE_ODD, "SQUARE_ODD"},
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

Integer pow2(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// The two sides of every check go through disjoint counting paths: orbit
// search, quotient plus Pfaffian, split plus weighted search, or a closed form.
Integer enumerated(const Region& r, std::vector<SymKind> gens) {
  return count_symmetric_tilings(r, gens, SymMethod::Enumerate);
}

Integer via_quotient(const Region& r, SymKind rot) {
  return count_symmetric_tilings(r, {rot}, SymMethod::Quotient);
}

MatchGraph rot180_quotient(const Region& r) {
  return quotient_graph(dual_graph(r), symmetry(r, SymKind::Rot180));
}

// Weighted count of the half graph left by the split of the 180-degree
// quotient, times the loop weight when an odd quotient loses its loop vertex.
Rational split_side(const Region& r, int& multiplier_log2) {
  MatchGraph q = rot180_quotient(r);
  Rational factor = 1;
  if (!q.loops().empty()) {
    auto [h, w] = remove_loop_vertex(q);
    q = std::move(h);
    factor = w;
  }
  FactorSplit fs = factorization_split(q, SymKind::ReflV);
  multiplier_log2 = fs.multiplier_log2;
  OracleLimits lim;
  lim.max_vertices = std::max(lim.max_vertices, fs.subgraph.num_vertices() + 1);
  return factor * mgf_oracle(fs.subgraph, lim);
}

std::vector<std::vector<int>> subsets(int lo, int hi) {
  std::vector<std::vector<int>> out;
  const int n = std::max(0, hi - lo + 1);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(lo + i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<int> d_indices(int a, const std::vector<int>& ks) {
  return hole_lists(a, ks).q;
}

bool holed_family(IdentityId id) {
  return id == IdentityId::T2_1_even || id == IdentityId::E3_1;
}
bool even_family(IdentityId id) {
  return id == IdentityId::E3_5 || id == IdentityId::SQUARE_EVEN;
}
bool odd_family(IdentityId id) {
  return id == IdentityId::E3_9 || id == IdentityId::E3_10 || id == IdentityId::SQUARE_ODD;
}
bool cored_family(IdentityId id) {
  return id == IdentityId::T2_1_cored || id == IdentityId::E3_13;
}
bool d_family(IdentityId id) { return id == IdentityId::E3_7 || id == IdentityId::E3_12; }

// Largest legal hole index for the given identity and a.
int max_k(IdentityId id, int a) {
  if (holed_family(id)) return a / 2;
  return a;  // H_{2a} and H_{2a+1} both allow k <= a
}

}  // namespace

const char* identity_name(IdentityId id) {
  for (const auto& e : kIds)
    if (e.id == id) return e.name;
  return "?";
}

IdentityId parse_identity(const std::string& s) {
  for (const auto& e : kIds)
    if (s == e.name) return e.id;
  throw ParameterError("unknown identity '" + s + "'");
}

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  for (const auto& e : kIds) out.push_back(e.id);
  return out;
}

std::string CheckParams::str(IdentityId id) const {
  std::string s;
  if (id == IdentityId::FOUR_CLASS) s += "eq=" + std::to_string(eq) + ";";
  s += "a=" + std::to_string(a);
  const bool uses_b = !(id == IdentityId::I1_11 || id == IdentityId::I1_12 ||
                        (id == IdentityId::FOUR_CLASS && eq >= 3));
  if (uses_b) s += ";b=" + std::to_string(b);
  if (holed_family(id) || even_family(id) || odd_family(id) || cored_family(id))
    s += ";ks=" + join(ks);
  if (cored_family(id)) s += ";x=" + std::to_string(x);
  if (d_family(id)) s += ";is=" + join(is);
  return s;
}

std::string IdentityCheck::summary() const {
  std::string s = lhs.get_str() + " = ";
  if (rhs_factors.size() == 2 && rhs_factors[0] == rhs_factors[1]) {
    s += rhs_factors[0].get_str() + "^2";
  } else if (rhs_factors.empty()) {
    s += rhs.get_str();
  } else {
    for (std::size_t i = 0; i < rhs_factors.size(); ++i)
      s += (i ? " × " : "") + rhs_factors[i].get_str();
  }
  return s + (verdict ? " OK" : " FAIL");
}

IdentityCheck check(IdentityId id, const CheckParams& p) {
  IdentityCheck c;
  c.id = id;
  c.params = p;
  auto square = [&](const Integer& v) { c.rhs_factors = {Rational(v), Rational(v)}; };

  switch (id) {
    case IdentityId::I1_9: {
      Region h = hexagon(p.a, p.a, 2 * p.b);
      c.lhs = Rational(count_tilings(h));
      // Listed as M_| x M_-, the order of S x TC.
      c.rhs_factors = {Rational(enumerated(h, {SymKind::ReflV})),
                       Rational(enumerated(h, {SymKind::ReflH}))};
      c.lhs_source = "pfaffian";
      c.rhs_source = "orbit search (reflv) x orbit search (reflh)";
      break;
    }
    case IdentityId::I1_10: {
      Region h = hexagon(p.a, p.a, 2 * p.b);
      c.lhs = Rational(via_quotient(h, SymKind::Rot180));
      square(enumerated(h, {SymKind::Rot180, SymKind::ReflV}));
      c.lhs_source = "quotient by rot180 + pfaffian";
      c.rhs_source = "orbit search (rot180, reflv), squared";
      break;
    }
    case IdentityId::I1_11: {
      Region h = hexagon(2 * p.a, 2 * p.a, 2 * p.a);
      c.lhs = Rational(via_quotient(h, SymKind::Rot120));
      c.rhs_factors = {Rational(enumerated(h, {SymKind::Rot120, SymKind::ReflH})),
                       Rational(enumerated(h, {SymKind::Rot120, SymKind::ReflV}))};
      c.lhs_source = "quotient by rot120 + pfaffian";
      c.rhs_source = "orbit search (rot120, reflh) x orbit search (rot120, reflv)";
      break;
    }
    case IdentityId::I1_12: {
      Region h = hexagon(2 * p.a, 2 * p.a, 2 * p.a);
      c.lhs = Rational(via_quotient(h, SymKind::Rot60));
      square(enumerated(h, {SymKind::Rot60, SymKind::ReflV}));
      c.lhs_source = "quotient by rot60 + pfaffian";
      c.rhs_source = "orbit search (rot60, reflv), squared";
      break;
    }
    case IdentityId::T2_1_even:
    case IdentityId::T2_1_cored: {
      Region h = id == IdentityId::T2_1_even ? holed_hexagon(p.a, p.b, p.ks)
                                             : cored_hexagon(p.a, p.b, p.ks, p.x);
      c.lhs = Rational(via_quotient(h, SymKind::Rot180));
      square(enumerated(h, {SymKind::Rot180, SymKind::ReflV}));
      c.lhs_source = "quotient by rot180 + pfaffian";
      c.rhs_source = "orbit search (rot180, reflv), squared";
      break;
    }
    case IdentityId::E3_1: {
      Region h = holed_hexagon(p.a, p.b, p.ks);
      c.lhs = Rational(enumerated(h, {SymKind::Rot180}));
      const int power = p.a / 2 - static_cast<int>(p.ks.size());
      int m = 0;
      Rational half = split_side(h, m);
      if (m != power)
        throw ContractError("split left " + std::to_string(m) + " half-weight edges, expected " +
                            std::to_string(power));
      c.rhs = Rational(pow2(power)) * half;
      c.lhs_source = "orbit search (rot180)";
      c.rhs_source = "2^(a-s) x weighted count of the split half";
      break;
    }
    case IdentityId::E3_5: {
      c.lhs = Rational(holed_count_even(p.a, p.b, p.ks));
      c.rhs = Rational(via_quotient(holed_hexagon(2 * p.a, p.b, p.ks), SymKind::Rot180));
      c.lhs_source = "even closed form";
      c.rhs_source = "quotient by rot180 + pfaffian";
      break;
    }
    case IdentityId::E3_7:
    case IdentityId::E3_12: {
      const int eps = id == IdentityId::E3_7 ? -1 : 0;
      c.lhs = Rational(d_count(p.a, p.b, eps, p.is));
      c.rhs = Rational(count_tilings_free(d_region(p.a, p.b, eps, p.is)));
      c.lhs_source = "free-boundary closed form";
      c.rhs_source = "free-boundary oracle";
      break;
    }
    case IdentityId::E3_9: {
      c.lhs = Rational(via_quotient(holed_hexagon(2 * p.a + 1, p.b, p.ks), SymKind::Rot180));
      auto [a2, b2, ks2] = reduce_k1(2 * p.a + 1, p.b, p.ks);
      const int a = a2 / 2;
      const auto q = hole_lists(a, ks2).q;
      Rational r = 1;
      if (!q.empty()) {
        MatchGraph g = rbar_dual_graph(rbar_region(q, q, b2));
        OracleLimits lim;
        lim.max_vertices = std::max(lim.max_vertices, g.num_vertices() + 1);
        r = mgf_oracle(g, lim);
      }
      c.rhs = Rational(pow2(static_cast<int>(q.size()))) * r;
      c.lhs_source = "quotient by rot180 + pfaffian";
      c.rhs_source = "2^(a-s) x weighted count of the rbar region";
      break;
    }
    case IdentityId::E3_10: {
      c.lhs = Rational(holed_count_odd(p.a, p.b, p.ks));
      c.rhs = Rational(via_quotient(holed_hexagon(2 * p.a + 1, p.b, p.ks), SymKind::Rot180));
      c.lhs_source = "odd closed form";
      c.rhs_source = "quotient by rot180 + pfaffian";
      break;
    }
    case IdentityId::E3_13: {
      c.lhs = Rational(cored_count(p.a, p.b, p.ks, p.x));
      c.rhs = Rational(via_quotient(cored_hexagon(p.a, p.b, p.ks, p.x), SymKind::Rot180));
      c.lhs_source = "cored closed form";
      c.rhs_source = "quotient by rot180 + pfaffian";
      break;
    }
    case IdentityId::SQUARE_EVEN:
    case IdentityId::SQUARE_ODD: {
      const bool even = id == IdentityId::SQUARE_EVEN;
      c.lhs = Rational(even ? holed_count_even(p.a, p.b, p.ks) : holed_count_odd(p.a, p.b, p.ks));
      auto [a2, b2, ks2] = reduce_k1(even ? 2 * p.a : 2 * p.a + 1, p.b, p.ks);
      const int a = a2 / 2;
      const auto is = d_indices(a, ks2);
      square(is.empty() ? Integer(1) : d_count(a, b2, even ? -1 : 0, is));
      c.lhs_source = even ? "even closed form" : "odd closed form";
      c.rhs_source = "free-boundary closed form, squared";
      break;
    }
    case IdentityId::FOUR_CLASS: {
      const bool box = p.eq <= 2;
      Region h = box ? hexagon(p.a, p.a, 2 * p.b) : hexagon(2 * p.a, 2 * p.a, 2 * p.a);
      switch (p.eq) {
        case 1:  // P = S TC
          c.lhs = Rational(enumerated(h, {}));
          c.rhs_factors = {Rational(enumerated(h, {SymKind::ReflV})),
                           Rational(enumerated(h, {SymKind::ReflH}))};
          c.lhs_source = "P";
          c.rhs_source = "S x TC";
          break;
        case 2:  // SC = SSC^2
          c.lhs = Rational(enumerated(h, {SymKind::Rot180}));
          square(enumerated(h, {SymKind::Rot180, SymKind::ReflV}));
          c.lhs_source = "SC";
          c.rhs_source = "SSC^2";
          break;
        case 3:  // CS = TS CSTC
          c.lhs = Rational(enumerated(h, {SymKind::Rot120}));
          c.rhs_factors = {Rational(enumerated(h, {SymKind::Rot120, SymKind::ReflV})),
                           Rational(enumerated(h, {SymKind::Rot120, SymKind::ReflH}))};
          c.lhs_source = "CS";
          c.rhs_source = "TS x CSTC";
          break;
        case 4:  // CSSC = TSSC^2
          c.lhs = Rational(enumerated(h, {SymKind::Rot60}));
          square(enumerated(h, {SymKind::Rot60, SymKind::ReflV}));
          c.lhs_source = "CSSC";
          c.rhs_source = "TSSC^2";
          break;
        default:
          throw ParameterError("eq must be 1, 2, 3 or 4");
      }
      break;
    }
  }
  if (!c.rhs_factors.empty()) {
    c.rhs = 1;
    for (const Rational& f : c.rhs_factors) c.rhs *= f;
  }
  c.verdict = c.lhs == c.rhs;
  return c;
}

std::vector<CheckParams> default_grid(IdentityId id, int max_a, int max_b) {
  std::vector<CheckParams> out;
  const int a_lo = odd_family(id) ? 0 : 1;
  for (int a = a_lo; a <= max_a; ++a) {
    for (int b = 1; b <= max_b; ++b) {
      CheckParams p;
      p.a = a;
      p.b = b;
      if (id == IdentityId::I1_11 || id == IdentityId::I1_12) {
        p.b = 0;
        out.push_back(p);
        break;
      }
      if (id == IdentityId::FOUR_CLASS) {
        for (int eq = 1; eq <= 4; ++eq) {
          if (eq >= 3 && b > 1) continue;
          CheckParams e = p;
          e.eq = eq;
          if (eq >= 3) e.b = 0;
          out.push_back(e);
        }
        continue;
      }
      if (d_family(id)) {
        // The free-boundary region needs a among the indices (k_1 != 1).
        for (auto& s : subsets(1, a - 1)) {
          s.push_back(a);
          p.is = s;
          out.push_back(p);
        }
        continue;
      }
      if (cored_family(id)) {
        for (int x = 1; x <= a; ++x)
          for (const auto& s : subsets(1, std::min(a - 1, a - x))) {
            p.x = x;
            p.ks = s;
            out.push_back(p);
          }
        continue;
      }
      if (id == IdentityId::I1_9 || id == IdentityId::I1_10) {
        out.push_back(p);
        continue;
      }
      for (const auto& s : subsets(1, max_k(id, a))) {
        p.ks = s;
        out.push_back(p);
      }
    }
  }
  return out;
}

namespace {

std::pair<int, int> parse_range(const std::string& v) {
  try {
    auto dots = v.find("..");
    if (dots == std::string::npos) {
      int x = std::stoi(v);
      return {x, x};
    }
    return {std::stoi(v.substr(0, dots)), std::stoi(v.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParameterError("bad range '" + v + "'");
  }
}

std::vector<int> parse_list(const std::string& v) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParameterError("bad list entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<CheckParams> parse_grid(IdentityId id, const std::string& text) {
  std::pair<int, int> ar{1, 0}, br{1, 1}, xr{0, -1}, er{0, -1};
  std::optional<std::vector<int>> ks, is;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    auto eqpos = part.find('=');
    if (eqpos == std::string::npos) throw ParameterError("grid entry '" + part + "' lacks '='");
    const std::string key = part.substr(0, eqpos), val = part.substr(eqpos + 1);
    if (key == "a") ar = parse_range(val);
    else if (key == "b") br = parse_range(val);
    else if (key == "x") xr = parse_range(val);
    else if (key == "eq") er = parse_range(val);
    else if (key == "ks") ks = parse_list(val);
    else if (key == "is") is = parse_list(val);
    else throw ParameterError("unknown grid key '" + key + "'");
  }
  std::vector<CheckParams> out;
  for (const CheckParams& p : default_grid(id, ar.second, br.second)) {
    if (p.a < ar.first || (p.b != 0 && p.b < br.first)) continue;
    if (ks && p.ks != *ks) continue;
    if (is && p.is != *is) continue;
    if (xr.first <= xr.second && (p.x < xr.first || p.x > xr.second)) continue;
    if (er.first <= er.second && (p.eq < er.first || p.eq > er.second)) continue;
    out.push_back(p);
  }
  if (ks && !holed_family(id) && !even_family(id) && !odd_family(id) && !cored_family(id))
    throw ParameterError("ks does not apply to this identity");
  if (is && !d_family(id)) throw ParameterError("is does not apply to this identity");
  return out;
}

std::vector<SweepRow> sweep(IdentityId id, const std::vector<CheckParams>& grid) {
  std::vector<SweepRow> rows(grid.size());
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LOZENGE_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) threads = static_cast<unsigned>(t);
  }
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, grid.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      SweepRow& row = rows[i];
      row.id = id;
      row.params = grid[i];
      try {
        IdentityCheck c = check(id, grid[i]);
        row.lhs = c.lhs.get_str();
        row.rhs = c.rhs.get_str();
        row.verdict = c.verdict;
      } catch (const std::exception& e) {
        row.error = e.what();
        row.verdict = false;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "identity,params,lhs,rhs,verdict\n";
  for (const SweepRow& r : rows) {
    out << identity_name(r.id) << ",\"" << r.params.str(r.id) << "\",";
    if (r.error.empty()) {
      out << r.lhs << ',' << r.rhs << ',' << (r.verdict ? "true" : "false") << '\n';
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << "error: " << msg << ",,false\n";
    }
  }
}

}  // namespace lozenge
