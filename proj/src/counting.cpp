#include "lozenge/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace lozenge {

namespace {

// ---- bitsets used as memo keys ----

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t w : b) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }
inline void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}

// ---- oracle ----

template <class Value>
class MatchingSearch {
 public:
  MatchingSearch(const MatchGraph& g, bool weighted, const OracleLimits& lim)
      : n_(g.num_vertices()), words_((n_ + 63) / 64), lim_(lim), weighted_(weighted) {
    adj_.resize(n_);
    for (const MatchEdge& e : g.edges()) {
      adj_[e.u].push_back({e.v, e.w});
      adj_[e.v].push_back({e.u, e.w});
    }
    loop_.assign(n_, Rational(0));
    for (const MatchLoop& l : g.loops()) loop_[l.v] += l.w;
  }

  Value run() {
    Bits all(words_, 0);
    for (int v = 0; v < n_; ++v) set(all, v);
    return solve(all);
  }

 private:
  struct Arc {
    int to;
    Rational w;
  };

  Value weight(const Rational& w) const {
    if constexpr (std::is_same_v<Value, Integer>) {
      return 1;
    } else {
      return weighted_ ? w : Rational(1);
    }
  }

  // Split the remaining vertices into connected pieces.
  std::vector<Bits> pieces(const Bits& rest) const {
    std::vector<Bits> out;
    Bits seen(words_, 0);
    for (int s = 0; s < n_; ++s) {
      if (!test(rest, s) || test(seen, s)) continue;
      Bits piece(words_, 0);
      std::vector<int> stack{s};
      set(seen, s);
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        set(piece, x);
        for (const Arc& a : adj_[x])
          if (test(rest, a.to) && !test(seen, a.to)) {
            set(seen, a.to);
            stack.push_back(a.to);
          }
      }
      out.push_back(std::move(piece));
    }
    return out;
  }

  Value solve(const Bits& rest) {
    if (none(rest)) return 1;
    auto parts = pieces(rest);
    if (parts.size() > 1) {
      Value prod = 1;
      for (const Bits& p : parts) {
        prod *= solve_connected(p);
        if (prod == 0) break;
      }
      return prod;
    }
    return solve_connected(rest);
  }

  Value solve_connected(const Bits& rest) {
    auto it = memo_.find(rest);
    if (it != memo_.end()) return it->second;
    int best = -1, best_deg = 1 << 30, size = 0;
    bool any_loop = false;
    for (int v = 0; v < n_; ++v) {
      if (!test(rest, v)) continue;
      ++size;
      int deg = loop_[v] != 0 ? 1 : 0;
      any_loop = any_loop || deg;
      for (const Arc& a : adj_[v]) deg += test(rest, a.to);
      if (deg < best_deg) best_deg = deg, best = v;
    }
    Value total = 0;
    if (best_deg > 0 && (size % 2 == 0 || any_loop)) {
      Bits next = rest;
      reset(next, best);
      if (loop_[best] != 0) total += weight(loop_[best]) * solve(next);
      for (const Arc& a : adj_[best]) {
        if (!test(rest, a.to)) continue;
        reset(next, a.to);
        total += weight(a.w) * solve(next);
        set(next, a.to);
      }
    }
    if (memo_.size() >= lim_.max_states) throw BudgetExceededError("oracle state budget exceeded");
    memo_.emplace(rest, total);
    return total;
  }

  int n_;
  int words_;
  OracleLimits lim_;
  bool weighted_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<Rational> loop_;
  std::unordered_map<Bits, Value, BitsHash> memo_;
};

void check_oracle_size(const MatchGraph& g, const OracleLimits& lim) {
  if (g.num_vertices() >= lim.max_vertices)
    throw BudgetExceededError("oracle refuses graphs with " + std::to_string(g.num_vertices()) +
                              " vertices (limit " + std::to_string(lim.max_vertices) + ")");
}

}  // namespace

Integer count_matchings_oracle(const MatchGraph& g, const OracleLimits& lim) {
  if (!g.loops().empty()) throw ContractError("remove loops before counting matchings");
  check_oracle_size(g, lim);
  return MatchingSearch<Integer>(g, false, lim).run();
}

Rational mgf_oracle(const MatchGraph& g, const OracleLimits& lim) {
  check_oracle_size(g, lim);
  return MatchingSearch<Rational>(g, true, lim).run();
}

// ---- Kasteleyn / Pfaffian ----

std::vector<int> kasteleyn_orientation(const MatchGraph& g) {
  const auto faces = embedding_faces(g);
  const auto& edges = g.edges();
  const int ne = static_cast<int>(edges.size());
  std::vector<int> face_of(2 * ne);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f]) face_of[d] = static_cast<int>(f);

  // Spanning forest; its edges get an arbitrary orientation.
  auto adj = g.adjacency();
  std::vector<char> in_tree(ne, 0), seen(g.num_vertices(), 0);
  std::vector<std::vector<int>> inc(g.num_vertices());
  for (int e = 0; e < ne; ++e) {
    inc[edges[e].u].push_back(e);
    inc[edges[e].v].push_back(e);
  }
  std::vector<int> comp_of(g.num_vertices(), -1);
  int ncomp = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    comp_of[s] = ncomp;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int e : inc[queue[i]]) {
        int y = edges[e].u == queue[i] ? edges[e].v : edges[e].u;
        if (!seen[y]) {
          seen[y] = 1;
          comp_of[y] = ncomp;
          in_tree[e] = 1;
          queue.push_back(y);
        }
      }
    ++ncomp;
  }

  // Euler's formula per component.
  std::vector<long> nv(ncomp, 0), nedge(ncomp, 0), nface(ncomp, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++nv[comp_of[v]];
  for (int e = 0; e < ne; ++e) ++nedge[comp_of[edges[e].u]];
  for (const auto& f : faces) ++nface[comp_of[edges[f[0] / 2].u]];
  for (int c = 0; c < ncomp; ++c) {
    if (nedge[c] == 0) continue;
    if (nv[c] - nedge[c] + nface[c] != 2) throw ContractError("embedding is not planar");
  }

  std::vector<int> sign(ne, 0);
  for (int e = 0; e < ne; ++e)
    if (in_tree[e]) sign[e] = 1;

  // Faces joined across non-tree edges form a tree; walk it from one root
  // face per component and fix each face's parity from the leaves inwards.
  std::vector<std::vector<int>> dual(faces.size());
  for (int e = 0; e < ne; ++e)
    if (!in_tree[e]) {
      dual[face_of[2 * e]].push_back(e);
      dual[face_of[2 * e + 1]].push_back(e);
    }
  std::vector<int> parent_edge(faces.size(), -1);
  std::vector<char> reached(faces.size(), 0), comp_rooted(ncomp, 0);
  std::vector<int> order;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    int c = comp_of[edges[faces[f][0] / 2].u];
    if (comp_rooted[c]) continue;
    comp_rooted[c] = 1;
    reached[f] = 1;
    std::size_t start = order.size();
    order.push_back(static_cast<int>(f));
    for (std::size_t i = start; i < order.size(); ++i)
      for (int e : dual[order[i]]) {
        int other = face_of[2 * e] == order[i] ? face_of[2 * e + 1] : face_of[2 * e];
        if (!reached[other]) {
          reached[other] = 1;
          parent_edge[other] = e;
          order.push_back(other);
        }
      }
  }
  if (order.size() != faces.size()) throw ContractError("face adjacency is not a tree");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    const int pe = parent_edge[f];
    if (pe < 0) continue;
    int agree = 0, pdart = -1;
    for (int d : faces[f]) {
      int e = d / 2;
      if (e == pe) {
        pdart = d;
        continue;
      }
      if (sign[e] == 0) throw ContractError("orientation order violated");
      agree += (d % 2 == 0) == (sign[e] > 0);
    }
    // Choose the parent edge so that the face has an odd count.
    bool want_agree = agree % 2 == 0;
    bool forward = (pdart % 2 == 0) == want_agree;
    sign[pe] = forward ? 1 : -1;
  }
  return sign;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  Integer t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
        if (m[i][k] != 0) {
          mpz_mul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
          mpz_sub(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), t.get_mpz_t());
        }
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sgn * m[n - 1][n - 1];
}

Rational count_matchings_pfaffian(const MatchGraph& g) {
  if (!g.loops().empty()) throw ContractError("remove loops before counting matchings");
  if (!g.has_embedding()) throw EmbeddingRequiredError("graph has no planar embedding");
  if (g.num_vertices() % 2 != 0) return 0;
  if (g.num_vertices() == 0) return 1;

  Integer den = 1;
  for (const MatchEdge& e : g.edges()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.w.get_den().get_mpz_t());
  std::vector<Integer> w;
  for (const MatchEdge& e : g.edges()) {
    Rational s = e.w * den;
    w.push_back(s.get_num());
  }
  const std::vector<int> sign = kasteleyn_orientation(g);

  std::vector<int> local(g.num_vertices(), -1);
  Integer total = 1;
  for (const auto& comp : g.components()) {
    if (comp.size() % 2 != 0) return 0;
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<char> keep(g.num_vertices(), 0);
    for (int v : comp) keep[v] = 1;
    auto colour = g.induced(keep).bipartition();
    Integer value;
    if (colour) {
      std::vector<int> row(comp.size(), -1), col(comp.size(), -1);
      int nb = 0, nw = 0;
      for (std::size_t i = 0; i < comp.size(); ++i) ((*colour)[i] == 0 ? row[i] = nb++ : col[i] = nw++);
      if (nb != nw) return 0;
      std::vector<std::vector<Integer>> m(nb, std::vector<Integer>(nb, 0));
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const MatchEdge& me = g.edges()[e];
        if (!keep[me.u]) continue;
        int a = local[me.u], b = local[me.v];
        int s = sign[e];
        if (row[a] < 0) std::swap(a, b), s = -s;
        m[row[a]][col[b]] = s * w[e];
      }
      value = abs(bareiss_determinant(std::move(m)));
    } else {
      const std::size_t n = comp.size();
      std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const MatchEdge& me = g.edges()[e];
        if (!keep[me.u]) continue;
        int a = local[me.u], b = local[me.v];
        m[a][b] = sign[e] * w[e];
        m[b][a] = -sign[e] * w[e];
      }
      value = exact_sqrt(bareiss_determinant(std::move(m)));
    }
    total *= value;
    if (total == 0) return 0;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), g.num_vertices() / 2);
  Rational out(total, scale);
  out.canonicalize();
  return out;
}

Integer count_matchings_pfaffian_int(const MatchGraph& g) {
  Rational r = count_matchings_pfaffian(g);
  if (r.get_den() != 1) throw ContractError("weighted count is not an integer");
  return r.get_num();
}

Integer count_tilings(const Region& r) {
  if (!r.free_edges().empty()) throw ContractError("region has free edges; use count_tilings_free");
  return count_matchings_pfaffian_int(dual_graph(r));
}

// ---- symmetric counts ----

namespace {

class SymmetricSearch {
 public:
  SymmetricSearch(const Region& r, const std::vector<SymmetryElement>& group, std::size_t max_states)
      : n_(static_cast<int>(r.size())), words_((n_ + 63) / 64), max_states_(max_states) {
    for (const SymmetryElement& s : group) perms_.push_back(s.perm);
    adj_.resize(n_);
    for (int i = 0; i < n_; ++i)
      for (const TriCell& d : r.neighbors(r.cells()[i])) adj_[i].push_back(r.index_of(d));
    partner_.assign(n_, -1);
  }

  Integer run() { return solve(Bits(words_, 0)); }

 private:
  Integer solve(const Bits& used) {
    int v = 0;
    while (v < n_ && test(used, v)) ++v;
    if (v == n_) return 1;
    auto it = memo_.find(used);
    if (it != memo_.end()) return it->second;
    Integer total = 0;
    for (int w : adj_[v]) {
      if (test(used, w)) continue;
      Bits next = used;
      if (place(v, w, next)) total += solve(next);
    }
    if (memo_.size() >= max_states_) throw BudgetExceededError("symmetric search state budget exceeded");
    memo_.emplace(used, total);
    return total;
  }

  // Add the whole orbit of edge {v, w}; false if it clashes with itself or
  // with cells already covered.
  bool place(int v, int w, Bits& used) {
    std::vector<int> touched;
    bool ok = true;
    for (const auto& p : perms_) {
      int a = p[v], b = p[w];
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        if (partner_[x] == y) continue;
        if (partner_[x] >= 0 || test(used, x)) ok = false;
        if (!ok) break;
        partner_[x] = y;
        touched.push_back(x);
      }
      if (!ok) break;
    }
    for (int x : touched) {
      if (ok) set(used, x);
      partner_[x] = -1;
    }
    return ok;
  }

  int n_;
  int words_;
  std::size_t max_states_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> partner_;
  std::unordered_map<Bits, Integer, BitsHash> memo_;
};

Integer quotient_count(const Region& r, const std::vector<SymmetryElement>& group) {
  const SymmetryElement* gen = &group[0];
  for (const SymmetryElement& s : group)
    if (s.order() > gen->order()) gen = &s;
  MatchGraph q = quotient_graph(dual_graph(r), *gen);
  Rational factor = 1;
  if (!q.loops().empty()) {
    if (q.num_vertices() % 2 == 1) {
      auto [h, w] = remove_loop_vertex(q);
      q = std::move(h);
      factor = w;
    } else {
      // A lone loop cannot be used when the rest has odd size.
      MatchGraph bare(q.tags());
      for (const MatchEdge& e : q.edges()) bare.add_edge(e.u, e.v, e.w);
      bare.set_rotation(q.rotation());
      q = std::move(bare);
    }
  }
  Rational r2 = factor * count_matchings_pfaffian(q);
  if (r2.get_den() != 1) throw ContractError("quotient count is not an integer");
  return r2.get_num();
}

}  // namespace

Integer count_symmetric_tilings(const Region& r, const std::vector<SymKind>& gens, SymMethod method,
                                std::size_t max_states) {
  if (!r.free_edges().empty()) throw ContractError("region has free edges");
  auto group = symmetry_group(r, gens);
  if (group.size() == 1) return count_tilings(r);
  const bool rotations_only =
      std::none_of(group.begin(), group.end(), [](const SymmetryElement& s) { return s.refl; });
  if (method == SymMethod::Auto) method = rotations_only ? SymMethod::Quotient : SymMethod::Enumerate;
  if (method == SymMethod::Quotient) {
    if (!rotations_only) throw UnsupportedActionError("quotient path needs a rotation group");
    return quotient_count(r, group);
  }
  return SymmetricSearch(r, group, max_states).run();
}

Integer count_tilings_free(const Region& r, const OracleLimits& lim) {
  MatchGraph g = dual_graph(r);
  for (const LatticeEdge& e : r.free_edges())
    for (int i = 0; i < g.num_vertices(); ++i) {
      auto vs = cell_vertices(r.cells()[i]);
      if (std::count(vs.begin(), vs.end(), e.p) && std::count(vs.begin(), vs.end(), e.q))
        g.add_loop(i, 1);
    }
  OracleLimits l = lim;
  l.max_vertices = std::max(l.max_vertices, g.num_vertices() + 1);
  Rational v = mgf_oracle(g, l);
  return v.get_num();
}

std::vector<int> find_matching(const MatchGraph& g) {
  auto colour = g.bipartition();
  if (!colour) throw UnsupportedActionError("find_matching needs a bipartite graph");
  const int n = g.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const MatchEdge& me = g.edges()[e];
    adj[me.u].push_back({me.v, static_cast<int>(e)});
    adj[me.v].push_back({me.u, static_cast<int>(e)});
  }
  std::vector<int> mate(n, -1), mate_edge(n, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int x) {
    for (auto [y, e] : adj[x]) {
      if (visited[y]) continue;
      visited[y] = 1;
      if (mate[y] < 0 || augment(mate[y])) {
        mate[x] = y, mate[y] = x;
        mate_edge[x] = mate_edge[y] = e;
        return true;
      }
    }
    return false;
  };
  for (int x = 0; x < n; ++x) {
    if ((*colour)[x] != 0) continue;
    visited.assign(n, 0);
    if (!augment(x)) return {};
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (mate[x] < 0) return {};
    if ((*colour)[x] == 0) out.push_back(mate_edge[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lozenge
