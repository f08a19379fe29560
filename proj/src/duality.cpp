#include "lozenge/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lozenge {

// ---- MatchGraph ----

int MatchGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].u == u && edges_[e].v == v) return static_cast<int>(e);
  return -1;
}

int MatchGraph::add_edge(int u, int v, Rational w) {
  if (u == v) throw ContractError("use add_loop for loops");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= num_vertices()) throw ContractError("edge endpoint out of range");
  if (w <= 0) throw ContractError("edge weights must be positive");
  if (find_edge(u, v) >= 0) throw ContractError("parallel edge");
  edges_.push_back({u, v, std::move(w)});
  return static_cast<int>(edges_.size()) - 1;
}

void MatchGraph::add_loop(int v, Rational w) {
  if (w <= 0) throw ContractError("loop weights must be positive");
  loops_.push_back({v, std::move(w)});
}

std::vector<std::vector<int>> MatchGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices());
  for (const MatchEdge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::optional<std::vector<int>> MatchGraph::bipartition() const {
  auto adj = adjacency();
  std::vector<int> colour(num_vertices(), -1);
  for (int s = 0; s < num_vertices(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          stack.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::vector<std::vector<int>> MatchGraph::components() const {
  auto adj = adjacency();
  std::vector<int> comp(num_vertices(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    comp[s] = static_cast<int>(out.size()) - 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = comp[s];
          stack.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

MatchGraph MatchGraph::induced(const std::vector<char>& keep) const {
  std::vector<int> remap(num_vertices(), -1);
  std::vector<std::vector<TriCell>> tags;
  for (int v = 0; v < num_vertices(); ++v)
    if (keep[v]) {
      remap[v] = static_cast<int>(tags.size());
      tags.push_back(tags_[v]);
    }
  MatchGraph out(std::move(tags));
  std::vector<int> edge_map(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (keep[edges_[e].u] && keep[edges_[e].v])
      edge_map[e] = out.add_edge(remap[edges_[e].u], remap[edges_[e].v], edges_[e].w);
  for (const MatchLoop& l : loops_)
    if (keep[l.v]) out.add_loop(remap[l.v], l.w);
  if (rotation_) {
    std::vector<std::vector<int>> rot(out.num_vertices());
    for (int v = 0; v < num_vertices(); ++v) {
      if (!keep[v]) continue;
      for (int e : (*rotation_)[v])
        if (edge_map[e] >= 0) rot[remap[v]].push_back(edge_map[e]);
    }
    out.set_rotation(std::move(rot));
  }
  return out;
}

MatchGraph MatchGraph::without_edges(const std::vector<char>& drop) const {
  MatchGraph out(tags_);
  std::vector<int> edge_map(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (!drop[e]) edge_map[e] = out.add_edge(edges_[e].u, edges_[e].v, edges_[e].w);
  for (const MatchLoop& l : loops_) out.add_loop(l.v, l.w);
  if (rotation_) {
    std::vector<std::vector<int>> rot(num_vertices());
    for (int v = 0; v < num_vertices(); ++v)
      for (int e : (*rotation_)[v])
        if (edge_map[e] >= 0) rot[v].push_back(edge_map[e]);
    out.set_rotation(std::move(rot));
  }
  return out;
}

std::vector<std::vector<int>> embedding_faces(const MatchGraph& g) {
  if (!g.has_embedding()) throw EmbeddingRequiredError("graph has no planar embedding");
  const auto& rot = g.rotation();
  const auto& edges = g.edges();
  // position of edge e in the rotation at each of its ends
  std::vector<int> pos_u(edges.size(), -1), pos_v(edges.size(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      int e = rot[v][i];
      (edges[e].u == v ? pos_u : pos_v)[e] = static_cast<int>(i);
    }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (pos_u[e] < 0 || pos_v[e] < 0) throw ContractError("rotation system misses an edge");
  auto head = [&](int d) { return d % 2 == 0 ? edges[d / 2].v : edges[d / 2].u; };
  auto next = [&](int d) {
    int e = d / 2, y = head(d);
    int p = (edges[e].u == y ? pos_u : pos_v)[e];
    int e2 = rot[y][(p + 1) % rot[y].size()];
    return edges[e2].u == y ? 2 * e2 : 2 * e2 + 1;
  };
  std::vector<char> seen(2 * edges.size(), 0);
  std::vector<std::vector<int>> faces;
  for (std::size_t d0 = 0; d0 < seen.size(); ++d0) {
    if (seen[d0]) continue;
    faces.emplace_back();
    for (int d = static_cast<int>(d0); !seen[d]; d = next(d)) {
      seen[d] = 1;
      faces.back().push_back(d);
    }
  }
  return faces;
}

// ---- dual graphs ----

MatchGraph dual_graph(const Region& r) {
  std::vector<std::vector<TriCell>> tags;
  for (const TriCell& c : r.cells()) tags.push_back({c});
  MatchGraph g(std::move(tags));
  std::map<std::pair<int, int>, int> ids;
  const auto& cells = r.cells();
  for (int i = 0; i < static_cast<int>(cells.size()); ++i)
    for (const TriCell& d : lattice_neighbors(cells[i])) {
      int j = r.index_of(d);
      if (j > i) ids[{i, j}] = g.add_edge(i, j);
    }
  std::vector<std::vector<int>> rot(cells.size());
  for (int i = 0; i < static_cast<int>(cells.size()); ++i)
    for (const TriCell& d : lattice_neighbors(cells[i])) {
      int j = r.index_of(d);
      if (j >= 0) rot[i].push_back(ids.at({std::min(i, j), std::max(i, j)}));
    }
  g.set_rotation(std::move(rot));
  return g;
}

MatchGraph rbar_dual_graph(const Region& r) {
  MatchGraph g = dual_graph(r);
  for (const auto& [c, d] : rbar_half_pairs(r)) {
    int e = g.find_edge(r.index_of(c), r.index_of(d));
    g.set_weight(e, Rational(1, 2));
  }
  return g;
}

// ---- symmetries ----

namespace {

std::optional<Vertex> map_vertex(Vertex p, Vertex c2, int rot, bool refl) {
  long x = 2L * p.u - c2.u, y = 2L * p.v - c2.v;
  if (refl) x = -x;
  for (int i = 0; i < rot; ++i) {
    if ((x - y) % 2 != 0) return std::nullopt;
    long nx = (x - y) / 2, ny = (3 * x + y) / 2;
    x = nx, y = ny;
  }
  if ((x + c2.u) % 2 != 0 || (y + c2.v) % 2 != 0) return std::nullopt;
  return Vertex{static_cast<int>((x + c2.u) / 2), static_cast<int>((y + c2.v) / 2)};
}

std::optional<TriCell> map_cell(const TriCell& c, Vertex c2, int rot, bool refl) {
  auto vs = cell_vertices(c);
  std::vector<Vertex> out;
  for (const Vertex& p : vs) {
    auto q = map_vertex(p, c2, rot, refl);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return cell_from_vertices(out[0], out[1], out[2]);
}

int mod6(int r) { return ((r % 6) + 6) % 6; }

}  // namespace

SymKind SymmetryElement::kind() const {
  if (!refl) {
    static const SymKind rots[] = {SymKind::Identity, SymKind::Rot60,  SymKind::Rot120,
                                   SymKind::Rot180,   SymKind::Rot240, SymKind::Rot300};
    return rots[rot];
  }
  if (rot == 0) return SymKind::ReflV;
  if (rot == 3) return SymKind::ReflH;
  return SymKind::Composite;
}

std::string SymmetryElement::name() const {
  if (kind() != SymKind::Composite) return sym_kind_name(kind());
  return "rot" + std::to_string(60 * rot) + "*reflv";
}

int SymmetryElement::order() const {
  if (refl) return 2;
  return rot == 0 ? 1 : 6 / std::gcd(rot, 6);
}

const char* sym_kind_name(SymKind k) {
  switch (k) {
    case SymKind::Identity: return "identity";
    case SymKind::Rot60: return "rot60";
    case SymKind::Rot120: return "rot120";
    case SymKind::Rot180: return "rot180";
    case SymKind::Rot240: return "rot240";
    case SymKind::Rot300: return "rot300";
    case SymKind::ReflH: return "reflh";
    case SymKind::ReflV: return "reflv";
    case SymKind::Composite: return "composite";
  }
  return "?";
}

SymKind parse_sym_kind(const std::string& s) {
  for (SymKind k : {SymKind::Identity, SymKind::Rot60, SymKind::Rot120, SymKind::Rot180,
                    SymKind::Rot240, SymKind::Rot300, SymKind::ReflH, SymKind::ReflV})
    if (s == sym_kind_name(k)) return k;
  throw ParameterError("unknown symmetry '" + s + "'");
}

SymmetryElement symmetry(const Region& r, int rot, bool refl) {
  SymmetryElement s;
  s.rot = mod6(rot);
  s.refl = refl;
  const Vertex c2 = r.center2();
  for (const TriCell& c : r.cells()) {
    auto m = map_cell(c, c2, s.rot, refl);
    int j = m ? r.index_of(*m) : -1;
    if (j < 0) throw SymmetryAbsentError(s.name() + " does not fix the region");
    s.perm.push_back(j);
  }
  // An isometry of the lattice maps adjacent cells to adjacent cells; check it.
  for (std::size_t i = 0; i < r.cells().size(); ++i)
    for (const TriCell& d : r.neighbors(r.cells()[i])) {
      const TriCell& a = r.cells()[s.perm[i]];
      const TriCell& b = r.cells()[s.perm[r.index_of(d)]];
      auto nb = lattice_neighbors(a);
      if (std::find(nb.begin(), nb.end(), b) == nb.end())
        throw ContractError("symmetry is not a graph automorphism");
    }
  return s;
}

SymmetryElement symmetry(const Region& r, SymKind kind) {
  switch (kind) {
    case SymKind::Identity: return symmetry(r, 0, false);
    case SymKind::Rot60: return symmetry(r, 1, false);
    case SymKind::Rot120: return symmetry(r, 2, false);
    case SymKind::Rot180: return symmetry(r, 3, false);
    case SymKind::Rot240: return symmetry(r, 4, false);
    case SymKind::Rot300: return symmetry(r, 5, false);
    case SymKind::ReflV: return symmetry(r, 0, true);
    case SymKind::ReflH: return symmetry(r, 3, true);
    case SymKind::Composite: break;
  }
  throw ParameterError("composite symmetries are built with compose()");
}

SymmetryElement compose(const Region& r, const SymmetryElement& f, const SymmetryElement& g) {
  // R^a V^s R^b V^t = R^(a +- b) V^(s xor t), using V R V = R^-1.
  SymmetryElement h = symmetry(r, f.rot + (f.refl ? -g.rot : g.rot), f.refl != g.refl);
  for (std::size_t i = 0; i < h.perm.size(); ++i)
    if (h.perm[i] != f.perm[g.perm[i]]) throw ContractError("dihedral composition mismatch");
  return h;
}

std::vector<SymmetryElement> symmetry_group(const Region& r, const std::vector<SymKind>& gens) {
  std::vector<SymmetryElement> gen_elems;
  for (SymKind k : gens) gen_elems.push_back(symmetry(r, k));
  std::set<std::pair<int, bool>> seen{{0, false}};
  std::vector<std::pair<int, bool>> todo{{0, false}};
  while (!todo.empty()) {
    auto [a, s] = todo.back();
    todo.pop_back();
    for (const SymmetryElement& g : gen_elems) {
      std::pair<int, bool> h{mod6(a + (s ? -g.rot : g.rot)), s != g.refl};
      if (seen.insert(h).second) todo.push_back(h);
    }
  }
  std::vector<SymmetryElement> out;
  for (auto [a, s] : seen) out.push_back(symmetry(r, a, s));
  return out;
}

// ---- quotient ----

MatchGraph quotient_graph(const MatchGraph& g, const SymmetryElement& gen) {
  const int n = g.num_vertices();
  if (static_cast<int>(gen.perm.size()) != n)
    throw ContractError("symmetry acts on a different vertex set");
  if (!g.loops().empty()) throw UnsupportedActionError("cannot take the quotient of a graph with loops");
  std::vector<std::vector<int>> powers{std::vector<int>(n)};
  std::iota(powers[0].begin(), powers[0].end(), 0);
  while (true) {
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) next[v] = gen.perm[powers.back()[v]];
    if (next == powers[0]) break;
    powers.push_back(std::move(next));
  }
  const int k = static_cast<int>(powers.size());
  for (int i = 1; i < k; ++i)
    for (int v = 0; v < n; ++v)
      if (powers[i][v] == v) throw UnsupportedActionError("symmetry fixes a vertex");

  std::vector<int> orbit(n, -1);
  std::vector<std::vector<TriCell>> tags;
  std::vector<int> rep;
  for (int v = 0; v < n; ++v) {
    if (orbit[v] >= 0) continue;
    const int id = static_cast<int>(tags.size());
    tags.emplace_back();
    rep.push_back(v);
    for (int i = 0; i < k; ++i) {
      orbit[powers[i][v]] = id;
      for (const TriCell& c : g.tags()[powers[i][v]]) tags[id].push_back(c);
    }
  }
  MatchGraph q(std::move(tags));

  // Canonical id of each edge orbit: its least (min, max) image.
  auto edge_orbit = [&](int e) {
    std::pair<int, int> best{n, n};
    for (const auto& p : powers) {
      int a = p[g.edges()[e].u], b = p[g.edges()[e].v];
      best = std::min(best, std::pair{std::min(a, b), std::max(a, b)});
    }
    return best;
  };
  // Edge orbits grouped by the pair of vertex orbits they join. Several edge
  // orbits between one pair (around a rotation centre) merge into a single
  // edge whose weight is their sum; only the first stays in the embedding.
  std::map<std::pair<int, int>, std::map<std::pair<int, int>, Rational>> by_pair;
  std::map<int, std::map<std::pair<int, int>, Rational>> loops_at;
  std::vector<std::pair<int, int>> orbit_of_edge(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const MatchEdge& me = g.edges()[e];
    orbit_of_edge[e] = edge_orbit(static_cast<int>(e));
    int a = orbit[me.u], b = orbit[me.v];
    if (a != b) {
      auto [it, fresh] = by_pair[{std::min(a, b), std::max(a, b)}].emplace(orbit_of_edge[e], me.w);
      if (!fresh && it->second != me.w) throw ContractError("weights not invariant");
      continue;
    }
    // Both ends in one orbit: only an involution swapping them gives a loop;
    // any other such edge can never belong to an invariant matching.
    int h = 0;
    for (int i = 1; i < k; ++i)
      if (powers[i][me.u] == me.v) h = i;
    if (powers[h][me.v] == me.u) loops_at[a].emplace(orbit_of_edge[e], me.w);
  }
  std::map<std::pair<int, int>, int> qedge_of_orbit;
  for (const auto& [key, orbits] : by_pair) {
    Rational w = 0;
    for (const auto& [o, ow] : orbits) w += ow;
    int id = q.add_edge(key.first, key.second, w);
    qedge_of_orbit[orbits.begin()->first] = id;
  }
  for (const auto& [v, orbits] : loops_at)
    for (const auto& [o, ow] : orbits) q.add_loop(v, ow);
  std::vector<int> qedge(g.edges().size(), -1);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto it = qedge_of_orbit.find(orbit_of_edge[e]);
    if (it != qedge_of_orbit.end()) qedge[e] = it->second;
  }
  if (g.has_embedding()) {
    std::vector<std::vector<int>> rot(q.num_vertices());
    for (int o = 0; o < q.num_vertices(); ++o)
      for (int e : g.rotation()[rep[o]])
        if (qedge[e] >= 0) rot[o].push_back(qedge[e]);
    q.set_rotation(std::move(rot));
  }
  return q;
}

// ---- factorization split ----

namespace {

Vertex tags_center2(const MatchGraph& g) {
  std::vector<TriCell> cells;
  for (const auto& t : g.tags()) cells.insert(cells.end(), t.begin(), t.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return Region(std::move(cells), {}, RegionParams{}).center2();
}

// Six times the horizontal centroid coordinate, in column units.
int centroid6(const TriCell& c) { return 6 * c.u + (c.orient == Orient::Right ? 2 : 4); }

bool on_axis(const TriCell& c, Vertex c2) { return 2 * c.v == c2.v; }

}  // namespace

FactorSplit factorization_split(const MatchGraph& g, SymKind axis) {
  if (axis != SymKind::ReflV && axis != SymKind::ReflH)
    throw ParameterError("split axis must be reflv or reflh");
  if (!g.loops().empty()) throw ContractError("remove the loop vertex before splitting");
  if (g.num_vertices() == 0) return {g, 0};
  const Vertex c2 = tags_center2(g);
  const std::size_t orbit_size = g.tags()[0].size();

  // Symmetry check: the reflection across the horizontal axis must map the
  // vertex set (as cell sets) to itself and preserve edges.
  std::map<std::vector<TriCell>, int> index;
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto t = g.tags()[v];
    std::sort(t.begin(), t.end());
    index[t] = v;
  }
  std::vector<int> sigma(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<TriCell> t;
    for (const TriCell& c : g.tags()[v]) t.push_back(make_cell(c.u, c2.v - c.v));
    std::sort(t.begin(), t.end());
    auto it = index.find(t);
    if (it == index.end()) throw SymmetryAbsentError("graph is not symmetric about the axis");
    sigma[v] = it->second;
  }
  for (const MatchEdge& e : g.edges())
    if (g.find_edge(sigma[e.u], sigma[e.v]) < 0)
      throw SymmetryAbsentError("graph is not symmetric about the axis");

  std::vector<char> is_axis(g.num_vertices(), 0), side_a(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& t = g.tags()[v];
    if (orbit_size == 1) {
      if (axis == SymKind::ReflV)
        throw UnsupportedActionError("no dual vertex lies on the vertical axis");
      is_axis[v] = on_axis(t[0], c2);
      side_a[v] = 2 * t[0].v > c2.v;
    } else if (orbit_size == 2) {
      if (make_cell(c2.u - t[0].u - 1, c2.v - t[0].v) != t[1])
        throw ContractError("split expects a quotient by 180-degree rotation");
      is_axis[v] = on_axis(t[0], c2);
      const TriCell& up = 2 * t[0].v > c2.v ? t[0] : t[1];
      side_a[v] = !is_axis[v] && centroid6(up) < 3 * c2.u;
    } else {
      throw UnsupportedActionError("split supports dual graphs and 180-degree quotients only");
    }
  }
  std::vector<char> drop(g.edges().size(), 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const MatchEdge& me = g.edges()[e];
    if ((is_axis[me.u] && side_a[me.v]) || (is_axis[me.v] && side_a[me.u])) drop[e] = 1;
  }
  FactorSplit out{g.without_edges(drop), 0};
  for (std::size_t e = 0; e < out.subgraph.edges().size(); ++e) {
    const MatchEdge& me = out.subgraph.edges()[e];
    if (is_axis[me.u] && is_axis[me.v]) {
      out.subgraph.set_weight(static_cast<int>(e), me.w / 2);
      ++out.multiplier_log2;
    }
  }
  return out;
}

std::pair<MatchGraph, Rational> remove_loop_vertex(const MatchGraph& g) {
  if (g.loops().size() != 1) throw ContractError("expected exactly one loop");
  if (g.num_vertices() % 2 == 0) throw ContractError("expected an odd number of vertices");
  std::vector<char> keep(g.num_vertices(), 1);
  keep[g.loops()[0].v] = 0;
  MatchGraph h = g.induced(keep);
  return {std::move(h), g.loops()[0].w};
}

Region split_region(const MatchGraph& sub) {
  const Vertex c2 = tags_center2(sub);
  std::vector<TriCell> cells;
  for (const auto& t : sub.tags()) {
    if (t.size() == 1) {
      cells.push_back(t[0]);
      continue;
    }
    const TriCell* pick = nullptr;
    for (const TriCell& c : t)
      if (2 * c.v > c2.v || (on_axis(c, c2) && centroid6(c) > 3 * c2.u)) pick = &c;
    if (!pick) throw ContractError("orbit has no representative in the upper half");
    cells.push_back(*pick);
  }
  return Region(std::move(cells), {}, RegionParams{});
}

std::string export_graph(const MatchGraph& g) {
  std::ostringstream out;
  out << "# vertices " << g.num_vertices() << "\n";
  auto frac = [](const Rational& w) { return w.get_num().get_str() + "/" + w.get_den().get_str(); };
  for (const MatchEdge& e : g.edges()) out << e.u << " " << e.v << " " << frac(e.w) << "\n";
  for (const MatchLoop& l : g.loops()) out << l.v << " " << l.v << " " << frac(l.w) << "\n";
  return out.str();
}

}  // namespace lozenge
