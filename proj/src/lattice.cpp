#include "lozenge/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "lozenge/exact.hpp"

namespace lozenge {

namespace {

bool is_right(int u, int v) { return ((u + v) & 1) != 0; }

void check_increasing(const std::vector<int>& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1])
      throw ParameterError(std::string(what) + " must be strictly increasing");
}

// Cells of the strips [0, width) whose vertices all satisfy the predicate.
template <class Inside>
std::vector<TriCell> cells_within(int width, int vmin, int vmax, Inside inside) {
  std::vector<TriCell> out;
  for (int u = 0; u < width; ++u)
    for (int v = vmin - 1; v <= vmax + 1; ++v) {
      TriCell c = make_cell(u, v);
      bool ok = true;
      for (const Vertex& p : cell_vertices(c)) ok = ok && inside(p);
      if (ok) out.push_back(c);
    }
  return out;
}

std::vector<TriCell> minus(std::vector<TriCell> cells, const std::vector<TriCell>& drop) {
  std::set<TriCell> d(drop.begin(), drop.end());
  std::erase_if(cells, [&](const TriCell& c) { return d.count(c) > 0; });
  return cells;
}

void require_balanced(const Region& r) {
  if (r.count(Orient::Left) != r.count(Orient::Right))
    throw ContractError("closed region has unequal left/right cell counts");
}

}  // namespace

TriCell make_cell(int u, int v) {
  return TriCell{u, v, is_right(u, v) ? Orient::Right : Orient::Left};
}

bool well_formed(const TriCell& c) {
  return (c.orient == Orient::Right) == is_right(c.u, c.v);
}

std::vector<Vertex> cell_vertices(const TriCell& c) {
  if (c.orient == Orient::Right) return {{c.u, c.v - 1}, {c.u, c.v + 1}, {c.u + 1, c.v}};
  return {{c.u + 1, c.v - 1}, {c.u + 1, c.v + 1}, {c.u, c.v}};
}

std::vector<TriCell> lattice_neighbors(const TriCell& c) {
  if (c.orient == Orient::Right)
    return {make_cell(c.u, c.v - 1), make_cell(c.u, c.v + 1), make_cell(c.u - 1, c.v)};
  return {make_cell(c.u + 1, c.v), make_cell(c.u, c.v + 1), make_cell(c.u, c.v - 1)};
}

std::optional<TriCell> cell_from_vertices(Vertex p, Vertex q, Vertex r) {
  std::vector<Vertex> vs{p, q, r};
  std::sort(vs.begin(), vs.end());
  // Sorted by column: either two share the first column (right cell) or the
  // last two do (left cell).
  if (vs[0].u == vs[1].u && vs[2].u == vs[0].u + 1 && vs[1].v == vs[0].v + 2 &&
      vs[2].v == vs[0].v + 1)
    return make_cell(vs[0].u, vs[0].v + 1);
  if (vs[1].u == vs[2].u && vs[1].u == vs[0].u + 1 && vs[2].v == vs[1].v + 2 &&
      vs[0].v == vs[1].v + 1)
    return make_cell(vs[0].u, vs[0].v);
  return std::nullopt;
}

LatticeEdge make_edge(Vertex p, Vertex q) {
  if (q < p) std::swap(p, q);
  return {p, q};
}

LatticeEdge shared_edge(const TriCell& a, const TriCell& b) {
  std::vector<Vertex> common;
  for (const Vertex& p : cell_vertices(a))
    for (const Vertex& q : cell_vertices(b))
      if (p == q) common.push_back(p);
  if (common.size() != 2) throw ContractError("cells are not adjacent");
  return make_edge(common[0], common[1]);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Hexagon: return "Hexagon";
    case Family::HoledHexagon: return "HoledHexagon";
    case Family::CoredHexagon: return "CoredHexagon";
    case Family::DRegion: return "DRegion";
    case Family::RBarRegion: return "RBarRegion";
    case Family::Custom: break;
  }
  return "Custom";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Hexagon, Family::HoledHexagon, Family::CoredHexagon,
                   Family::DRegion, Family::RBarRegion, Family::Custom})
    if (name == family_name(f)) return f;
  throw ParameterError("unknown region family '" + name + "'");
}

Region::Region(std::vector<TriCell> cells, std::vector<LatticeEdge> free_edges,
               RegionParams params)
    : cells_(std::move(cells)), free_edges_(std::move(free_edges)), params_(std::move(params)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw ContractError("duplicate cell");
  for (const TriCell& c : cells_)
    if (!well_formed(c)) throw ContractError("cell orientation does not match its parity");
  std::sort(free_edges_.begin(), free_edges_.end());
  free_edges_.erase(std::unique(free_edges_.begin(), free_edges_.end()), free_edges_.end());
  for (const LatticeEdge& e : free_edges_) {
    // A free edge must border exactly one cell of the region.
    int touching = 0;
    for (const TriCell& c : cells_) {
      auto vs = cell_vertices(c);
      if (std::count(vs.begin(), vs.end(), e.p) && std::count(vs.begin(), vs.end(), e.q))
        ++touching;
    }
    if (touching != 1) throw ContractError("free edge is not on the region boundary");
  }
}

bool Region::contains(const TriCell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

int Region::index_of(const TriCell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return -1;
  return static_cast<int>(it - cells_.begin());
}

std::vector<TriCell> Region::neighbors(const TriCell& c) const {
  std::vector<TriCell> out;
  for (const TriCell& d : lattice_neighbors(c))
    if (contains(d)) out.push_back(d);
  return out;
}

std::size_t Region::count(Orient o) const {
  return std::count_if(cells_.begin(), cells_.end(),
                       [o](const TriCell& c) { return c.orient == o; });
}

bool Region::connected() const {
  if (cells_.empty()) return true;
  std::vector<char> seen(cells_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (const TriCell& d : neighbors(cells_[i])) {
      int j = index_of(d);
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == cells_.size();
}

Vertex Region::center2() const {
  if (cells_.empty()) return {0, 0};
  int umin = INT32_MAX, umax = INT32_MIN, vmin = INT32_MAX, vmax = INT32_MIN;
  for (const TriCell& c : cells_)
    for (const Vertex& p : cell_vertices(c)) {
      umin = std::min(umin, p.u);
      umax = std::max(umax, p.u);
      vmin = std::min(vmin, p.v);
      vmax = std::max(vmax, p.v);
    }
  return {umin + umax, vmin + vmax};
}

Region hexagon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw ParameterError("hexagon sides must be positive");
  auto lower = [=](int u) { return std::max(-u, u - 2 * b); };
  auto upper = [=](int u) { return std::min(2 * c + u, 2 * c + 2 * a - u); };
  auto cells = cells_within(a + b, -b, 2 * c + a, [&](const Vertex& p) {
    return p.u >= 0 && p.u <= a + b && p.v >= lower(p.u) && p.v <= upper(p.u);
  });
  RegionParams params;
  params.family = Family::Hexagon;
  params.a = a;
  params.b = b;
  params.c = c;
  Region r(std::move(cells), {}, params);
  require_balanced(r);
  return r;
}

std::vector<TriCell> hole_cells(int a, int b, const std::vector<int>& ks) {
  std::vector<TriCell> west;
  for (int k : ks) {
    west.push_back(make_cell(2 * k - 2, 2 * b));
    west.push_back(make_cell(2 * k - 1, 2 * b - 1));
    west.push_back(make_cell(2 * k - 1, 2 * b + 1));
    west.push_back(make_cell(2 * k - 1, 2 * b));
  }
  std::vector<TriCell> out = west;
  for (const TriCell& c : west) out.push_back(make_cell(2 * a - 1 - c.u, c.v));
  return out;
}

Region holed_hexagon(int a, int b, const std::vector<int>& ks) {
  check_increasing(ks, "ks");
  if (b < 1) throw ParameterError("b must be positive");
  if (a < 0) throw ParameterError("a must be non-negative");
  for (int k : ks)
    if (k < 1 || 2 * k > a) throw ParameterError("hole index " + std::to_string(k) + " out of range");
  RegionParams params;
  params.family = Family::HoledHexagon;
  params.a = a;
  params.b = b;
  params.ks = ks;
  if (a == 0) return Region({}, {}, params);
  auto holes = hole_cells(a, b, ks);
  std::set<TriCell> distinct(holes.begin(), holes.end());
  if (distinct.size() != holes.size()) throw ContractError("holes overlap");
  Region r(minus(hexagon(a, a, 2 * b).cells(), holes), {}, params);
  require_balanced(r);
  return r;
}

std::vector<TriCell> rhombus_cells(int a, int b, int x) {
  const int ci = 2 * a - 1, cj = 2 * b, side = 2 * x - 1;
  return cells_within(2 * (2 * a - 1), cj - side, cj + side, [&](const Vertex& p) {
    return std::abs(p.u - ci) + std::abs(p.v - cj) <= side;
  });
}

Region cored_hexagon(int a, int b, const std::vector<int>& ks, int x) {
  if (a < 1) throw ParameterError("a must be positive");
  if (x < 1 || x > a) throw ParameterError("core parameter x must satisfy 1 <= x <= a");
  for (int k : ks)
    if (k > a - x)
      throw ParameterError("core collides with hole k=" + std::to_string(k));
  Region holed = holed_hexagon(2 * a - 1, b, ks);
  RegionParams params;
  params.family = Family::CoredHexagon;
  params.a = a;
  params.b = b;
  params.ks = ks;
  params.x = x;
  Region r(minus(holed.cells(), rhombus_cells(a, b, x)), {}, params);
  require_balanced(r);
  return r;
}

namespace {

// Upper half plus the east half of the axis row of the frame hexagon.
std::vector<TriCell> split_frame(int n, int b) {
  std::vector<TriCell> out;
  const int first_east = (n % 2 == 0) ? n : n + 1;
  const Region frame = hexagon(n, n, 2 * b);
  for (const TriCell& c : frame.cells())
    if (c.v > 2 * b || (c.v == 2 * b && c.u >= first_east)) out.push_back(c);
  return out;
}

}  // namespace

Region rbar_region(const std::vector<int>& l, const std::vector<int>& q, int base) {
  check_increasing(l, "l");
  check_increasing(q, "q");
  if (q.empty()) throw ParameterError("q must be non-empty");
  if (base < 1) throw ParameterError("base must be positive");
  if (!l.empty() && l.front() < 1) throw ParameterError("l entries must be positive");
  if (q.front() < 1) throw ParameterError("q entries must be positive");
  bool odd;
  if (q.size() == l.size() + 1) odd = false;
  else if (q.size() == l.size()) odd = true;
  else throw ParameterError("need |q| = |l| + 1 or |q| = |l|");
  int a = q.back();
  if (!l.empty()) a = std::max(a, odd ? l.back() : l.back() + 1);
  const int n = odd ? 2 * a + 1 : 2 * a;
  const int row = 2 * base;
  std::vector<TriCell> drop;
  for (int p = 1; p <= a; ++p)
    if (!std::binary_search(q.begin(), q.end(), p)) drop.push_back(make_cell(2 * a - 2 * p + 1, row + 1));
  for (int p = 1; p <= (odd ? a : a - 1); ++p)
    if (!std::binary_search(l.begin(), l.end(), p)) {
      drop.push_back(make_cell(2 * a + 2 * p, row));
      drop.push_back(make_cell(2 * a + 2 * p + 1, row));
      drop.push_back(make_cell(2 * a + 2 * p, row + 1));
    }
  RegionParams params;
  params.family = Family::RBarRegion;
  params.b = base;
  params.l = l;
  params.q = q;
  return Region(minus(split_frame(n, base), drop), {}, params);
}

std::vector<std::pair<TriCell, TriCell>> rbar_half_pairs(const Region& r) {
  if (r.params().family != Family::RBarRegion)
    throw ParameterError("not an rbar region");
  const int row = 2 * r.params().b;
  std::vector<std::pair<TriCell, TriCell>> out;
  for (const TriCell& c : r.cells())
    if (c.v == row && c.orient == Orient::Left) {
      TriCell d = make_cell(c.u + 1, row);
      if (r.contains(d)) out.emplace_back(c, d);
    }
  return out;
}

Region d_region(int a, int b, int eps, const std::vector<int>& is) {
  if (eps != -1 && eps != 0) throw ParameterError("eps must be -1 or 0");
  if (a < 1 || b < 1) throw ParameterError("a and b must be positive");
  check_increasing(is, "is");
  for (int i : is)
    if (i < 1 || i > a) throw ParameterError("index " + std::to_string(i) + " out of range");
  std::vector<int> ks;
  for (int r = a; r >= 1; --r)
    if (!std::binary_search(is.begin(), is.end(), r)) ks.push_back(a - r + 1);
  const int n = 2 * a + 1 + eps;
  Region h = holed_hexagon(n, b, ks);
  std::vector<TriCell> cells;
  std::vector<LatticeEdge> free_edges;
  for (const TriCell& c : h.cells())
    if (c.v > 2 * b && c.u < n) {
      cells.push_back(c);
      if (c.u == n - 1 && c.orient == Orient::Left)
        free_edges.push_back(make_edge({n, c.v - 1}, {n, c.v + 1}));
    }
  RegionParams params;
  params.family = Family::DRegion;
  params.a = a;
  params.b = b;
  params.eps = eps;
  params.is = is;
  return Region(std::move(cells), std::move(free_edges), params);
}

Region upper_part(const Region& r, int row) {
  std::vector<TriCell> cells;
  for (const TriCell& c : r.cells())
    if (c.v > row) cells.push_back(c);
  return Region(std::move(cells), {}, RegionParams{});
}

// ---- JSON ----

namespace {

using nlohmann::json;

json params_json(const RegionParams& p) {
  json j = json::object();
  switch (p.family) {
    case Family::Hexagon:
      j["a"] = p.a, j["b"] = p.b, j["c"] = p.c;
      break;
    case Family::HoledHexagon:
      j["a"] = p.a, j["b"] = p.b, j["ks"] = p.ks;
      break;
    case Family::CoredHexagon:
      j["a"] = p.a, j["b"] = p.b, j["ks"] = p.ks, j["x"] = p.x;
      break;
    case Family::DRegion:
      j["a"] = p.a, j["b"] = p.b, j["eps"] = p.eps, j["is"] = p.is;
      break;
    case Family::RBarRegion:
      j["l"] = p.l, j["q"] = p.q, j["base"] = p.b;
      break;
    case Family::Custom:
      break;
  }
  return j;
}

RegionParams params_from_json(Family f, const json& j) {
  RegionParams p;
  p.family = f;
  auto get_int = [&](const char* k) { return j.at(k).get<int>(); };
  auto get_list = [&](const char* k) { return j.at(k).get<std::vector<int>>(); };
  switch (f) {
    case Family::Hexagon:
      p.a = get_int("a"), p.b = get_int("b"), p.c = get_int("c");
      break;
    case Family::HoledHexagon:
      p.a = get_int("a"), p.b = get_int("b"), p.ks = get_list("ks");
      break;
    case Family::CoredHexagon:
      p.a = get_int("a"), p.b = get_int("b"), p.ks = get_list("ks"), p.x = get_int("x");
      break;
    case Family::DRegion:
      p.a = get_int("a"), p.b = get_int("b"), p.eps = get_int("eps"), p.is = get_list("is");
      break;
    case Family::RBarRegion:
      p.l = get_list("l"), p.q = get_list("q"), p.b = get_int("base");
      break;
    case Family::Custom:
      break;
  }
  return p;
}

}  // namespace

std::string serialize_region(const Region& r) {
  json cells = json::array();
  for (const TriCell& c : r.cells())
    cells.push_back(json::array({c.u, c.v, c.orient == Orient::Left ? "L" : "R"}));
  json edges = json::array();
  for (const LatticeEdge& e : r.free_edges())
    edges.push_back(json::array({json::array({e.p.u, e.p.v}), json::array({e.q.u, e.q.v})}));
  json doc;
  doc["v"] = 1;
  doc["family"] = family_name(r.params().family);
  doc["params"] = params_json(r.params());
  doc["cells"] = std::move(cells);
  doc["free_edges"] = std::move(edges);
  return doc.dump();
}

Region deserialize_region(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed region JSON: ") + e.what(), e.byte);
  }
  // Structural errors are reported at the end of the document.
  const std::size_t end = bytes.size();
  try {
    if (!doc.is_object()) throw ParseError("region document must be an object", 0);
    for (const char* k : {"v", "family", "params", "cells", "free_edges"})
      if (!doc.contains(k)) throw ParseError(std::string("missing field '") + k + "'", end);
    if (doc["v"].get<int>() != 1) throw ParseError("unsupported region schema version", end);
    Family f = family_from_name(doc["family"].get<std::string>());
    RegionParams p = params_from_json(f, doc["params"]);
    std::vector<TriCell> cells;
    for (const json& c : doc["cells"]) {
      const std::string o = c.at(2).get<std::string>();
      if (o != "L" && o != "R") throw ParseError("cell orientation must be L or R", end);
      cells.push_back(TriCell{c.at(0).get<int>(), c.at(1).get<int>(),
                              o == "L" ? Orient::Left : Orient::Right});
    }
    std::vector<LatticeEdge> edges;
    for (const json& e : doc["free_edges"])
      edges.push_back(make_edge({e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()},
                                {e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()}));
    return Region(std::move(cells), std::move(edges), p);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad region document: ") + e.what(), end);
  } catch (const ContractError& e) {
    throw ParseError(std::string("invalid region: ") + e.what(), end);
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), end);
  }
}

}  // namespace lozenge
