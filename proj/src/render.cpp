#include "lozenge/render.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "lozenge/counting.hpp"

namespace lozenge {

namespace {

constexpr double kScale = 24.0;
constexpr double kMargin = 12.0;
const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

struct Frame {
  int umin = INT_MAX, umax = INT_MIN, vmin = INT_MAX, vmax = INT_MIN;

  void add(const TriCell& c) {
    for (const Vertex& p : cell_vertices(c)) {
      umin = std::min(umin, p.u);
      umax = std::max(umax, p.u);
      vmin = std::min(vmin, p.v);
      vmax = std::max(vmax, p.v);
    }
  }
  double x(double u) const { return kMargin + (u - umin) * kHalfRoot3 * kScale; }
  double y(double v) const { return kMargin + (vmax - v) * 0.5 * kScale; }
  double width() const { return 2 * kMargin + (umax - umin) * kHalfRoot3 * kScale; }
  double height() const { return 2 * kMargin + (vmax - vmin) * 0.5 * kScale; }
  std::string point(const Vertex& p) const { return fmt(x(p.u)) + "," + fmt(y(p.v)); }
};

std::pair<double, double> centroid(const Frame& f, const TriCell& c) {
  const double du = c.orient == Orient::Right ? 1.0 / 3 : 2.0 / 3;
  return {f.x(c.u + du), f.y(c.v)};
}

std::string polygon(const Frame& f, const std::vector<Vertex>& pts, const std::string& style) {
  std::string s = "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + f.point(pts[i]);
  return s + "\" " + style + "/>\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& style) {
  return "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
         fmt(y2) + "\" " + style + "/>\n";
}

std::string circle(double x, double y, double r, const std::string& style) {
  return "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"" + fmt(r) + "\" " + style +
         "/>\n";
}

// Outline of a lozenge: the two cells' vertices in cyclic order.
std::vector<Vertex> lozenge_outline(const TriCell& a, const TriCell& b) {
  const LatticeEdge e = shared_edge(a, b);
  auto apex = [&](const TriCell& c) {
    for (const Vertex& p : cell_vertices(c))
      if (p != e.p && p != e.q) return p;
    return e.p;
  };
  return {e.p, apex(a), e.q, apex(b)};
}

const char* lozenge_fill(const TriCell& a, const TriCell& b) {
  const LatticeEdge e = shared_edge(a, b);
  if (e.p.u == e.q.u) return "#f2c14e";
  return (e.q.v - e.p.v) * (e.q.u - e.p.u) > 0 ? "#5b8e7d" : "#8cb8d8";
}

}  // namespace

Overlay parse_overlay(const std::string& s) {
  if (s == "none") return Overlay::None;
  if (s == "tiling") return Overlay::Tiling;
  if (s == "dual") return Overlay::Dual;
  if (s == "quotient") return Overlay::Quotient;
  throw ParameterError("unknown overlay '" + s + "'");
}

std::vector<TriCell> family_holes(const Region& r) {
  const RegionParams& p = r.params();
  if (p.family == Family::HoledHexagon) return hole_cells(p.a, p.b, p.ks);
  if (p.family == Family::CoredHexagon) {
    auto h = hole_cells(2 * p.a - 1, p.b, p.ks);
    auto core = rhombus_cells(p.a, p.b, p.x);
    h.insert(h.end(), core.begin(), core.end());
    return h;
  }
  return {};
}

std::string render_svg(const Region& r, const RenderOptions& opt) {
  Frame f;
  for (const TriCell& c : r.cells()) f.add(c);
  for (const TriCell& c : opt.holes) f.add(c);
  if (f.umin > f.umax) f = Frame{0, 0, 0, 0};

  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width()) +
                  "\" height=\"" + fmt(f.height()) + "\" viewBox=\"0 0 " + fmt(f.width()) + " " +
                  fmt(f.height()) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::string cell_style = "fill=\"#fbfbf8\" stroke=\"#b0b0b0\" stroke-width=\"0.5\"";
  for (const TriCell& c : r.cells()) s += polygon(f, cell_vertices(c), cell_style);
  std::set<TriCell> region_cells(r.cells().begin(), r.cells().end());
  for (const TriCell& c : opt.holes)
    if (!region_cells.count(c))
      s += polygon(f, cell_vertices(c), "fill=\"#404040\" stroke=\"#404040\" stroke-width=\"0.5\"");

  if (opt.overlay == Overlay::Tiling) {
    if (!r.free_edges().empty())
      throw UnsupportedActionError("tiling overlay needs a region without free edges");
    MatchGraph g = dual_graph(r);
    std::vector<int> m = find_matching(g);
    if (static_cast<int>(m.size()) * 2 != g.num_vertices())
      throw ContractError("region has no tiling");
    for (int e : m) {
      const TriCell& a = r.cells()[g.edges()[e].u];
      const TriCell& b = r.cells()[g.edges()[e].v];
      s += polygon(f, lozenge_outline(a, b),
                   std::string("fill=\"") + lozenge_fill(a, b) +
                       "\" stroke=\"black\" stroke-width=\"1\"");
    }
  }

  // Boundary: lattice edges with a region cell on exactly one side.
  std::map<LatticeEdge, int> edge_use;
  for (const TriCell& c : r.cells()) {
    auto vs = cell_vertices(c);
    for (int i = 0; i < 3; ++i) ++edge_use[make_edge(vs[i], vs[(i + 1) % 3])];
  }
  std::set<LatticeEdge> free_set(r.free_edges().begin(), r.free_edges().end());
  for (const auto& [e, n] : edge_use) {
    if (n != 1 || free_set.count(e)) continue;
    s += line(f.x(e.p.u), f.y(e.p.v), f.x(e.q.u), f.y(e.q.v),
              "stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"");
  }
  for (const LatticeEdge& e : r.free_edges())
    s += line(f.x(e.p.u), f.y(e.p.v), f.x(e.q.u), f.y(e.q.v),
              "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"4,3\"");

  auto draw_graph = [&](const MatchGraph& g) {
    auto pos = [&](int v) { return centroid(f, g.tags()[v][0]); };
    for (const MatchEdge& e : g.edges()) {
      auto [x1, y1] = pos(e.u);
      auto [x2, y2] = pos(e.v);
      const bool unit = e.w == 1;
      s += line(x1, y1, x2, y2,
                std::string("stroke=\"#c0392b\" stroke-width=\"1.5\"") +
                    (unit ? "" : " stroke-dasharray=\"2,2\""));
      if (!unit)
        s += "<text x=\"" + fmt((x1 + x2) / 2) + "\" y=\"" + fmt((y1 + y2) / 2) +
             "\" font-size=\"8\" fill=\"#c0392b\">" + e.w.get_str() + "</text>\n";
    }
    for (const MatchLoop& l : g.loops()) {
      auto [x, y] = pos(l.v);
      s += circle(x, y - 5, 5, "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"");
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      auto [x, y] = pos(v);
      s += circle(x, y, 2.5, "fill=\"#c0392b\"");
    }
  };
  if (opt.overlay == Overlay::Dual) draw_graph(dual_graph(r));
  if (opt.overlay == Overlay::Quotient)
    draw_graph(quotient_graph(dual_graph(r), symmetry(r, opt.quotient_sym)));

  s += "</svg>\n";
  return s;
}

}  // namespace lozenge
