#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lozenge {

// Lattice vertices are (u, v) with u + v even; vertex (u, v) sits at
// (u * sqrt(3)/2, v/2) so lattice lines of one family are vertical.
struct Vertex {
  int u = 0;
  int v = 0;
  auto operator<=>(const Vertex&) const = default;
};

// With vertical lattice lines every unit triangle points left or right.
enum class Orient { Left, Right };

// Cell (u, v) occupies the strip between vertical lines u and u+1.
// Right cells (u+v odd) have vertices (u,v-1), (u,v+1), (u+1,v);
// Left cells (u+v even) have vertices (u+1,v-1), (u+1,v+1), (u,v).
struct TriCell {
  int u = 0;
  int v = 0;
  Orient orient = Orient::Left;

  auto operator<=>(const TriCell&) const = default;
};

TriCell make_cell(int u, int v);
bool well_formed(const TriCell& c);
std::vector<Vertex> cell_vertices(const TriCell& c);
// All three lattice neighbours, counterclockwise.
std::vector<TriCell> lattice_neighbors(const TriCell& c);
// Cell with the given vertex set, if those three points form a unit triangle.
std::optional<TriCell> cell_from_vertices(Vertex p, Vertex q, Vertex r);

// A lattice edge, stored with p < q.
struct LatticeEdge {
  Vertex p;
  Vertex q;
  auto operator<=>(const LatticeEdge&) const = default;
};

LatticeEdge make_edge(Vertex p, Vertex q);
// The lattice edge shared by two adjacent cells.
LatticeEdge shared_edge(const TriCell& a, const TriCell& b);

enum class Family { Custom, Hexagon, HoledHexagon, CoredHexagon, DRegion, RBarRegion };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct RegionParams {
  Family family = Family::Custom;
  int a = 0, b = 0, c = 0, x = 0, eps = 0;
  std::vector<int> ks, is, l, q;

  bool operator==(const RegionParams&) const = default;
};

class Region {
 public:
  Region() = default;
  Region(std::vector<TriCell> cells, std::vector<LatticeEdge> free_edges,
         RegionParams params);

  const std::vector<TriCell>& cells() const { return cells_; }
  const std::vector<LatticeEdge>& free_edges() const { return free_edges_; }
  const RegionParams& params() const { return params_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool contains(const TriCell& c) const;
  // Index into cells(), or -1.
  int index_of(const TriCell& c) const;
  std::vector<TriCell> neighbors(const TriCell& c) const;
  std::size_t count(Orient o) const;
  bool connected() const;

  // Doubled centre of the vertex bounding box; isometries act about it.
  Vertex center2() const;

  bool operator==(const Region& o) const {
    return cells_ == o.cells_ && free_edges_ == o.free_edges_ && params_ == o.params_;
  }

 private:
  std::vector<TriCell> cells_;
  std::vector<LatticeEdge> free_edges_;
  RegionParams params_;
};

// Hexagon with sides a, b, c, a, b, c clockwise from the north-west side.
// The west side runs from (0,0) to (0,2c).
Region hexagon(int a, int b, int c);

// hexagon(a, a, 2b) with 2s side-2 triangular holes along the horizontal axis.
// The left-pointing hole k has its vertical side on column 2k and apex at
// (2k-2, 2b); its mirror image sits across the vertical axis (column a).
Region holed_hexagon(int a, int b, const std::vector<int>& ks);

// holed_hexagon(2a-1, b, ks) minus the central horizontal rhombus of side 2x-1.
Region cored_hexagon(int a, int b, const std::vector<int>& ks, int x);

// Hole cells of holed_hexagon(a, b, ks), west holes then their mirrors.
std::vector<TriCell> hole_cells(int a, int b, const std::vector<int>& ks);
std::vector<TriCell> rhombus_cells(int a, int b, int x);

// The dual region of the half graph left by the factorization split; built in
// the frame of hexagon(n, n, 2*base) with n = 2a (|q| = |l|+1) or 2a+1
// (|q| = |l|). q indexes bottom bumps of the upper-west part counted from the
// axis; l indexes the horizontal axis pairs east of the centre.
Region rbar_region(const std::vector<int>& l, const std::vector<int>& q, int base);
// Axis pairs of an rbar region that carry weight 1/2 in its dual graph.
std::vector<std::pair<TriCell, TriCell>> rbar_half_pairs(const Region& r);

// Left half of the upper half of holed_hexagon(2a+1+eps, b, ks) where ks is
// read off the complement of `is` in [a]; free edges lie on the vertical axis.
Region d_region(int a, int b, int eps, const std::vector<int>& is);

// Cells strictly above the horizontal line v = row.
Region upper_part(const Region& r, int row);

std::string serialize_region(const Region& r);
Region deserialize_region(const std::string& bytes);

}  // namespace lozenge
