#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lozenge/exact.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

struct MatchEdge {
  int u = 0;
  int v = 0;  // u < v
  Rational w = 1;
};

struct MatchLoop {
  int v = 0;
  Rational w = 1;
};

// Weighted graph whose perfect matchings are counted. Each vertex carries the
// cells it stands for: one cell for a dual graph, a whole orbit for a quotient.
class MatchGraph {
 public:
  MatchGraph() = default;
  explicit MatchGraph(std::vector<std::vector<TriCell>> tags) : tags_(std::move(tags)) {}

  int num_vertices() const { return static_cast<int>(tags_.size()); }
  const std::vector<std::vector<TriCell>>& tags() const { return tags_; }
  const std::vector<MatchEdge>& edges() const { return edges_; }
  const std::vector<MatchLoop>& loops() const { return loops_; }

  // Returns the new edge index. Parallel edges are rejected.
  int add_edge(int u, int v, Rational w = 1);
  void add_loop(int v, Rational w = 1);
  void set_weight(int edge, Rational w) { edges_[edge].w = std::move(w); }
  int find_edge(int u, int v) const;

  // Counterclockwise list of incident edge indices per vertex.
  bool has_embedding() const { return rotation_.has_value(); }
  const std::vector<std::vector<int>>& rotation() const { return *rotation_; }
  void set_rotation(std::vector<std::vector<int>> rot) { rotation_ = std::move(rot); }
  void clear_rotation() { rotation_.reset(); }

  std::vector<std::vector<int>> adjacency() const;
  // Two-colouring, or nullopt if some cycle is odd (loops ignored).
  std::optional<std::vector<int>> bipartition() const;
  std::vector<std::vector<int>> components() const;

  // Subgraph on the vertices with keep[v], embedding restricted accordingly.
  MatchGraph induced(const std::vector<char>& keep) const;
  // Same vertices, edges with drop[e] removed.
  MatchGraph without_edges(const std::vector<char>& drop) const;

 private:
  std::vector<std::vector<TriCell>> tags_;
  std::vector<MatchEdge> edges_;
  std::vector<MatchLoop> loops_;
  std::optional<std::vector<std::vector<int>>> rotation_;
};

// Faces of the embedding as cyclic dart sequences; dart 2e runs u->v along
// edge e, dart 2e+1 runs back.
std::vector<std::vector<int>> embedding_faces(const MatchGraph& g);

MatchGraph dual_graph(const Region& r);
// Dual graph of an rbar region with its axis pairs weighted 1/2.
MatchGraph rbar_dual_graph(const Region& r);

enum class SymKind { Identity, Rot60, Rot120, Rot180, Rot240, Rot300, ReflH, ReflV, Composite };

// A plane isometry fixing a region: rotate by 60*rot degrees counterclockwise
// after an optional reflection across the vertical axis, realized as a
// permutation of the region's cell indices.
struct SymmetryElement {
  int rot = 0;
  bool refl = false;
  std::vector<int> perm;

  SymKind kind() const;
  std::string name() const;
  int order() const;
};

SymKind parse_sym_kind(const std::string& s);
const char* sym_kind_name(SymKind k);

// Throws SymmetryAbsentError if the isometry does not fix r.
SymmetryElement symmetry(const Region& r, SymKind kind);
SymmetryElement symmetry(const Region& r, int rot, bool refl);
SymmetryElement compose(const Region& r, const SymmetryElement& f, const SymmetryElement& g);
// All elements of the group generated by the given kinds.
std::vector<SymmetryElement> symmetry_group(const Region& r, const std::vector<SymKind>& gens);

MatchGraph quotient_graph(const MatchGraph& g, const SymmetryElement& gen);

struct FactorSplit {
  MatchGraph subgraph;
  int multiplier_log2 = 0;
};

FactorSplit factorization_split(const MatchGraph& g, SymKind axis);

std::pair<MatchGraph, Rational> remove_loop_vertex(const MatchGraph& g);

// Cells standing for the vertices of a split subgraph: the upper cell of each
// orbit, or the east cell for an orbit lying on the horizontal axis.
Region split_region(const MatchGraph& sub);

// One edge per line: "u v num/den"; loops as "v v num/den".
std::string export_graph(const MatchGraph& g);

}  // namespace lozenge
