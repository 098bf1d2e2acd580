#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "legkh/front.hpp"
#include "legkh/laurent.hpp"
#include "legkh/link_diagram.hpp"
#include "legkh/tait.hpp"

namespace legkh {

// Sorted edge ids.
using EdgeSet = std::vector<int>;

// Tutte activity of an edge with respect to a spanning tree, split by sign.
// The short symbols used in reports are L, Lbar, D, Dbar (tree edges) and
// l, lbar, d, dbar (edges outside the tree); "bar" marks negative edges.
enum class EdgeLabel : std::uint8_t {
  InternalActivePositive,    // L
  InternalActiveNegative,    // Lbar
  InternalInactivePositive,  // D
  InternalInactiveNegative,  // Dbar
  ExternalActivePositive,    // l
  ExternalActiveNegative,    // lbar
  ExternalInactivePositive,  // d
  ExternalInactiveNegative,  // dbar
};

std::string_view symbol(EdgeLabel label) noexcept;
bool is_internal(EdgeLabel label) noexcept;
bool is_active(EdgeLabel label) noexcept;
bool is_negative(EdgeLabel label) noexcept;

// Label carried by the dual edge under the dual tree: L<->lbar, D<->dbar,
// l<->Lbar, d<->Dbar.
EdgeLabel dual_label(EdgeLabel label) noexcept;

enum class TreeClass : std::uint8_t { Neither, Good, Bad };

std::string_view to_string(TreeClass c) noexcept;

struct SpanningTreeRecord {
  EdgeSet tree;
  std::vector<EdgeLabel> labels;  // indexed by edge id
  int u = 0;
  int v = 0;
  TreeClass tree_class = TreeClass::Neither;

  int count(EdgeLabel label) const;
};

struct Bigrading {
  int i = 0;
  int j = 0;

  friend bool operator==(const Bigrading&, const Bigrading&) = default;
};

// The two generators contributed by one tree: (u, v) and (u + 2, v + 2), with
// their homological/quantum gradings.
struct GeneratorPair {
  int u = 0;
  int v = 0;
  std::array<Bigrading, 2> khovanov;
};

// Every spanning tree once, in lexicographic order of the sorted edge lists.
// Contraction/deletion in edge order, forcing isthmuses and skipping loops.
void for_each_spanning_tree(const TaitGraph& graph, const std::function<void(const EdgeSet&)>& visit);
std::vector<EdgeSet> spanning_trees(const TaitGraph& graph);

bool is_spanning_tree(const TaitGraph& graph, const EdgeSet& tree);

// Edges joining the two components of tree - e (e is a tree edge).
EdgeSet cut_set(const TaitGraph& graph, const EdgeSet& tree, int edge);
// Edges of the unique cycle in tree + f (f is not a tree edge).
EdgeSet cycle_set(const TaitGraph& graph, const EdgeSet& tree, int edge);

// Throws Error(NotASpanningTree).
SpanningTreeRecord classify_activities(const TaitGraph& graph, const EdgeSet& tree);

// Good when u = 1 - C(F), bad when u = 2 - C(F).
TreeClass classify_against_front(int u, int cusp_pairs) noexcept;

struct DualTree {
  EdgeSet tree;
  SpanningTreeRecord record;
};

// Complementary edge set in the dual graph, re-classified there. Throws
// Error(ConventionError) if it is not a spanning tree or if any edge label
// fails to swap as dual_label() says.
DualTree dual_tree(const TaitGraph& graph, const TaitGraph& dual, const EdgeSet& tree);

// Inverts u = j - i - w + 1 and v = j - 2i + (n - w)/2 + 1.
// Throws Error(ParityViolation) unless n and w have the same parity.
GeneratorPair to_khovanov_bigrading(int u, int v, int crossings, int writhe);

// Sum over trees and both generators of (-1)^i q^j.
LaurentPoly tree_euler_characteristic(const TaitGraph& graph, int crossings, int writhe);

// Per-crossing resolution that turns the diagram into the twisted unknot of a
// tree: D and dbar crossings take A, d and Dbar take B, active ones stay.
std::vector<Smoothing> tree_smoothings(const TaitGraph& graph, const SpanningTreeRecord& record, int crossings);

struct SplicedUnknot {
  LinkDiagram diagram;
  int writhe = 0;
};

// Throws Error(NotUnknot) if the result has more than one component.
SplicedUnknot splice_unknot(const LinkDiagram& diagram, const TaitGraph& graph, const SpanningTreeRecord& record);

struct SplicedFront {
  FrontDiagram front;
  int tb = 0;
  int cusp_pairs = 0;
};

// Legendrian splicing of the front's word: an A-splice drops the crossing, a
// B-splice replaces X<p> by "R<p> L<p>".
SplicedFront splice_front(const FrontDiagram& front, const TaitGraph& graph, const SpanningTreeRecord& record);

// Minimum-weight spanning tree with weight = edge order, classified.
SpanningTreeRecord min_x_spanning_tree(const TaitGraph& graph);

}  // namespace legkh
