#pragma once

#include <utility>
#include <vector>

#include "legkh/link_diagram.hpp"

namespace legkh {

struct Coloring {
  std::vector<bool> black;  // indexed by face id of LinkDiagram::faces()
  bool reversed = false;    // false: the unbounded face is white
};

// Both checkerboard colorings; the canonical one (unbounded face white) first.
std::pair<Coloring, Coloring> checkerboard(const LinkDiagram& diagram);

struct TaitEdge {
  int tail = 0;
  int head = 0;
  int sign = +1;
  int order = 0;     // crossing rank; also the activity ordering
  int crossing = 0;  // crossing id in the source diagram
};

// Signed, edge-ordered planar multigraph. Edge ids are positions in edges()
// and edges are sorted by order. Half-edge 2e sits at the tail of edge e,
// 2e+1 at its head; rotation(v) lists the half-edges around v in cyclic order.
class TaitGraph {
 public:
  TaitGraph() : vertex_count_(1), rotation_(1) {}

  // Throws Error(Disconnected) or Error(NonplanarRotation) when the rotation
  // system does not describe a connected plane embedding.
  TaitGraph(int vertex_count, std::vector<TaitEdge> edges, std::vector<std::vector<int>> rotation);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<TaitEdge>& edges() const { return edges_; }
  const TaitEdge& edge(int id) const { return edges_[id]; }
  const std::vector<int>& rotation(int vertex) const { return rotation_[vertex]; }

  int half_edge_vertex(int half) const { return half % 2 == 0 ? edges_[half / 2].tail : edges_[half / 2].head; }
  // Next half-edge around the same vertex.
  int rotate(int half) const;

  int positive_edges() const;
  int negative_edges() const { return edge_count() - positive_edges(); }

  // Orbits of rotate(twin(h)); each is the boundary walk of one face.
  std::vector<std::vector<int>> face_walks() const;
  int face_count() const;

 private:
  int vertex_count_;
  std::vector<TaitEdge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;  // half-edge -> index in its vertex rotation
};

// One vertex per black face, one edge per crossing. An edge is positive when
// the black corners are the ones swept by turning the over-strand
// counterclockwise.
TaitGraph tait_graph(const LinkDiagram& diagram, const Coloring& coloring);

// Geometric dual through the rotation system: faces become vertices, each
// edge keeps its id and order and flips its sign.
TaitGraph dual_graph(const TaitGraph& graph);

// Vertex map g -> h induced by sharing half-edge ids, when it is a bijection
// that also preserves edge endpoints, signs and orders; empty otherwise.
std::vector<int> edge_preserving_isomorphism(const TaitGraph& g, const TaitGraph& h);

}  // namespace legkh
