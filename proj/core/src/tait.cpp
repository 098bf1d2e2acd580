#include "legkh/tait.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "legkh/error.hpp"

namespace legkh {

std::pair<Coloring, Coloring> checkerboard(const LinkDiagram& diagram) {
  const FaceMap map = diagram.faces();
  // Faces on the two sides of any arc differ in color; corners (c,k) and
  // (c,k+1) are separated by the arc at slot k+1.
  std::vector<std::vector<int>> adjacent(map.count);
  for (const auto& corners : map.corner_face) {
    for (int k = 0; k < 4; ++k) {
      adjacent[corners[k]].push_back(corners[(k + 1) & 3]);
      adjacent[corners[(k + 1) & 3]].push_back(corners[k]);
    }
  }
  std::vector<int> color(map.count, -1);
  if (map.corner_face.empty()) {
    color = {0, 1};  // crossingless circle: outside white, inside black
  } else {
    std::queue<int> todo;
    color[map.outer] = 0;
    todo.push(map.outer);
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int g : adjacent[f]) {
        if (color[g] == -1) {
          color[g] = 1 - color[f];
          todo.push(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorKind::InvalidDiagram, "faces admit no checkerboard coloring");
        }
      }
    }
  }
  Coloring canonical, reversed;
  reversed.reversed = true;
  for (int f = 0; f < map.count; ++f) {
    canonical.black.push_back(color[f] == 1);
    reversed.black.push_back(color[f] != 1);
  }
  return {canonical, reversed};
}

TaitGraph::TaitGraph(int vertex_count, std::vector<TaitEdge> edges, std::vector<std::vector<int>> rotation)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (vertex_count_ < 1 || static_cast<int>(rotation_.size()) != vertex_count_) {
    throw Error(ErrorKind::NonplanarRotation, "rotation system needs one list per vertex");
  }
  for (std::size_t e = 1; e < edges_.size(); ++e) {
    if (edges_[e - 1].order >= edges_[e].order) {
      throw Error(ErrorKind::InvalidDiagram, "edges must be sorted by strictly increasing order");
    }
  }
  position_.assign(2 * edges_.size(), -1);
  for (int v = 0; v < vertex_count_; ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const int h = rotation_[v][i];
      if (h < 0 || h >= static_cast<int>(position_.size()) || position_[h] != -1 || half_edge_vertex(h) != v) {
        throw Error(ErrorKind::NonplanarRotation, "rotation at vertex " + std::to_string(v) + " is inconsistent");
      }
      position_[h] = static_cast<int>(i);
    }
  }
  if (std::find(position_.begin(), position_.end(), -1) != position_.end()) {
    throw Error(ErrorKind::NonplanarRotation, "some half-edge is missing from the rotation system");
  }

  std::vector<bool> reached(vertex_count_, false);
  std::queue<int> todo;
  reached[0] = true;
  todo.push(0);
  int seen = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int h : rotation_[v]) {
      const int w = half_edge_vertex(h ^ 1);
      if (!reached[w]) {
        reached[w] = true;
        ++seen;
        todo.push(w);
      }
    }
  }
  if (seen != vertex_count_) throw Error(ErrorKind::Disconnected, "Tait graph is not connected");
  if (vertex_count_ - edge_count() + face_count() != 2) {
    throw Error(ErrorKind::NonplanarRotation, "rotation system fails the Euler check V - E + F = 2");
  }
}

int TaitGraph::rotate(int half) const {
  const auto& around = rotation_[half_edge_vertex(half)];
  return around[(position_[half] + 1) % around.size()];
}

int TaitGraph::positive_edges() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const TaitEdge& e) { return e.sign > 0; }));
}

std::vector<std::vector<int>> TaitGraph::face_walks() const {
  std::vector<std::vector<int>> walks;
  std::vector<bool> used(2 * edges_.size(), false);
  for (int h = 0; h < static_cast<int>(used.size()); ++h) {
    if (used[h]) continue;
    walks.emplace_back();
    for (int at = h; !used[at]; at = rotate(at ^ 1)) {
      used[at] = true;
      walks.back().push_back(at);
    }
  }
  return walks;
}

int TaitGraph::face_count() const {
  // A lone vertex still bounds one face.
  return edges_.empty() ? 1 : static_cast<int>(face_walks().size());
}

TaitGraph tait_graph(const LinkDiagram& diagram, const Coloring& coloring) {
  const FaceMap map = diagram.faces();
  if (static_cast<int>(coloring.black.size()) != map.count) {
    throw Error(ErrorKind::InvalidDiagram, "coloring does not match the diagram's faces");
  }
  std::vector<int> vertex_of_face(map.count, -1);
  int vertices = 0;
  for (int f = 0; f < map.count; ++f) {
    if (coloring.black[f]) vertex_of_face[f] = vertices++;
  }
  const int n = diagram.crossing_count();
  if (n == 0) return TaitGraph();

  std::vector<int> first_corner(n);
  std::vector<TaitEdge> edges;
  for (int c = 0; c < n; ++c) {
    const auto& corners = map.corner_face[c];
    const bool a_black = coloring.black[corners[1]];
    if (coloring.black[corners[0]] == a_black) {
      throw Error(ErrorKind::InvalidDiagram, "coloring is not a checkerboard coloring");
    }
    first_corner[c] = a_black ? 1 : 0;
    edges.push_back({vertex_of_face[corners[first_corner[c]]], vertex_of_face[corners[first_corner[c] + 2]],
                     a_black ? +1 : -1, c, c});
  }

  std::vector<std::vector<int>> rotation(vertices);
  std::vector<bool> walked(map.count, false);
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      const int f = map.corner_face[c][k];
      if (!coloring.black[f] || walked[f]) continue;
      walked[f] = true;
      Corner at{c, k};
      do {
        rotation[vertex_of_face[f]].push_back(2 * at.crossing + (at.index == first_corner[at.crossing] ? 0 : 1));
        at = diagram.next_corner(at);
      } while (!(at == Corner{c, k}));
    }
  }
  return TaitGraph(vertices, std::move(edges), std::move(rotation));
}

TaitGraph dual_graph(const TaitGraph& graph) {
  if (graph.edge_count() == 0) return TaitGraph();
  const auto walks = graph.face_walks();
  std::vector<int> face_of(2 * graph.edge_count());
  for (std::size_t f = 0; f < walks.size(); ++f) {
    for (int h : walks[f]) face_of[h] = static_cast<int>(f);
  }
  std::vector<TaitEdge> edges;
  for (int e = 0; e < graph.edge_count(); ++e) {
    const TaitEdge& old = graph.edge(e);
    edges.push_back({face_of[2 * e], face_of[2 * e + 1], -old.sign, old.order, old.crossing});
  }
  return TaitGraph(static_cast<int>(walks.size()), std::move(edges), walks);
}

std::vector<int> edge_preserving_isomorphism(const TaitGraph& g, const TaitGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return {};
  std::vector<int> map(g.vertex_count(), -1);
  if (g.edge_count() == 0) {
    map[0] = 0;
    return map;
  }
  for (int half = 0; half < 2 * g.edge_count(); ++half) {
    const TaitEdge& a = g.edge(half / 2);
    const TaitEdge& b = h.edge(half / 2);
    if (a.sign != b.sign || a.order != b.order || a.crossing != b.crossing) return {};
    int& slot = map[g.half_edge_vertex(half)];
    const int target = h.half_edge_vertex(half);
    if (slot == -1) slot = target;
    else if (slot != target) return {};
  }
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (sorted[v] != v) return {};
  }
  return map;
}

}  // namespace legkh
