#include "legkh/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "legkh/error.hpp"

namespace legkh {
namespace {

// Union-find with undo, for the contraction/deletion recursion.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    --sets_;
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
    ++sets_;
  }
  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
  int sets_;
};

class TreeWalker {
 public:
  TreeWalker(const TaitGraph& g, const std::function<void(const EdgeSet&)>& visit)
      : g_(g), visit_(visit), dsu_(g.vertex_count()) {}

  void run(int e) {
    if (dsu_.sets() == 1) {
      visit_(chosen_);
      return;
    }
    if (e == g_.edge_count()) return;
    const TaitEdge& edge = g_.edge(e);
    const int a = dsu_.find(edge.tail);
    const int b = dsu_.find(edge.head);
    if (a == b) {
      run(e + 1);
      return;
    }
    const bool forced = !reachable_without(e, a, b);
    chosen_.push_back(e);
    dsu_.unite(a, b);
    run(e + 1);
    dsu_.undo();
    chosen_.pop_back();
    if (!forced) run(e + 1);
  }

 private:
  // Is b reachable from a in the contracted graph using only edges after e?
  bool reachable_without(int e, int a, int b) const {
    std::vector<std::vector<int>> adj(g_.vertex_count());
    for (int f = e + 1; f < g_.edge_count(); ++f) {
      const int x = dsu_.find(g_.edge(f).tail);
      const int y = dsu_.find(g_.edge(f).head);
      if (x == y) continue;
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<int> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (x == b) return true;
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  const TaitGraph& g_;
  const std::function<void(const EdgeSet&)>& visit_;
  RollbackDsu dsu_;
  EdgeSet chosen_;
};

// Vertex side of each vertex after removing `skip` from the tree (0 or 1).
std::vector<int> split_tree(const TaitGraph& g, const EdgeSet& tree, int skip) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int e : tree) {
    if (e == skip) continue;
    adj[g.edge(e).tail].push_back(g.edge(e).head);
    adj[g.edge(e).head].push_back(g.edge(e).tail);
  }
  std::vector<int> side(g.vertex_count(), 1);
  std::vector<int> stack{g.edge(skip).tail};
  side[g.edge(skip).tail] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (side[y] == 1) {
        side[y] = 0;
        stack.push_back(y);
      }
    }
  }
  return side;
}

bool contains(const EdgeSet& set, int e) { return std::binary_search(set.begin(), set.end(), e); }

int lowest(const TaitGraph& g, const EdgeSet& set) {
  return *std::min_element(set.begin(), set.end(),
                           [&](int a, int b) { return g.edge(a).order < g.edge(b).order; });
}

EdgeLabel make_label(bool internal, bool active, bool negative) {
  const int base = internal ? 0 : 4;
  return static_cast<EdgeLabel>(base + (active ? 0 : 2) + (negative ? 1 : 0));
}

}  // namespace

std::string_view symbol(EdgeLabel label) noexcept {
  switch (label) {
    case EdgeLabel::InternalActivePositive: return "L";
    case EdgeLabel::InternalActiveNegative: return "Lbar";
    case EdgeLabel::InternalInactivePositive: return "D";
    case EdgeLabel::InternalInactiveNegative: return "Dbar";
    case EdgeLabel::ExternalActivePositive: return "l";
    case EdgeLabel::ExternalActiveNegative: return "lbar";
    case EdgeLabel::ExternalInactivePositive: return "d";
    case EdgeLabel::ExternalInactiveNegative: return "dbar";
  }
  return "?";
}

bool is_internal(EdgeLabel label) noexcept { return static_cast<int>(label) < 4; }
bool is_active(EdgeLabel label) noexcept { return (static_cast<int>(label) & 2) == 0; }
bool is_negative(EdgeLabel label) noexcept { return (static_cast<int>(label) & 1) != 0; }

EdgeLabel dual_label(EdgeLabel label) noexcept {
  // Tree membership flips, sign flips, activity is kept.
  return make_label(!is_internal(label), is_active(label), !is_negative(label));
}

std::string_view to_string(TreeClass c) noexcept {
  switch (c) {
    case TreeClass::Good: return "good";
    case TreeClass::Bad: return "bad";
    case TreeClass::Neither: return "neither";
  }
  return "?";
}

int SpanningTreeRecord::count(EdgeLabel label) const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), label));
}

void for_each_spanning_tree(const TaitGraph& graph, const std::function<void(const EdgeSet&)>& visit) {
  TreeWalker walker(graph, visit);
  walker.run(0);
}

std::vector<EdgeSet> spanning_trees(const TaitGraph& graph) {
  std::vector<EdgeSet> trees;
  for_each_spanning_tree(graph, [&](const EdgeSet& t) { trees.push_back(t); });
  return trees;
}

bool is_spanning_tree(const TaitGraph& graph, const EdgeSet& tree) {
  if (static_cast<int>(tree.size()) != graph.vertex_count() - 1) return false;
  if (!std::is_sorted(tree.begin(), tree.end()) || std::adjacent_find(tree.begin(), tree.end()) != tree.end()) {
    return false;
  }
  RollbackDsu dsu(graph.vertex_count());
  for (int e : tree) {
    if (e < 0 || e >= graph.edge_count()) return false;
    if (!dsu.unite(graph.edge(e).tail, graph.edge(e).head)) return false;
  }
  return dsu.sets() == 1;
}

EdgeSet cut_set(const TaitGraph& graph, const EdgeSet& tree, int edge) {
  const auto side = split_tree(graph, tree, edge);
  EdgeSet cut;
  for (int f = 0; f < graph.edge_count(); ++f) {
    if (side[graph.edge(f).tail] != side[graph.edge(f).head]) cut.push_back(f);
  }
  return cut;
}

EdgeSet cycle_set(const TaitGraph& graph, const EdgeSet& tree, int edge) {
  // Path in the tree from tail to head, by BFS parents.
  std::vector<std::vector<std::pair<int, int>>> adj(graph.vertex_count());
  for (int e : tree) {
    adj[graph.edge(e).tail].push_back({graph.edge(e).head, e});
    adj[graph.edge(e).head].push_back({graph.edge(e).tail, e});
  }
  const int from = graph.edge(edge).tail;
  const int to = graph.edge(edge).head;
  std::vector<int> via(graph.vertex_count(), -1);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::queue<int> todo;
  todo.push(from);
  seen[from] = true;
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop();
    for (auto [y, e] : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        via[y] = e;
        todo.push(y);
      }
    }
  }
  EdgeSet cycle{edge};
  for (int x = to; x != from;) {
    const int e = via[x];
    cycle.push_back(e);
    x = graph.edge(e).tail == x ? graph.edge(e).head : graph.edge(e).tail;
  }
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

SpanningTreeRecord classify_activities(const TaitGraph& graph, const EdgeSet& tree) {
  if (!is_spanning_tree(graph, tree)) throw Error(ErrorKind::NotASpanningTree, "edge set is not a spanning tree");
  SpanningTreeRecord rec;
  rec.tree = tree;
  rec.labels.resize(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) {
    const bool internal = contains(tree, e);
    const EdgeSet set = internal ? cut_set(graph, tree, e) : cycle_set(graph, tree, e);
    rec.labels[e] = make_label(internal, lowest(graph, set) == e, graph.edge(e).sign < 0);
  }
  using enum EdgeLabel;
  rec.u = rec.count(InternalActivePositive) - rec.count(ExternalActivePositive) - rec.count(InternalActiveNegative) +
          rec.count(ExternalActiveNegative);
  rec.v = rec.count(InternalActivePositive) + rec.count(InternalInactivePositive) +
          rec.count(ExternalActiveNegative) + rec.count(ExternalInactiveNegative);
  return rec;
}

TreeClass classify_against_front(int u, int cusp_pairs) noexcept {
  if (u == 1 - cusp_pairs) return TreeClass::Good;
  if (u == 2 - cusp_pairs) return TreeClass::Bad;
  return TreeClass::Neither;
}

DualTree dual_tree(const TaitGraph& graph, const TaitGraph& dual, const EdgeSet& tree) {
  if (dual.edge_count() != graph.edge_count()) {
    throw Error(ErrorKind::ConventionError, "dual graph has a different edge count");
  }
  DualTree out;
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!contains(tree, e)) out.tree.push_back(e);
  }
  if (!is_spanning_tree(dual, out.tree)) {
    throw Error(ErrorKind::ConventionError, "complement of a spanning tree is not a spanning tree of the dual");
  }
  const SpanningTreeRecord primal = classify_activities(graph, tree);
  out.record = classify_activities(dual, out.tree);
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (out.record.labels[e] != dual_label(primal.labels[e])) {
      throw Error(ErrorKind::ConventionError, "edge " + std::to_string(e) + " is " +
                                                  std::string(symbol(primal.labels[e])) + " but its dual is " +
                                                  std::string(symbol(out.record.labels[e])));
    }
  }
  return out;
}

GeneratorPair to_khovanov_bigrading(int u, int v, int crossings, int writhe) {
  if ((crossings - writhe) % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "crossing count " + std::to_string(crossings) + " and writhe " +
                                                std::to_string(writhe) + " differ in parity");
  }
  const int i = u - v + writhe + (crossings - writhe) / 2;
  const int j = i + u + writhe - 1;
  return {u, v, {Bigrading{i, j}, Bigrading{i, j + 2}}};
}

LaurentPoly tree_euler_characteristic(const TaitGraph& graph, int crossings, int writhe) {
  LaurentPoly chi;
  for_each_spanning_tree(graph, [&](const EdgeSet& tree) {
    const auto rec = classify_activities(graph, tree);
    for (const Bigrading& b : to_khovanov_bigrading(rec.u, rec.v, crossings, writhe).khovanov) {
      chi.add(b.j, b.i % 2 == 0 ? 1 : -1);
    }
  });
  return chi;
}

std::vector<Smoothing> tree_smoothings(const TaitGraph& graph, const SpanningTreeRecord& record, int crossings) {
  std::vector<Smoothing> choice(crossings, Smoothing::Keep);
  for (int e = 0; e < graph.edge_count(); ++e) {
    switch (record.labels[e]) {
      case EdgeLabel::InternalInactivePositive:
      case EdgeLabel::ExternalInactiveNegative:
        choice[graph.edge(e).crossing] = Smoothing::A;
        break;
      case EdgeLabel::ExternalInactivePositive:
      case EdgeLabel::InternalInactiveNegative:
        choice[graph.edge(e).crossing] = Smoothing::B;
        break;
      default:
        break;
    }
  }
  return choice;
}

SplicedUnknot splice_unknot(const LinkDiagram& diagram, const TaitGraph& graph, const SpanningTreeRecord& record) {
  const auto choice = tree_smoothings(graph, record, diagram.crossing_count());
  LinkDiagram spliced = diagram.smooth(choice);
  if (spliced.component_count() != 1) {
    throw Error(ErrorKind::NotUnknot,
                "splicing along the tree left " + std::to_string(spliced.component_count()) + " components");
  }
  const int w = spliced.writhe();
  return {std::move(spliced), w};
}

SplicedFront splice_front(const FrontDiagram& front, const TaitGraph& graph, const SpanningTreeRecord& record) {
  const auto choice = tree_smoothings(graph, record, front.crossing_count());
  std::vector<FrontEvent> events;
  int crossing = 0;
  for (const FrontEvent& ev : front.events()) {
    if (ev.kind != FrontEventKind::Crossing) {
      events.push_back(ev);
      continue;
    }
    switch (choice[crossing++]) {
      case Smoothing::Keep:
        events.push_back(ev);
        break;
      case Smoothing::A:
        break;
      case Smoothing::B:
        events.push_back({FrontEventKind::RightCusp, ev.position});
        events.push_back({FrontEventKind::LeftCusp, ev.position});
        break;
    }
  }
  FrontDiagram spliced(std::move(events));
  const int tb = thurston_bennequin(spliced);
  const int pairs = spliced.cusp_pairs();
  return {std::move(spliced), tb, pairs};
}

SpanningTreeRecord min_x_spanning_tree(const TaitGraph& graph) {
  std::vector<int> by_order(graph.edge_count());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(),
            [&](int a, int b) { return graph.edge(a).order < graph.edge(b).order; });
  RollbackDsu dsu(graph.vertex_count());
  EdgeSet tree;
  for (int e : by_order) {
    if (dsu.unite(graph.edge(e).tail, graph.edge(e).head)) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return classify_activities(graph, tree);
}

}  // namespace legkh
