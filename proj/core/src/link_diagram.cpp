#include "legkh/link_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "legkh/error.hpp"

namespace legkh {
namespace {

constexpr int kUnset = -1;

int next_slot(int index) { return (index + 1) & 3; }
int across(int index) { return (index + 2) & 3; }

// Orients an unoriented slot pairing by walking strands straight through
// every crossing. Components are started from the lowest unvisited slot.
std::vector<Arc> orient_by_tracing(int crossing_count, const std::vector<std::array<Slot, 4>>& partner) {
  std::vector<Arc> arcs;
  std::vector<std::array<bool, 4>> seen(crossing_count, {false, false, false, false});
  for (int c = 0; c < crossing_count; ++c) {
    for (int start_index = 0; start_index < 2; ++start_index) {
      if (seen[c][start_index]) continue;
      Slot in{c, start_index};
      do {
        Slot out{in.crossing, across(in.index)};
        seen[in.crossing][in.index] = true;
        seen[out.crossing][out.index] = true;
        Slot next = partner[out.crossing][out.index];
        arcs.push_back(Arc{out, next});
        in = next;
      } while (!(in == Slot{c, start_index}));
    }
  }
  return arcs;
}

}  // namespace

LinkDiagram LinkDiagram::unknot() {
  LinkDiagram d;
  d.free_loops_ = 1;
  return d;
}

LinkDiagram LinkDiagram::from_arcs(int crossing_count, std::vector<Arc> arcs, int free_loops,
                                   std::optional<Corner> outer) {
  if (crossing_count < 0 || free_loops < 0) throw Error(ErrorKind::InvalidDiagram, "negative size");
  LinkDiagram d;
  d.slots_.assign(crossing_count, {kUnset, kUnset, kUnset, kUnset});
  d.free_loops_ = free_loops;
  auto claim = [&](Slot s, int arc_id) {
    if (s.crossing < 0 || s.crossing >= crossing_count || s.index < 0 || s.index > 3) {
      throw Error(ErrorKind::InvalidDiagram, "arc endpoint out of range");
    }
    int& cell = d.slots_[s.crossing][s.index];
    if (cell != kUnset) {
      throw Error(ErrorKind::InvalidDiagram,
                  "slot " + std::to_string(s.index) + " of crossing " + std::to_string(s.crossing) + " used twice");
    }
    cell = arc_id;
  };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    claim(arcs[i].tail, static_cast<int>(i));
    claim(arcs[i].head, static_cast<int>(i));
  }
  d.arcs_ = std::move(arcs);
  for (int c = 0; c < crossing_count; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (d.slots_[c][s] == kUnset) {
        throw Error(ErrorKind::InvalidDiagram, "crossing " + std::to_string(c) + " is not 4-valent");
      }
    }
    for (int s = 0; s < 2; ++s) {
      if (d.is_head({c, s}) == d.is_head({c, s + 2})) {
        throw Error(ErrorKind::InvalidDiagram, "strand orientation breaks at crossing " + std::to_string(c));
      }
    }
  }
  if (outer && (outer->crossing < 0 || outer->crossing >= crossing_count)) {
    throw Error(ErrorKind::InvalidDiagram, "outer corner out of range");
  }
  d.outer_ = outer;
  return d;
}

LinkDiagram LinkDiagram::from_pd(std::span<const std::array<int, 4>> code) {
  if (code.empty()) return unknot();
  const int n = static_cast<int>(code.size());
  std::map<int, std::vector<Slot>> where;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) where[code[c][s]].push_back({c, s});
  }
  std::vector<std::array<Slot, 2>> ends;
  std::vector<std::array<int, 4>> arc_of(n);
  for (const auto& [label, slots] : where) {
    if (slots.size() != 2) {
      throw Error(ErrorKind::InvalidDiagram, "label " + std::to_string(label) + " must occur exactly twice");
    }
    const int id = static_cast<int>(ends.size());
    ends.push_back({slots[0], slots[1]});
    for (const Slot& s : slots) arc_of[s.crossing][s.index] = id;
  }

  // +1: slot is an incoming end, -1: outgoing, 0: undecided.
  std::vector<std::array<int, 4>> dir(n, {0, 0, 0, 0});
  std::queue<Slot> pending;
  auto assign = [&](Slot s, int value) {
    int& cell = dir[s.crossing][s.index];
    if (cell == value) return;
    if (cell != 0) throw Error(ErrorKind::InvalidDiagram, "inconsistent strand orientation in PD code");
    cell = value;
    pending.push(s);
  };
  auto propagate = [&] {
    while (!pending.empty()) {
      Slot s = pending.front();
      pending.pop();
      const int value = dir[s.crossing][s.index];
      assign({s.crossing, across(s.index)}, -value);
      const auto& pair = ends[arc_of[s.crossing][s.index]];
      const Slot other = pair[0] == s ? pair[1] : pair[0];
      assign(other, -value);
    }
  };
  for (int c = 0; c < n; ++c) assign({c, 0}, +1);
  propagate();
  // Strands that only ever pass over get entered at slot 1.
  for (int c = 0; c < n; ++c) {
    if (dir[c][1] == 0) {
      assign({c, 1}, +1);
      propagate();
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(ends.size());
  for (const auto& pair : ends) {
    const bool first_is_head = dir[pair[0].crossing][pair[0].index] > 0;
    arcs.push_back(first_is_head ? Arc{pair[1], pair[0]} : Arc{pair[0], pair[1]});
  }
  return from_arcs(n, std::move(arcs));
}

Slot LinkDiagram::opposite(Slot s) const {
  const Arc& a = arc(arc_at(s));
  return a.tail == s ? a.head : a.tail;
}

int LinkDiagram::sign(int crossing) const {
  const int under_in = is_head({crossing, 0}) ? 0 : 2;
  const int over_out = is_head({crossing, 1}) ? 3 : 1;
  return over_out == next_slot(under_in) ? +1 : -1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

int LinkDiagram::positive_crossings() const {
  int count = 0;
  for (int c = 0; c < crossing_count(); ++c) count += sign(c) > 0 ? 1 : 0;
  return count;
}

int LinkDiagram::negative_crossings() const { return crossing_count() - positive_crossings(); }

int LinkDiagram::component_count() const {
  std::vector<char> used(arcs_.size(), 0);
  int components = free_loops_;
  for (std::size_t start = 0; start < arcs_.size(); ++start) {
    if (used[start]) continue;
    ++components;
    int id = static_cast<int>(start);
    while (!used[id]) {
      used[id] = 1;
      const Slot h = arc(id).head;
      id = arc_at({h.crossing, across(h.index)});
    }
  }
  return components;
}

bool LinkDiagram::connected() const {
  const int n = crossing_count();
  if (n == 0) return free_loops_ == 1;
  if (free_loops_ != 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int groups = n;
  for (const Arc& a : arcs_) {
    const int x = find(a.tail.crossing), y = find(a.head.crossing);
    if (x != y) {
      parent[x] = y;
      --groups;
    }
  }
  return groups == 1;
}

FaceMap LinkDiagram::faces() const {
  if (!connected()) throw Error(ErrorKind::Disconnected, "diagram is not connected");
  FaceMap map;
  const int n = crossing_count();
  if (n == 0) {
    map.count = 2;
    return map;
  }
  map.corner_face.assign(n, {kUnset, kUnset, kUnset, kUnset});
  std::vector<int> size;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      if (map.corner_face[c][k] != kUnset) continue;
      const int face = map.count++;
      size.push_back(0);
      // Walk the face keeping it on the right-hand side.
      Corner at{c, k};
      while (map.corner_face[at.crossing][at.index] == kUnset) {
        map.corner_face[at.crossing][at.index] = face;
        ++size.back();
        at = next_corner(at);
      }
    }
  }
  if (outer_) {
    map.outer = map.corner_face[outer_->crossing][outer_->index];
  } else {
    map.outer = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  }
  return map;
}

Corner LinkDiagram::next_corner(Corner at) const {
  const Slot far = opposite({at.crossing, next_slot(at.index)});
  return {far.crossing, far.index};
}

LinkDiagram LinkDiagram::smooth(std::span<const Smoothing> choice) const {
  const int n = crossing_count();
  if (static_cast<int>(choice.size()) != n) throw Error(ErrorKind::InvalidDiagram, "smoothing choice size mismatch");
  std::vector<int> renumber(n, kUnset);
  int kept = 0;
  for (int c = 0; c < n; ++c) {
    if (choice[c] == Smoothing::Keep) renumber[c] = kept++;
  }
  auto joined = [&](Slot s) -> Slot {
    const bool a = choice[s.crossing] == Smoothing::A;
    // A pairs 0-1 and 2-3; B pairs 1-2 and 3-0.
    const bool up = a ? (s.index % 2 == 0) : (s.index % 2 == 1);
    return {s.crossing, up ? next_slot(s.index) : (s.index + 3) & 3};
  };

  std::vector<std::array<Slot, 4>> partner(kept);
  std::vector<std::array<char, 4>> visited(n, {0, 0, 0, 0});
  auto mark = [&](Slot s) { visited[s.crossing][s.index] = 1; };
  for (int c = 0; c < n; ++c) {
    if (renumber[c] == kUnset) continue;
    for (int k = 0; k < 4; ++k) {
      Slot s = opposite({c, k});
      while (renumber[s.crossing] == kUnset) {
        mark(s);
        const Slot through = joined(s);
        mark(through);
        s = opposite(through);
      }
      partner[renumber[c]][k] =
          Slot{renumber[s.crossing], s.index};
    }
  }
  int loops = free_loops_;
  for (int c = 0; c < n; ++c) {
    if (renumber[c] != kUnset) continue;
    for (int k = 0; k < 4; ++k) {
      if (visited[c][k]) continue;
      ++loops;
      Slot s{c, k};
      while (!visited[s.crossing][s.index]) {
        mark(s);
        const Slot through = joined(s);
        mark(through);
        s = opposite(through);
      }
    }
  }
  return from_arcs(kept, orient_by_tracing(kept, partner), loops);
}

LinkDiagram LinkDiagram::mirror() const {
  // Relabel slot k as k-1 so the old over-strand ends land on 0 and 2.
  std::vector<Arc> arcs = arcs_;
  auto shift = [](Slot s) { return Slot{s.crossing, (s.index + 3) & 3}; };
  for (Arc& a : arcs) {
    a.tail = shift(a.tail);
    a.head = shift(a.head);
  }
  std::optional<Corner> outer;
  if (outer_) outer = Corner{outer_->crossing, (outer_->index + 3) & 3};
  return from_arcs(crossing_count(), std::move(arcs), free_loops_, outer);
}

std::vector<std::array<int, 4>> LinkDiagram::pd_code() const {
  std::vector<std::array<int, 4>> code;
  code.reserve(slots_.size());
  for (int c = 0; c < crossing_count(); ++c) {
    const int first = is_head({c, 0}) ? 0 : 2;
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) x[k] = arc_at({c, (first + k) & 3}) + 1;
    code.push_back(x);
  }
  return code;
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<int> numbers;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isdigit(ch) || (ch == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      numbers.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    } else if (std::isalpha(ch) && ch != 'X' && ch != 'P' && ch != 'D') {
      throw Error(ErrorKind::MalformedToken, std::string("unexpected character '") + text[i] + "' in PD code");
    } else {
      ++i;
    }
  }
  if (numbers.size() % 4 != 0) throw Error(ErrorKind::MalformedToken, "PD code needs groups of four labels");
  std::vector<std::array<int, 4>> code(numbers.size() / 4);
  for (std::size_t k = 0; k < numbers.size(); ++k) code[k / 4][k % 4] = numbers[k];
  return LinkDiagram::from_pd(code);
}

}  // namespace legkh
