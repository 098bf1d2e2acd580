#include "legkh/front.hpp"

#include <numeric>
#include <optional>
#include <sstream>

#include "legkh/error.hpp"

namespace legkh {
namespace {

constexpr int kNW = 0, kSW = 1, kNE = 2, kSE = 3;
// Geometric port -> LinkDiagram slot. Counterclockwise from the lower-left
// under-strand end: SW, SE, NE, NW.
constexpr std::array<int, 4> kSlotOfPort{3, 0, 2, 1};

char event_letter(FrontEventKind kind) {
  switch (kind) {
    case FrontEventKind::LeftCusp: return 'L';
    case FrontEventKind::RightCusp: return 'R';
    case FrontEventKind::Crossing: return 'X';
  }
  return '?';
}

std::string describe(int index, const FrontEvent& ev) {
  return "event " + std::to_string(index + 1) + " (" + event_letter(ev.kind) + std::to_string(ev.position + 1) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events) : events_(std::move(events)) {
  if (events_.empty()) throw Error(ErrorKind::MalformedToken, "empty front word");
  build_pieces();
  trace_components();
  check_connected();
  sweep_regions();
}

void FrontDiagram::build_pieces() {
  std::vector<int> strands;
  for (int t = 0; t < static_cast<int>(events_.size()); ++t) {
    const FrontEvent& ev = events_[t];
    const int p = ev.position;
    const int n = static_cast<int>(strands.size());
    switch (ev.kind) {
      case FrontEventKind::LeftCusp: {
        if (p < 0 || p > n) {
          throw Error(ErrorKind::StrandUnderflow,
                      describe(t, ev) + ": a left cusp needs 1 <= p <= " + std::to_string(n + 1));
        }
        const int cusp = static_cast<int>(cusp_pieces_.size());
        const int upper = static_cast<int>(pieces_.size());
        pieces_.push_back({PieceEnd{true, cusp, 0}, {}});
        pieces_.push_back({PieceEnd{true, cusp, 0}, {}});
        cusp_pieces_.push_back({upper, upper + 1});
        cusp_left_.push_back(true);
        strands.insert(strands.begin() + p, {upper, upper + 1});
        ++cusp_count_;
        break;
      }
      case FrontEventKind::RightCusp: {
        if (p < 0 || p + 1 >= n) {
          throw Error(ErrorKind::StrandUnderflow, describe(t, ev) + ": strands " + std::to_string(p + 1) + " and " +
                                                      std::to_string(p + 2) + " must exist, have " + std::to_string(n));
        }
        const int cusp = static_cast<int>(cusp_pieces_.size());
        pieces_[strands[p]].right = PieceEnd{true, cusp, 0};
        pieces_[strands[p + 1]].right = PieceEnd{true, cusp, 0};
        cusp_pieces_.push_back({strands[p], strands[p + 1]});
        cusp_left_.push_back(false);
        strands.erase(strands.begin() + p, strands.begin() + p + 2);
        ++cusp_count_;
        break;
      }
      case FrontEventKind::Crossing: {
        if (p < 0 || p + 1 >= n) {
          throw Error(ErrorKind::StrandUnderflow, describe(t, ev) + ": strands " + std::to_string(p + 1) + " and " +
                                                      std::to_string(p + 2) + " must exist, have " + std::to_string(n));
        }
        const int k = static_cast<int>(crossing_event_.size());
        crossing_event_.push_back(t);
        const int nw = strands[p], sw = strands[p + 1];
        pieces_[nw].right = PieceEnd{false, k, kNW};
        pieces_[sw].right = PieceEnd{false, k, kSW};
        const int ne = static_cast<int>(pieces_.size());
        pieces_.push_back({PieceEnd{false, k, kNE}, {}});
        pieces_.push_back({PieceEnd{false, k, kSE}, {}});
        port_piece_.push_back({nw, sw, ne, ne + 1});
        strands[p] = ne;
        strands[p + 1] = ne + 1;
        break;
      }
    }
  }
  if (!strands.empty()) {
    throw Error(ErrorKind::NonzeroEndState, std::to_string(strands.size()) + " strands remain after the last event");
  }
}

FrontDiagram::Step FrontDiagram::step(int piece, bool right) const {
  const PieceEnd end = right ? pieces_[piece].right : pieces_[piece].left;
  if (end.cusp) {
    const auto& twins = cusp_pieces_[end.index];
    return {twins[0] == piece ? twins[1] : twins[0], !right, std::nullopt};
  }
  // Strands run straight through: NW-SE is the over-strand, SW-NE the under.
  const int exit = right ? (end.port == kNW ? kSE : kNE) : (end.port == kNE ? kSW : kNW);
  return {port_piece_[end.index][exit], right, Passage{end.index, end.port, exit}};
}

void FrontDiagram::trace_components() {
  piece_component_.assign(pieces_.size(), -1);
  piece_rightward_.assign(pieces_.size(), false);
  // Cusp ids follow event order, so the first unvisited left cusp starts the
  // next component; its upper branch is traversed to the right.
  for (std::size_t cusp = 0; cusp < cusp_pieces_.size(); ++cusp) {
    const int start = cusp_pieces_[cusp][0];
    if (!cusp_left_[cusp] || piece_component_[start] != -1) continue;
    const int component = static_cast<int>(component_start_.size());
    component_start_.push_back(start);
    Step at{start, true, std::nullopt};
    do {
      piece_component_[at.piece] = component;
      piece_rightward_[at.piece] = at.right;
      at = step(at.piece, at.right);
    } while (!(at.piece == start && at.right));
  }
}

void FrontDiagram::check_connected() const {
  DisjointSets sets(component_count());
  int groups = component_count();
  for (const auto& ports : port_piece_) {
    if (sets.unite(piece_component_[ports[kNW]], piece_component_[ports[kSW]])) --groups;
  }
  if (groups != 1) {
    throw Error(ErrorKind::Disconnected,
                "front splits into " + std::to_string(groups) + " pieces that do not meet in the plane");
  }
}

void FrontDiagram::sweep_regions() {
  // Node (slice, gap): slice t sits just left of event t (slice N is after the
  // last event); gap g lies between strands g-1 and g.
  const int slices = static_cast<int>(events_.size()) + 1;
  std::vector<int> offset(slices + 1, 0), strands(slices, 0);
  for (int t = 0; t + 1 < slices; ++t) {
    const auto kind = events_[t].kind;
    strands[t + 1] = strands[t] + (kind == FrontEventKind::LeftCusp ? 2 : kind == FrontEventKind::RightCusp ? -2 : 0);
  }
  for (int t = 0; t < slices; ++t) offset[t + 1] = offset[t] + strands[t] + 1;
  auto node = [&](int slice, int gap) { return offset[slice] + gap; };

  DisjointSets sets(offset[slices]);
  std::vector<int> crossing_slice;
  for (int t = 0; t + 1 < slices; ++t) {
    const int p = events_[t].position;
    const int before = strands[t] + 1;
    const int after = strands[t + 1] + 1;
    switch (events_[t].kind) {
      case FrontEventKind::LeftCusp:
        for (int g = 0; g < after; ++g) {
          if (g < p + 1) sets.unite(node(t, g), node(t + 1, g));
          else if (g == p + 2) sets.unite(node(t, p), node(t + 1, g));
          else if (g > p + 2) sets.unite(node(t, g - 2), node(t + 1, g));
        }
        break;
      case FrontEventKind::RightCusp:
        for (int g = 0; g < before; ++g) {
          if (g < p + 1) sets.unite(node(t, g), node(t + 1, g));
          else if (g == p + 2) sets.unite(node(t, g), node(t + 1, p));
          else if (g > p + 2) sets.unite(node(t, g), node(t + 1, g - 2));
        }
        break;
      case FrontEventKind::Crossing:
        for (int g = 0; g < before; ++g) {
          if (g != p + 1) sets.unite(node(t, g), node(t + 1, g));
        }
        crossing_slice.push_back(t);
        break;
    }
  }

  std::vector<int> region_of_root(offset[slices], -1);
  std::vector<int> region(offset[slices]);
  for (int t = 0; t < slices; ++t) {
    for (int g = 0; g <= strands[t]; ++g) {
      const int root = sets.find(node(t, g));
      if (region_of_root[root] == -1) {
        region_of_root[root] = region_count_++;
        region_odd_.push_back(g % 2 == 1);
      } else if (region_odd_[region_of_root[root]] != (g % 2 == 1)) {
        throw Error(ErrorKind::InvalidDiagram, "front regions are not two-colourable");
      }
      region[node(t, g)] = region_of_root[root];
    }
  }
  unbounded_region_ = region[node(0, 0)];
  for (int t : crossing_slice) {
    const int p = events_[t].position;
    quadrants_.push_back({region[node(t, p + 2)], region[node(t + 1, p + 1)], region[node(t, p)],
                          region[node(t, p + 1)]});
  }
}

bool FrontDiagram::rightward(int piece, const Orientation& orientation) const {
  const bool flip = !orientation.empty() && orientation[piece_component_[piece]];
  return piece_rightward_[piece] != flip;
}

std::vector<FrontDiagram::Passage> FrontDiagram::passages(int component, const Orientation& orientation) const {
  std::vector<Passage> out;
  const int start = component_start_[component];
  const bool start_right = rightward(start, orientation);
  Step at{start, start_right, std::nullopt};
  do {
    at = step(at.piece, at.right);
    if (at.passage) out.push_back(*at.passage);
  } while (!(at.piece == start && at.right == start_right));
  return out;
}

std::string FrontDiagram::word() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (i) os << ' ';
    os << event_letter(events_[i].kind) << events_[i].position + 1;
  }
  return os.str();
}

int FrontDiagram::crossing_sign(int crossing, const Orientation& orientation) const {
  if (!orientation.empty() && static_cast<int>(orientation.size()) != component_count()) {
    throw Error(ErrorKind::InvalidDiagram, "orientation needs one flag per component");
  }
  const auto& ports = port_piece_[crossing];
  return rightward(ports[kNW], orientation) == rightward(ports[kSW], orientation) ? +1 : -1;
}

int FrontDiagram::writhe(const Orientation& orientation) const {
  int w = 0;
  for (int k = 0; k < crossing_count(); ++k) w += crossing_sign(k, orientation);
  return w;
}

FrontDiagram parse_front(std::string_view text) {
  std::vector<FrontEvent> events;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    FrontEvent ev;
    switch (token[0]) {
      case 'L': ev.kind = FrontEventKind::LeftCusp; break;
      case 'R': ev.kind = FrontEventKind::RightCusp; break;
      case 'X': ev.kind = FrontEventKind::Crossing; break;
      default: throw Error(ErrorKind::MalformedToken, "token '" + token + "' must start with L, R or X");
    }
    const std::string digits = token.substr(1);
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::MalformedToken, "token '" + token + "' needs a positive strand index");
    }
    const int p = std::stoi(digits);
    if (p < 1) throw Error(ErrorKind::MalformedToken, "token '" + token + "': strand indices start at 1");
    ev.position = p - 1;
    events.push_back(ev);
  }
  return FrontDiagram(std::move(events));
}

int thurston_bennequin(const FrontDiagram& front, const Orientation& orientation) {
  return desingularize(front, orientation).writhe() - front.cusp_pairs();
}

LinkDiagram desingularize(const FrontDiagram& front, const Orientation& orientation) {
  if (!orientation.empty() && static_cast<int>(orientation.size()) != front.component_count()) {
    throw Error(ErrorKind::InvalidDiagram, "orientation needs one flag per component");
  }
  if (front.crossing_count() == 0) return LinkDiagram::unknot();
  std::vector<Arc> arcs;
  int loops = 0;
  for (int c = 0; c < front.component_count(); ++c) {
    const auto walk = front.passages(c, orientation);
    if (walk.empty()) {
      ++loops;
      continue;
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& from = walk[i];
      const auto& to = walk[(i + 1) % walk.size()];
      arcs.push_back({Slot{from.crossing, kSlotOfPort[from.out_port]}, Slot{to.crossing, kSlotOfPort[to.in_port]}});
    }
  }
  std::optional<Corner> outer;
  for (int k = 0; k < front.crossing_count() && !outer; ++k) {
    for (int q = 0; q < 4; ++q) {
      if (front.quadrant_regions(k)[q] == front.unbounded_region()) {
        outer = Corner{k, q};
        break;
      }
    }
  }
  return LinkDiagram::from_arcs(front.crossing_count(), std::move(arcs), loops, outer);
}

}  // namespace legkh
