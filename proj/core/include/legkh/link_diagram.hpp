#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace legkh {

// A crossing end. Slots are numbered counterclockwise around the crossing;
// slots 0 and 2 lie on the under-strand, 1 and 3 on the over-strand.
struct Slot {
  int crossing = 0;
  int index = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// The region wedged between slot `index` and slot `index + 1` (mod 4).
// Corners 1 and 3 are the ones swept when the over-strand is rotated
// counterclockwise (the A-regions); corners 0 and 2 are the B-regions.
struct Corner {
  int crossing = 0;
  int index = 0;

  friend bool operator==(const Corner&, const Corner&) = default;
};

// Oriented arc between two crossing ends.
struct Arc {
  Slot tail;
  Slot head;
};

// Resolution choice for a single crossing. A joins slots (0,1) and (2,3);
// B joins (1,2) and (3,0).
enum class Smoothing : std::uint8_t { Keep, A, B };

struct FaceMap {
  int count = 0;
  std::vector<std::array<int, 4>> corner_face;  // [crossing][corner] -> face id
  int outer = 0;                                // face treated as unbounded
};

// An oriented planar link diagram stored as a 4-valent combinatorial map:
// the cyclic slot order at each crossing is the rotation system. Crossing
// indices double as the crossing order (x-order for desingularized fronts).
class LinkDiagram {
 public:
  LinkDiagram() = default;

  static LinkDiagram unknot();

  // `arcs` must cover every slot exactly once and be consistently oriented
  // through each crossing. Throws Error(InvalidDiagram) otherwise.
  static LinkDiagram from_arcs(int crossing_count, std::vector<Arc> arcs, int free_loops = 0,
                               std::optional<Corner> outer = std::nullopt);

  // Planar-diagram code: one quadruple per crossing, incoming under-strand
  // first, then counterclockwise. Every label must occur exactly twice.
  static LinkDiagram from_pd(std::span<const std::array<int, 4>> code);

  int crossing_count() const { return static_cast<int>(slots_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int free_loops() const { return free_loops_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[id]; }
  int arc_at(Slot s) const { return slots_[s.crossing][s.index]; }
  bool is_head(Slot s) const { return arc(arc_at(s)).head == s; }

  // The slot at the other end of the arc leaving `s`.
  Slot opposite(Slot s) const;

  int sign(int crossing) const;
  int writhe() const;
  int positive_crossings() const;
  int negative_crossings() const;
  int component_count() const;
  bool connected() const;

  // Faces of the sphere compactification. Throws Error(Disconnected).
  FaceMap faces() const;

  // The next corner met when walking around a face with the face kept on the
  // right-hand side.
  Corner next_corner(Corner at) const;

  const std::optional<Corner>& outer_corner() const { return outer_; }

  // Resolves every crossing marked A or B; kept crossings are renumbered in
  // order and the result is re-oriented canonically by strand tracing.
  LinkDiagram smooth(std::span<const Smoothing> choice) const;

  // Same projection with every crossing switched.
  LinkDiagram mirror() const;

  // Planar-diagram code of this diagram (labels are arc ids + 1).
  std::vector<std::array<int, 4>> pd_code() const;

 private:
  std::vector<std::array<int, 4>> slots_;  // [crossing][slot] -> arc id
  std::vector<Arc> arcs_;
  int free_loops_ = 0;
  std::optional<Corner> outer_;
};

// Accepts "X[1,4,2,5] X[3,6,4,1] ..." as well as nested-list forms; only the
// integers matter and they are grouped in fours.
LinkDiagram parse_pd(std::string_view text);

}  // namespace legkh
