#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legkh/link_diagram.hpp"

namespace legkh {

enum class FrontEventKind : std::uint8_t { LeftCusp, RightCusp, Crossing };

// `position` is the 0-based index (from the top) of the upper strand the
// event touches. Text form is 1-based: "L1", "X2", ...
struct FrontEvent {
  FrontEventKind kind = FrontEventKind::LeftCusp;
  int position = 0;

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

// One flag per component (components numbered by their first left cusp);
// true reverses the canonical orientation. An empty vector means canonical.
using Orientation = std::vector<bool>;

// A Legendrian front encoded as a left-to-right event word. Crossings are
// numbered by x-order; at every crossing the strand of smaller slope (the one
// running from upper-left to lower-right) is the over-strand.
class FrontDiagram {
 public:
  // Validates the word. Throws Error(StrandUnderflow | NonzeroEndState |
  // Disconnected | MalformedToken).
  explicit FrontDiagram(std::vector<FrontEvent> events);

  const std::vector<FrontEvent>& events() const { return events_; }
  std::string word() const;

  int cusp_count() const { return cusp_count_; }
  // Half the number of cusps.
  int cusp_pairs() const { return cusp_count_ / 2; }
  int crossing_count() const { return static_cast<int>(crossing_event_.size()); }
  int component_count() const { return static_cast<int>(component_start_.size()); }

  int crossing_event(int crossing) const { return crossing_event_[crossing]; }
  int crossing_position(int crossing) const { return events_[crossing_event_[crossing]].position; }

  // +1 when both strands run in the same x-direction.
  int crossing_sign(int crossing, const Orientation& orientation = {}) const;
  int writhe(const Orientation& orientation = {}) const;

  // Complementary regions of the front, found by sweeping left to right.
  // Quadrants are listed bottom, right, top, left (the corner order used by
  // LinkDiagram for desingularized fronts).
  int region_count() const { return region_count_; }
  int unbounded_region() const { return unbounded_region_; }
  const std::array<int, 4>& quadrant_regions(int crossing) const { return quadrants_[crossing]; }
  // Regions at odd depth below the top are black in the canonical coloring.
  bool region_odd(int region) const { return region_odd_[region]; }

 private:
  struct PieceEnd {
    bool cusp = false;
    int index = 0;  // cusp id or crossing id
    int port = 0;   // 0 NW, 1 SW, 2 NE, 3 SE when at a crossing
  };
  struct Piece {
    PieceEnd left;
    PieceEnd right;
  };
  struct Passage {
    int crossing;
    int in_port;
    int out_port;
  };
  struct Step {
    int piece;
    bool right;
    std::optional<Passage> passage;
  };

  Step step(int piece, bool right) const;
  void build_pieces();
  void trace_components();
  void check_connected() const;
  void sweep_regions();
  bool rightward(int piece, const Orientation& orientation) const;
  std::vector<Passage> passages(int component, const Orientation& orientation) const;

  std::vector<FrontEvent> events_;
  int cusp_count_ = 0;
  std::vector<int> crossing_event_;
  std::vector<Piece> pieces_;
  std::vector<std::array<int, 2>> cusp_pieces_;     // upper, lower
  std::vector<bool> cusp_left_;
  std::vector<std::array<int, 4>> port_piece_;      // [crossing][port]
  std::vector<int> piece_component_;
  std::vector<bool> piece_rightward_;               // canonical orientation
  std::vector<int> component_start_;                // first piece, traversed rightward
  int region_count_ = 0;
  int unbounded_region_ = 0;
  std::vector<std::array<int, 4>> quadrants_;
  std::vector<bool> region_odd_;

  friend LinkDiagram desingularize(const FrontDiagram& front, const Orientation& orientation);
};

// Whitespace-separated tokens "L<p>", "R<p>", "X<p>" with p >= 1.
FrontDiagram parse_front(std::string_view text);

// Thurston-Bennequin number: writhe of the desingularization minus half the
// number of cusps.
int thurston_bennequin(const FrontDiagram& front, const Orientation& orientation = {});

// Smooths every cusp. Crossing i of the result is the i-th crossing from the
// left; the unbounded region is recorded as the diagram's outer face.
LinkDiagram desingularize(const FrontDiagram& front, const Orientation& orientation = {});

}  // namespace legkh
